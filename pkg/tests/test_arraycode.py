"""Tests for cyclic arrays and the array code verifier.

Oracles: naive index-arithmetic implementations of shift, window and the
shift-and-add closure quantifier (all ordered pairs of positioned
codewords, membership up to rotation).
"""

import random

import pytest

from foldcodes.arraycode import (
    ArrayCode,
    CyclicArray,
    VerifyReport,
    _check_closure,
    add2d,
    canonical2d,
    min_distance,
    shift2d,
    verify,
    window,
    window_key,
)

FOLDPR = CyclicArray(["01010", "10001", "11011"])
FOLDPM_MID = CyclicArray(["11110", "10010", "01100"])
FOLDPM_SUM = CyclicArray(["10100", "00011", "10111"])

PRAC37 = (
    CyclicArray(["0000000", "1001011", "1001011"]),
    CyclicArray(["0111001", "1110010", "1001011"]),
    CyclicArray(["1001011", "1110010", "0111001"]),
)
PRAC37_CODE = ArrayCode("PRAC", 3, 7, 2, 3, PRAC37)


# ---------------------------------------------------------------- oracles


def shift_oracle(a, dv, dh):
    r, t = a.rows, a.cols
    return CyclicArray(
        [
            [a.cell(i - dv, j - dh) for j in range(t)]
            for i in range(r)
        ]
    )


def window_oracle(a, i, j, n, m):
    return tuple(
        tuple(a.cell(i + u, j + v) for v in range(m)) for u in range(n)
    )


def closure_oracle(code):
    """Literal quantifier: every ordered pair of distinct positioned
    codewords sums to a rotation of some code array."""
    positioned = []
    for a in code.arrays:
        for dv in range(code.r):
            for dh in range(code.t):
                positioned.append(shift2d(a, dv, dh))
    canon = {canonical2d(a) for a in code.arrays}
    for x in positioned:
        for y in positioned:
            if x == y:
                continue
            s = add2d(x, y)
            if s.packed() == 0 or canonical2d(s) not in canon:
                return False
    return True


def random_array(rng, r, t):
    return CyclicArray(
        [[rng.randrange(2) for _ in range(t)] for _ in range(r)]
    )


# ------------------------------------------------------------ CyclicArray


def test_constructor_forms_agree():
    a = CyclicArray(["01", "10"])
    b = CyclicArray([[0, 1], [1, 0]])
    assert a == b
    assert a.row_strings() == ["01", "10"]
    assert a.rows == 2 and a.cols == 2


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        CyclicArray(["01", "011"])
    with pytest.raises(ValueError):
        CyclicArray([[0, 2]])
    with pytest.raises(ValueError):
        CyclicArray([])
    with pytest.raises(ValueError):
        CyclicArray([""])


def test_cell_wraps_both_ways():
    a = FOLDPR
    assert a.cell(0, 0) == 0 and a.cell(0, 1) == 1
    assert a.cell(3, 5) == a.cell(0, 0)
    assert a.cell(-1, -1) == a.cell(2, 4)


def test_weight_and_packed():
    assert FOLDPR.weight() == 8
    assert CyclicArray(["00", "00"]).packed() == 0


# ------------------------------------------------------------ 2D algebra


def test_shift2d_reproduces_shifted_fold_example():
    assert shift2d(FOLDPR, 1, 2) == FOLDPM_MID
    assert add2d(FOLDPR, FOLDPM_MID) == FOLDPM_SUM
    # the sum is itself a shift of the original array
    assert shift2d(FOLDPR, 0, 4) == FOLDPM_SUM


def test_shift2d_identity_and_inverse():
    assert shift2d(FOLDPR, 0, 0) == FOLDPR
    assert shift2d(shift2d(FOLDPR, 1, 2), -1, -2) == FOLDPR
    assert shift2d(FOLDPR, 3, 5) == FOLDPR


def test_add2d_self_is_zero():
    z = add2d(FOLDPR, FOLDPR)
    assert z.packed() == 0
    with pytest.raises(ValueError):
        add2d(FOLDPR, CyclicArray(["01", "10"]))


def test_shift2d_matches_oracle():
    rng = random.Random(17)
    for _ in range(30):
        r, t = rng.randrange(1, 7), rng.randrange(1, 8)
        a = random_array(rng, r, t)
        dv, dh = rng.randrange(-8, 9), rng.randrange(-8, 9)
        assert shift2d(a, dv, dh) == shift_oracle(a, dv, dh)


# ---------------------------------------------------------------- windows


def test_window_examples():
    assert window(FOLDPR, 0, 0, 2, 2) == ((0, 1), (1, 0))
    assert window(FOLDPR, 2, 4, 2, 2) == ((1, 1), (0, 0))
    assert window(FOLDPR, 1, 3, 1, 1) == ((0,),)
    with pytest.raises(ValueError):
        window(FOLDPR, 0, 0, 0, 2)


def test_window_matches_oracle_and_key_packing():
    rng = random.Random(19)
    for _ in range(40):
        r, t = rng.randrange(1, 6), rng.randrange(1, 7)
        a = random_array(rng, r, t)
        i, j = rng.randrange(-3, 9), rng.randrange(-3, 9)
        n, m = rng.randrange(1, 4), rng.randrange(1, 4)
        w = window(a, i, j, n, m)
        assert w == window_oracle(a, i, j, n, m)
        key = 0
        for row in w:
            for bit in row:
                key = (key << 1) | bit
        assert key == window_key(a, i, j, n, m)


def test_canonical2d_is_least_shift():
    rng = random.Random(23)
    for _ in range(25):
        a = random_array(rng, rng.randrange(1, 5), rng.randrange(1, 6))
        all_shifts = {
            shift2d(a, dv, dh).packed()
            for dv in range(a.rows)
            for dh in range(a.cols)
        }
        c = canonical2d(a)
        assert c.packed() == min(all_shifts)
        assert canonical2d(shift2d(a, 1, 1)) == c


# ----------------------------------------------------------------- verify


def test_verify_foldpr_as_pra():
    code = ArrayCode("PRA", 3, 5, 2, 2, (FOLDPR,))
    rep = verify(code)
    assert rep.counting_ok and rep.dims_ok and rep.coverage_ok
    assert rep.closure_ok is True
    assert rep.ok


def test_verify_prac37():
    rep = verify(PRAC37_CODE)
    assert rep.ok
    assert rep.closure_ok is True


def test_verify_tiny_pm():
    code = ArrayCode("PM", 1, 2, 1, 1, (CyclicArray(["01"]),))
    rep = verify(code)
    assert rep.ok
    assert rep.closure_ok is None


def test_verify_counting_failure():
    code = ArrayCode("PM", 3, 7, 2, 3, PRAC37)
    rep = verify(code)
    assert not rep.counting_ok
    assert not rep.ok


def test_verify_dimension_failure():
    code = ArrayCode("PRA", 3, 5, 3, 2, (FOLDPR,))
    rep = verify(code)
    assert not rep.dims_ok


def test_verify_coverage_and_closure_failure():
    rows = FOLDPR.row_strings()
    broken = CyclicArray(["1" + rows[0][1:], rows[1], rows[2]])
    rep = verify(ArrayCode("PRA", 3, 5, 2, 2, (broken,)))
    assert not rep.coverage_ok
    assert not rep.ok
    assert any("repeats" in note or "coverage" in note for note in rep.notes)


def test_verify_rejects_zero_window_in_shortened_code():
    # a 3x5 array with an all-zero 2x2 window cannot be a PRA
    rows = ["00010", "00001", "11011"]
    rep = verify(ArrayCode("PRA", 3, 5, 2, 2, (CyclicArray(rows),)))
    assert not rep.coverage_ok


def test_verify_invariant_under_member_shifts():
    shifted = (shift2d(PRAC37[0], 1, 3), PRAC37[1], PRAC37[2])
    rep = verify(ArrayCode("PRAC", 3, 7, 2, 3, shifted))
    assert rep.ok


def test_closure_matches_literal_oracle():
    ok, _ = _check_closure(PRAC37_CODE)
    assert ok is True
    assert closure_oracle(PRAC37_CODE) is True
    # breaking one bit must fail both
    rows = PRAC37[0].row_strings()
    broken = CyclicArray(["1" + rows[0][1:], rows[1], rows[2]])
    bad = ArrayCode("PRAC", 3, 7, 2, 3, (broken,) + PRAC37[1:])
    ok, _ = _check_closure(bad)
    assert ok is False
    assert closure_oracle(bad) is False


def test_array_code_validation():
    with pytest.raises(ValueError):
        ArrayCode("XYZ", 3, 5, 2, 2, (FOLDPR,))
    with pytest.raises(ValueError):
        ArrayCode("PRA", 3, 6, 2, 2, (FOLDPR,))


# ----------------------------------------------------------- min_distance


def test_min_distance_prac37_is_8():
    assert min_distance(PRAC37_CODE) == 8


def test_min_distance_foldpr_pra():
    code = ArrayCode("PRA", 3, 5, 2, 2, (FOLDPR,))
    assert min_distance(code) == 8
    assert FOLDPR.weight() == 1 << (2 * 2 - 1)


def test_min_distance_tiny_cases():
    ones = ArrayCode("SPM", 1, 2, 1, 1, (CyclicArray(["11"]),))
    assert min_distance(ones) == 2
    pm = ArrayCode("PM", 1, 2, 1, 1, (CyclicArray(["01"]),))
    assert min_distance(pm) == 2
    with pytest.raises(ValueError):
        min_distance(ArrayCode("PM", 1, 2, 1, 1, ()))


def test_min_distance_weight_mode_agrees_by_construction():
    # weights across the PRAC members
    assert min(a.weight() for a in PRAC37) == 8


def test_report_verdict_logic():
    rep = VerifyReport("PM", True, True, True, None)
    assert rep.ok
    rep = VerifyReport("PRA", True, True, True, False)
    assert not rep.ok
