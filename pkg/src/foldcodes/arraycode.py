"""Doubly periodic binary arrays and array code verification.

A CyclicArray stores one integer per row, bit j of row i holding cell
(i, j). Every index wraps, so (i, j) always means (i mod r, j mod t).
Equality is exact cell-wise; canonical2d gives a distinguished 2D
rotation for set membership questions.

Array code kinds:

    PM     perfect map                 windows = all n x m matrices
    SPM    shortened perfect map       windows = all nonzero matrices
    PRA    pseudorandom array          SPM closed under shift-and-add
    DBAC   de Bruijn array code        several arrays, all matrices
    SDBAC  shortened de Bruijn code    several arrays, nonzero matrices
    PRAC   pseudorandom array code     SDBAC closed under shift-and-add
"""

from __future__ import annotations

from dataclasses import dataclass, field

KINDS = ("PM", "SPM", "PRA", "DBAC", "SDBAC", "PRAC")
_FULL_KINDS = frozenset(("PM", "DBAC"))
_LINEAR_KINDS = frozenset(("PRA", "PRAC"))


class CyclicArray:
    """An r x t binary array read cyclically in both directions."""

    __slots__ = ("rowmasks", "cols")

    def __init__(self, rows):
        masks = []
        width = None
        for row in rows:
            if isinstance(row, str):
                row = [int(c) for c in row]
            else:
                row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged rows")
            mask = 0
            for j, bit in enumerate(row):
                if bit not in (0, 1):
                    raise ValueError(f"cell value {bit!r} is not a bit")
                mask |= bit << j
            masks.append(mask)
        if not masks or not width:
            raise ValueError("array must have at least one row and column")
        self.rowmasks = tuple(masks)
        self.cols = width

    @classmethod
    def from_rowmasks(cls, rowmasks, cols):
        if cols < 1 or not rowmasks:
            raise ValueError("array must have at least one row and column")
        obj = object.__new__(cls)
        obj.rowmasks = tuple(m & ((1 << cols) - 1) for m in rowmasks)
        obj.cols = cols
        return obj

    @property
    def rows(self) -> int:
        return len(self.rowmasks)

    def cell(self, i: int, j: int) -> int:
        return (self.rowmasks[i % self.rows] >> (j % self.cols)) & 1

    def packed(self) -> int:
        """All cells in one integer, bit i*t+j holding cell (i, j)."""
        out = 0
        for i, mask in enumerate(self.rowmasks):
            out |= mask << (i * self.cols)
        return out

    def weight(self) -> int:
        return sum(m.bit_count() for m in self.rowmasks)

    def row_strings(self):
        t = self.cols
        return [
            "".join(str((m >> j) & 1) for j in range(t)) for m in self.rowmasks
        ]

    def __eq__(self, other):
        if not isinstance(other, CyclicArray):
            return NotImplemented
        return self.cols == other.cols and self.rowmasks == other.rowmasks

    def __hash__(self):
        return hash((self.cols, self.rowmasks))

    def __repr__(self):
        return f"CyclicArray({self.row_strings()})"


def _rot_row(mask: int, dh: int, t: int) -> int:
    """Rotate a t-bit row so the new bit j is the old bit (j - dh) mod t."""
    dh %= t
    if dh == 0:
        return mask
    full = (1 << t) - 1
    return ((mask << dh) | (mask >> (t - dh))) & full


def shift2d(a: CyclicArray, dv: int, dh: int) -> CyclicArray:
    """Cyclic rotation: result[i][j] = a[(i - dv) mod r][(j - dh) mod t]."""
    r, t = a.rows, a.cols
    dv %= r
    rows = [
        _rot_row(a.rowmasks[(i - dv) % r], dh, t) for i in range(r)
    ]
    return CyclicArray.from_rowmasks(rows, t)


def add2d(a: CyclicArray, b: CyclicArray) -> CyclicArray:
    if a.rows != b.rows or a.cols != b.cols:
        raise ValueError("dimension mismatch")
    return CyclicArray.from_rowmasks(
        [x ^ y for x, y in zip(a.rowmasks, b.rowmasks)], a.cols
    )


def window(a: CyclicArray, i: int, j: int, n: int, m: int):
    """The n x m sub-matrix anchored at (i, j), wrapping cyclically."""
    if n < 1 or m < 1:
        raise ValueError("window dimensions must be positive")
    return tuple(
        tuple(a.cell(i + u, j + v) for v in range(m)) for u in range(n)
    )


def window_key(a: CyclicArray, i: int, j: int, n: int, m: int) -> int:
    """The window packed row-major into an integer, first cell most
    significant."""
    key = 0
    for u in range(n):
        for v in range(m):
            key = (key << 1) | a.cell(i + u, j + v)
    return key


def _packed_shifts(a: CyclicArray):
    """Yield the packed form of shift2d(a, dv, dh) for every (dv, dh).

    Horizontal rotations are done per row once; vertical rotations are a
    single big-integer rotation of the packed value.
    """
    r, t = a.rows, a.cols
    size = r * t
    full = (1 << size) - 1
    for dh in range(t):
        base = 0
        for i, mask in enumerate(a.rowmasks):
            base |= _rot_row(mask, dh, t) << (i * t)
        for dv in range(r):
            if dv == 0:
                yield base, 0, dh
            else:
                k = dv * t
                yield ((base << k) | (base >> (size - k))) & full, dv, dh


def _unpack(value: int, r: int, t: int) -> CyclicArray:
    full = (1 << t) - 1
    return CyclicArray.from_rowmasks(
        [(value >> (i * t)) & full for i in range(r)], t
    )


def canonical2d(a: CyclicArray) -> CyclicArray:
    """The least 2D rotation of a under the packed integer order."""
    best = min(p for p, _, _ in _packed_shifts(a))
    return _unpack(best, a.rows, a.cols)


@dataclass(frozen=True)
class ArrayCode:
    kind: str
    r: int
    t: int
    n: int
    m: int
    arrays: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown code kind {self.kind!r}")
        object.__setattr__(self, "arrays", tuple(self.arrays))
        for a in self.arrays:
            if a.rows != self.r or a.cols != self.t:
                raise ValueError("member array has wrong dimensions")


@dataclass(frozen=True)
class VerifyReport:
    kind: str
    counting_ok: bool
    dims_ok: bool
    coverage_ok: bool
    closure_ok: object = None  # bool for PRA/PRAC, else None
    notes: tuple = ()

    @property
    def ok(self) -> bool:
        parts = [self.counting_ok, self.dims_ok, self.coverage_ok]
        if self.closure_ok is not None:
            parts.append(self.closure_ok)
        return all(parts)


def _check_closure(code: ArrayCode):
    """Shift-and-add closure over positioned codewords.

    Membership up to 2D rotation is invariant under rotating both summands
    together, so it is enough to keep the first summand at phase zero and
    let the second range over all rotations.
    """
    notes = []
    positioned = set()
    for a in code.arrays:
        for p, _, _ in _packed_shifts(a):
            positioned.add(p)
    expect = len(code.arrays) * code.r * code.t
    if len(positioned) != expect:
        notes.append(
            f"positioned arrays are not distinct "
            f"({len(positioned)} of {expect})"
        )
        return False, notes
    for i, a in enumerate(code.arrays):
        base = a.packed()
        for j, b in enumerate(code.arrays):
            for p, dv, dh in _packed_shifts(b):
                if i == j and dv == 0 and dh == 0:
                    continue
                s = base ^ p
                if s == 0 or s not in positioned:
                    notes.append(
                        f"sum of array {i} and array {j} shifted "
                        f"({dv},{dh}) leaves the code"
                    )
                    return False, notes
    return True, notes


def verify(code: ArrayCode) -> VerifyReport:
    """Check the counting identity, dimension conditions, exact window
    coverage, and (for PRA/PRAC) shift-and-add closure."""
    r, t, n, m = code.r, code.t, code.n, code.m
    notes = []
    full = code.kind in _FULL_KINDS
    space = 1 << (n * m) if n >= 1 and m >= 1 else 0
    want = space if full else space - 1
    counting_ok = (
        n >= 1 and m >= 1 and len(code.arrays) * r * t == want
    )
    if not counting_ok:
        notes.append(
            f"counting: {len(code.arrays)} arrays x {r}x{t} cells != {want}"
        )
    dims_ok = (r > n or r == n == 1) and (t > m or t == m == 1)
    if not dims_ok:
        notes.append(f"dimension conditions fail for {r}x{t} vs {n}x{m}")

    coverage_ok = True
    if n < 1 or m < 1 or n * m > 32:
        coverage_ok = False
        notes.append("window size out of supported range")
    else:
        seen = {}
        dup_reports = 0
        for idx, a in enumerate(code.arrays):
            for i in range(r):
                for j in range(t):
                    key = window_key(a, i, j, n, m)
                    if key in seen:
                        coverage_ok = False
                        if dup_reports < 5:
                            notes.append(
                                f"window {key:0{n * m}b} at array {idx} "
                                f"anchor ({i},{j}) repeats {seen[key]}"
                            )
                        dup_reports += 1
                    else:
                        seen[key] = f"array {idx} anchor ({i},{j})"
        if not full and 0 in seen:
            coverage_ok = False
            notes.append("zero window present in a shortened code")
        need = space if full else space - 1
        have = len(seen) - (1 if (not full and 0 in seen) else 0)
        if have != need:
            coverage_ok = False
            notes.append(f"coverage: {have} distinct windows, need {need}")

    closure_ok = None
    if code.kind in _LINEAR_KINDS:
        closure_ok, closure_notes = _check_closure(code)
        notes.extend(closure_notes)
        if closure_ok:
            notes.append(
                "closure tested up to 2D rotation of code arrays"
            )
    return VerifyReport(
        kind=code.kind,
        counting_ok=counting_ok,
        dims_ok=dims_ok,
        coverage_ok=coverage_ok,
        closure_ok=closure_ok,
        notes=tuple(notes),
    )


def min_distance(code: ArrayCode) -> int:
    """Minimum Hamming distance of the length r*t code whose codewords are
    all 2D rotations of all arrays, plus the zero array for shortened
    kinds. Pairwise always; cross-checked against minimum weight when the
    shift-and-add closure holds."""
    if not code.arrays:
        raise ValueError("empty code")
    words = set()
    for a in code.arrays:
        for p, _, _ in _packed_shifts(a):
            words.add(p)
    if code.kind not in _FULL_KINDS:
        words.add(0)
    words = sorted(words)
    if len(words) < 2:
        raise ValueError("code has fewer than two distinct codewords")
    if len(words) > 1024:
        raise ValueError("code too large for pairwise distance")
    best = None
    for i, w in enumerate(words):
        for v in words[i + 1 :]:
            d = (w ^ v).bit_count()
            if best is None or d < best:
                best = d
    if code.kind in _LINEAR_KINDS:
        closed, _ = _check_closure(code)
        if closed:
            wmin = min(a.weight() for a in code.arrays)
            if wmin != best:
                raise RuntimeError(
                    f"weight bound {wmin} disagrees with pairwise "
                    f"distance {best}"
                )
    return best
