"""Diagonal folding between cyclic sequences and doubly periodic arrays.

A length rt sequence with gcd(r,t) = 1 folds into an r x t array down the
diagonal: position p lands in cell (p mod r, p mod t), a bijection by the
Chinese remainder theorem. Position sets use plain frozensets of
nonnegative integers.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd

from .arraycode import CyclicArray
from .gf2poly import Gf2Poly, is_irreducible, mul, pow_x_mod
from .lfsr import CyclicSequence


@dataclass(frozen=True)
class FoldingMap:
    r: int
    t: int

    def __post_init__(self):
        if self.r < 1 or self.t < 1:
            raise ValueError("dimensions must be positive")
        if gcd(self.r, self.t) != 1:
            raise ValueError(
                f"dimensions {self.r} and {self.t} are not coprime"
            )

    @property
    def size(self) -> int:
        return self.r * self.t


def fold(s: CyclicSequence, r: int, t: int) -> CyclicArray:
    """Write s down the diagonals of an r x t array.

    The period of s must divide rt; a shorter period is extended
    periodically.
    """
    fm = FoldingMap(r, t)
    L = len(s)
    if fm.size % L != 0:
        raise ValueError(f"period {L} does not divide {r}x{t}")
    rows = [0] * r
    bits = s.bits
    for p in range(fm.size):
        if bits[p % L]:
            rows[p % r] |= 1 << (p % t)
    return CyclicArray.from_rowmasks(rows, t)


def unfold(a: CyclicArray) -> CyclicSequence:
    """The unique sequence folding to a; inverse of fold."""
    r, t = a.rows, a.cols
    FoldingMap(r, t)
    return CyclicSequence([a.cell(p, p) for p in range(r * t)])


def window_positions(r: int, t: int, n: int, m: int) -> frozenset:
    """Sequence positions landing in the top-left n x m window.

    For each cell (i, j) with i < n, j < m this is the unique p in
    [0, rt) with p = i mod r and p = j mod t.
    """
    fm = FoldingMap(r, t)
    if not (1 <= n <= r and 1 <= m <= t):
        raise ValueError(f"{n}x{m} window does not fit in {r}x{t}")
    if r == 1:
        return frozenset(range(m))
    inv = pow(r, -1, t)
    out = set()
    for i in range(n):
        for j in range(m):
            out.add((i + r * (((j - i) * inv) % t)) % fm.size)
    return frozenset(out)


def positions_independent(f: Gf2Poly, R) -> bool:
    """Whether the residues x^p mod f for p in R are linearly independent
    over GF(2). Equivalently, f divides no nonempty subset sum of the
    x^p, i.e. f does not divide the set polynomial of R."""
    if not is_irreducible(f):
        raise ValueError(f"{f} is reducible")
    positions = sorted(set(R))
    if any(p < 0 for p in positions):
        raise ValueError("positions must be nonnegative")
    n = f.degree
    if len(positions) > n:
        warnings.warn(
            f"{len(positions)} positions exceed degree {n}; "
            "residues are always dependent"
        )
        return False
    basis = []  # reduced rows, distinct leading bits
    for p in positions:
        row = pow_x_mod(p, f).mask
        for b in basis:
            row = min(row, row ^ b)
        if row == 0:
            return False
        basis.append(row)
    return True


def set_polynomial(R) -> Gf2Poly:
    """The product over all nonempty subsets Q of R of the subset sum
    polynomial sum of x^p for p in Q. Oracle scale: at most 4 positions."""
    positions = sorted(set(R))
    if len(positions) > 4:
        raise ValueError("set polynomial limited to 4 positions")
    if any(p < 0 for p in positions):
        raise ValueError("positions must be nonnegative")
    k = len(positions)
    acc = Gf2Poly(1)
    for q in range(1, 1 << k):
        mask = 0
        for idx in range(k):
            if (q >> idx) & 1:
                mask ^= 1 << positions[idx]
        acc = mul(acc, Gf2Poly(mask))
    return acc
