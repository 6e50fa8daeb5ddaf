#!/usr/bin/env python3
"""Fold a quartic m-sequence onto a 3x5 torus and poke at the result."""

from foldcodes.arraycode import ArrayCode, add2d, shift2d, verify
from foldcodes.folding import fold, unfold
from foldcodes.gf2poly import Gf2Poly, exponent, is_primitive
from foldcodes.lfsr import m_sequence

f = Gf2Poly.parse("x^4+x^3+1")
print(f"f = {f}, primitive: {is_primitive(f)}, exponent: {exponent(f)}")

s = m_sequence(f)
print(f"m-sequence: {s}")

# 15 = 3 * 5 with gcd(3,5) = 1, so the Chinese remainder fold is a bijection
a = fold(s, 3, 5)
print("\nfolded onto 3x5:")
for row in a.row_strings():
    print(" ", row)

back = unfold(a)
print(f"\nunfold returns the sequence: {back == s}")

code = ArrayCode("PRA", 3, 5, 2, 2, (a,))
rep = verify(code)
print(f"verifies as a (3,5;2,2)-PRA: {rep.ok}")

# the 2D shift-and-add property: shifting and adding lands on another shift
shifted = shift2d(a, 1, 2)
total = add2d(a, shifted)
print("\nA, A shifted by (1,2), and their sum:")
for r1, r2, r3 in zip(a.row_strings(), shifted.row_strings(), total.row_strings()):
    print(f"  {r1}   {r2}   {r3}")
hits = [(dv, dh) for dv in range(3) for dh in range(5) if shift2d(a, dv, dh) == total]
print(f"the sum equals A shifted by: {hits}")
