#!/usr/bin/env python3
"""Build PRAC families by folding the cycles of irreducible polynomials.

A non-primitive irreducible f of degree nm and exponent e splits the
nonzero register states into (2^(nm)-1)/e cycles of length e; when
e = (2^n-1) * l with the factors coprime, folding every cycle onto the
(2^n-1) x l torus gives a pseudorandom array code.
"""

from foldcodes.constructions import construct_prac_fold, experiment_exponent_family
from foldcodes.gf2poly import Gf2Poly, enumerate_irreducible, exponent

f = Gf2Poly.parse("x^6+x^5+x^4+x^2+1")
print(f"f = {f}, exponent {exponent(f)} = 3 * 7")

rep = construct_prac_fold(f, 2, 3)
print(
    f"construct_prac_fold(f, 2, 3): {rep.produced.kind} "
    f"({rep.parameters[0]},{rep.parameters[1]};{rep.parameters[2]},{rep.parameters[3]}) "
    f"with {len(rep.produced.arrays)} arrays, verified={rep.verified}, "
    f"min distance {rep.min_distance}"
)
for a in rep.produced.arrays:
    print()
    for row in a.row_strings():
        print(" ", row)

# every irreducible octic of exponent 85 produces the same shape of code
print("\nall irreducible octics of exponent 85:")
polys = enumerate_irreducible(8, 85)
print(f"  count: {len(polys)} (phi(85)/8 = 8)")
for r in experiment_exponent_family(8, 85, 5, 17, 4, 2):
    label = r.notes[0].removeprefix("poly ")
    print(
        f"  {label:<24} -> {len(r.produced.arrays)} arrays, "
        f"verified={r.verified}, distance {r.min_distance}"
    )
