#!/usr/bin/env python3
"""Two folding experiments past the basic constructions.

First: fold the cycles of a product of two distinct primitives and check
what code drops out.  Second: grow the window of a verified de Bruijn
array code one row at a time with a de Bruijn selector sequence.
"""

from foldcodes.arraycode import verify
from foldcodes.constructions import (
    PreconditionError,
    construct_db_pmc_direct,
    construct_pmc_sd,
    experiment_product_fold,
    perfect_factor,
)
from foldcodes.gf2poly import Gf2Poly

f = Gf2Poly.parse("x^4+x^3+1")
g = Gf2Poly.parse("x^4+x+1")
rep = experiment_product_fold(f, g, 3, 5, 2, 4)
p = rep.parameters
print(
    f"product fold ({f})({g}): {rep.produced.kind} "
    f"({p[0]},{p[1]};{p[2]},{p[3]}) with {len(rep.produced.arrays)} arrays, "
    f"verified={rep.verified}, min distance {rep.min_distance}"
)

# window extension: start from a verified DBAC whose columns all have even
# weight, then stack selector-driven complement patterns to add a window row
base = construct_pmc_sd(perfect_factor(5, 3), 1)
p = base.parameters
print(
    f"\nbase: pmc_sd(PF(5,3), m=1) -> ({p[0]},{p[1]};{p[2]},{p[3]}) "
    f"{len(base.produced.arrays)} arrays, verified={base.verified}"
)

code = base.produced
while True:
    try:
        step = construct_db_pmc_direct(code, 2)
    except PreconditionError as exc:
        print(f"extension stops: {exc}")
        break
    p = step.parameters
    print(
        f"extended to ({p[0]},{p[1]};{p[2]},{p[3]}): "
        f"{len(step.produced.arrays)} arrays, verified={step.verified}, "
        f"oracle recheck {verify(step.produced).ok}, experimental={step.experimental}"
    )
    code = step.produced
