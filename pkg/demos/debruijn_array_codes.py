#!/usr/bin/env python3
"""Compose perfect factors into de Bruijn array codes, column by column.

Also shows where the counting argument behind the composition breaks for
very small factors, and that the failure is real rather than a dedup bug.
"""

from foldcodes.constructions import (
    construct_pmc_odd,
    construct_pmc_sd,
    perfect_factor,
)
from foldcodes.lfsr import verify_perfect_factor

pf32 = perfect_factor(3, 2)
print("perfect factor PF(3,2), cycles of length 4 covering all 3-tuples:")
for c in pf32.cycles:
    print(" ", c)
print(f"oracle: {verify_perfect_factor(pf32)}")

rep = construct_pmc_odd(pf32, 2)
p = rep.parameters
print(
    f"\npmc_odd(PF(3,2), m=2): {rep.produced.kind} ({p[0]},{p[1]};{p[2]},{p[3]}) "
    f"claimed {rep.claimed_size}, produced {len(rep.produced.arrays)}, "
    f"verified={rep.verified}"
)

rep = construct_pmc_sd(pf32, 1)
p = rep.parameters
print(
    f"pmc_sd(PF(3,2), m=1):  {rep.produced.kind} ({p[0]},{p[1]};{p[2]},{p[3]}) "
    f"claimed {rep.claimed_size}, produced {len(rep.produced.arrays)}, "
    f"verified={rep.verified}"
)
print("one member:")
for row in rep.produced.arrays[0].row_strings():
    print(" ", row)

# the same composition over the smallest factor over-counts: its single
# cycle 0011 is complement-degenerate, shift assignments collapse, and the
# promised codeword count is unreachable
pf22 = perfect_factor(2, 2)
print(f"\nPF(2,2): {list(map(str, pf22.cycles))}")
for name, rep in (
    ("pmc_odd m=2", construct_pmc_odd(pf22, 2)),
    ("pmc_sd  m=1", construct_pmc_sd(pf22, 1)),
):
    print(
        f"{name}: claimed {rep.claimed_size}, produced "
        f"{len(rep.produced.arrays)}, verified={rep.verified}"
    )
    for note in rep.notes:
        print(f"  note: {note}")
