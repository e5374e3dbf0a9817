# Cayley tables, structure reports and the maximal subgroups of a small
# Clifford semigroup.
import numpy as np

from clifford_kit import constructions as cons
from clifford_kit.errors import NotAssociative
from clifford_kit.semigroup import classify, clifford_structure, maximal_subgroups, validate

# the two-element min-semilattice, written by hand
two = validate([[0, 0], [0, 1]])
print(classify(two))

# not every square table is a semigroup; the first bad triple is reported
try:
    validate([[1, 0], [0, 0]])
except NotAssociative as exc:
    print("rejected:", exc, exc.triple)

# Z2 with a zero adjoined: three elements, two idempotents
S = cons.zero_extension(cons.cyclic_group(2)).S
print(S.labels)
print(np.asarray(S.table))

C = clifford_structure(S)
print("inverse", [S.label(x) for x in C.inverse])
print("pi     ", [S.label(x) for x in C.pi])

# each idempotent e carries the group H_e, the fibre of pi over e
for e, members in maximal_subgroups(S, C).groups.items():
    print(S.label(e), "->", [S.label(x) for x in members])
