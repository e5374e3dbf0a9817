# Homomorphisms between finite semigroups, found two independent ways.
from clifford_kit import constructions as cons
from clifford_kit.catalog import base
from clifford_kit.homs import canonical_map, enumerate_homs, enumerate_homs_both, select_h_e_a

c3, two = cons.chain(2), cons.two()
for h in enumerate_homs(c3, two):
    print(h.map)

# the full scan and the backtracking search agree
scan, back = enumerate_homs_both(base("s3"), base("z6"))
print(len(scan), scan == back)

# homs into 2 separate the points of a chain, not those of a group
print(canonical_map(c3, two, enumerate_homs(c3, two)).injective)
z2 = cons.cyclic_group(2)
print(canonical_map(z2, two, enumerate_homs(z2, two)).collisions)

# the chosen element of Hom_e^a is the indicator of the up-set of e
print(select_h_e_a(cons.diamond(), 1, 3).map)
