# The natural order of a semilattice, its cones, and its ideals.
from clifford_kit import constructions as cons
from clifford_kit.order import cones, enumerate_ideals, is_U_dense, natural_order

E = cons.diamond()
O = natural_order(E)
print(E.labels)
print(O.leq.astype(int))

top = O.top()
print("cones of the top:", cones(O, top))

# a finite semilattice carries the discrete topology, so every upper cone is
# open and a set is U-dense exactly when it is everything
print(is_U_dense(O, range(E.size)), is_U_dense(O, [top]))

ideals = enumerate_ideals(O)
print(len(ideals), "ideals")
for I in ideals:
    print(sorted(E.label(x) for x in I))
