# Building new Clifford semigroups: products, reduced products and cones.
from clifford_kit import constructions as cons
from clifford_kit.catalog import build, catalog
from clifford_kit.semigroup import classify

E, H = cons.chain(3), cons.symmetric_group(3)
rp = cons.reduced_product(E, {0, 1}, H)
print(rp.S.size, "=", 2, "+", 2, "*", H.size)
print(classify(rp.S).is_clifford)

# q collapses the ideal part of E x H, proj reads off the E coordinate
print(rp.q.map[:8])
print(rp.proj.map[:8])

# the cone over a group is chain(n) reduced along the bottom point
print(cons.cone(cons.cyclic_group(3), 4).S.size)

# the same objects from construction expressions
print(build("reduced(chain3, down(1), sym(3))") == rp.S)

cat = catalog()
print(len(cat), "catalog members, largest", max(S.size for S in cat.values()))
