# Exact rational metrics: subinvariance, the closure that enforces it, cone
# metrics over groups, and the oracle refuter.
from fractions import Fraction

from clifford_kit.catalog import base
from clifford_kit.metrics import (ConePoint, bi_invariant_word_metric, check_metric_flags,
                                  euclid_oracle, one_sided_closure, random_rational_metric,
                                  refute_example64, subinvariant_closure, verify_cone_metric)

S3 = base("s3")
d = random_rational_metric(S3, seed=1)
print(check_metric_flags(d).as_dict())

rho = subinvariant_closure(d)
print(check_metric_flags(rho).subinvariant)

# maximising over one-sided translates only is not enough on S3
print(check_metric_flags(one_sided_closure(d), strict=False).subinvariant)

# cone over Z3 with its word metric, on the apex and two full levels
Z3 = base("z3")
dz = bi_invariant_word_metric(Z3)
pts = [ConePoint(0, 0)] + [ConePoint(t, h) for t in (Fraction(1, 2), 1) for h in range(3)]
print(verify_cone_metric(Z3, dz, pts).passed)

# |x - y| on {0} + {1/n} is subinvariant but puts odd points near 0 too
print(refute_example64(euclid_oracle(), Fraction(1, 100)).as_dict())
