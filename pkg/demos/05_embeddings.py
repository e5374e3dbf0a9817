# The two embeddings of a finite Clifford semigroup, checked point by point.
from clifford_kit.catalog import build
from clifford_kit.embeddings import classify_embeddability, h_A, pi_hat_h_AA

S = build("reduced(chain2, {0}, s3)")
rep = h_A(S)
print(rep.map_description)
print("target size", rep.target_size, "injective", rep.injective, "hom", rep.hom_verified)

# second map: pi together with cone coordinates; images only use the apex and top level
for n in (1, 4):
    rep = pi_hat_h_AA(S, n=n)
    print(n, rep.injective, rep.image_in_zero_extensions)

# a large target is never built, only checked coordinate by coordinate
big = h_A(build("prod(chain4, s3)"))
print(big.target_size, big.materialized, big.injective)

print(classify_embeddability(S).as_dict())
