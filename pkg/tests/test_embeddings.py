import itertools
import warnings

import pytest

from clifford_kit import constructions as cons
from clifford_kit import limits
from clifford_kit.catalog import base, build
from clifford_kit.embeddings import (classify_embeddability, h_A, h_e, hat_h_e_a, pi_coordinate,
                                     pi_hat_h_AA, semilattice_embeddability)
from clifford_kit.errors import NotClifford, NotIdempotent, NotUDense, PreconditionError, TargetTooLarge

import brute


def gdot_z2():
    return cons.zero_extension(cons.cyclic_group(2)).S


def brute_injective(report, S):
    """Pairwise check of the diagonal map from the component images."""
    imgs = [tuple(c[x] for c in report.component_images.values()) for x in range(S.size)]
    return all(imgs[x] != imgs[y] for x, y in itertools.combinations(range(S.size), 2))


def test_h_e_on_a_group_is_the_identity():
    Z2 = cons.cyclic_group(2)
    c = h_e(Z2, 0)
    assert c.target.S.size == 2 and c.hom.map == (0, 1)


def test_h_e_on_gdot():
    S = gdot_z2()
    c = h_e(S, 1)
    assert c.hom.is_injective()
    assert c.target.S.label(c.hom(0)) == "0"
    assert c.target.S.label(c.hom(2)) == "((1,e),(1,g))"


def test_h_e_on_product():
    S = cons.direct_product(cons.two(), cons.cyclic_group(2))
    c = h_e(S, 0)
    assert c.hom(1) != c.hom(3)


def test_h_e_requires_idempotent():
    with pytest.raises(NotIdempotent):
        h_e(gdot_z2(), 2)


@pytest.mark.parametrize("expr", ["z3", "s3", "gdot(z2)", "reduced(chain2,{0},z2)",
                                  "prod(two,z2)", "prod(diamond,klein)", "cone(s3,3)"])
def test_first_embedding(expr):
    S = build(expr)
    rep = h_A(S)
    assert rep.injective and rep.hom_verified and rep.ok
    assert brute_injective(rep, S)


def test_group_with_single_idempotent():
    rep = h_A(base("s3"), [0])
    assert rep.target_size == 6 and rep.injective


def test_non_dense_A():
    S = gdot_z2()
    with pytest.raises(NotUDense):
        h_A(S, [0])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rep = h_A(S, [0], allow_non_dense=True)
    assert caught and not rep.injective and rep.collisions == ((1, 2),)


def test_materialisation_limit():
    S = build("prod(chain4,s3)")
    rep = h_A(S)
    assert rep.target_size > limits.MATERIALIZE_LIMIT and not rep.materialized
    with pytest.raises(TargetTooLarge):
        h_A(S, materialize=True)
    small = h_A(gdot_z2())
    assert small.materialized


def test_clifford_required():
    with pytest.raises(NotClifford):
        h_A(cons.FiniteSemigroup([[0, 0], [1, 1]]))


def test_hat_coordinate_levels():
    S = cons.direct_product(cons.chain(2), cons.cyclic_group(3))
    for n in (1, 3):
        c = hat_h_e_a(S, 3, 6, n)
        assert set(c.levels) <= {0, n}
    with pytest.raises(PreconditionError):
        hat_h_e_a(S, 6, 3)


@pytest.mark.parametrize("expr", ["diamond", "chain4", "gdot(z2)", "prod(two,z2)",
                                  "reduced(chain3,{0,1},s3)"])
@pytest.mark.parametrize("n", [1, 4])
def test_second_embedding(expr, n):
    S = build(expr)
    rep = pi_hat_h_AA(S, n=n)
    assert rep.ok and rep.image_in_zero_extensions
    assert brute_injective(rep, S)


def test_pi_alone_separates_semilattices():
    E = cons.diamond()
    assert pi_coordinate(E).is_injective()


def test_classifier():
    flags = classify_embeddability(cons.cyclic_group(2))
    assert flags.two_separated and flags.chain_embeddable and flags.ditopological
    assert classify_embeddability(cons.chain(2)).two_embeddable
    assert semilattice_embeddability(cons.diamond()) == (True, True, True)


def test_reports_serialise():
    d = h_A(gdot_z2()).as_dict()
    assert d["injective"] and d["target_size"] == 6
    assert brute.is_clifford(brute.rows(gdot_z2()))
