from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from clifford_kit import constructions as cons
from clifford_kit.catalog import base, catalog
from clifford_kit.errors import InvalidMetric, MalformedOracle, ParseError, SampleNotClosed
from clifford_kit.metrics import (ConePoint, MetricMatrix, bi_invariant_word_metric, check_metric_flags,
                                  cone_metric, cone_metric_matrix, discrete_metric, euclid_oracle,
                                  format_metric, format_oracle, one_sided_closure, parse_metric,
                                  parse_oracle, random_rational_metric, refute_example64,
                                  spanning_tree_metric, subinvariant_closure, table_oracle,
                                  verify_cone_metric, discrete_oracle)
from clifford_kit.semigroup import clifford_structure

import brute

SMALL = sorted(n for n, S in catalog().items() if S.size <= 9)


def gdot_z2():
    return cons.zero_extension(cons.cyclic_group(2)).S


def test_discrete_on_z2_and_two():
    f = check_metric_flags(discrete_metric(cons.cyclic_group(2)))
    assert f.metric and f.left_sub and f.right_sub and f.subinvariant
    assert check_metric_flags(discrete_metric(cons.two())).subinvariant


def test_scaled_metric_on_two():
    M = MetricMatrix(cons.two(), [[0, 2], [2, 0]])
    assert check_metric_flags(M).subinvariant


def test_axiom_failures():
    two = cons.two()
    with pytest.raises(InvalidMetric):
        check_metric_flags(MetricMatrix(two, [[0, 1], [2, 0]]))
    with pytest.raises(InvalidMetric):
        check_metric_flags(MetricMatrix(cons.chain(2), [[0, 1, 5], [1, 0, 1], [5, 1, 0]]))
    flags = check_metric_flags(MetricMatrix(two, [[0, 0], [0, 0]]), strict=False)
    assert not flags.metric
    with pytest.raises(TypeError):
        MetricMatrix(two, [[0, 0.5], [0.5, 0]])


def test_flag_witness_is_a_real_violation():
    S = base("s3")
    M = random_rational_metric(S, seed=3)
    f = check_metric_flags(M)
    assert not f.subinvariant
    if "left_subinvariant" in f.witnesses:
        x, y, z = f.witnesses["left_subinvariant"]
        assert M(S.mul(z, x), S.mul(z, y)) > M(x, y)


def test_closure_fixes_known_metrics():
    assert subinvariant_closure(discrete_metric(cons.cyclic_group(2))) == discrete_metric(cons.cyclic_group(2))
    assert subinvariant_closure(discrete_metric(cons.two())) == discrete_metric(cons.two())


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 10**6), st.booleans())
def test_closure_is_subinvariant_against_brute_force(name, seed, tree):
    S = catalog()[name]
    M = (spanning_tree_metric if tree else random_rational_metric)(S, seed=seed)
    rho = subinvariant_closure(M)
    t = brute.rows(S)
    d = brute.frac_rows(rho)
    assert brute.metric_ok(d)
    assert brute.subinvariant(t, d, list(clifford_structure(S).inverse))
    # closure dominates the input and is idempotent
    assert all(rho(x, y) >= M(x, y) for x in range(S.size) for y in range(S.size))
    assert subinvariant_closure(rho) == rho


def test_one_sided_formula_fails_on_s3():
    # the one-sided maximum need not be subinvariant on a non-commutative group
    S = base("s3")
    bad = 0
    for seed in range(20):
        rho = one_sided_closure(random_rational_metric(S, seed=seed))
        f = check_metric_flags(rho, strict=False)
        bad += not (f.metric and f.subinvariant)
    assert bad > 0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([n for n in SMALL if catalog()[n].table.tolist() ==
                        catalog()[n].table.T.tolist()]), st.integers(0, 10**6))
def test_one_sided_formula_on_commutative(name, seed):
    S = catalog()[name]
    rho = one_sided_closure(random_rational_metric(S, seed=seed))
    f = check_metric_flags(rho, strict=False)
    assert f.metric and f.subinvariant


def test_word_metrics_are_bi_invariant():
    for g in ("z2", "z3", "z4", "z5", "z6", "klein", "s3"):
        G = base(g)
        M = bi_invariant_word_metric(G)
        assert brute.metric_ok(brute.frac_rows(M))
        assert check_metric_flags(M).subinvariant, g


def test_cone_metric_formula():
    Z3 = base("z3")
    d = bi_invariant_word_metric(Z3)
    apex = ConePoint(0, 0)
    assert cone_metric(Z3, d, apex, ConePoint(F(1, 3), 2)) == F(1, 3)
    assert cone_metric(Z3, d, ConePoint(1, 1), ConePoint(1, 2)) == min(2, d(1, 2))
    assert cone_metric(Z3, d, ConePoint(F(1, 2), 1), ConePoint(F(1, 2), 1)) == 0
    with pytest.raises(ValueError):
        ConePoint(2, 0)


def test_verify_cone_metric_examples():
    Z2 = base("z2")
    pts = [ConePoint(0, 0)] + [ConePoint(t, h) for t in (F(1, 2), 1) for h in range(2)]
    assert verify_cone_metric(Z2, discrete_metric(Z2), pts).passed
    Z3 = base("z3")
    pts = [ConePoint(0, 0)] + [ConePoint(t, h) for t in (F(1, 2), 1) for h in range(3)]
    rep = verify_cone_metric(Z3, bi_invariant_word_metric(Z3), pts)
    assert len(rep.points) == 7 and rep.passed
    assert verify_cone_metric(Z3, discrete_metric(Z3), [ConePoint(0, 0)]).passed
    with pytest.raises(SampleNotClosed):
        verify_cone_metric(Z3, discrete_metric(Z3), [ConePoint(1, 1)])


def test_cone_metric_matrix_is_subinvariant():
    for g in ("z2", "s3"):
        G = base(g)
        M = cone_metric_matrix(G, bi_invariant_word_metric(G), 3)
        assert check_metric_flags(M).subinvariant


def test_refute_euclid():
    r = refute_example64(euclid_oracle(), F(1, 100))
    assert r.verdict == "witness" and r.n == 50
    assert r.even_distance <= F(1, 100)


def test_refute_discrete_is_inconclusive_below_one():
    for eps in (F(1, 2), F(99, 100), F(1, 7)):
        assert refute_example64(discrete_oracle(), eps).verdict == "inconclusive"


def test_refute_violation():
    N = 7
    pts = [F(0)] + [F(1, k) for k in range(1, N + 1)]
    rows = [[F(int(x != y)) for y in pts] for x in pts]
    rows[0][3] = rows[3][0] = F(3, 2)
    r = refute_example64(table_oracle(rows), F(1, 100))
    assert r.verdict == "violation" and r.n == 1


def test_malformed_oracle():
    asymmetric = table_oracle([[0, 1], [2, 0]])
    with pytest.raises(MalformedOracle):
        refute_example64(asymmetric, F(1, 2))
    with pytest.raises(MalformedOracle):
        table_oracle([[0, 1, 1], [1, 0]])


def test_metric_round_trip(tmp_path):
    S = base("s3")
    M = random_rational_metric(S, seed=5)
    assert parse_metric(format_metric(M), S) == M
    with pytest.raises(ParseError) as info:
        parse_metric("metric 2\n0 1\n1 x\n", cons.two(), source="m.txt")
    assert info.value.line == 3 and info.value.column == 3


def test_oracle_round_trip():
    o = euclid_oracle(9)
    back = parse_oracle(format_oracle(o))
    assert all(back.d(x, y) == o.d(x, y) for x in o.points() for y in o.points())


def test_grid_handles_large_denominators():
    S = cons.two()
    M = MetricMatrix(S, [[0, F(1, 3**45)], [F(1, 3**45), 0]])
    g, den = M.grid()
    assert MetricMatrix.from_grid(S, g, den) == M
    assert check_metric_flags(M).subinvariant
