import random

import pytest
from hypothesis import given, settings, strategies as st

from clifford_kit import constructions as cons
from clifford_kit.catalog import base, catalog
from clifford_kit.errors import BudgetExceeded, PreconditionError
from clifford_kit.homs import (canonical_map, enumerate_homs, enumerate_homs_both, generating_set,
                               hom_e_a_set, is_homomorphism, make_hom, select_h_e_a)
from clifford_kit.errors import InternalError

import brute


def maps(homs):
    return [h.map for h in homs]


def test_hom_counts():
    two, c3, z2 = cons.two(), cons.chain(2), cons.cyclic_group(2)
    assert maps(enumerate_homs(two, two)) == [(0, 0), (0, 1), (1, 1)]
    assert len(enumerate_homs(c3, two)) == 4
    assert maps(enumerate_homs(z2, two)) == [(0, 0), (1, 1)]


@pytest.mark.parametrize("x,y", [("two", "chain2"), ("chain3", "two"), ("z2", "z4"),
                                 ("klein", "z2"), ("s3", "z2"), ("diamond", "chain2"),
                                 ("z3", "s3")])
def test_both_routes_match_brute_force(x, y):
    X, Y = base(x), base(y)
    want = brute.homs(brute.rows(X), brute.rows(Y))
    scan, back = enumerate_homs_both(X, Y)
    assert scan == back == want


def test_random_pairs_against_brute_force():
    rng = random.Random(7)
    small = [S for S in catalog().values() if S.size <= 5]
    for _ in range(25):
        X, Y = rng.choice(small), rng.choice(small)
        if Y.size ** X.size > 20000:
            continue
        assert maps(enumerate_homs(X, Y, method="backtrack")) == \
            brute.homs(brute.rows(X), brute.rows(Y))


def test_generating_set_generates():
    for name in ("s3", "klein", "diamond", "chain4"):
        S = base(name)
        gens = generating_set(S)
        seen = set(gens)
        frontier = list(gens)
        while frontier:
            new = {S.mul(a, b) for a in seen for b in seen} - seen
            seen |= new
            frontier = list(new)
        assert seen == set(range(S.size)), name


def test_scan_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_homs(base("chain8"), base("chain8"), method="scan", budget=1000)


def test_make_hom_rejects_non_homs():
    assert not is_homomorphism(cons.two(), cons.two(), (1, 0))
    with pytest.raises(InternalError):
        make_hom(cons.two(), cons.two(), (1, 0))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(n for n, S in catalog().items() if S.size <= 6)),
       st.sampled_from(sorted(n for n, S in catalog().items() if S.size <= 4)))
def test_composition_of_homs_is_a_hom(x, y):
    X, Y = catalog()[x], catalog()[y]
    if Y.size ** X.size > 50000:
        return
    hs = enumerate_homs(X, Y)
    for h in hs[:5]:
        for g in enumerate_homs(Y, Y)[:5]:
            assert is_homomorphism(X, Y, h.compose(g).map)


def test_hom_e_a_examples():
    two, c3 = cons.two(), cons.chain(2)
    assert maps(hom_e_a_set(two, 1, 1)) == [(0, 1)]
    assert maps(hom_e_a_set(c3, 1, 2)) == [(0, 0, 1), (0, 1, 1)]
    assert maps(hom_e_a_set(two, 0, 1)) == [(0, 1), (1, 1)]
    with pytest.raises(PreconditionError):
        hom_e_a_set(c3, 2, 1)


def test_selected_hom_is_up_indicator():
    assert select_h_e_a(cons.two(), 1, 1).map == (0, 1)
    assert select_h_e_a(cons.chain(2), 1, 2).map == (0, 1, 1)
    assert select_h_e_a(cons.diamond(), 0, 3).map == (1, 1, 1, 1)
    # the selection always lies in the enumerated set, also for chain targets
    for E in (cons.chain(3), cons.diamond()):
        for e in range(E.size):
            for a in range(E.size):
                if E.mul(e, a) == e:
                    for target in ("two", 3):
                        assert select_h_e_a(E, e, a, target) in hom_e_a_set(E, e, a, target)


def test_canonical_maps():
    two, z2, c3 = cons.two(), cons.cyclic_group(2), cons.chain(2)
    assert canonical_map(two, two, enumerate_homs(two, two)).injective
    cm = canonical_map(z2, two, enumerate_homs(z2, two))
    assert not cm.injective and cm.collisions == ((0, 1),)
    cm = canonical_map(c3, two, enumerate_homs(c3, two))
    assert cm.injective and cm.separator(0, 2) is not None
