import pytest

from clifford_kit import constructions as cons
from clifford_kit.catalog import semilattice_members
from clifford_kit.errors import NotSemilattice
from clifford_kit.order import (cones, down_closure, enumerate_ideals, is_U_dense,
                                locally_minimal_points, minimal_neighborhood, natural_order,
                                up_closure, up_indicator)

import brute


def test_natural_order_two_and_chain():
    O = natural_order(cons.two())
    assert O.le(0, 1) and not O.le(1, 0)
    O = natural_order(cons.chain(2))
    assert O.le(0, 1) and O.le(1, 2) and O.le(0, 2)
    assert O.bottom() == 0 and O.top() == 2


def test_natural_order_diamond():
    O = natural_order(cons.diamond())
    # (0,0) < (0,1), (1,0) < (1,1); middle elements incomparable
    assert O.le(0, 1) and O.le(0, 2) and O.le(1, 3) and O.le(2, 3)
    assert not O.le(1, 2) and not O.le(2, 1)
    assert O.meet(1, 2) == 0


def test_natural_order_rejects_groups():
    with pytest.raises(NotSemilattice):
        natural_order(cons.cyclic_group(2))


def test_cones_examples():
    c = cones(natural_order(cons.two()), 1)
    assert c.down == {0, 1} and c.up == {1} and c.way_below_of_x == {0, 1}
    c = cones(natural_order(cons.chain(2)), 0)
    assert c.down == {0} and c.up == {0, 1, 2}
    c = cones(natural_order(cons.diamond()), 3)
    assert c.down == {0, 1, 2, 3} and c.up == {3}


def test_discrete_neighbourhoods():
    for E in (cons.two(), cons.chain(2), cons.diamond()):
        O = natural_order(E)
        assert locally_minimal_points(O) == set(range(E.size))
        assert all(minimal_neighborhood(O, x) == {x} for x in range(E.size))


def test_u_density():
    O = natural_order(cons.two())
    assert is_U_dense(O, {0, 1})
    assert not is_U_dense(O, {0})
    assert is_U_dense(natural_order(cons.chain(2)), {0, 1, 2})


def test_ideal_counts():
    assert [sorted(I) for I in enumerate_ideals(natural_order(cons.two()))] == [[], [0], [0, 1]]
    assert len(enumerate_ideals(natural_order(cons.chain(2)))) == 4
    assert len(enumerate_ideals(natural_order(cons.diamond()))) == 6


def test_ideals_agree_with_brute_force_on_catalog():
    for name, E in semilattice_members(max_size=12):
        got = enumerate_ideals(natural_order(E))
        want = brute.ideals_of_semilattice(brute.rows(E))
        assert sorted(map(sorted, got)) == sorted(map(sorted, want)), name


def test_closures_and_indicators():
    O = natural_order(cons.diamond())
    assert down_closure(O, [1, 2]) == {0, 1, 2}
    assert up_closure(O, [1]) == {1, 3}
    assert up_indicator(O, 1) == (0, 1, 0, 1)
