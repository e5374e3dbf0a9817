"""Natural order on a finite semilattice, and the discrete-topology versions
of cones, way-below, local minimality and U-density.

A finite Hausdorff space is discrete, so every upper cone is open: the
interior of ``up(x)`` is ``up(x)`` itself, ``e << x`` reduces to ``e <= x``,
every point is locally minimal and every ideal is clopen.  The functions keep
topology-shaped signatures so the convention stays visible at call sites.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import limits
from .errors import InternalError, NotSemilattice, SizeLimitExceeded
from .semigroup import FiniteSemigroup, element_set, is_semilattice


@dataclass(frozen=True, eq=False)
class SemilatticeOrder:
    base: FiniteSemigroup
    leq: np.ndarray  # leq[x, y] iff x <= y

    @property
    def size(self):
        return self.base.size

    def le(self, x, y) -> bool:
        return bool(self.leq[x, y])

    def meet(self, x, y) -> int:
        return self.base.mul(x, y)

    def down(self, x) -> frozenset:
        return frozenset(int(y) for y in np.flatnonzero(self.leq[:, x]))

    def up(self, x) -> frozenset:
        return frozenset(int(y) for y in np.flatnonzero(self.leq[x, :]))

    def way_below(self, e, x) -> bool:
        """e << x, i.e. x lies in the interior of up(e); discrete, so e <= x."""
        return self.le(e, x)

    def bottom(self):
        return _extreme(self.leq, axis=1)

    def top(self):
        return _extreme(self.leq, axis=0)

    def linear_extension(self) -> list:
        """Elements sorted so that x <= y implies x comes first."""
        below = self.leq.sum(axis=0)
        return sorted(range(self.size), key=lambda x: (int(below[x]), x))


def _extreme(leq, axis):
    hits = np.flatnonzero(leq.all(axis=axis))
    return int(hits[0]) if len(hits) else None


def natural_order(E: FiniteSemigroup) -> SemilatticeOrder:
    if not is_semilattice(E):
        raise NotSemilattice("natural order needs a commutative band of idempotents")
    t = E.table
    n = E.size
    leq = t == np.arange(n)[:, None]  # x*y == x
    leq.setflags(write=False)
    if not np.all(np.diagonal(leq)):
        raise InternalError("order is not reflexive")
    if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
        raise InternalError("order is not antisymmetric")
    li = leq.astype(np.int64)
    if np.any((li @ li > 0) & ~leq):
        raise InternalError("order is not transitive")
    return SemilatticeOrder(E, leq)


@dataclass(frozen=True)
class Cones:
    down: frozenset
    up: frozenset
    way_below_of_x: frozenset


def cones(O: SemilatticeOrder, x: int) -> Cones:
    way_below = frozenset(y for y in range(O.size) if O.way_below(y, x))
    return Cones(down=O.down(x), up=O.up(x), way_below_of_x=way_below)


def locally_minimal_points(O: SemilatticeOrder) -> frozenset:
    """Points whose upper cone is open; with the discrete topology, all of them."""
    return frozenset(range(O.size))


def minimal_neighborhood(O: SemilatticeOrder, x: int) -> frozenset:
    return frozenset({x})


def is_U_dense(O: SemilatticeOrder, A: Iterable[int]) -> bool:
    """Every neighbourhood of every x meets A in some e << x.

    It is enough to test the smallest neighbourhood of each point, which in
    the discrete topology is ``{x}``; the check therefore holds iff A = E.
    """
    members = element_set(O.base, A)
    verdict = all(
        any(O.way_below(e, x) for e in minimal_neighborhood(O, x) & members)
        for x in range(O.size)
    )
    if verdict != (members == frozenset(range(O.size))):
        raise InternalError("U-density disagrees with the discrete reduction A == E")
    return verdict


def up_indicator(O: SemilatticeOrder, a: int) -> tuple:
    """The map x -> [x >= a] into the two-element semilattice {0 < 1}."""
    return tuple(int(v) for v in O.leq[a, :])


def enumerate_ideals(O: SemilatticeOrder, max_size=None) -> list:
    """All ideals of the semilattice, sorted by their bitmask.

    For a semilattice these are the down-sets; candidates are generated as
    down-sets along a linear extension and each is rechecked against E*I <= I.
    """
    cap = limits.MAX_IDEAL_ENUMERATION_SIZE if max_size is None else max_size
    if O.size > cap:
        raise SizeLimitExceeded("ideal enumeration (2^size subsets)", O.size, cap,
                                name="max_size")
    order = O.linear_extension()
    strictly_below = [np.flatnonzero(O.leq[:, x]) for x in range(O.size)]
    found = []
    chosen = np.zeros(O.size, dtype=bool)

    def rec(pos):
        if pos == len(order):
            found.append(frozenset(int(v) for v in np.flatnonzero(chosen)))
            return
        x = order[pos]
        rec(pos + 1)
        below = strictly_below[x]
        if all(chosen[y] for y in below if y != x):
            chosen[x] = True
            rec(pos + 1)
            chosen[x] = False

    rec(0)
    t = O.base.table
    for ideal in found:
        if ideal:
            idx = sorted(ideal)
            if not np.all(np.isin(t[:, idx], idx)):
                raise InternalError(f"down-set {sorted(ideal)} is not an ideal")
    return sorted(found, key=bitmask)


def bitmask(s: Iterable[int]) -> int:
    return sum(1 << int(x) for x in s)


def down_closure(O: SemilatticeOrder, xs: Iterable[int]) -> frozenset:
    out = set()
    for x in xs:
        out |= O.down(x)
    return frozenset(out)


def up_closure(O: SemilatticeOrder, xs: Iterable[int]) -> frozenset:
    out = set()
    for x in xs:
        out |= O.up(x)
    return frozenset(out)
