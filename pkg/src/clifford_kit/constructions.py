"""Constructors: named small semigroups, direct and reduced products, cones.

Reduced products ``E x_I H`` live on ``I + (E - I) x H``.  Elements are coded
with the ideal first (in E-order), then the pairs ``(x, h)`` in lexicographic
order of (E-index, H-index).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import limits
from .errors import InternalError, NotAGroup, NotAnIdeal, SizeLimitExceeded
from .homs import Homomorphism, make_hom
from .semigroup import (CliffordStructure, FiniteSemigroup, classify, clifford_structure,
                        element_set, is_ideal, right_division_set)


def _cap(required, what, max_size):
    cap = limits.max_elements() if max_size is None else max_size
    if required > cap:
        raise SizeLimitExceeded(what, required, cap)
    return cap


# ---------------------------------------------------------------------------
# named semigroups


def chain(n: int) -> FiniteSemigroup:
    """The min-semilattice on the levels 0, 1/n, ..., 1."""
    if n < 1:
        raise ValueError("chain needs n >= 1")
    levels = np.arange(n + 1)
    table = np.minimum(levels[:, None], levels[None, :])
    return FiniteSemigroup(table, [str(Fraction(i, n)) for i in levels])


def two() -> FiniteSemigroup:
    return chain(1)


def chain_level(S: FiniteSemigroup, i: int) -> Fraction:
    """Numeric level of element i of ``chain(n)``."""
    return Fraction(i, S.size - 1)


def trivial_group() -> FiniteSemigroup:
    return FiniteSemigroup([[0]], ["e"])


def cyclic_group(k: int) -> FiniteSemigroup:
    if k < 1:
        raise ValueError("cyclic group needs k >= 1")
    r = np.arange(k)
    labels = ["e", "g"] + [f"g^{i}" for i in range(2, k)]
    return FiniteSemigroup((r[:, None] + r[None, :]) % k, labels[:k])


def _cycle_label(p):
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x))
            x = p[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric_group(k: int) -> FiniteSemigroup:
    """Permutations of {0..k-1} in lexicographic order; (p*q)(i) = p(q(i))."""
    perms = list(itertools.permutations(range(k)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    return FiniteSemigroup(table, [_cycle_label(p) for p in perms])


def klein_group() -> FiniteSemigroup:
    z2 = cyclic_group(2)
    return direct_product(z2, z2).relabel(["e", "a", "b", "c"])


def diamond() -> FiniteSemigroup:
    return direct_product(two(), two())


# ---------------------------------------------------------------------------
# products


def direct_product(A: FiniteSemigroup, B: FiniteSemigroup, *, max_size=None,
                   check=True) -> FiniteSemigroup:
    """Componentwise product; element (a, b) has index a*|B| + b.

    ``check=False`` skips the associativity pass, which is redundant when
    both factors are already validated.
    """
    _cap(A.size * B.size, "direct product", max_size)
    n, m = A.size, B.size
    a = np.repeat(np.arange(n), m)
    b = np.tile(np.arange(m), n)
    table = A.table[a[:, None], a[None, :]] * m + B.table[b[:, None], b[None, :]]
    labels = [f"({A.label(i)},{B.label(j)})" for i in range(n) for j in range(m)]
    return FiniteSemigroup(table, labels, max_size=max_size, check=check)


def product_projections(A, B, P):
    """The two coordinate projections of ``P = direct_product(A, B)``."""
    m = B.size
    pa = make_hom(P, A, [x // m for x in range(P.size)])
    pb = make_hom(P, B, [x % m for x in range(P.size)])
    return pa, pb


@dataclass(frozen=True, eq=False)
class ReducedProductSpec:
    E: FiniteSemigroup
    I: frozenset
    H: FiniteSemigroup
    coding: tuple  # int x for ideal points, (x, h) pairs otherwise

    @property
    def size(self):
        return len(self.coding)

    def index(self, code) -> int:
        return self._positions()[code]

    def _positions(self):
        cache = self.__dict__.get("_pos")
        if cache is None:
            cache = {c: i for i, c in enumerate(self.coding)}
            object.__setattr__(self, "_pos", cache)
        return cache

    def point(self, x: int, h: int) -> int:
        """Image of (x, h) under the quotient map q."""
        return self.index(x if x in self.I else (x, h))

    def e_coordinate(self, i: int) -> int:
        c = self.coding[i]
        return c if isinstance(c, int) else c[0]

    def h_coordinate(self, i: int):
        c = self.coding[i]
        return None if isinstance(c, int) else c[1]


@dataclass(frozen=True, eq=False)
class ReducedProduct:
    S: FiniteSemigroup
    q: Homomorphism      # E x H -> S
    proj: Homomorphism   # S -> E
    spec: ReducedProductSpec


def reduced_product(E: FiniteSemigroup, I, H: FiniteSemigroup, *, max_size=None) -> ReducedProduct:
    """E x_I H: the quotient of E x H that collapses I x H onto I."""
    ideal = element_set(E, I)
    if not is_ideal(E, ideal):
        raise NotAnIdeal(f"{sorted(ideal)} is not an ideal")
    outside = [x for x in range(E.size) if x not in ideal]
    size = len(ideal) + len(outside) * H.size
    _cap(size, "reduced product", max_size)

    coding = tuple(sorted(ideal)) + tuple((x, h) for x in outside for h in range(H.size))
    spec = ReducedProductSpec(E, ideal, H, coding)

    ecoord = np.array([spec.e_coordinate(i) for i in range(size)], dtype=np.intp)
    hcoord = np.array([-1 if spec.h_coordinate(i) is None else spec.h_coordinate(i)
                       for i in range(size)], dtype=np.intp)
    ideal_pos = np.full(E.size, -1, dtype=np.intp)
    pair_pos = np.full((E.size, H.size), -1, dtype=np.intp)
    for i, c in enumerate(coding):
        if isinstance(c, int):
            ideal_pos[c] = i
        else:
            pair_pos[c] = i

    z = E.table[ecoord[:, None], ecoord[None, :]]
    hz = H.table[np.maximum(hcoord, 0)[:, None], np.maximum(hcoord, 0)[None, :]]
    in_ideal = ideal_pos[z] >= 0
    table = np.where(in_ideal, ideal_pos[z], pair_pos[z, hz])
    labels = [E.label(c) if isinstance(c, int) else f"({E.label(c[0])},{H.label(c[1])})"
              for c in coding]
    S = FiniteSemigroup(table, labels, max_size=max_size)

    EH = direct_product(E, H, max_size=max(E.size * H.size, 1))
    q = make_hom(EH, S, [spec.point(x, h) for x in range(E.size) for h in range(H.size)])
    if set(q.map) != set(range(size)):
        raise InternalError("quotient map is not onto")
    proj = make_hom(S, E, ecoord.tolist())
    return ReducedProduct(S=S, q=q, proj=proj, spec=spec)


def cone(G: FiniteSemigroup, n: int, *, max_size=None) -> ReducedProduct:
    """chain(n) x_{0} G, the finite stand-in for the cone over G."""
    if not classify(G).is_group:
        raise NotAGroup("the cone is built over a group")
    if n < 1:
        raise ValueError("cone needs n >= 1 levels")
    return reduced_product(chain(n), {0}, G, max_size=max_size)


def zero_extension(G: FiniteSemigroup) -> ReducedProduct:
    """2 x_{0} G: the group with a zero adjoined."""
    return cone(G, 1)


# ---------------------------------------------------------------------------
# ditopological check in the discrete topology


@dataclass(frozen=True)
class DitopologicalReport:
    verdict: bool
    witnesses: dict   # x -> ({x} / {pi x}) & pi^{-1}(pi x)
    failures: tuple


def check_ditopological_discrete(S: FiniteSemigroup, C: CliffordStructure | None = None) -> DitopologicalReport:
    """Evaluate the ditopological condition with the neighbourhoods U_x = O_x = {x}
    and W = {pi(x)}."""
    if C is None:
        C = clifford_structure(S)
    witnesses = {}
    failures = []
    for x in range(S.size):
        e = C.pi[x]
        fiber = frozenset(C.fiber(e))
        w = right_division_set(S, {x}, {e}) & fiber
        witnesses[x] = w
        if not w <= {x}:
            failures.append(x)
    return DitopologicalReport(verdict=not failures, witnesses=witnesses, failures=tuple(failures))
