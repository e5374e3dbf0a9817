"""Semigroup homomorphisms between finite semigroups.

Two enumeration routes are kept deliberately separate: a vectorised scan of
every map ``X -> Y`` (used below a candidate budget), and a backtracking
search that only branches on a generating set of ``X`` and propagates the
homomorphism law to everything the generators produce.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import limits
from .errors import BudgetExceeded, InternalError, PreconditionError
from .order import natural_order
from .semigroup import FiniteSemigroup, element_set


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: FiniteSemigroup
    target: FiniteSemigroup
    map: tuple

    def __post_init__(self):
        if len(self.map) != self.source.size:
            raise ValueError("map length differs from the source size")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __eq__(self, other):
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return (self.map == other.map and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash(self.map)

    def image(self) -> frozenset:
        return frozenset(self.map)

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """``other`` after ``self``."""
        return Homomorphism(self.source, other.target, tuple(other.map[v] for v in self.map))


def hom_law_violation(X: FiniteSemigroup, Y: FiniteSemigroup, m: Sequence[int]):
    """First pair (s, t) with m(st) != m(s)m(t), or None."""
    arr = np.asarray(m, dtype=np.intp)
    if arr.shape != (X.size,):
        raise ValueError("map has the wrong length")
    if np.any((arr < 0) | (arr >= Y.size)):
        raise ValueError("map leaves the target")
    bad = np.argwhere(arr[X.table] != Y.table[arr[:, None], arr[None, :]])
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


def is_homomorphism(X, Y, m) -> bool:
    return hom_law_violation(X, Y, m) is None


def make_hom(X, Y, m) -> Homomorphism:
    """Wrap a map after checking the homomorphism law."""
    bad = hom_law_violation(X, Y, m)
    if bad is not None:
        s, t = bad
        raise InternalError(f"map is not a homomorphism at ({s}, {t})")
    return Homomorphism(X, Y, tuple(int(v) for v in m))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_homs(X: FiniteSemigroup, Y: FiniteSemigroup, method="auto", budget=None):
    """All homomorphisms X -> Y, ordered lexicographically by their map arrays.

    ``method`` is ``"scan"``, ``"backtrack"`` or ``"auto"`` (scan when
    |Y|^|X| fits the budget).
    """
    budget = limits.HOM_SCAN_BUDGET if budget is None else budget
    candidates = Y.size ** X.size
    if method == "auto":
        method = "scan" if candidates <= budget else "backtrack"
    if method == "scan":
        if candidates > budget:
            raise BudgetExceeded("full hom scan", candidates, budget, name="budget")
        maps = _scan(X, Y)
    elif method == "backtrack":
        maps = _backtrack(X, Y)
    else:
        raise ValueError(f"unknown method {method!r}")
    maps = sorted(set(maps))
    _verify_batch(X, Y, maps)
    return [Homomorphism(X, Y, m) for m in maps]


def _verify_batch(X, Y, maps, chunk=4096):
    """The hom law for many maps at once; raises on the first failure."""
    for start in range(0, len(maps), chunk):
        arr = np.array(maps[start:start + chunk], dtype=np.intp).reshape(-1, X.size)
        ok = (arr[:, X.table] == Y.table[arr[:, :, None], arr[:, None, :]]).all(axis=(1, 2))
        if not ok.all():
            bad = maps[start + int(np.flatnonzero(~ok)[0])]
            raise InternalError(f"enumerated map {bad} is not a homomorphism")


def _scan(X, Y, chunk=1 << 20):
    """Every code in [0, |Y|^|X|) read as a map in base |Y| (first element most
    significant), filtered by the hom law one pair at a time.  Digit columns
    are decoded on demand for the surviving codes only."""
    n, m = X.size, Y.size
    total = m ** n
    xt, yt = X.table, Y.table
    weights = [m ** (n - 1 - i) for i in range(n)]
    pairs = _check_order(xt)
    found = []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = {}

        def col(i):
            if i not in cols:
                cols[i] = (codes // weights[i]) % m
            return cols[i]

        for s, t in pairs:
            keep = yt[col(s), col(t)] == col(int(xt[s, t]))
            if not keep.all():
                codes = codes[keep]
                cols = {k: v[keep] for k, v in cols.items()}
                if not len(codes):
                    break
        if len(codes):
            digits = (codes[:, None] // np.array(weights, dtype=np.int64)[None, :]) % m
            found.extend(tuple(int(v) for v in row) for row in digits)
    return found


def _check_order(xt):
    """All pairs (s, t), ordered to decode as few new columns as possible early."""
    return _check_order_cached(xt.tobytes(), xt.shape[0])


@lru_cache(maxsize=512)
def _check_order_cached(raw, n):
    xt = np.frombuffer(raw, dtype=np.intp).reshape(n, n)
    remaining = {(s, t) for s in range(n) for t in range(n)}
    seen = set()
    out = []
    while remaining:
        best = min(remaining, key=lambda p: (len({p[0], p[1], int(xt[p])} - seen), p))
        remaining.discard(best)
        seen |= {best[0], best[1], int(xt[best])}
        out.append(best)
    return tuple(out)


def generating_set(X: FiniteSemigroup) -> list:
    """Greedy generating set: repeatedly add the element that enlarges the
    generated subsemigroup the most (lowest index on ties)."""
    gens = []
    generated = set()
    while len(generated) < X.size:
        best, best_closure = None, None
        for x in range(X.size):
            if x in generated:
                continue
            cl = _closure(X, generated, x)
            if best_closure is None or len(cl) > len(best_closure):
                best, best_closure = x, cl
        gens.append(best)
        generated = best_closure
    return gens


def _closure(X, base, extra):
    t = X.table
    known = set(base)
    frontier = [extra] if extra not in known else []
    known.add(extra)
    while frontier:
        new = []
        for u in frontier:
            for k in list(known):
                for p in (int(t[u, k]), int(t[k, u])):
                    if p not in known:
                        known.add(p)
                        new.append(p)
        frontier = new
    return known


def _backtrack(X, Y):
    xt, yt = X.table, Y.table
    gens = generating_set(X)
    img = [-1] * X.size
    known = []
    results = []

    def assign(x, v):
        """Set img[x] = v and propagate; False on a hom-law conflict."""
        img[x] = v
        known.append(x)
        queue = [x]
        while queue:
            u = queue.pop()
            for k in list(known):
                for a, b in ((u, k), (k, u)):
                    p = int(xt[a, b])
                    val = int(yt[img[a], img[b]])
                    if img[p] == -1:
                        img[p] = val
                        known.append(p)
                        queue.append(p)
                    elif img[p] != val:
                        return False
        return True

    def rec(i):
        if i == len(gens):
            results.append(tuple(img))
            return
        g = gens[i]
        for v in range(Y.size):
            mark = len(known)
            if assign(g, v):
                rec(i + 1)
            for x in known[mark:]:
                img[x] = -1
            del known[mark:]

    rec(0)
    return results


def enumerate_homs_both(X, Y):
    """Map lists from the scan route and the backtracking route, in that order."""
    scan = [h.map for h in enumerate_homs(X, Y, method="scan")]
    back = [h.map for h in enumerate_homs(X, Y, method="backtrack")]
    return scan, back


# ---------------------------------------------------------------------------
# the sets Hom_e^a(E, T) into a chain target


def _resolve_target(target):
    from .constructions import chain
    if isinstance(target, FiniteSemigroup):
        return target
    if target == "two":
        return chain(1)
    if isinstance(target, int):
        return chain(target)
    raise ValueError(f"unknown target {target!r}")


def _chain_ends(T: FiniteSemigroup):
    O = natural_order(T)
    if not np.all(O.leq | O.leq.T):
        raise PreconditionError("target must be a chain")
    return O.bottom(), O.top()


def _check_e_a(E, e, a):
    O = natural_order(E)
    element_set(E, (e, a))
    if not O.way_below(e, a):
        raise PreconditionError(f"need e << a, but {E.label(e)} is not below {E.label(a)}")
    return O


def hom_e_a_set(E: FiniteSemigroup, e: int, a: int, target="two") -> list:
    """Homs h: E -> target with h(a) = top and h(E minus up(e)) = {bottom}."""
    O = _check_e_a(E, e, a)
    T = _resolve_target(target)
    bottom, top = _chain_ends(T)
    ideal = [x for x in range(E.size) if not O.le(e, x)]
    out = [h for h in enumerate_homs(E, T)
           if h.map[a] == top and all(h.map[x] == bottom for x in ideal)]
    if not out:
        raise InternalError("Hom_e^a is empty although e << a")
    return out


def select_h_e_a(E: FiniteSemigroup, e: int, a: int, target="two") -> Homomorphism:
    """The indicator of up(e), sent to the ends of the target chain.

    This is the deterministic choice for h_e^a; it is always 2-valued.
    """
    O = _check_e_a(E, e, a)
    T = _resolve_target(target)
    bottom, top = _chain_ends(T)
    m = tuple(top if O.le(e, x) else bottom for x in range(E.size))
    h = make_hom(E, T, m)
    if m[a] != top or any(m[x] != bottom for x in range(E.size) if not O.le(e, x)):
        raise InternalError("indicator of up(e) is not in Hom_e^a")
    return h


# ---------------------------------------------------------------------------
# canonical maps


@dataclass(frozen=True)
class CanonicalMap:
    images: tuple          # images[x] = (h(x) for h in homs)
    injective: bool
    collisions: tuple      # unseparated pairs (x, y), x < y

    def separator(self, x, y):
        """Index of the first hom telling x and y apart, or None."""
        for i, (u, v) in enumerate(zip(self.images[x], self.images[y])):
            if u != v:
                return i
        return None


def canonical_map(X: FiniteSemigroup, Y: FiniteSemigroup, homs) -> CanonicalMap:
    """x -> (h(x))_h over the given homs, with an injectivity verdict."""
    homs = list(homs)
    for h in homs:
        if h.source != X or h.target != Y:
            raise ValueError("hom does not go from X to Y")
    images = tuple(tuple(h.map[x] for h in homs) for x in range(X.size))
    collisions = tuple((x, y) for x in range(X.size) for y in range(x + 1, X.size)
                       if images[x] == images[y])
    return CanonicalMap(images=images, injective=not collisions, collisions=collisions)
