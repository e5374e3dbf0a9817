"""Subinvariant metrics on finite Clifford semigroups, the cone metric, and the
semi-decision procedure for the countable semilattice {0} + {1/n}.

All distances are :class:`fractions.Fraction`.  Exhaustive checks rescale a
matrix to integers over a common denominator, so numpy comparisons stay exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .constructions import cone
from .errors import (InternalError, InvalidMetric, MalformedOracle, NotAGroup,
                     ParseError, SampleNotClosed)
from .homs import generating_set
from .semigroup import (CliffordStructure, FiniteSemigroup, classify, clifford_structure,
                        identity_element)


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("distances must be exact; got a float")
    return Fraction(v)


class MetricMatrix:
    """A symmetric table of rational distances over the elements of ``base``."""

    __slots__ = ("base", "d")

    def __init__(self, base: FiniteSemigroup, d):
        rows = tuple(tuple(_frac(v) for v in row) for row in d)
        if len(rows) != base.size or any(len(r) != base.size for r in rows):
            raise ValueError(f"distance table must be {base.size}x{base.size}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "d", rows)

    def __setattr__(self, name, value):
        raise AttributeError("MetricMatrix is immutable")

    @property
    def size(self):
        return self.base.size

    def __call__(self, x, y) -> Fraction:
        return self.d[x][y]

    def __eq__(self, other):
        if not isinstance(other, MetricMatrix):
            return NotImplemented
        return self.d == other.d and self.base == other.base

    def __hash__(self):
        return hash(self.d)

    def __repr__(self):
        return f"MetricMatrix(size={self.size})"

    def grid(self):
        """(integer array, denominator) with d[x][y] == grid[x, y] / denominator."""
        den = 1
        for row in self.d:
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
        ints = [[v.numerator * (den // v.denominator) for v in row] for row in self.d]
        biggest = max((abs(v) for row in ints for v in row), default=0)
        dtype = np.int64 if biggest < 2**62 else object
        return np.array(ints, dtype=dtype), den

    @classmethod
    def from_grid(cls, base, grid, den):
        return cls(base, [[Fraction(int(v), den) for v in row] for row in grid])


def metric_axiom_violation(M: MetricMatrix):
    """First failing axiom as (name, witness), or None."""
    g, _ = M.grid()
    n = M.size
    neg = np.argwhere(g < 0)
    if len(neg):
        return "nonnegative", tuple(int(v) for v in neg[0])
    diag = np.flatnonzero(np.diagonal(g) != 0)
    if len(diag):
        x = int(diag[0])
        return "zero on the diagonal", (x, x)
    zero = np.argwhere((g == 0) & ~np.eye(n, dtype=bool))
    if len(zero):
        return "positive off the diagonal", tuple(int(v) for v in zero[0])
    asym = np.argwhere(g != g.T)
    if len(asym):
        return "symmetric", tuple(int(v) for v in asym[0])
    # tri[x, y, z] = d(x,z) + d(z,y) - d(x,y)
    tri = g[:, None, :] + g.T[None, :, :] - g[:, :, None]
    bad = np.argwhere(tri < 0)
    if len(bad):
        return "triangle", tuple(int(v) for v in bad[0])
    return None


def check_metric(M: MetricMatrix) -> MetricMatrix:
    bad = metric_axiom_violation(M)
    if bad is not None:
        raise InvalidMetric(*bad)
    return M


@dataclass
class MetricFlags:
    metric: bool
    left_sub: bool
    right_sub: bool
    inversion_isometric: bool | None
    subinvariant: bool | None
    witnesses: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "metric": self.metric,
            "left_subinvariant": self.left_sub,
            "right_subinvariant": self.right_sub,
            "inversion_isometric": self.inversion_isometric,
            "subinvariant": self.subinvariant,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def _first_xyz(viol):
    """Lexicographically least (x, y, z) from a boolean array indexed [z, x, y]."""
    hits = np.argwhere(np.transpose(viol, (1, 2, 0)))
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def check_metric_flags(M: MetricMatrix, C: CliffordStructure | None = None, *, strict=True) -> MetricFlags:
    """Metric axioms, then left/right subinvariance and, when inverses exist,
    the inversion isometry d(x, y) = d(x^-1, y^-1).

    With ``strict`` a failing metric axiom raises :class:`InvalidMetric`;
    otherwise it is reported with every flag False.
    """
    bad = metric_axiom_violation(M)
    if bad is not None:
        if strict:
            raise InvalidMetric(*bad)
        return MetricFlags(False, False, False, None, None, {bad[0]: bad[1]})
    S = M.base
    if C is None and classify(S).is_clifford:
        C = clifford_structure(S)
    g, _ = M.grid()
    t = S.table
    left = g[t[:, :, None], t[:, None, :]]          # [z, x, y] -> d(zx, zy)
    right = g[t.T[:, :, None], t.T[:, None, :]]     # [z, x, y] -> d(xz, yz)
    witnesses = {}
    lw = _first_xyz(left > g[None, :, :])
    rw = _first_xyz(right > g[None, :, :])
    if lw:
        witnesses["left_subinvariant"] = lw
    if rw:
        witnesses["right_subinvariant"] = rw
    inv_ok = sub = None
    if C is not None:
        inv = np.array(C.inverse, dtype=np.intp)
        diff = np.argwhere(g[np.ix_(inv, inv)] != g)
        inv_ok = not len(diff)
        if len(diff):
            witnesses["inversion_isometric"] = tuple(int(v) for v in diff[0])
        sub = lw is None and rw is None and inv_ok
    return MetricFlags(True, lw is None, rw is None, inv_ok, sub, witnesses)


def _translation_maps(S: FiniteSemigroup, two_sided: bool):
    t = S.table
    n = S.size
    ident = np.arange(n)
    lefts = [ident] + [t[z] for z in range(n)]       # u -> z u, with z = 1 first
    rights = [ident] + [t[:, z] for z in range(n)]   # u -> u z
    maps = {}
    if two_sided:
        for L in lefts:
            for R in rights:
                m = R[L]
                maps.setdefault(m.tobytes(), m)
    else:
        for m in lefts[1:] + rights[1:]:
            maps.setdefault(m.tobytes(), m)
    return list(maps.values())


def subinvariant_closure(M: MetricMatrix, C: CliffordStructure | None = None) -> MetricMatrix:
    """rho(x, y) = max over z, z' in S + {1} of d(z x z', z y z') and
    d(z x^-1 z', z y^-1 z').

    Maximising over two-sided translates (and the empty translate) keeps rho
    above d, makes it invariant under inversion, and makes every translate
    contract it.  The output is re-checked before it is returned.
    """
    check_metric(M)
    S = M.base
    if C is None:
        C = clifford_structure(S)
    g, den = M.grid()
    inv = np.array(C.inverse, dtype=np.intp)
    rho = g.copy()
    for m in _translation_maps(S, two_sided=True):
        rho = np.maximum(rho, g[np.ix_(m, m)])
        mi = m[inv]
        rho = np.maximum(rho, g[np.ix_(mi, mi)])
    out = MetricMatrix.from_grid(S, rho, den)
    flags = check_metric_flags(out, C, strict=False)
    if not (flags.metric and flags.subinvariant):
        raise InternalError(f"closure is not a subinvariant metric: {flags.witnesses}")
    return out


def one_sided_closure(M: MetricMatrix, C: CliffordStructure | None = None) -> MetricMatrix:
    """rho(x, y) = max_z max{d(zx, zy), d(xz, yz), d(z x^-1, z y^-1), d(x^-1 z, y^-1 z)}.

    Subinvariant for commutative semigroups; for non-commutative ones it can
    fail (compare :func:`subinvariant_closure`).  No check is applied.
    """
    check_metric(M)
    S = M.base
    if C is None:
        C = clifford_structure(S)
    g, den = M.grid()
    t = S.table
    inv = np.array(C.inverse, dtype=np.intp)
    rho = np.zeros_like(g)
    for z in range(S.size):
        for m in (t[z], t[:, z], t[z][inv], t[:, z][inv]):
            rho = np.maximum(rho, g[np.ix_(m, m)])
    return MetricMatrix.from_grid(S, rho, den)


# ---------------------------------------------------------------------------
# metric pool


def discrete_metric(S: FiniteSemigroup) -> MetricMatrix:
    n = S.size
    return MetricMatrix(S, [[Fraction(int(i != j)) for j in range(n)] for i in range(n)])


def _floyd(w):
    n = len(w)
    d = [row[:] for row in w]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def random_rational_metric(S: FiniteSemigroup, seed=0, max_num=9, max_den=4) -> MetricMatrix:
    """Shortest-path closure of random rational weights on the complete graph."""
    rng = np.random.default_rng(seed)
    n = S.size
    w = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(int(rng.integers(1, max_num + 1)), int(rng.integers(1, max_den + 1)))
            w[i][j] = w[j][i] = v
    return MetricMatrix(S, _floyd(w))


def spanning_tree_metric(S: FiniteSemigroup, seed=0, max_num=5, max_den=3) -> MetricMatrix:
    """Path metric of a random spanning tree with rational edge lengths."""
    rng = np.random.default_rng(seed)
    n = S.size
    inf = None
    w = [[inf] * n for _ in range(n)]
    order = [int(v) for v in rng.permutation(n)]
    for i in range(n):
        w[i][i] = Fraction(0)
    for k in range(1, n):
        child, parent = order[k], order[int(rng.integers(0, k))]
        v = Fraction(int(rng.integers(1, max_num + 1)), int(rng.integers(1, max_den + 1)))
        w[child][parent] = w[parent][child] = v
    big = sum((v for row in w for v in row if v is not None), Fraction(0)) + 1
    w = [[big if v is None else v for v in row] for row in w]
    return MetricMatrix(S, _floyd(w))


def _group_inverse(G, ident):
    t = G.table
    return [int(np.flatnonzero(t[x] == ident)[0]) for x in range(G.size)]


def word_metric(G: FiniteSemigroup, generators: Iterable[int]) -> MetricMatrix:
    """d(x, y) = length of the shortest word w in generators and their inverses
    with x w = y.  Left-invariant; bi-invariant when the generating set is a
    union of conjugacy classes."""
    ident = identity_element(G)
    if ident is None or not classify(G).is_group:
        raise NotAGroup("word metrics are defined on groups")
    inv = _group_inverse(G, ident)
    step = sorted({int(s) for s in generators} | {inv[int(s)] for s in generators})
    t = G.table
    norm = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for u in frontier:
            for s in step:
                v = int(t[u, s])
                if v not in norm:
                    norm[v] = norm[u] + 1
                    nxt.append(v)
        frontier = nxt
    if len(norm) != G.size:
        raise ValueError("generators do not generate the group")
    n = G.size
    return MetricMatrix(G, [[Fraction(norm[int(t[inv[x], y])]) for y in range(n)]
                            for x in range(n)])


def conjugacy_classes(G: FiniteSemigroup) -> list:
    ident = identity_element(G)
    inv = _group_inverse(G, ident)
    t = G.table
    seen, classes = set(), []
    for x in range(G.size):
        if x in seen:
            continue
        cls = sorted({int(t[t[g, x], inv[g]]) for g in range(G.size)})
        seen.update(cls)
        classes.append(cls)
    return classes


def bi_invariant_word_metric(G: FiniteSemigroup) -> MetricMatrix:
    """Word metric for the smallest generating union of conjugacy classes.

    Single classes are tried first (smallest, then lowest index); failing that,
    the classes of a greedy generating set are used.
    """
    ident = identity_element(G)
    if G.size == 1:
        return discrete_metric(G)
    classes = conjugacy_classes(G)
    candidates = sorted((c for c in classes if ident not in c), key=lambda c: (len(c), c))
    for cls in candidates:
        try:
            return word_metric(G, cls)
        except ValueError:
            continue
    gens = set()
    for g in generating_set(G):
        gens.update(next(c for c in classes if g in c))
    gens.discard(ident)
    return word_metric(G, gens)


# ---------------------------------------------------------------------------
# cone metric


@dataclass(frozen=True)
class ConePoint:
    t: Fraction
    h: int

    def __post_init__(self):
        t = _frac(self.t)
        if not 0 <= t <= 1:
            raise ValueError(f"cone level must lie in [0, 1], got {t}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "h", int(self.h))

    @property
    def is_apex(self) -> bool:
        return self.t == 0

    def key(self):
        return ("apex",) if self.is_apex else (self.t, self.h)


def cone_metric(G: FiniteSemigroup, dG: MetricMatrix, x: ConePoint, y: ConePoint) -> Fraction:
    """min{t_x + t_y, |t_x - t_y| + d(h_x, h_y)}."""
    if dG.size != G.size:
        raise ValueError("metric does not live on G")
    if x.key() == y.key():
        return Fraction(0)
    return min(x.t + y.t, abs(x.t - y.t) + dG(x.h, y.h))


def cone_multiply(G: FiniteSemigroup, x: ConePoint, y: ConePoint) -> ConePoint:
    """(s, g)(t, h) = (min(s, t), g h), collapsing level 0 to the apex."""
    t = min(x.t, y.t)
    if t == 0:
        return ConePoint(0, identity_element(G))
    return ConePoint(t, G.mul(x.h, y.h))


def cone_inverse(G: FiniteSemigroup, x: ConePoint) -> ConePoint:
    if x.is_apex:
        return x
    ident = identity_element(G)
    return ConePoint(x.t, _group_inverse(G, ident)[x.h])


@dataclass
class ConeMetricReport:
    points: tuple
    metric: bool
    group_flags: MetricFlags
    left_sub: bool
    right_sub: bool
    inversion_isometric: bool
    witnesses: dict

    @property
    def inherits(self) -> bool:
        gf = self.group_flags
        return ((not gf.left_sub or self.left_sub)
                and (not gf.right_sub or self.right_sub)
                and (not gf.subinvariant or (self.left_sub and self.right_sub
                                             and self.inversion_isometric)))

    @property
    def passed(self) -> bool:
        return self.metric and self.inherits

    def as_dict(self):
        return {
            "points": [str(p.t) if p.is_apex else f"{p.t}:{p.h}" for p in self.points],
            "metric": self.metric,
            "group_metric": self.group_flags.as_dict(),
            "cone_left_subinvariant": self.left_sub,
            "cone_right_subinvariant": self.right_sub,
            "cone_inversion_isometric": self.inversion_isometric,
            "inherits_subinvariance": self.inherits,
            "passed": self.passed,
            "witnesses": {k: [str(v) for v in w] for k, w in self.witnesses.items()},
        }


def verify_cone_metric(G: FiniteSemigroup, dG: MetricMatrix, sample: Sequence[ConePoint]) -> ConeMetricReport:
    """Exhaustive checks of the cone metric on a multiplication-closed sample."""
    if not classify(G).is_group:
        raise NotAGroup("the cone is built over a group")
    group_flags = check_metric_flags(dG, clifford_structure(G))
    pts = []
    index = {}
    for p in sample:
        if p.key() not in index:
            index[p.key()] = len(pts)
            pts.append(cone_multiply(G, p, p) if p.is_apex else p)
    for x in pts:
        for y in pts:
            if cone_multiply(G, x, y).key() not in index:
                raise SampleNotClosed(f"{x} * {y} is not in the sample")
    n = len(pts)
    D = [[cone_metric(G, dG, x, y) for y in pts] for x in pts]
    witnesses = {}
    metric = True
    for x in range(n):
        for y in range(n):
            if (D[x][y] == 0) != (x == y) or D[x][y] != D[y][x]:
                witnesses.setdefault("metric", (pts[x], pts[y]))
                metric = False
            for z in range(n):
                if D[x][y] > D[x][z] + D[z][y]:
                    witnesses.setdefault("triangle", (pts[x], pts[y], pts[z]))
                    metric = False
    mul = [[index[cone_multiply(G, pts[a], pts[b]).key()] for b in range(n)] for a in range(n)]
    left = right = True
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if left and D[mul[z][x]][mul[z][y]] > D[x][y]:
                    left = False
                    witnesses["left_subinvariant"] = (pts[x], pts[y], pts[z])
                if right and D[mul[x][z]][mul[y][z]] > D[x][y]:
                    right = False
                    witnesses["right_subinvariant"] = (pts[x], pts[y], pts[z])
    inv_ok = True
    for x in range(n):
        for y in range(n):
            ix, iy = (index.get(cone_inverse(G, pts[k]).key()) for k in (x, y))
            if ix is None or iy is None:
                continue
            if D[ix][iy] != D[x][y]:
                inv_ok = False
                witnesses.setdefault("inversion_isometric", (pts[x], pts[y]))
    return ConeMetricReport(tuple(pts), metric, group_flags, left, right, inv_ok, witnesses)


def cone_metric_matrix(G: FiniteSemigroup, dG: MetricMatrix, n: int) -> MetricMatrix:
    """The cone metric on ``cone(G, n)``, reading level i as t = i/n."""
    rp = cone(G, n)
    pts = []
    for i in range(rp.S.size):
        lv, h = rp.spec.e_coordinate(i), rp.spec.h_coordinate(i)
        pts.append(ConePoint(Fraction(lv, n), 0 if h is None else h))
    return MetricMatrix(rp.S, [[cone_metric(G, dG, x, y) for y in pts] for x in pts])


# ---------------------------------------------------------------------------
# the semilattice {0} + {1/n : n >= 1}


@dataclass(frozen=True)
class MetricOracle:
    """A distance on the points 0 and 1/k (k <= N), given as a function."""
    eval: Callable
    N: int
    name: str = "oracle"

    def points(self):
        return [Fraction(0)] + [Fraction(1, k) for k in range(1, self.N + 1)]

    def d(self, x, y) -> Fraction:
        return _frac(self.eval(_frac(x), _frac(y)))


def euclid_oracle(N=1000) -> MetricOracle:
    return MetricOracle(lambda x, y: abs(x - y), N, "euclid")


def discrete_oracle(N=1000) -> MetricOracle:
    return MetricOracle(lambda x, y: Fraction(int(x != y)), N, "discrete")


def table_oracle(rows, name="table") -> MetricOracle:
    """Oracle from an (N+1)x(N+1) table; row/column k is the point 1/k, 0 is 0."""
    table = tuple(tuple(_frac(v) for v in row) for row in rows)
    N = len(table) - 1
    if N < 1 or any(len(r) != N + 1 for r in table):
        raise MalformedOracle("oracle table must be square with at least 2 points")

    def position(p):
        if p == 0:
            return 0
        if p.numerator != 1 or p.denominator > N:
            raise MalformedOracle(f"point {p} is outside the table")
        return p.denominator

    return MetricOracle(lambda x, y: table[position(x)][position(y)], N, name)


def check_oracle(oracle: MetricOracle, sample=24):
    """Zero diagonal, symmetry and nonnegativity on every pair through 0, and the
    same plus the triangle inequality among the first ``sample`` points.

    Returns whether the triangle inequality held on the sampled triples;
    raises MalformedOracle for the other axioms.
    """
    pts = oracle.points()
    zero = pts[0]
    for p in pts:
        if oracle.d(p, p) != 0:
            raise MalformedOracle(f"d({p}, {p}) != 0")
        a, b = oracle.d(zero, p), oracle.d(p, zero)
        if a != b:
            raise MalformedOracle(f"d(0, {p}) != d({p}, 0)")
        if a < 0:
            raise MalformedOracle(f"d(0, {p}) < 0")
    head = pts[:sample + 1]
    D = [[oracle.d(x, y) for y in head] for x in head]
    for i in range(len(head)):
        for j in range(len(head)):
            if D[i][j] != D[j][i]:
                raise MalformedOracle(f"d({head[i]}, {head[j]}) is not symmetric")
            if D[i][j] < 0:
                raise MalformedOracle(f"d({head[i]}, {head[j]}) < 0")
    return all(D[i][j] <= D[i][k] + D[k][j]
               for i in range(len(head)) for j in range(len(head)) for k in range(len(head)))


@dataclass(frozen=True)
class Refutation:
    verdict: str                     # "witness", "violation" or "inconclusive"
    n: int | None
    even_distance: Fraction | None   # d(0, 1/(2n))
    odd_distance: Fraction | None    # d(0, 1/(2n+1))
    epsilon: Fraction
    N: int
    min_even_distance: Fraction | None = None
    triangle_on_sample: bool = True

    def as_dict(self):
        def s(v):
            return None if v is None else str(v)
        out = {"verdict": self.verdict, "epsilon": str(self.epsilon), "N": self.N,
               "triangle_on_sample": self.triangle_on_sample}
        if self.verdict == "witness":
            out["witness_n"] = self.n
        elif self.verdict == "violation":
            out["violation_n"] = self.n
        if self.n is not None:
            out["d(0,1/(2n))"] = s(self.even_distance)
            out["d(0,1/(2n+1))"] = s(self.odd_distance)
        if self.verdict == "inconclusive":
            out["min_even_distance"] = s(self.min_even_distance)
        return out


def refute_example64(oracle: MetricOracle, epsilon) -> Refutation:
    """Look for evidence that ``oracle`` is not a subinvariant metric generating
    the topology in which 0 is a limit of the even points 1/(2n) only.

    Subinvariance under min forces d(0, 1/(2n+1)) <= d(0, 1/(2n)) (take x = 0,
    y = 1/(2n), z = 1/(2n+1)).  A failure of that inequality is returned as a
    violation.  Otherwise the first n with d(0, 1/(2n)) <= epsilon is a
    witness: the odd point 1/(2n+1) then also lies in the closed epsilon-ball
    around 0, although odd points are isolated.
    """
    eps = _frac(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    triangle = check_oracle(oracle)
    top = (oracle.N - 1) // 2
    zero = Fraction(0)
    even = {}
    odd = {}
    for n in range(1, top + 1):
        even[n] = oracle.d(zero, Fraction(1, 2 * n))
        odd[n] = oracle.d(zero, Fraction(1, 2 * n + 1))
        if odd[n] > even[n]:
            return Refutation("violation", n, even[n], odd[n], eps, oracle.N,
                              triangle_on_sample=triangle)
    for n in range(1, top + 1):
        if even[n] <= eps:
            return Refutation("witness", n, even[n], odd[n], eps, oracle.N,
                              triangle_on_sample=triangle)
    return Refutation("inconclusive", None, None, None, eps, oracle.N,
                      min_even_distance=min(even.values()) if even else None,
                      triangle_on_sample=triangle)


# ---------------------------------------------------------------------------
# file formats


def format_rational(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def parse_rational(tok: str, line=None, column=None, source=None) -> Fraction:
    try:
        if "/" in tok:
            p, q = tok.split("/")
            v = Fraction(int(p), int(q))
        else:
            v = Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational p/q: {tok!r}", line, column, source) from None
    return v


def format_metric(M: MetricMatrix) -> str:
    lines = [f"metric {M.size}"]
    lines.extend(" ".join(format_rational(v) for v in row) for row in M.d)
    return "\n".join(lines) + "\n"


def _parse_square(text, keyword, source, extra=0):
    rows = [(i, line) for i, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.strip().startswith("#")]
    if not rows:
        raise ParseError(f"empty input, expected '{keyword} n'", 1, 1, source)
    ln, head = rows[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise ParseError(f"expected header '{keyword} n'", ln, 1, source)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad size {parts[1]!r}", ln, head.index(parts[1]) + 1, source) from None
    n += extra
    body = rows[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, found {len(body)}",
                         body[-1][0] + 1 if body else ln + 1, 1, source)
    out = []
    for ln, line in body:
        toks, col = [], 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", ln, 1, source)
        out.append([parse_rational(tok, ln, c, source) for c, tok in toks])
    return out


def parse_metric(text: str, base: FiniteSemigroup, source=None) -> MetricMatrix:
    rows = _parse_square(text, "metric", source)
    if len(rows) != base.size:
        raise ParseError(f"metric has {len(rows)} points but the semigroup has {base.size}",
                         1, 1, source)
    return MetricMatrix(base, rows)


def read_metric(path, base: FiniteSemigroup) -> MetricMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_metric(fh.read(), base, source=str(path))


def write_metric(M: MetricMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_metric(M))


def parse_oracle(text: str, source=None) -> MetricOracle:
    """``oracle N`` then N+1 rows over the points 0, 1, 1/2, ..., 1/N."""
    rows = _parse_square(text, "oracle", source, extra=1)
    return table_oracle(rows, name=source or "table")


def format_oracle(oracle: MetricOracle) -> str:
    pts = oracle.points()
    lines = [f"oracle {oracle.N}"]
    lines.extend(" ".join(format_rational(oracle.d(x, y)) for y in pts) for x in pts)
    return "\n".join(lines) + "\n"
