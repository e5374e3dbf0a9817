"""Finite semigroups stored as Cayley tables, with their structural predicates.

Elements are the integers ``0..size-1``; ``table[i, j]`` is the index of the
product ``x_i * x_j``.  Labels are display metadata only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import limits
from .errors import (IndexOutOfRange, InternalError, NotAssociative,
                     NotClifford, ParseError, SizeLimitExceeded)


class FiniteSemigroup:
    """An associativity-checked Cayley table.

    Use :func:`validate` (or the constructors in :mod:`clifford_kit.constructions`)
    rather than calling this directly with unchecked data.
    """

    __slots__ = ("table", "labels")

    def __init__(self, table, labels=None, *, check=True, max_size=None):
        arr = _as_square_table(table)
        if check:
            _check_range(arr)
            cap = limits.max_elements() if max_size is None else max_size
            if arr.shape[0] > cap:
                raise SizeLimitExceeded("semigroup", arr.shape[0], cap)
            _check_associative(arr)
        arr = arr.copy()
        arr.setflags(write=False)
        if labels is not None:
            labels = tuple(str(lab) for lab in labels)
            if len(labels) != arr.shape[0]:
                raise ValueError(f"expected {arr.shape[0]} labels, got {len(labels)}")
        object.__setattr__(self, "table", arr)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSemigroup is immutable")

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.size

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def index(self, label: str) -> int:
        """Index of the element whose label (or decimal index) is ``label``."""
        if self.labels is not None and label in self.labels:
            return self.labels.index(label)
        try:
            i = int(label)
        except ValueError:
            raise KeyError(label) from None
        if not 0 <= i < self.size:
            raise KeyError(label)
        return i

    def relabel(self, labels) -> "FiniteSemigroup":
        return FiniteSemigroup(self.table, labels, check=False)

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return (self.size == other.size and np.array_equal(self.table, other.table)
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.table.tobytes(), self.labels))

    def __repr__(self):
        return f"FiniteSemigroup(size={self.size})"


def _as_square_table(table) -> np.ndarray:
    try:
        arr = np.asarray(table)
    except ValueError as exc:  # ragged nested lists
        raise ValueError(f"table is not rectangular: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"table must be a non-empty square array, got shape {arr.shape}")
    if arr.dtype.kind not in "iu":
        if arr.dtype.kind == "f" and np.all(arr == np.round(arr)):
            arr = arr.astype(np.int64)
        else:
            raise ValueError("table entries must be integers")
    return arr.astype(np.intp, copy=False)


def _check_range(arr):
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise IndexOutOfRange(i, j, int(arr[i, j]), n)


def _check_associative(arr):
    n = arr.shape[0]
    block = max(1, (1 << 22) // (n * n))
    for start in range(0, n, block):
        rows = np.arange(start, min(n, start + block))
        left = arr[arr[rows]]            # left[b, j, k] = (x_i x_j) x_k
        right = arr[rows][:, arr]        # right[b, j, k] = x_i (x_j x_k)
        if np.array_equal(left, right):
            continue
        b, j, k = (int(v) for v in np.argwhere(left != right)[0])
        raise NotAssociative(start + b, j, k, int(left[b, j, k]), int(right[b, j, k]))


def validate(table, labels=None, *, max_size=None) -> FiniteSemigroup:
    """Check a raw table and wrap it; raises on the lexicographically first bad triple."""
    return FiniteSemigroup(table, labels, max_size=max_size)


def element_set(S: FiniteSemigroup, elements: Iterable[int]) -> frozenset:
    out = frozenset(int(x) for x in elements)
    for x in out:
        if not 0 <= x < S.size:
            raise ValueError(f"element {x} is not in a semigroup of size {S.size}")
    return out


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class StructureReport:
    is_semilattice: bool
    is_group: bool
    is_regular: bool
    is_inverse: bool
    is_clifford: bool
    idempotents: tuple
    idempotents_commute: bool
    is_commutative: bool
    identity: int | None


def idempotents(S: FiniteSemigroup) -> tuple:
    t = S.table
    return tuple(int(e) for e in np.flatnonzero(np.diagonal(t) == np.arange(S.size)))


def identity_element(S: FiniteSemigroup):
    t, ar = S.table, np.arange(S.size)
    for e in range(S.size):
        if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar):
            return e
    return None


def _inverse_candidates(t):
    """cand[x, y] is True iff x y x = x and y x y = y."""
    n = t.shape[0]
    rows = np.arange(n)
    a = t[t, rows[:, None]] == rows[:, None]   # t[t[x,y], x] == x
    b = t[t.T, rows[None, :]] == rows[None, :]  # t[t[y,x], y] == y
    return a & b


def classify(S: FiniteSemigroup) -> StructureReport:
    t = S.table
    n = S.size
    idem = idempotents(S)
    commutative = bool(np.array_equal(t, t.T))
    is_semilattice = commutative and len(idem) == n

    cand = _inverse_candidates(t)
    counts = cand.sum(axis=1)
    is_regular = bool(np.all(counts >= 1))
    is_inverse = bool(np.all(counts == 1))

    e_idx = np.array(idem, dtype=np.intp)
    sub = t[np.ix_(e_idx, e_idx)]
    idem_commute = bool(np.array_equal(sub, sub.T))

    if is_inverse != (is_regular and idem_commute):
        raise InternalError(
            f"inverse check disagrees with regular+commuting idempotents "
            f"({is_inverse} vs {is_regular}, {idem_commute})")

    is_clifford = False
    if is_inverse:
        inv = np.argmax(cand, axis=1)
        rows = np.arange(n)
        is_clifford = bool(np.array_equal(t[rows, inv], t[inv, rows]))

    ident = identity_element(S)
    is_group = False
    if ident is not None:
        is_group = bool(np.all(np.any(t == ident, axis=1)) and np.all(np.any(t == ident, axis=0)))

    return StructureReport(
        is_semilattice=is_semilattice,
        is_group=is_group,
        is_regular=is_regular,
        is_inverse=is_inverse,
        is_clifford=is_clifford,
        idempotents=idem,
        idempotents_commute=idem_commute,
        is_commutative=commutative,
        identity=ident,
    )


def is_semilattice(S: FiniteSemigroup) -> bool:
    t = S.table
    return bool(np.array_equal(t, t.T) and np.all(np.diagonal(t) == np.arange(S.size)))


def is_group(S: FiniteSemigroup) -> bool:
    return classify(S).is_group


# ---------------------------------------------------------------------------
# Clifford structure


@dataclass(frozen=True)
class CliffordStructure:
    inverse: tuple
    pi: tuple
    idempotents: tuple

    def fiber(self, e: int) -> tuple:
        return tuple(x for x, p in enumerate(self.pi) if p == e)


def clifford_structure(S: FiniteSemigroup) -> CliffordStructure:
    """Inverses, the projection x -> x x^{-1} onto E, and E itself."""
    rep = classify(S)
    if not rep.is_clifford:
        raise NotClifford(
            "semigroup is not Clifford "
            f"(inverse={rep.is_inverse}, regular={rep.is_regular})")
    t = S.table
    n = S.size
    rows = np.arange(n)
    inv = np.argmax(_inverse_candidates(t), axis=1)
    pi = t[rows, inv]
    if not np.array_equal(inv[inv], rows):
        raise InternalError("inversion is not an involution")
    if not np.array_equal(t[pi, pi], pi):
        raise InternalError("x x^-1 is not idempotent")
    # pi(xy) == pi(x) pi(y)
    if not np.array_equal(pi[t], t[pi[:, None], pi[None, :]]):
        raise InternalError("projection onto E is not a homomorphism")
    idem = rep.idempotents
    if sorted(set(int(p) for p in pi)) != list(idem):
        raise InternalError("projection is not onto the idempotents")
    return CliffordStructure(
        inverse=tuple(int(v) for v in inv),
        pi=tuple(int(v) for v in pi),
        idempotents=idem,
    )


@dataclass(frozen=True)
class SubgroupDecomposition:
    groups: dict  # idempotent -> sorted tuple of H_e

    def of(self, x: int, C: CliffordStructure) -> tuple:
        return self.groups[C.pi[x]]


def maximal_subgroups(S: FiniteSemigroup, C: CliffordStructure | None = None) -> SubgroupDecomposition:
    if C is None:
        C = clifford_structure(S)
    t = S.table
    groups = {e: C.fiber(e) for e in C.idempotents}
    for e, members in groups.items():
        idx = np.array(members, dtype=np.intp)
        block = t[np.ix_(idx, idx)]
        if not np.all(np.isin(block, idx)):
            raise InternalError(f"H_{e} is not closed under the operation")
        if not (np.array_equal(t[e, idx], idx) and np.array_equal(t[idx, e], idx)):
            raise InternalError(f"{e} is not the identity of H_{e}")
        if not all(C.inverse[x] in members for x in members):
            raise InternalError(f"H_{e} is not closed under inversion")
    if sum(len(g) for g in groups.values()) != S.size:
        raise InternalError("maximal subgroups do not partition the semigroup")
    return SubgroupDecomposition(groups)


# ---------------------------------------------------------------------------
# subsets


def is_ideal(S: FiniteSemigroup, I: Iterable[int]) -> bool:
    """True iff S*I and I*S both lie inside I."""
    members = element_set(S, I)
    if not members:
        return True
    idx = np.array(sorted(members), dtype=np.intp)
    t = S.table
    return bool(np.all(np.isin(t[:, idx], idx)) and np.all(np.isin(t[idx, :], idx)))


def satisfies_sis(S: FiniteSemigroup, I: Iterable[int]) -> bool:
    """The literal condition S I S inside I."""
    members = element_set(S, I)
    if not members:
        return True
    idx = np.array(sorted(members), dtype=np.intp)
    t = S.table
    si = np.unique(t[:, idx])
    return bool(np.all(np.isin(t[np.ix_(si, np.arange(S.size))], idx)))


def right_division_set(S: FiniteSemigroup, B: Iterable[int], A: Iterable[int]) -> frozenset:
    """{x : x a = b for some b in B and a in A}."""
    b = element_set(S, B)
    a = sorted(element_set(S, A))
    if not a or not b:
        return frozenset()
    cols = S.table[:, a]
    hit = np.isin(cols, sorted(b)).any(axis=1)
    return frozenset(int(x) for x in np.flatnonzero(hit))


def subsemigroup(S: FiniteSemigroup, elements: Sequence[int]) -> FiniteSemigroup:
    """Restrict S to ``elements`` (kept in the given order); must be closed."""
    order = [int(x) for x in elements]
    pos = {x: i for i, x in enumerate(order)}
    if len(pos) != len(order):
        raise ValueError("duplicate elements")
    sub = S.table[np.ix_(order, order)]
    try:
        table = [[pos[int(v)] for v in row] for row in sub]
    except KeyError as exc:
        raise ValueError(f"subset is not closed: product {exc.args[0]} escapes") from None
    labels = [S.label(x) for x in order]
    return FiniteSemigroup(np.array(table, dtype=np.intp), labels, check=False)


# ---------------------------------------------------------------------------
# text and structured formats


def format_table(S: FiniteSemigroup) -> str:
    lines = [str(S.size)]
    lines.extend(" ".join(str(int(v)) for v in row) for row in S.table)
    if S.labels is not None:
        for lab in S.labels:
            if not lab or any(c.isspace() for c in lab):
                raise ValueError(f"label {lab!r} cannot be written in the table format")
        lines.append("# labels: " + " ".join(S.labels))
    return "\n".join(lines) + "\n"


def parse_table(text: str, source: str | None = None, *, max_size=None) -> FiniteSemigroup:
    """Parse the Cayley-table text format.

    Line 1 holds n, the next n lines hold n whitespace-separated 0-based
    indices, and an optional ``# labels:`` line names the elements.
    """
    raw_lines = text.splitlines()
    lines = []  # (lineno, text)
    labels = None
    for lineno, line in enumerate(raw_lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("labels:"):
                if labels is not None:
                    raise ParseError("duplicate labels line", lineno, 1, source)
                labels = (lineno, body[len("labels:"):].split())
            continue
        lines.append((lineno, line))
    if not lines:
        raise ParseError("empty input, expected the element count", 1, 1, source)
    lineno, head = lines[0]
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"expected element count, got {head.strip()!r}",
                         lineno, _col(head, head.strip()), source) from None
    if n < 1:
        raise ParseError("element count must be positive", lineno, 1, source)
    cap = limits.max_elements() if max_size is None else max_size
    if n > cap:
        raise SizeLimitExceeded("table", n, cap)
    rows = lines[1:]
    if len(rows) != n:
        where = rows[-1][0] + 1 if rows else lineno + 1
        raise ParseError(f"expected {n} table rows, found {len(rows)}", where, 1, source)
    table = []
    for r, (ln, line) in enumerate(rows):
        tokens = _tokens(line)
        if len(tokens) != n:
            raise ParseError(f"row {r} has {len(tokens)} entries, expected {n}", ln,
                             tokens[min(len(tokens), n) - 1][0] if tokens else 1, source)
        row = []
        for col, tok in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", ln, col, source) from None
            if not 0 <= v < n:
                raise ParseError(f"index {v} outside [0, {n})", ln, col, source)
            row.append(v)
        table.append(row)
    names = None
    if labels is not None:
        ln, names = labels
        if len(names) != n:
            raise ParseError(f"expected {n} labels, found {len(names)}", ln, 1, source)
    return FiniteSemigroup(np.array(table, dtype=np.intp), names, max_size=cap)


def _tokens(line):
    out = []
    col = 0
    for part in line.split():
        col = line.index(part, col)
        out.append((col + 1, part))
        col += len(part)
    return out


def _col(line, token):
    return line.find(token) + 1 if token in line else 1


def read_table(path, *, max_size=None) -> FiniteSemigroup:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read(), source=str(path), max_size=max_size)


def write_table(S: FiniteSemigroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_table(S))


def to_dict(S: FiniteSemigroup) -> dict:
    out = {"size": S.size, "table": S.table.tolist()}
    if S.labels is not None:
        out["labels"] = list(S.labels)
    return out


def from_dict(obj: dict, *, max_size=None) -> FiniteSemigroup:
    try:
        size = int(obj["size"])
        table = obj["table"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"structured semigroup is missing a field: {exc}") from None
    if len(table) != size:
        raise ParseError(f"size is {size} but the table has {len(table)} rows")
    return FiniteSemigroup(table, obj.get("labels"), max_size=max_size)
