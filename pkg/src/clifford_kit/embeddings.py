"""The two embedding maps of a finite Clifford semigroup and the classifier
built on them.

``h_A`` sends x to the tuple of ``h_e(x)`` in the reduced products
``E x_{I_e} H_e``; ``pi_hat_h_AA`` sends x to ``pi(x)`` together with the
coordinates ``hat h_e^a(x)`` in cones over the maximal subgroups.  In the
discrete topology the interior of ``up(e)`` is ``up(e)``, so
``I_e = E - up(e)`` and ``A`` must be all of ``E`` to be U-dense.

Targets are products of many small semigroups.  A product is only
materialised as a Cayley table when it is small (``limits.MATERIALIZE_LIMIT``);
otherwise the homomorphism law is checked coordinate by coordinate, which is
equivalent for a direct product.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property


from . import limits
from .constructions import (ReducedProduct, chain, check_ditopological_discrete, cone,
                            direct_product, reduced_product)
from .errors import (InternalError, NotIdempotent, NotUDense, PreconditionError,
                     TargetTooLarge)
from .homs import (Homomorphism, canonical_map, enumerate_homs, hom_law_violation,
                   make_hom, select_h_e_a)
from .order import is_U_dense, natural_order, up_indicator
from .semigroup import (FiniteSemigroup, clifford_structure, maximal_subgroups,
                        subsemigroup)


class CliffordData:
    """Derived structure of a Clifford semigroup, computed once.

    Idempotents keep their global indices in ``S``; ``E`` is the maximal
    semilattice as its own semigroup with elements in increasing global order.
    """

    def __init__(self, S: FiniteSemigroup):
        self.S = S
        self.C = clifford_structure(S)
        self.D = maximal_subgroups(S, self.C)
        self.idempotents = self.C.idempotents
        self.e_pos = {e: i for i, e in enumerate(self.idempotents)}
        self.E = subsemigroup(S, self.idempotents)
        self.order = natural_order(self.E)
        self._groups = {}
        self._cones = {}

    def local(self, e: int) -> int:
        try:
            return self.e_pos[e]
        except KeyError:
            raise NotIdempotent(f"{self.S.label(e)} is not an idempotent") from None

    def pi_local(self, x: int) -> int:
        return self.e_pos[self.C.pi[x]]

    def le(self, e: int, f: int) -> bool:
        """Natural order on idempotents, by global index."""
        return self.order.le(self.local(e), self.local(f))

    def group(self, e: int):
        """(H_e as a semigroup, global -> local index map)."""
        if e not in self._groups:
            members = self.D.groups[e]
            self._groups[e] = (subsemigroup(self.S, members), {x: i for i, x in enumerate(members)})
        return self._groups[e]


    def cone(self, e: int, n: int) -> ReducedProduct:
        if (e, n) not in self._cones:
            self._cones[e, n] = cone(self.group(e)[0], n)
        return self._cones[e, n]


def _data(S):
    return S if isinstance(S, CliffordData) else CliffordData(S)


# ---------------------------------------------------------------------------
# first embedding


@dataclass(frozen=True, eq=False)
class ReducedCoordinate:
    e: int
    hom: Homomorphism
    target: ReducedProduct


def h_e(S, e: int) -> ReducedCoordinate:
    """h_e(x) = (pi(x), x e) when pi(x) >= e, and pi(x) otherwise."""
    cd = _data(S)
    le = cd.local(e)
    H, hpos = cd.group(e)
    ideal = [p for p in range(cd.E.size) if not cd.order.le(le, p)]
    target = reduced_product(cd.E, ideal, H)
    t = cd.S.table
    images = []
    for x in range(cd.S.size):
        p = cd.pi_local(x)
        if cd.order.le(le, p):
            images.append(target.spec.index((p, hpos[int(t[x, e])])))
        else:
            images.append(target.spec.index(p))
    return ReducedCoordinate(e=e, hom=make_hom(cd.S, target.S, images), target=target)


@dataclass
class EmbeddingReport:
    map_description: str
    target_size: int
    injective: bool
    hom_verified: bool
    collisions: tuple
    component_images: dict          # coordinate name -> tuple of target labels
    materialized: bool = False
    image_in_zero_extensions: bool | None = None
    coordinates: tuple = field(default=(), repr=False)

    @property
    def ok(self) -> bool:
        ok = self.injective and self.hom_verified
        if self.image_in_zero_extensions is not None:
            ok = ok and self.image_in_zero_extensions
        return ok

    def as_dict(self) -> dict:
        out = {
            "map": self.map_description,
            "target_size": self.target_size,
            "injective": self.injective,
            "hom_verified": self.hom_verified,
            "materialized": self.materialized,
            "collisions": [list(p) for p in self.collisions],
            "component_images": {k: list(v) for k, v in self.component_images.items()},
        }
        if self.image_in_zero_extensions is not None:
            out["image_in_zero_extensions"] = self.image_in_zero_extensions
        return out


def _diagonal_report(S, names, homs, description, materialize):
    """Injectivity and hom law for x -> (f(x))_f over the given coordinates."""
    sizes = [h.target.size for h in homs]
    target_size = math.prod(sizes)
    images = [tuple(h.map[x] for h in homs) for x in range(S.size)]
    first = {}
    collisions = []
    for x, img in enumerate(images):
        if img in first:
            collisions.append((first[img], x))
        else:
            first[img] = x
    hom_ok = all(hom_law_violation(S, h.target, h.map) is None for h in homs)

    if materialize is None:
        materialize = target_size <= limits.MATERIALIZE_LIMIT
    if materialize:
        if target_size > limits.MATERIALIZE_LIMIT:
            raise TargetTooLarge("materialised target", target_size, limits.MATERIALIZE_LIMIT,
                                 name="MATERIALIZE_LIMIT")
        P = homs[0].target
        for h in homs[1:]:
            P = direct_product(P, h.target, max_size=limits.MATERIALIZE_LIMIT, check=False)
        flat = []
        for img in images:
            idx = 0
            for v, size in zip(img, sizes):
                idx = idx * size + v
            flat.append(idx)
        whole_ok = hom_law_violation(S, P, flat) is None
        if whole_ok != hom_ok:
            raise InternalError("coordinatewise and materialised hom checks disagree")

    component_images = {
        name: tuple(h.target.label(v) for v in h.map) for name, h in zip(names, homs)
    }
    return EmbeddingReport(
        map_description=description,
        target_size=target_size,
        injective=not collisions,
        hom_verified=hom_ok,
        collisions=tuple(collisions),
        component_images=component_images,
        materialized=bool(materialize),
        coordinates=tuple(homs),
    )


def _resolve_A(cd, A, allow_non_dense):
    if A is None:
        return list(cd.idempotents), True
    A = sorted({int(a) for a in A})
    for a in A:
        cd.local(a)
    if not A:
        raise PreconditionError("A must be non-empty")
    dense = is_U_dense(cd.order, [cd.local(a) for a in A])
    if not dense:
        if not allow_non_dense:
            raise NotUDense("A must be U-dense in E; with the discrete topology that means A = E")
        warnings.warn("A is not U-dense in E; the embedding guarantee does not apply",
                      stacklevel=3)
    return A, dense


def h_A(S, A=None, *, allow_non_dense=False, materialize=None) -> EmbeddingReport:
    """The diagonal x -> (h_e(x))_{e in A}."""
    cd = _data(S)
    A, dense = _resolve_A(cd, A, allow_non_dense)
    coords = [h_e(cd, e) for e in A]
    names = [f"h_{cd.S.label(e)}" for e in A]
    report = _diagonal_report(cd.S, names, [c.hom for c in coords],
                              "h_A: S -> prod_{e in A} E x_{I_e} H_e", materialize)
    if dense and not (report.injective and report.hom_verified):
        raise InternalError(f"h_A failed on a finite Clifford semigroup: {report.collisions}")
    return report


# ---------------------------------------------------------------------------
# second embedding


@dataclass(frozen=True, eq=False)
class ConeCoordinate:
    e: int
    a: int
    hom: Homomorphism
    target: ReducedProduct
    selector: Homomorphism   # h_e^a : E -> 2

    @cached_property
    def levels(self) -> tuple:
        """Cone level (0..n) of every image point."""
        return tuple(self.target.spec.e_coordinate(v) for v in self.hom.map)


def hat_h_e_a(S, e: int, a: int, n: int = 1) -> ConeCoordinate:
    """(h(pi x), x e) when h(pi x) > 0, else the apex; h = select_h_e_a(E, e, a)."""
    cd = _data(S)
    le, la = cd.local(e), cd.local(a)
    if not cd.order.way_below(le, la):
        raise PreconditionError(f"need e << a, got e={cd.S.label(e)}, a={cd.S.label(a)}")
    if n < 1:
        raise PreconditionError("chain resolution must be >= 1")
    selector = select_h_e_a(cd.E, le, la, target="two")
    hpos = cd.group(e)[1]
    target = cd.cone(e, n)
    t = cd.S.table
    images = []
    for x in range(cd.S.size):
        if selector.map[cd.pi_local(x)] > 0:
            images.append(target.spec.index((n, hpos[int(t[x, e])])))
        else:
            images.append(target.spec.index(0))
    return ConeCoordinate(e=e, a=a, hom=make_hom(cd.S, target.S, images),
                          target=target, selector=selector)


def pi_coordinate(S) -> Homomorphism:
    cd = _data(S)
    return make_hom(cd.S, cd.E, [cd.pi_local(x) for x in range(cd.S.size)])


def pi_hat_h_AA(S, A=None, n: int = 1, *, allow_non_dense=False, materialize=None) -> EmbeddingReport:
    """x -> (pi(x), (hat h_e^a(x)) for e in A, a in A with a >= e)."""
    cd = _data(S)
    A, dense = _resolve_A(cd, A, allow_non_dense)
    homs = [pi_coordinate(cd)]
    names = ["pi"]
    in_zero_ext = True
    for e in A:
        for a in A:
            if not cd.le(e, a):
                continue
            c = hat_h_e_a(cd, e, a, n)
            homs.append(c.hom)
            names.append(f"hat_h_{cd.S.label(e)}^{cd.S.label(a)}")
            in_zero_ext &= all(lv in (0, n) for lv in c.levels)
    report = _diagonal_report(cd.S, names, homs,
                              f"pi hat h_A^A: S -> E x prod cones (levels={n})", materialize)
    report.image_in_zero_extensions = in_zero_ext
    if dense and not report.ok:
        raise InternalError(f"pi hat h_A^A failed on a finite Clifford semigroup: "
                            f"{report.collisions}")
    return report


# ---------------------------------------------------------------------------
# corollary-level classification


@dataclass(frozen=True)
class EmbeddabilityFlags:
    two_separated: bool
    two_embeddable: bool
    chain_embeddable: bool
    chain_levels: int
    up_indicators_separate: bool
    ditopological: bool
    corollaries: tuple

    def as_dict(self):
        return {
            "two_separated": self.two_separated,
            "two_embeddable": self.two_embeddable,
            "chain_embeddable": self.chain_embeddable,
            "chain_levels": self.chain_levels,
            "up_indicators_separate": self.up_indicators_separate,
            "ditopological": self.ditopological,
            "corollaries": list(self.corollaries),
        }


def semilattice_embeddability(E: FiniteSemigroup, n: int = 4):
    """(2-separated, chain(n)-separated, up-indicators separate) for a semilattice."""
    two = chain(1)
    two_map = canonical_map(E, two, enumerate_homs(E, two))
    target = chain(n)
    chain_map = canonical_map(E, target, enumerate_homs(E, target))
    O = natural_order(E)
    indicators = [up_indicator(O, a) for a in range(E.size)]
    separate = len({tuple(ind[x] for ind in indicators) for x in range(E.size)}) == E.size
    return two_map.injective, chain_map.injective, separate


def classify_embeddability(S, n: int = 4) -> EmbeddabilityFlags:
    """Finite versions of the corollary hypotheses.

    For a finite discrete E, separated and embeddable coincide (an injective
    map from a finite discrete space is an embedding).
    """
    cd = _data(S)
    two_sep, chain_sep, indicators = semilattice_embeddability(cd.E, n)
    ditop = check_ditopological_discrete(cd.S, cd.C).verdict
    corollaries = []
    if ditop:
        corollaries.append("embeds into E x prod of cones over maximal subgroups")
        if two_sep:
            corollaries.append("embeds into a product of semilattices and 0-extensions")
            corollaries.append("embeds into a product of 0-extensions of groups")
        if chain_sep:
            corollaries.append("embeds into a product of cones over groups")
    return EmbeddabilityFlags(
        two_separated=two_sep,
        two_embeddable=two_sep,
        chain_embeddable=chain_sep,
        chain_levels=n,
        up_indicators_separate=indicators,
        ditopological=ditop,
        corollaries=tuple(corollaries),
    )
