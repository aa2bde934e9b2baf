"""Linkage systems: the criterion 𝓑∨(γ∇) < 2, partial and full systems.

A partial linkage system collects the distinct nonzero label vectors of the
roots of one rank-(l+1) ambient lying outside the span of a Γ-set. It is
computed as the union over every realization of the base diagram obtained
from a witness Γ-set by automorphisms of the subsystem it spans. The full
linkage system is the union of the partial systems over all ambients.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .const import (
    E8_D7_EXTENSION_NODE,
    E8_D7_GAMMA_NODES,
    E8_D7_PAIR_COUNT,
    E8_D7_PAIR_SUM,
    FAMILY_A,
    FAMILY_D,
    FAMILY_E,
    MAX_RANK,
    PAIRING_MAX_RANK,
)
from .diagram import CarterDiagram, d_catalog
from .dual_weyl import orbit_partition
from .exceptions import DimensionError, PairCountError, PreconditionError
from .gamma_set import (
    GammaSet,
    LabelVector,
    find_gamma_set,
    realization_labels,
    realizations,
)
from .root_system import AdeType, Root, generate, maximal_root

_LOGGER = logging.getLogger(__name__)


class ComponentKind(str, Enum):
    """Family of the ambient a partial linkage system comes from."""

    A = FAMILY_A
    D = FAMILY_D
    E = FAMILY_E

    @classmethod
    def of(cls, ambient: AdeType) -> ComponentKind:
        return cls(ambient.family)


@dataclass(frozen=True)
class VertexExtension:
    """Γ ≺ Γ̃: a rank-(l+1) ambient holding a Γ-set of the base diagram."""

    base: CarterDiagram
    ambient: AdeType
    witness: GammaSet

    @property
    def kind(self) -> ComponentKind:
        return ComponentKind.of(self.ambient)


@dataclass(frozen=True)
class LinkageSystem:
    """Partial systems per ambient and their union."""

    base: CarterDiagram
    partials: dict[str, frozenset[LabelVector]]
    notes: dict[str, str] = field(default_factory=dict)

    @cached_property
    def total(self) -> frozenset[LabelVector]:
        out: set[LabelVector] = set()
        for labels in self.partials.values():
            out |= labels
        return frozenset(out)

    def component(self, kind: ComponentKind | str) -> frozenset[LabelVector]:
        """Union of the partial systems whose ambient has the given family."""
        family = kind.value if isinstance(kind, ComponentKind) else kind
        out: set[LabelVector] = set()
        for name, labels in self.partials.items():
            if AdeType.parse(name).family == family:
                out |= labels
        return frozenset(out)

    def exclusive_components(self) -> dict[ComponentKind, frozenset[LabelVector]]:
        """Non-empty components in the order A, D, E, each without labels of earlier ones.

        For D7 the E8 labels with p = 1 are the D8 labels; they are kept under D.
        """
        seen: set[LabelVector] = set()
        out: dict[ComponentKind, frozenset[LabelVector]] = {}
        for kind in ComponentKind:
            labels = self.component(kind) - seen
            seen |= labels
            if labels:
                out[kind] = frozenset(labels)
        return out

    def to_json(self) -> dict:
        return {
            "base": self.base.name,
            "partials": {
                name: {"count": len(labels), "labels": [u.to_list() for u in sorted(labels)]}
                for name, labels in sorted(self.partials.items())
            },
            "notes": dict(sorted(self.notes.items())),
            "total": len(self.total),
        }


def ambient_candidates(base: CarterDiagram) -> list[AdeType]:
    """Simply-laced types of rank l+1: A always, D from rank 4, E for 6..8."""
    r = base.rank + 1
    candidates = [AdeType.try_make(FAMILY_A, r), AdeType.try_make(FAMILY_D, r)]
    candidates.append(AdeType.try_make(FAMILY_E, r))
    return [t for t in candidates if t is not None and t.rank <= MAX_RANK + 1]


def vertex_extension(base: CarterDiagram, ambient: AdeType) -> VertexExtension | None:
    """The extension Γ ≺ Γ̃ when a Γ-set of ``base`` embeds in ``ambient``."""
    if ambient.rank != base.rank + 1:
        raise PreconditionError(f"{ambient} does not have rank {base.rank + 1}")
    witness = find_gamma_set(base, generate(ambient))
    if witness is None:
        return None
    return VertexExtension(base, ambient, witness)


def inverse_form_value(g: GammaSet, label: LabelVector) -> Fraction:
    """𝓑∨_Γ(label) = ᵗlabel·B⁻¹·label."""
    if len(label) != g.rank:
        raise DimensionError(f"label of length {len(label)} for a Γ-set of rank {g.rank}")
    return g.inverse_form(label.labels)


def is_linkage_root(g: GammaSet, label: LabelVector) -> bool:
    """A root with this label keeps the Γ-set independent iff 𝓑∨(label) < 2."""
    return inverse_form_value(g, label) < 2


def single_endpoint_admits(g: GammaSet, i: int) -> bool:
    """Whether a linkage diagram with the single endpoint τ_i exists: b∨_ii < 2."""
    if not 0 <= i < g.rank:
        raise DimensionError(f"vertex index {i} out of range for rank {g.rank}")
    return g.b_inverse[i, i] < 2


@lru_cache(maxsize=None)
def enumerate_partial(base: CarterDiagram, ambient: AdeType) -> frozenset[LabelVector]:
    """𝓛_Γ̃(Γ): distinct nonzero labels of roots outside the span, all realizations."""
    extension = vertex_extension(base, ambient)
    if extension is None:
        _LOGGER.debug("No embedding of %s in %s", base.name, ambient)
        return frozenset()
    labels: set[LabelVector] = set()
    for g in realizations(extension.witness):
        labels |= realization_labels(g)
    _LOGGER.debug("𝓛_%s(%s) has %d labels", ambient, base.name, len(labels))
    return frozenset(labels)


@lru_cache(maxsize=None)
def enumerate_full(base: CarterDiagram) -> LinkageSystem:
    """Union of the partial linkage systems over every rank-(l+1) ambient."""
    partials: dict[str, frozenset[LabelVector]] = {}
    notes: dict[str, str] = {}
    for ambient in ambient_candidates(base):
        labels = enumerate_partial(base, ambient)
        if labels:
            partials[str(ambient)] = labels
        else:
            notes[str(ambient)] = "no embedding"
    system = LinkageSystem(base, partials, notes)
    _LOGGER.info(
        "Linkage system of %s: %s, total %d",
        base.name,
        ", ".join(f"{k}={len(v)}" for k, v in sorted(partials.items())) or "empty",
        len(system.total),
    )
    return system


# ----------------------------------------------------------------------
# Criterion
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CriterionResult:
    """Exhaustive criterion check for one vertex extension, every realization."""

    ambient: str
    roots_checked: int
    outside: int
    inside: int
    failures: tuple[str, ...]
    realizations: int = 1

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class CriterionReport:
    base: str
    results: tuple[CriterionResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def check_criterion(g: GammaSet) -> CriterionResult:
    """𝓑∨(γ∇) < 2 exactly for roots outside the span, = 2 for roots inside.

    Covers the single realization ``g``; :func:`criterion_check` runs it over
    every realization the partial linkage system is built from.
    """
    scaled = g.inverse_form_numerators
    bound = 2 * g.determinant
    inside = g.span_mask
    failures = []
    for index in np.flatnonzero(inside & (scaled != bound)):
        failures.append(f"{g.ambient.roots[index]} in span but 𝓑∨ ≠ 2")
    for index in np.flatnonzero(~inside & (scaled >= bound)):
        failures.append(f"{g.ambient.roots[index]} outside span but 𝓑∨ ≥ 2")
    return CriterionResult(
        ambient=str(g.ambient.type),
        roots_checked=len(g.ambient.roots),
        outside=int((~inside).sum()),
        inside=int(inside.sum()),
        failures=tuple(failures),
    )


def criterion_check(d: CarterDiagram) -> CriterionReport:
    """Criterion over every root of every ambient the diagram embeds in.

    Each ambient is checked on all realizations obtained from its witness,
    the same Γ-sets whose labels make up the partial linkage system.
    """
    results = []
    for ambient in ambient_candidates(d):
        extension = vertex_extension(d, ambient)
        if extension is None:
            continue
        found = realizations(extension.witness)
        per_realization = [check_criterion(g) for g in found]
        first = per_realization[0]
        failures = tuple(
            f"realization {n + 1}: {failure}"
            for n, r in enumerate(per_realization)
            for failure in r.failures
        )
        results.append(
            CriterionResult(
                ambient=first.ambient,
                roots_checked=first.roots_checked,
                outside=first.outside,
                inside=first.inside,
                failures=failures,
                realizations=len(found),
            )
        )
    return CriterionReport(d.name, tuple(results))


# ----------------------------------------------------------------------
# Pairing in D_{l+1}
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PairingReport:
    """Outcome of the δ = μ_max - φ + τ pairing over Φ(D_{l+1}) outside Φ(D_l)."""

    rank: int
    checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def d_in_d_gamma_set(l: int) -> GammaSet:
    """D_l realized by the simple roots 2..l+1 of D_{l+1}; simple root 1 extends it."""
    rs = generate(AdeType(FAMILY_D, l + 1))
    roots = tuple(rs.simple_roots[1:])
    gram = [[int(rs.gram_array[rs.index(a), rs.index(b)]) for b in roots] for a in roots]
    diagram = CarterDiagram.from_gram(
        f"D{l}", gram, [f"τ{i}" for i in range(2, l + 2)], AdeType(FAMILY_D, l)
    )
    return GammaSet(diagram, rs, roots)


def pairing_partner(g: GammaSet, phi: Root) -> Root | None:
    """δ with δ∇ = -φ∇: μ_max - φ + τ for positive φ, its negation otherwise."""
    rs = g.ambient
    tau = rs.simple_roots[0]
    mu = maximal_root(rs)
    if phi.is_positive:
        coords = [m - p + t for m, p, t in zip(mu.coords, phi.coords, tau.coords)]
    else:
        coords = [-(m + p + t) for m, p, t in zip(mu.coords, phi.coords, tau.coords)]
    return rs.root(coords) if rs.contains(coords) else None


def pairing_check(l: int) -> PairingReport:
    """Exhaustive pairing check over the roots of D_{l+1} outside D_l."""
    if not 4 <= l <= PAIRING_MAX_RANK:
        raise PreconditionError(f"pairing is checked for 4 ≤ l ≤ {PAIRING_MAX_RANK}, got {l}")
    g = d_in_d_gamma_set(l)
    failures = []
    outside = g.outside_roots()
    for phi in outside:
        delta = pairing_partner(g, phi)
        if delta is None:
            failures.append(f"φ = {phi}: δ is not a root")
            continue
        if g.span_mask[g.ambient.index(delta)]:
            failures.append(f"φ = {phi}: δ = {delta} lies in Φ(D{l})")
        elif g.raw_label(delta) != tuple(-x for x in g.raw_label(phi)):
            failures.append(f"φ = {phi}: δ∇ ≠ -φ∇")
    _LOGGER.info("Pairing D%d ⊂ D%d: %d roots, %d failures", l, l + 1, len(outside), len(failures))
    return PairingReport(l, len(outside), tuple(failures))


# ----------------------------------------------------------------------
# E8 / D7 pairs
# ----------------------------------------------------------------------


def to_two_row(coords: tuple[int, ...]) -> tuple[int, ...]:
    """E8 simple-root coordinates to the layout (τ1, τ3, ..., τ8; τ2)."""
    return (coords[0],) + tuple(coords[2:]) + (coords[1],)


def from_two_row(layout: tuple[int, ...]) -> tuple[int, ...]:
    """Inverse of :func:`to_two_row`."""
    return (layout[0], layout[-1]) + tuple(layout[1:-1])


@dataclass(frozen=True, order=True)
class RootPair:
    """Two roots outside the span with η∇ = -λ∇ and η ≠ -λ."""

    eta: Root
    lam: Root
    label: LabelVector

    @property
    def is_positive(self) -> bool:
        return self.eta.is_positive and self.lam.is_positive

    @property
    def coordinate_sum(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.eta.coords, self.lam.coords))


def e8_d7_gamma_set() -> GammaSet:
    """D7 realized by the E8 simple roots τ3, ..., τ8, τ2 (in that order)."""
    rs = generate(AdeType(FAMILY_E, 8))
    simple = rs.simple_roots
    roots = tuple(simple[node - 1] for node in E8_D7_GAMMA_NODES)
    gram = [[int(rs.gram_array[rs.index(a), rs.index(b)]) for b in roots] for a in roots]
    diagram = CarterDiagram.from_gram(
        "D7", gram, [f"τ{node}" for node in E8_D7_GAMMA_NODES], AdeType(FAMILY_D, 7)
    )
    return GammaSet(diagram, rs, roots)


def e8_d7_pairs() -> list[RootPair]:
    """All 14 pairs {η, λ} of E8 roots outside D7 with η∇ = -λ∇, η ≠ -λ.

    Positive pairs come first, ordered by η in the two-row layout, with η the
    member whose τ3-coordinate is smaller; their negatives follow.

    Raises:
        PairCountError: when the search does not find exactly 14 pairs
    """
    g = e8_d7_gamma_set()
    by_label: dict[tuple[int, ...], list[Root]] = {}
    for root in g.outside_roots():
        by_label.setdefault(g.raw_label(root), []).append(root)

    pairs: set[tuple[Root, Root]] = set()
    for label, roots in by_label.items():
        opposite = by_label.get(tuple(-x for x in label), [])
        for eta in roots:
            for lam in opposite:
                if lam != -eta and eta != lam:
                    pairs.add(tuple(sorted((eta, lam), key=lambda r: to_two_row(r.coords))))
    if len(pairs) != E8_D7_PAIR_COUNT:
        raise PairCountError(f"found {len(pairs)} pairs, expected {E8_D7_PAIR_COUNT}")

    out = [RootPair(eta, lam, LabelVector(g.raw_label(eta))) for eta, lam in pairs]
    positive = sorted((p for p in out if p.is_positive), key=lambda p: to_two_row(p.eta.coords))
    rest = sorted((p for p in out if not p.is_positive), key=lambda p: to_two_row((-p.eta).coords))
    expected_sum = from_two_row(E8_D7_PAIR_SUM)
    for pair in positive:
        if pair.coordinate_sum != expected_sum:
            raise PairCountError(f"pair {pair.eta}, {pair.lam} does not sum to {E8_D7_PAIR_SUM}")
    _LOGGER.info("E8/D7: %d pairs, %d positive", len(out), len(positive))
    return positive + rest


def extension_root_coordinate(root: Root) -> int:
    """Coefficient of the E8 simple root that extends D7 to E8."""
    return root.coords[E8_D7_EXTENSION_NODE - 1]


# ----------------------------------------------------------------------
# Table of linkage system sizes
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    """One diagram of the table of linkage system sizes."""

    diagram: str
    components: dict[str, int]
    orbit_sizes: dict[str, tuple[int, ...]]
    p_values: dict[str, tuple[Fraction, ...]]
    total: int


def table_row(base: CarterDiagram) -> TableRow:
    """Sizes, orbit sizes and p-invariants per exclusive component of 𝓛(base)."""
    system = enumerate_full(base)
    components: dict[str, int] = {}
    orbit_sizes: dict[str, tuple[int, ...]] = {}
    p_values: dict[str, tuple[Fraction, ...]] = {}
    for kind, labels in system.exclusive_components().items():
        orbits = orbit_partition(base, labels)
        components[kind.value] = len(labels)
        orbit_sizes[kind.value] = tuple(o.size for o in orbits)
        p_values[kind.value] = tuple(sorted({o.p for o in orbits}))
    return TableRow(base.name, components, orbit_sizes, p_values, len(system.total))


def table_one(ranks: Iterable[int]) -> list[TableRow]:
    """One row per D-type catalog diagram of the given ranks, in catalog order."""
    rows = [table_row(d) for d in d_catalog(ranks)]
    _LOGGER.info("Computed %d linkage table rows", len(rows))
    return rows
