"""Transition matrices between diagrams of one homogeneous class.

A transition moves a single root of a Γ-set to another root of its span,
``τ_i ↦ -τ_i + Σ t_j τ_j``, fixing the others. The new set realizes a
diagram similar to the target; composing with the similarity witness gives
the frame ``F`` with ``ᵗF·B_from·F = B_to``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property

from .const import EDGE_DOTTED, EDGE_SOLID
from .diagram import (
    CarterDiagram,
    SimilarityWitness,
    get_diagram,
    homogeneous_class,
    similar,
)
from .exceptions import LabelRangeError, PreconditionError
from .gamma_set import GammaSet, LabelVector, find_gamma_set
from .linalg import RatMatrix, congruent, det, invert
from .linkage import enumerate_full
from .root_system import generate

_LOGGER = logging.getLogger(__name__)

CHECK_FIXES_OTHERS = "fixes_others"
CHECK_INVOLUTION = "involution"
CHECK_DETERMINANT = "determinant"
CHECK_CONGRUENCE = "congruence"
CHECK_FRAME = "frame_congruence"
CHECK_LABEL_TRANSPORT = "label_transport"


@dataclass(frozen=True)
class Transition:
    """M together with the Γ-sets it relates.

    ``to_set`` realizes the target diagram; its roots are the columns of
    ``frame`` expressed in the roots of ``from_set``.
    """

    from_set: GammaSet
    to_set: GammaSet
    matrix: RatMatrix
    moved_vertex: int
    coefficients: tuple[int, ...]
    witness: SimilarityWitness

    @cached_property
    def frame(self) -> RatMatrix:
        """F = M·Q."""
        return self.matrix @ self.witness.matrix()

    @property
    def is_degenerate(self) -> bool:
        """A similarity map L_τ: every t_j vanishes."""
        return not any(self.coefficients)

    @property
    def name(self) -> str:
        return f"{self.from_set.diagram.name} -> {self.to_set.diagram.name}"

    def to_json(self) -> dict:
        return {
            "from": self.from_set.diagram.name,
            "to": self.to_set.diagram.name,
            "ambient": str(self.from_set.ambient.type),
            "moved_vertex": self.moved_vertex + 1,
            "coefficients": list(self.coefficients),
            "matrix": self.matrix.to_int_rows(),
            "witness": {
                "perm": [p + 1 for p in self.witness.perm],
                "flips": sorted(i + 1 for i in self.witness.flips),
            },
            "frame": self.frame.to_int_rows(),
        }


@dataclass(frozen=True)
class TransitionReport:
    name: str
    checks: dict[str, bool]
    from_total: int = 0
    to_total: int = 0
    notes: tuple[str, ...] = field(default=())

    @property
    def failures(self) -> list[str]:
        return [check for check, ok in self.checks.items() if not ok]

    @property
    def passed(self) -> bool:
        return not self.failures


def _moved_matrix(n: int, i: int, column: tuple[int, ...]) -> RatMatrix:
    rows = [[int(r == c) for c in range(n)] for r in range(n)]
    for r in range(n):
        rows[r][i] = column[r]
    return RatMatrix.from_rows(rows)


def _span_coefficients(g: GammaSet) -> list[tuple[int, tuple[int, ...]]]:
    """(ambient index, integer coordinates in the Γ-set) for roots of span(S)."""
    coords = g.label_array.astype(object) @ g.b_inverse.to_array()
    out = []
    for index in range(len(g.ambient)):
        if not g.span_mask[index]:
            continue
        row = coords[index]
        if all(x.denominator == 1 for x in row):
            out.append((index, tuple(int(x) for x in row)))
    return out


def _realize(
    g: GammaSet, to: CarterDiagram, moved: RatMatrix, witness: SimilarityWitness
) -> GammaSet:
    frame = moved @ witness.matrix()
    roots = []
    for k in range(g.rank):
        coords = [0] * g.ambient.rank
        for j, tau in enumerate(g.roots):
            f = int(frame[j, k])
            if f:
                coords = [a + f * b for a, b in zip(coords, tau.coords)]
        roots.append(g.ambient.root(coords))
    return GammaSet(to, g.ambient, tuple(roots))


def find_transition(
    g: GammaSet, to: CarterDiagram, allow_degenerate: bool = False
) -> Transition | None:
    """Scan vertices, then span roots in ambient order, for a transition onto ``to``.

    A candidate root α for vertex i must be ``-τ_i + Σ t_j τ_j`` with integer
    ``t_j``; the first candidate whose moved set realizes a diagram similar to
    ``to`` wins. Pure sign flips (all ``t_j = 0``) are only accepted with
    ``allow_degenerate``.
    """
    d = g.diagram
    if d.rank != to.rank:
        raise PreconditionError(f"{d.name} and {to.name} have different ranks")
    if d.class_type is not None and to.class_type is not None and d.class_type != to.class_type:
        raise PreconditionError(f"{d.name} and {to.name} are not in one homogeneous class")
    candidates = _span_coefficients(g)
    b_from = g.b
    for i in range(d.rank):
        for index, column in candidates:
            if column[i] != -1:
                continue
            t = tuple(0 if j == i else c for j, c in enumerate(column))
            if not any(t) and not allow_degenerate:
                continue
            moved = _moved_matrix(d.rank, i, column)
            candidate = CarterDiagram.from_gram(f"{d.name}[{i + 1}]", congruent(moved, b_from))
            witness = similar(candidate, to)
            if witness is None:
                continue
            _LOGGER.debug(
                "%s -> %s: vertex %d moves to %s", d.name, to.name, i + 1, g.ambient.roots[index]
            )
            return Transition(g, _realize(g, to, moved, witness), moved, i, t, witness)
    _LOGGER.debug("No transition %s -> %s in %s", d.name, to.name, g.ambient.type)
    return None


def _flip_signs(d: CarterDiagram, i: int) -> CarterDiagram:
    edges = tuple(
        (a, b, (EDGE_DOTTED if s == EDGE_SOLID else EDGE_SOLID) if i in (a, b) else s)
        for a, b, s in d.edges
    )
    return CarterDiagram(f"L{i + 1}·{d.name}", d.vertices, edges, d.alpha, d.class_type)


def similarity_transition(g: GammaSet, i: int) -> Transition:
    """The degenerate transition L_τ: τ_i ↦ -τ_i, every edge at τ_i toggled."""
    if not 0 <= i < g.rank:
        raise PreconditionError(f"vertex {i + 1} outside 1..{g.rank}")
    column = tuple(-1 if j == i else 0 for j in range(g.rank))
    moved = _moved_matrix(g.rank, i, column)
    witness = SimilarityWitness.identity(g.rank)
    to_set = _realize(g, _flip_signs(g.diagram, i), moved, witness)
    return Transition(g, to_set, moved, i, (0,) * g.rank, witness)


def transport(t: Transition, label: LabelVector) -> LabelVector:
    """Carry a label of the target diagram to the source: u ↦ ᵗF⁻¹·u."""
    values = invert(t.frame).transpose().apply(label.labels)
    if any(x.denominator != 1 for x in values):
        raise PreconditionError(f"{label} does not carry to an integral label")
    return LabelVector(tuple(int(x) for x in values))


def verify_transition(t: Transition, labels: bool = True) -> TransitionReport:
    """Check the defining identities of M and F, then transport 𝓛(to) onto 𝓛(from)."""
    n = t.from_set.rank
    m = t.matrix
    i = t.moved_vertex
    identity = RatMatrix.identity(n)
    q = t.witness.matrix()
    b_from = t.from_set.b
    b_to = t.to_set.b
    checks = {
        CHECK_FIXES_OTHERS: all(m.column(j) == identity.column(j) for j in range(n) if j != i),
        CHECK_INVOLUTION: m @ m == identity,
        CHECK_DETERMINANT: det(m) == -1,
        CHECK_CONGRUENCE: congruent(m, b_from) == congruent(invert(q), b_to),
        CHECK_FRAME: congruent(t.frame, b_from) == b_to,
    }
    notes: list[str] = []
    from_total = to_total = 0
    if labels:
        source = enumerate_full(t.from_set.diagram).total
        target = enumerate_full(t.to_set.diagram).total
        from_total, to_total = len(source), len(target)
        try:
            carried = {transport(t, u) for u in target}
        except (LabelRangeError, PreconditionError) as err:
            notes.append(str(err))
            carried = set()
        checks[CHECK_LABEL_TRANSPORT] = carried == set(source)
    report = TransitionReport(t.name, checks, from_total, to_total, tuple(notes))
    if report.passed:
        _LOGGER.info("Transition %s verified", t.name)
    else:
        _LOGGER.warning("Transition %s failed: %s", t.name, ", ".join(report.failures))
    return report


def chain(source: CarterDiagram, target: CarterDiagram) -> list[Transition] | None:
    """Transitions carrying a Γ-set of ``source`` to one of ``target``.

    Tries a single step first, then a detour through another member of the
    homogeneous class. Equal diagrams give an empty chain.
    """
    if source.class_type is None or source.class_type != target.class_type:
        raise PreconditionError(f"{source.name} and {target.name} are not in one homogeneous class")
    if source.edges == target.edges and source.rank == target.rank:
        return []
    g = find_gamma_set(source, generate(source.class_type))
    if g is None:
        return None
    step = find_transition(g, target)
    if step is not None:
        return [step]
    for name in homogeneous_class(source.class_type).members:
        middle = get_diagram(name)
        if middle.name in (source.name, target.name):
            continue
        first = find_transition(g, middle)
        if first is None:
            continue
        second = find_transition(first.to_set, target)
        if second is not None:
            return [first, second]
    _LOGGER.warning("No chain %s -> %s", source.name, target.name)
    return None


def chain_frame(steps: list[Transition], rank: int) -> RatMatrix:
    """Product F_1·F_2···F_k, identity for an empty chain."""
    frame = RatMatrix.identity(rank)
    for step in steps:
        frame = frame @ step.frame
    return frame
