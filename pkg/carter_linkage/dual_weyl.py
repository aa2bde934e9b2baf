"""Dual reflections acting on label vectors and the orbits they generate."""

from __future__ import annotations

import logging
import random
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .const import EDGE_SOLID, LOCTET_SIZE
from .diagram import CarterDiagram, partial_cartan
from .exceptions import (
    ClosureViolationError,
    DimensionError,
    LabelRangeError,
    PreconditionError,
    ReflectionRangeError,
)
from .gamma_set import GammaSet, LabelVector, label_vector
from .linalg import RatMatrix, eval_form, format_rational, invert
from .root_system import Root

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualReflection:
    """s*_τi acting on label vectors of a fixed diagram."""

    diagram: CarterDiagram
    vertex: int

    def __call__(self, u: LabelVector) -> LabelVector:
        return dual_reflect(self.diagram, self.vertex, u)


@dataclass(frozen=True)
class Orbit:
    """A W∨-orbit of label vectors together with its p-invariant."""

    labels: tuple[LabelVector, ...]
    p: Fraction

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def is_loctet(self) -> bool:
        return self.size == LOCTET_SIZE

    def to_json(self) -> dict:
        return {
            "p": format_rational(self.p),
            "size": self.size,
            "labels": [u.to_list() for u in self.labels],
        }


def dual_reflect(d: CarterDiagram, i: int, u: LabelVector) -> LabelVector:
    """Rewrite u by the case table of s*_τi.

    Entry i is negated, solid neighbours of i gain u_i, dotted neighbours
    lose u_i, every other entry is unchanged.
    """
    if len(u) != d.rank:
        raise DimensionError(f"label of length {len(u)} for {d.name}")
    ui = u[i]
    if ui == 0:
        return u
    out = list(u.labels)
    out[i] = -ui
    for k, sign in d.neighbors(i):
        out[k] = u[k] + ui if sign == EDGE_SOLID else u[k] - ui
    try:
        return LabelVector(tuple(out))
    except LabelRangeError as err:
        raise ReflectionRangeError(
            f"s*_{i + 1}{u} = {tuple(out)} leaves the ternary range"
        ) from err


def apply_dual_word(d: CarterDiagram, word: Sequence[int], u: LabelVector) -> LabelVector:
    """w*·u for w = s_{i1}···s_{ik} (rightmost reflection first)."""
    for i in reversed(word):
        u = dual_reflect(d, i, u)
    return u


def orbit_partition(d: CarterDiagram, labels: Iterable[LabelVector]) -> list[Orbit]:
    """Split a reflection-closed label set into W∨-orbits.

    Orbits are ordered by their lexicographically smallest member and list
    their members sorted.

    Raises:
        ClosureViolationError: when a dual reflection leaves the label set
    """
    pool = set(labels)
    b_inverse = partial_cartan(d).inverse
    remaining = set(pool)
    orbits: list[Orbit] = []
    while remaining:
        start = min(remaining)
        members = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for i in range(d.rank):
                image = dual_reflect(d, i, u)
                if image not in pool:
                    raise ClosureViolationError(
                        f"s*_{i + 1} maps {u} to {image}, outside the label set of {d.name}"
                    )
                if image not in members:
                    members.add(image)
                    queue.append(image)
        remaining -= members
        ordered = tuple(sorted(members))
        values = {eval_form(b_inverse, u.labels) for u in ordered}
        if len(values) != 1:
            raise PreconditionError(f"𝓑∨ is not constant on an orbit of {d.name}")
        orbits.append(Orbit(ordered, values.pop()))
    orbits.sort(key=lambda o: o.labels[0])
    _LOGGER.debug("%s: %d labels in %d orbits", d.name, len(pool), len(orbits))
    return orbits


# ----------------------------------------------------------------------
# Matrices of reflections in the Γ-set basis
# ----------------------------------------------------------------------


def reflection_matrix(d: CarterDiagram, i: int) -> RatMatrix:
    """s_τi on L in Γ-set coordinates: v ↦ v - <B e_i, v> e_i."""
    b = d.gram_rows()
    n = d.rank
    return RatMatrix.from_rows(
        [[int(k == m) - (b[i][m] if k == i else 0) for m in range(n)] for k in range(n)]
    )


def dual_reflection_matrix(d: CarterDiagram, i: int) -> RatMatrix:
    """s*_τi on label space: u ↦ u - u_i B e_i."""
    b = d.gram_rows()
    n = d.rank
    return RatMatrix.from_rows(
        [[int(k == m) - (b[k][i] if m == i else 0) for m in range(n)] for k in range(n)]
    )


def word_matrix(d: CarterDiagram, word: Sequence[int], dual: bool = False) -> RatMatrix:
    """Matrix of w = s_{i1}···s_{ik} (or of w* when ``dual``)."""
    build = dual_reflection_matrix if dual else reflection_matrix
    m = RatMatrix.identity(d.rank)
    for i in word:
        m = m @ build(d, i)
    return m


def transpose_identity_check(g: GammaSet | CarterDiagram, i: int) -> bool:
    """s*_τi is the transpose of s_τi."""
    d = g.diagram if isinstance(g, GammaSet) else g
    return dual_reflection_matrix(d, i) == reflection_matrix(d, i).transpose()


def intertwining_check(d: CarterDiagram, i: int) -> bool:
    """B_Γ·s_τi = s*_τi·B_Γ."""
    b = partial_cartan(d).matrix
    return b @ reflection_matrix(d, i) == dual_reflection_matrix(d, i) @ b


def contragredient_check(d: CarterDiagram, word: Sequence[int]) -> bool:
    """The matrix of w* equals ᵗw⁻¹."""
    w = word_matrix(d, word)
    return word_matrix(d, word, dual=True) == invert(w).transpose()


def duality_check(g: GammaSet, w_word: Sequence[int], gamma: Root) -> bool:
    """(wγ)∇ = w*·γ∇ with w applied as true reflections in the ambient."""
    if g.span_mask[g.ambient.index(gamma)]:
        raise PreconditionError(f"{gamma} lies in the span of the Γ-set")
    image = gamma
    for i in reversed(w_word):
        image = g.ambient.reflect(image, g.roots[i])
    return label_vector(g, image) == apply_dual_word(g.diagram, w_word, label_vector(g, gamma))


def random_word(rng: random.Random, rank: int, max_length: int) -> list[int]:
    """Uniform word length in [0, max_length], uniform letters."""
    return [rng.randrange(rank) for _ in range(rng.randint(0, max_length))]


def orbit_dot(d: CarterDiagram, orbit: Orbit, name: str | None = None) -> str:
    """Graphviz source of the orbit graph (edges labelled by the reflecting vertex)."""
    index = {u: k for k, u in enumerate(orbit.labels)}
    lines = [f'graph "{name or d.name}" {{', "\tnode [shape=box];"]
    for u, k in index.items():
        lines.append(f'\t"{k}" [label="{u}"];')
    seen: set[tuple[int, int, int]] = set()
    for u, k in index.items():
        for i in range(d.rank):
            image = dual_reflect(d, i, u)
            if image == u:
                continue
            m = index[image]
            key = (min(k, m), max(k, m), i)
            if key not in seen:
                seen.add(key)
                lines.append(f'\t"{key[0]}" -- "{key[1]}" [label="{i + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
