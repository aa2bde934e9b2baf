"""Γ-sets: Carter diagrams realized by roots of an ambient root system.

A Γ-set is an ordered list of linearly independent roots whose Gram matrix
is the partial Cartan matrix of the diagram. Every ambient root γ gets a
label vector γ∇ of inner products with the Γ-set; the projection of γ to
the span L of the Γ-set is γ_L = B⁻¹·γ∇ and the normal part μ = γ - γ_L
has norm 2 - 𝓑∨(γ∇).
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from networkx import Graph
from networkx.algorithms.isomorphism import GraphMatcher

from .diagram import CarterDiagram, partial_cartan
from .exceptions import (
    AmbientMismatchError,
    DimensionError,
    LabelRangeError,
    PreconditionError,
)
from .linalg import QuadraticForm, RatMatrix, Vector, rank, solve_integer
from .root_system import Root, RootSystem, span_mask

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LabelVector:
    """Linkage label vector: entries in {-1, 0, 1}, indexed like the Γ-set."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(x) for x in self.labels)
        for i, x in enumerate(values):
            if x not in (-1, 0, 1):
                raise LabelRangeError(i, x)
        object.__setattr__(self, "labels", values)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, i: int) -> int:
        return self.labels[i]

    def __neg__(self) -> LabelVector:
        return LabelVector(tuple(-x for x in self.labels))

    @property
    def is_zero(self) -> bool:
        return not any(self.labels)

    def to_list(self) -> list[int]:
        return list(self.labels)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.labels) + ")"


@dataclass(frozen=True)
class ProjectionData:
    """Projection of a root onto the span of a Γ-set."""

    label: LabelVector
    gamma_l: Vector
    mu_norm_sq: Fraction

    @property
    def inverse_form_value(self) -> Fraction:
        """𝓑∨(γ∇) = 𝓑(γ_L) = 2 - 𝓑(μ)."""
        return 2 - self.mu_norm_sq


@dataclass(frozen=True)
class GammaSet:
    """Ordered roots realizing ``diagram`` inside ``ambient``."""

    diagram: CarterDiagram
    ambient: RootSystem
    roots: tuple[Root, ...]

    def __post_init__(self) -> None:
        if len(self.roots) != self.diagram.rank:
            raise DimensionError(
                f"{len(self.roots)} roots for the {self.diagram.rank} vertices of {self.diagram.name}"
            )
        if any(r.ambient != self.ambient.type for r in self.roots):
            raise AmbientMismatchError(f"Γ-set roots must lie in {self.ambient.type}")
        if self.gram_array.tolist() != self.diagram.gram_rows():
            raise PreconditionError(
                f"roots do not realize {self.diagram.name}: Gram matrix differs from B_Γ"
            )
        if rank(RatMatrix.from_rows(r.coords for r in self.roots)) != len(self.roots):
            raise PreconditionError("Γ-set roots are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.roots)

    @cached_property
    def root_array(self) -> np.ndarray:
        return np.array([r.coords for r in self.roots], dtype=np.int64).reshape(
            len(self.roots), self.ambient.rank
        )

    @cached_property
    def gram_array(self) -> np.ndarray:
        return self.root_array @ self.ambient.cartan_array @ self.root_array.T

    @cached_property
    def b(self) -> RatMatrix:
        """Partial Cartan matrix B_Γ."""
        return partial_cartan(self.diagram).matrix

    @cached_property
    def b_inverse(self) -> RatMatrix:
        return partial_cartan(self.diagram).inverse

    @cached_property
    def form(self) -> QuadraticForm:
        """𝓑_Γ on coordinates in the Γ-set basis."""
        return QuadraticForm(self.b)

    @cached_property
    def inverse_form(self) -> QuadraticForm:
        """𝓑∨_Γ on label vectors."""
        return QuadraticForm(self.b_inverse)

    @cached_property
    def determinant(self) -> int:
        return int(partial_cartan(self.diagram).determinant)

    @cached_property
    def adjugate_array(self) -> np.ndarray:
        """det(B)·B⁻¹ as integers, for vectorized evaluation of 𝓑∨."""
        return np.array(self.b_inverse.scale(self.determinant).to_int_rows(), dtype=np.int64)

    @cached_property
    def label_array(self) -> np.ndarray:
        """Raw inner products of every ambient root with the Γ-set, one row per root."""
        return self.ambient.coord_array @ self.ambient.cartan_array @ self.root_array.T

    @cached_property
    def span_mask(self) -> np.ndarray:
        """Ambient roots lying in span(S)."""
        return span_mask(self.ambient, self.roots)

    @cached_property
    def inverse_form_numerators(self) -> np.ndarray:
        """det(B)·𝓑∨(γ∇) for every ambient root (exact integers)."""
        lab = self.label_array
        return np.einsum("ij,jk,ik->i", lab, self.adjugate_array, lab)

    def outside_roots(self) -> list[Root]:
        """Ambient roots not in span(S), in ambient order."""
        return [r for r, inside in zip(self.ambient.roots, self.span_mask) if not inside]

    def raw_label(self, gamma: Root) -> tuple[int, ...]:
        if gamma.ambient != self.ambient.type:
            raise AmbientMismatchError(f"{gamma} is not a root of {self.ambient.type}")
        return tuple(int(x) for x in self.label_array[self.ambient.index(gamma)])

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram.name,
            "ambient": str(self.ambient.type),
            "roots": [list(r.coords) for r in self.roots],
        }


def _search_order(d: CarterDiagram) -> list[int]:
    """Breadth-first vertex order starting at a vertex of maximal degree."""
    g = d.graph
    remaining = set(range(d.rank))
    order: list[int] = []
    while remaining:
        start = min(remaining, key=lambda v: (-g.degree(v), v))
        queue = deque([start])
        seen = {start}
        while queue:
            v = queue.popleft()
            order.append(v)
            remaining.discard(v)
            for w in sorted(g.neighbors(v)):
                if w not in seen and w in remaining:
                    seen.add(w)
                    queue.append(w)
    return order


def find_gamma_set(d: CarterDiagram, ambient: RootSystem) -> GammaSet | None:
    """Backtracking search for a realization of ``d`` in ``ambient``.

    Vertices are assigned in a connected breadth-first order; candidate roots
    are tried in the ambient's lexicographic order and pruned against every
    inner product already fixed. The Weyl group acts transitively on the
    roots of an irreducible system, so the first vertex only tries the
    lexicographically first root.
    """
    if d.rank > ambient.rank:
        return None
    gram = ambient.gram_array
    b = d.gram_rows()
    order = _search_order(d)
    chosen: list[int] = []
    count = len(ambient.roots)

    def extend(position: int) -> bool:
        if position == len(order):
            return True
        v = order[position]
        mask = np.ones(count, dtype=bool)
        for q, root_index in enumerate(chosen):
            mask &= gram[:, root_index] == b[v][order[q]]
        candidates = np.flatnonzero(mask)
        if position == 0:
            candidates = candidates[:1]
        for candidate in candidates:
            chosen.append(int(candidate))
            if extend(position + 1):
                return True
            chosen.pop()
        return False

    if not extend(0):
        _LOGGER.debug("%s has no realization in %s", d.name, ambient.type)
        return None
    by_vertex = dict(zip(order, chosen))
    roots = tuple(ambient.roots[by_vertex[v]] for v in range(d.rank))
    if rank(RatMatrix.from_rows(r.coords for r in roots)) != d.rank:
        # Gram matrix is degenerate; a realization cannot be independent
        return None
    _LOGGER.debug("Realized %s in %s", d.name, ambient.type)
    return GammaSet(d, ambient, roots)


def label_vector(g: GammaSet, gamma: Root) -> LabelVector:
    """γ∇ = ((γ, τ_1), ..., (γ, τ_n)); an entry ±2 means γ = ±τ_i."""
    return LabelVector(g.raw_label(gamma))


def project(g: GammaSet, label: LabelVector | Sequence[int]) -> ProjectionData:
    """γ_L = B⁻¹·γ∇ and 𝓑(μ) = 2 - 𝓑(γ_L)."""
    label = label if isinstance(label, LabelVector) else LabelVector(tuple(label))
    if len(label) != g.rank:
        raise DimensionError(f"label of length {len(label)} for a Γ-set of rank {g.rank}")
    gamma_l = g.b_inverse.apply(label.labels)
    return ProjectionData(
        label=label,
        gamma_l=gamma_l,
        mu_norm_sq=2 - g.form(gamma_l),
    )


def normal_vector(g: GammaSet, gamma: Root) -> tuple[Vector, Vector]:
    """γ_L and μ = γ - γ_L in ambient simple-root coordinates."""
    coefficients = g.b_inverse.apply(g.raw_label(gamma))
    gamma_l = tuple(
        sum((c * r.coords[k] for c, r in zip(coefficients, g.roots)), Fraction(0))
        for k in range(g.ambient.rank)
    )
    mu = tuple(Fraction(x) - y for x, y in zip(gamma.coords, gamma_l))
    return gamma_l, mu


def conjugate_partner(g: GammaSet, gamma: Root) -> Root | None:
    """The root δ ≠ γ with δ∇ = γ∇, when it lies in the ambient system."""
    index = g.ambient.index(gamma)
    if g.span_mask[index]:
        raise PreconditionError(f"{gamma} lies in the span of the Γ-set")
    matches = np.flatnonzero(np.all(g.label_array == g.label_array[index], axis=1))
    for m in matches:
        if m != index:
            return g.ambient.roots[int(m)]
    return None


def _simple_system(g: GammaSet) -> list[Root]:
    """Simple roots of Φ ∩ span(S): positive roots there that are not a sum of two."""
    inside = [r for r, keep in zip(g.ambient.roots, g.span_mask) if keep and r.is_positive]
    coords = {r.coords for r in inside}
    simple = []
    for r in inside:
        decomposable = any(
            tuple(a - b for a, b in zip(r.coords, q)) in coords for q in coords if q != r.coords
        )
        if not decomposable:
            simple.append(r)
    return sorted(simple)


def realizations(g: GammaSet) -> list[GammaSet]:
    """Images of ``g`` under the automorphisms of the root subsystem it spans.

    Automorphisms are the Dynkin diagram symmetries of Φ ∩ span(S) acting on
    its simple roots; Weyl group elements of the subsystem are not needed
    because they permute the ambient roots outside the span.
    """
    simple = _simple_system(g)
    graph = Graph()
    graph.add_nodes_from(range(len(simple)))
    for i, a in enumerate(simple):
        for j in range(i + 1, len(simple)):
            if int(g.ambient.gram_array[g.ambient.index(a), g.ambient.index(simple[j])]) == -1:
                graph.add_edge(i, j)

    basis = RatMatrix.from_rows(zip(*(r.coords for r in simple)))
    coefficients = []
    for tau in g.roots:
        solution = solve_integer(basis, tau.coords)
        if solution is None:
            raise PreconditionError(f"{tau} is not spanned by the simple roots of its subsystem")
        coefficients.append(solution)

    seen: dict[tuple[Root, ...], GammaSet] = {g.roots: g}
    automorphisms = 0
    for sigma in GraphMatcher(graph, graph).isomorphisms_iter():
        automorphisms += 1
        images = []
        for coeff in coefficients:
            vector = [0] * g.ambient.rank
            for k, c in enumerate(coeff):
                target = simple[sigma[k]].coords
                for m in range(g.ambient.rank):
                    vector[m] += c * target[m]
            images.append(g.ambient.root(vector))
        key = tuple(images)
        if key not in seen:
            seen[key] = GammaSet(g.diagram, g.ambient, key)
    _LOGGER.debug(
        "%s in %s: %d realizations from %d subsystem automorphisms",
        g.diagram.name, g.ambient.type, len(seen), automorphisms,
    )
    return [seen[key] for key in sorted(seen)]


def realization_labels(g: GammaSet) -> set[LabelVector]:
    """Nonzero labels of ambient roots outside span(S) for this single realization."""
    outside = g.label_array[~g.span_mask]
    return {LabelVector(tuple(row)) for row in np.unique(outside, axis=0) if np.any(row)}


def linkage_diagram(d: CarterDiagram, label: LabelVector | Iterable[int]) -> CarterDiagram:
    """The diagram extended by the linkage root γ with edges read from γ∇."""
    label = label if isinstance(label, LabelVector) else LabelVector(tuple(label))
    if len(label) != d.rank:
        raise DimensionError(f"label of length {len(label)} for {d.name}")
    n = d.rank
    edges = d.edges + tuple((i, n, x) for i, x in enumerate(label) if x)
    return CarterDiagram(
        name=f"{d.name}+γ{label}",
        vertices=d.vertices + ("γ",),
        edges=edges,
        alpha=d.alpha,
    )
