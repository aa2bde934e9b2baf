"""Inflations, deflations and the reduction of positive definite unit forms."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import networkx as nx

from .const import FAMILY_A, FAMILY_D, FAMILY_E, REDUCTION_CAP_FACTOR
from .diagram import CarterDiagram, partial_cartan
from .exceptions import (
    ClassificationError,
    FlationError,
    NotPositiveDefiniteError,
    OutOfTheoryError,
    PreconditionError,
    ReductionLimitError,
    ShapeError,
)
from .linalg import RatMatrix, congruent, det, is_positive_definite
from .root_system import AdeType

_LOGGER = logging.getLogger(__name__)

# sorted arm lengths of a branched tree -> exceptional rank
_E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}


@dataclass(frozen=True)
class UnitForm:
    """Symmetric integer matrix with every diagonal entry equal to 2."""

    matrix: RatMatrix

    def __post_init__(self) -> None:
        m = self.matrix
        if not m.is_square:
            raise ShapeError(f"unit form needs a square matrix, got {m.rows}x{m.cols}")
        if not m.is_symmetric or not m.is_integral:
            raise PreconditionError("unit form needs a symmetric integer matrix")
        if any(m[i, i] != 2 for i in range(m.rows)):
            raise PreconditionError("unit form needs 2 on the diagonal")

    @classmethod
    def of(cls, d: CarterDiagram) -> UnitForm:
        return cls(partial_cartan(d).matrix)

    @property
    def size(self) -> int:
        return self.matrix.rows

    def __getitem__(self, index: tuple[int, int]) -> int:
        return int(self.matrix[index])


@dataclass(frozen=True)
class Flation:
    """T^ε_ij: v ↦ v - ε·v_i·α_j. ε = +1 is an inflation, ε = -1 a deflation."""

    i: int
    j: int
    sign: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise FlationError(f"flation needs two distinct indices, got ({self.i}, {self.j})")
        if self.sign not in (1, -1):
            raise FlationError(f"flation sign must be ±1, got {self.sign}")

    @property
    def is_inflation(self) -> bool:
        return self.sign > 0

    def matrix(self, n: int) -> RatMatrix:
        rows = [[int(r == c) for c in range(n)] for r in range(n)]
        rows[self.j][self.i] = -self.sign
        return RatMatrix.from_rows(rows)

    def inverse(self) -> Flation:
        return Flation(self.i, self.j, -self.sign)

    def __str__(self) -> str:
        return f"T{'+' if self.is_inflation else '-'}({self.i + 1},{self.j + 1})"


def gabrielov_step(b: UnitForm | RatMatrix, i: int, j: int) -> RatMatrix:
    """B·(I - b_ij·E_ij), kept one-sided; the result need not be symmetric."""
    m = b.matrix if isinstance(b, UnitForm) else b
    if i == j:
        raise FlationError("Gabrielov transformation needs i != j")
    n = m.rows
    rows = [[int(r == c) for c in range(n)] for r in range(n)]
    rows[i][j] -= m[i, j]
    return m @ RatMatrix.from_rows(rows)


def flation_at(b: UnitForm, i: int, j: int) -> Flation:
    """The flation admissible at entry (i, j): ε = sign(b_ij)."""
    value = b[i, j]
    if value == 0:
        raise FlationError(f"entry ({i + 1},{j + 1}) is zero")
    return Flation(i, j, 1 if value > 0 else -1)


def apply_flation(b: UnitForm, f: Flation) -> UnitForm:
    """ᵗT·B·T for T = T^ε_ij; |b_ij| must be 1 and ε its sign."""
    value = b[f.i, f.j]
    if value == 0:
        raise FlationError(f"{f} at a zero entry")
    if abs(value) > 1:
        raise FlationError(f"{f} at entry {value}; only unit entries are supported")
    if f.sign * value != 1:
        raise FlationError(f"{f} does not match the sign of b_{f.i + 1}{f.j + 1} = {value}")
    return UnitForm(congruent(f.matrix(b.size), b.matrix))


@dataclass(frozen=True)
class ReductionResult:
    """Dynkin types reached, the certificate T and the inflations used."""

    types: tuple[AdeType, ...]
    certificate: RatMatrix
    reduced: RatMatrix
    steps: tuple[Flation, ...] = field(default=())

    @property
    def type_names(self) -> list[str]:
        return [str(t) for t in self.types]

    def to_json(self) -> dict:
        return {
            "types": self.type_names,
            "steps": [str(f) for f in self.steps],
            "certificate": self.certificate.to_int_rows(),
            "reduced": self.reduced.to_int_rows(),
        }


def _first_positive(b: UnitForm) -> tuple[int, int] | None:
    n = b.size
    for i in range(n):
        for j in range(i + 1, n):
            value = b[i, j]
            if abs(value) >= 2:
                raise OutOfTheoryError(f"entry ({i + 1},{j + 1}) equals {value}")
            if value > 0:
                return i, j
    return None


def ovsienko_reduce(b: UnitForm) -> ReductionResult:
    """Inflate at the lexicographically first positive entry until none is left.

    Raises:
        NotPositiveDefiniteError: input is not positive definite
        OutOfTheoryError: an off-diagonal entry of magnitude 2 or more appears
        ReductionLimitError: more than 10·n² inflations were needed
    """
    if not is_positive_definite(b.matrix):
        raise NotPositiveDefiniteError("Ovsienko reduction needs a positive definite form")
    n = b.size
    cap = REDUCTION_CAP_FACTOR * n * n
    current = b
    certificate = RatMatrix.identity(n)
    steps: list[Flation] = []
    while (entry := _first_positive(current)) is not None:
        if len(steps) >= cap:
            raise ReductionLimitError(cap)
        f = flation_at(current, *entry)
        current = apply_flation(current, f)
        certificate = certificate @ f.matrix(n)
        steps.append(f)
    types = recognize_dynkin(current)
    _LOGGER.info(
        "Reduced a rank %d form to %s in %d inflations", n, " + ".join(map(str, types)), len(steps)
    )
    return ReductionResult(tuple(types), certificate, current.matrix, tuple(steps))


def reduce_diagram(d: CarterDiagram) -> ReductionResult:
    return ovsienko_reduce(UnitForm.of(d))


def certificate_holds(b: UnitForm, result: ReductionResult) -> bool:
    """ᵗT·B·T equals the reduced form and the determinant is unchanged."""
    image = congruent(result.certificate, b.matrix)
    return image == result.reduced and det(image) == det(b.matrix)


def _arms(tree: nx.Graph, centre: int) -> tuple[int, ...]:
    lengths = []
    for start in tree.neighbors(centre):
        previous, node, length = centre, start, 1
        while True:
            onward = [w for w in tree.neighbors(node) if w != previous]
            if not onward:
                break
            previous, node, length = node, onward[0], length + 1
        lengths.append(length)
    return tuple(sorted(lengths))


def recognize_dynkin(b: UnitForm | RatMatrix) -> list[AdeType]:
    """Classify each connected component of a direct sum of Cartan matrices."""
    m = b.matrix if isinstance(b, UnitForm) else b
    graph = nx.Graph()
    graph.add_nodes_from(range(m.rows))
    for i in range(m.rows):
        for j in range(i + 1, m.rows):
            value = m[i, j]
            if value not in (0, -1):
                raise ClassificationError(f"entry ({i + 1},{j + 1}) equals {value}")
            if value:
                graph.add_edge(i, j)
    types = []
    for nodes in sorted(nx.connected_components(graph), key=min):
        component = graph.subgraph(nodes)
        size = component.number_of_nodes()
        if not nx.is_tree(component):
            raise ClassificationError(f"component {sorted(nodes)} has a cycle")
        branch = [v for v, deg in component.degree if deg >= 3]
        if not branch:
            types.append(AdeType(FAMILY_A, size))
            continue
        if len(branch) > 1 or component.degree[branch[0]] > 3:
            raise ClassificationError(f"component {sorted(nodes)} is not a Dynkin diagram")
        arms = _arms(component, branch[0])
        if arms[:2] == (1, 1):
            types.append(AdeType(FAMILY_D, size))
        elif arms in _E_ARMS:
            types.append(AdeType(FAMILY_E, _E_ARMS[arms]))
        else:
            raise ClassificationError(f"arm lengths {arms} do not give a Dynkin diagram")
    return sorted(types)
