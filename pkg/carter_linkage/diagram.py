"""Carter diagrams: signed bicoloured graphs and their partial Cartan matrices.

Edges carry the value of the inner product of the two roots they join:
solid edges are -1, dotted edges are +1. Catalog diagrams list the α-set
first and the β-set second, which is also the layout of label vectors.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .const import (
    ALPHA_PREFIX,
    BETA_PREFIX,
    EDGE_DOTTED,
    EDGE_SOLID,
    FAMILY_A,
    FAMILY_D,
    FAMILY_E,
    MAX_RANK,
)
from .exceptions import InvalidDiagramError, InvalidTypeError, UnknownDiagramError
from .linalg import RatMatrix, det, invert, is_positive_definite
from .root_system import AdeType

_LOGGER = logging.getLogger(__name__)

_NAME_PATTERN = re.compile(r"^\s*([ADE])\s*(\d+)\s*(?:\(\s*a\s*(\d+)\s*\))?\s*$", re.IGNORECASE)

# Names of the rules checked by validate()
RULE_CONNECTED = "connected"
RULE_BICOLORED = "bicolored"
RULE_EVEN_CYCLES = "even_cycles"
RULE_MIXED_CYCLES = "mixed_cycle_edges"
RULE_POSITIVE_DEFINITE = "positive_definite"
RULE_DETERMINANT = "determinant"


@dataclass(frozen=True)
class CarterDiagram:
    """A signed graph on ordered vertices partitioned into α- and β-sets."""

    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]
    alpha: frozenset[int] = field(default=frozenset())
    class_type: AdeType | None = None

    def __post_init__(self) -> None:
        n = len(self.vertices)
        normalized: dict[tuple[int, int], int] = {}
        for i, j, sign in self.edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise InvalidDiagramError(f"{self.name}: bad edge ({i}, {j})")
            if sign not in (EDGE_SOLID, EDGE_DOTTED):
                raise InvalidDiagramError(f"{self.name}: edge sign {sign} not in {{-1, 1}}")
            key = (min(i, j), max(i, j))
            if key in normalized:
                raise InvalidDiagramError(f"{self.name}: duplicate edge {key}")
            normalized[key] = sign
        object.__setattr__(
            self, "edges", tuple((i, j, s) for (i, j), s in sorted(normalized.items()))
        )
        object.__setattr__(self, "alpha", frozenset(self.alpha))

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def beta(self) -> frozenset[int]:
        return frozenset(range(self.rank)) - self.alpha

    @cached_property
    def graph(self) -> nx.Graph:
        """Undirected networkx graph with a ``sign`` attribute on each edge."""
        g = nx.Graph()
        g.add_nodes_from(range(self.rank))
        for i, j, sign in self.edges:
            g.add_edge(i, j, sign=sign)
        return g

    @cached_property
    def _signs(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, j, s in self.edges:
            out[(i, j)] = out[(j, i)] = s
        return out

    def sign(self, i: int, j: int) -> int:
        """Edge value between i and j, 0 when not adjacent."""
        return self._signs.get((i, j), 0)

    def neighbors(self, i: int) -> list[tuple[int, int]]:
        """(neighbour, sign) pairs of vertex i in index order."""
        return sorted((k, self._signs[(i, k)]) for k in self.graph.neighbors(i))

    @property
    def is_dynkin(self) -> bool:
        """All edges solid and the graph is a tree."""
        return all(s == EDGE_SOLID for _, _, s in self.edges) and nx.is_tree(self.graph)

    @property
    def dotted_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, s in self.edges if s == EDGE_DOTTED]

    def gram_rows(self) -> list[list[int]]:
        rows = [[2 if i == j else 0 for j in range(self.rank)] for i in range(self.rank)]
        for i, j, s in self.edges:
            rows[i][j] = rows[j][i] = s
        return rows

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "alpha": [self.vertices[i] for i in sorted(self.alpha)],
            "beta": [self.vertices[i] for i in sorted(self.beta)],
            "vertices": list(self.vertices),
            "edges": [[i, j, s] for i, j, s in self.edges],
        }

    @classmethod
    def from_gram(
        cls,
        name: str,
        gram: RatMatrix | Sequence[Sequence[int]],
        vertex_names: Sequence[str] | None = None,
        class_type: AdeType | None = None,
    ) -> CarterDiagram:
        """Read a diagram off a Gram matrix (diagonal 2, off-diagonal in {-1, 0, 1}).

        The α-set is a 2-colouring starting from the lowest index of each
        component; when the graph is not bipartite every vertex is put in α
        so that validate() reports the violation.
        """
        rows = gram.to_int_rows() if isinstance(gram, RatMatrix) else [list(r) for r in gram]
        n = len(rows)
        names = tuple(vertex_names) if vertex_names else tuple(f"τ{i + 1}" for i in range(n))
        edges = []
        for i in range(n):
            if rows[i][i] != 2:
                raise InvalidDiagramError(f"{name}: diagonal entry {i} is {rows[i][i]}, not 2")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise InvalidDiagramError(f"{name}: Gram matrix is not symmetric")
                if rows[i][j]:
                    edges.append((i, j, int(rows[i][j])))
        uncoloured = cls(name, names, tuple(edges))
        return cls(name, names, tuple(edges), _two_colouring(uncoloured.graph), class_type)

    @classmethod
    def from_json(cls, data: dict) -> CarterDiagram:
        """Build a diagram from the export schema (already validated)."""
        vertices = list(data["alpha"]) + list(data["beta"])
        class_type = None
        try:
            class_type, _ = parse_name(data["name"])
        except UnknownDiagramError:
            pass
        return cls(
            name=data["name"],
            vertices=tuple(vertices),
            edges=tuple((int(i), int(j), int(s)) for i, j, s in data["edges"]),
            alpha=frozenset(range(len(data["alpha"]))),
            class_type=class_type,
        )


def _two_colouring(graph: nx.Graph) -> frozenset[int]:
    if not nx.is_bipartite(graph):
        return frozenset(graph.nodes)
    colour: dict[int, int] = {}
    for start in sorted(graph.nodes):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in graph.neighbors(v):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
    return frozenset(v for v, c in colour.items() if c == 0)


@dataclass(frozen=True)
class PartialCartanMatrix:
    """B_Γ together with the diagram it was read from."""

    matrix: RatMatrix
    diagram: CarterDiagram

    @cached_property
    def determinant(self):
        return det(self.matrix)

    @cached_property
    def inverse(self) -> RatMatrix:
        return invert(self.matrix)


@dataclass(frozen=True)
class HomogeneousClass:
    """All catalog diagrams of one type and rank."""

    type: AdeType
    members: tuple[str, ...]

    @property
    def dynkin(self) -> str:
        return self.members[0]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(): one entry per violated rule."""

    name: str
    violations: tuple[str, ...]
    determinant: object = None

    @property
    def valid(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class SimilarityWitness:
    """Vertex bijection plus the set of (source) vertices whose sign flips.

    Applying the witness to a Γ-set ``τ`` of the source diagram gives the
    Γ-set ``ρ`` of the target with ``ρ[perm[i]] = ±τ[i]``.
    """

    perm: tuple[int, ...]
    flips: frozenset[int]

    @classmethod
    def identity(cls, n: int) -> SimilarityWitness:
        return cls(tuple(range(n)), frozenset())

    @property
    def is_identity(self) -> bool:
        return not self.flips and all(p == i for i, p in enumerate(self.perm))

    def sign(self, i: int) -> int:
        return -1 if i in self.flips else 1

    def inverse(self) -> SimilarityWitness:
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return SimilarityWitness(tuple(inv), frozenset(self.perm[i] for i in self.flips))

    def compose(self, then: SimilarityWitness) -> SimilarityWitness:
        """This witness followed by ``then``."""
        perm = tuple(then.perm[p] for p in self.perm)
        flips = frozenset(
            i for i, p in enumerate(self.perm) if self.sign(i) * then.sign(p) < 0
        )
        return SimilarityWitness(perm, flips)

    def matrix(self) -> RatMatrix:
        """Signed permutation Q with ᵗQ·B_source·Q = B_target."""
        n = len(self.perm)
        rows = [[0] * n for _ in range(n)]
        for i, p in enumerate(self.perm):
            rows[i][p] = self.sign(i)
        return RatMatrix.from_rows(rows)

    def apply_to_label(self, label: Sequence[int]) -> tuple[int, ...]:
        """Carry a label vector of the source diagram to the target diagram."""
        out = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            out[p] = self.sign(i) * label[i]
        return tuple(out)


# ----------------------------------------------------------------------
# Catalog
# ----------------------------------------------------------------------


def _names(alpha_count: int, beta_count: int) -> tuple[str, ...]:
    return tuple(f"{ALPHA_PREFIX}{i + 1}" for i in range(alpha_count)) + tuple(
        f"{BETA_PREFIX}{i + 1}" for i in range(beta_count)
    )


def _assemble(
    name: str,
    class_type: AdeType,
    alpha_order: list[str],
    beta_order: list[str],
    edges: Iterable[tuple[str, str, int]],
) -> CarterDiagram:
    """Lay out a diagram built on symbolic vertex keys, α-set first."""
    order = alpha_order + beta_order
    position = {key: i for i, key in enumerate(order)}
    return CarterDiagram(
        name=name,
        vertices=_names(len(alpha_order), len(beta_order)),
        edges=tuple((position[a], position[b], s) for a, b, s in edges),
        alpha=frozenset(range(len(alpha_order))),
        class_type=class_type,
    )


def _colour_split(keys: list[str], edges: list[tuple[str, str, int]]) -> tuple[list[str], list[str]]:
    g = nx.Graph()
    g.add_nodes_from(range(len(keys)))
    index = {k: i for i, k in enumerate(keys)}
    g.add_edges_from((index[a], index[b]) for a, b, _ in edges)
    alpha = _two_colouring(g)
    return [keys[i] for i in sorted(alpha)], [keys[i] for i in range(len(keys)) if i not in alpha]


def _chain(keys: list[str]) -> list[tuple[str, str, int]]:
    return [(a, b, EDGE_SOLID) for a, b in zip(keys, keys[1:])]


def _dynkin_a(l: int) -> CarterDiagram:
    keys = [f"v{i}" for i in range(l)]
    edges = _chain(keys)
    alpha, beta = _colour_split(keys, edges)
    return _assemble(f"A{l}", AdeType(FAMILY_A, l), alpha, beta, edges)


def _dynkin_d(l: int) -> CarterDiagram:
    # branch node c with leaves x, y and the chain c - z1 - z2 - ...
    zs = [f"z{i}" for i in range(1, l - 2)]
    edges = [("x", "c", EDGE_SOLID), ("y", "c", EDGE_SOLID)] + _chain(["c"] + zs)
    alpha = ["x", zs[0], "y"] + zs[2::2]
    beta = ["c"] + zs[1::2]
    return _assemble(f"D{l}", AdeType(FAMILY_D, l), alpha, beta, edges)


def _dynkin_e(l: int) -> CarterDiagram:
    keys = [f"n{i}" for i in range(1, l + 1)]
    edges = [(keys[i], keys[j], EDGE_SOLID) for i, j in AdeType(FAMILY_E, l).dynkin_edges()]
    alpha, beta = _colour_split(keys, edges)
    return _assemble(f"E{l}", AdeType(FAMILY_E, l), alpha, beta, edges)


def _d_cycle(l: int, k: int) -> CarterDiagram:
    """D_l(a_k): square L-T-R-B with one dotted edge, tails on L and R.

    The tail through L holds k vertices (L included), the tail through R
    holds l - k - 2 (R included).
    """
    left = ["L"] + [f"p{i}" for i in range(1, k)]
    right = ["R"] + [f"q{i}" for i in range(1, l - k - 2)]
    edges = [
        ("L", "T", EDGE_SOLID),
        ("T", "R", EDGE_SOLID),
        ("R", "B", EDGE_SOLID),
        ("L", "B", EDGE_DOTTED),
    ]
    edges += _chain(left) + _chain(right)
    alpha = ["L", "R"] + left[2::2] + right[2::2]
    beta = ["T", "B"] + left[1::2] + right[1::2]
    return _assemble(f"D{l}(a{k})", AdeType(FAMILY_D, l), alpha, beta, edges)


def _e6_a1() -> CarterDiagram:
    # square a-b-c-d with pendants e on a and f on b
    edges = [
        ("a", "b", EDGE_SOLID),
        ("b", "c", EDGE_SOLID),
        ("c", "d", EDGE_DOTTED),
        ("d", "a", EDGE_SOLID),
        ("e", "a", EDGE_SOLID),
        ("f", "b", EDGE_SOLID),
    ]
    return _assemble("E6(a1)", AdeType(FAMILY_E, 6), ["a", "c", "f"], ["b", "d", "e"], edges)


def _e6_a2() -> CarterDiagram:
    # 2 x 3 grid t1-t2-t3 over u1-u2-u3 with rungs, outer rungs dotted
    edges = _chain(["t1", "t2", "t3"]) + _chain(["u1", "u2", "u3"]) + [
        ("t1", "u1", EDGE_DOTTED),
        ("t2", "u2", EDGE_SOLID),
        ("t3", "u3", EDGE_DOTTED),
    ]
    return _assemble("E6(a2)", AdeType(FAMILY_E, 6), ["t1", "t3", "u2"], ["t2", "u1", "u3"], edges)


def parse_name(name: str) -> tuple[AdeType, int]:
    """Split ``D5(a1)`` into (D5, 1); Dynkin names give k = 0."""
    match = _NAME_PATTERN.match(name)
    if match is None:
        raise UnknownDiagramError(f"not a Carter diagram name: {name!r}")
    try:
        t = AdeType(match.group(1).upper(), int(match.group(2)))
    except InvalidTypeError as err:
        raise UnknownDiagramError(str(err)) from err
    return t, int(match.group(3) or 0)


def canonical_name(t: AdeType, k: int = 0) -> str:
    return f"{t}(a{k})" if k else str(t)


def cycle_count(l: int) -> int:
    """Number of D_l(a_k) diagrams, ⌊(l - 2) / 2⌋."""
    return (l - 2) // 2


@lru_cache(maxsize=None)
def get_diagram(name: str) -> CarterDiagram:
    """Catalog lookup by name (case-insensitive)."""
    t, k = parse_name(name)
    if t.rank > MAX_RANK:
        raise UnknownDiagramError(f"{name}: rank above {MAX_RANK}")
    if k == 0:
        if t.family == FAMILY_A:
            return _dynkin_a(t.rank)
        if t.family == FAMILY_D:
            return _dynkin_d(t.rank)
        return _dynkin_e(t.rank)
    if t.family == FAMILY_D and 1 <= k <= cycle_count(t.rank):
        return _d_cycle(t.rank, k)
    if str(t) == "E6" and k == 1:
        return _e6_a1()
    if str(t) == "E6" and k == 2:
        return _e6_a2()
    raise UnknownDiagramError(f"{name} is not in the catalog")


def homogeneous_class(t: AdeType | str) -> HomogeneousClass:
    """Members of C(t) present in the catalog, Dynkin diagram first."""
    if isinstance(t, str):
        text = t.strip()
        if text.upper().startswith("C(") and text.endswith(")"):
            text = text[2:-1]
        t, k = parse_name(text)
        if k:
            raise UnknownDiagramError(f"{text} names a diagram, not a class")
    if t.rank > MAX_RANK:
        raise UnknownDiagramError(f"C({t}): rank above {MAX_RANK}")
    members = [str(t)]
    if t.family == FAMILY_D:
        members += [canonical_name(t, k) for k in range(1, cycle_count(t.rank) + 1)]
    elif str(t) == "E6":
        members += ["E6(a1)", "E6(a2)"]
    return HomogeneousClass(type=t, members=tuple(members))


def catalog(t: AdeType | str) -> list[CarterDiagram]:
    """The diagrams of a homogeneous class, e.g. ``catalog("D5")``."""
    return [get_diagram(name) for name in homogeneous_class(t).members]


def d_catalog(ranks: Iterable[int]) -> list[CarterDiagram]:
    """Every D-type catalog diagram of the given ranks."""
    return [d for l in ranks for d in catalog(AdeType(FAMILY_D, l))]


# ----------------------------------------------------------------------
# Operations
# ----------------------------------------------------------------------


def partial_cartan(d: CarterDiagram) -> PartialCartanMatrix:
    """B_Γ: diagonal 2, off-diagonal entries read from the edge signs."""
    return PartialCartanMatrix(RatMatrix.from_rows(d.gram_rows()), d)


def _cycles(d: CarterDiagram) -> list[list[int]]:
    return [list(c) for c in nx.simple_cycles(d.graph)]


def validate(d: CarterDiagram) -> ValidationReport:
    """Check every Carter-diagram rule and report the violated ones by name."""
    violations: list[str] = []
    g = d.graph
    if d.rank and not nx.is_connected(g):
        violations.append(RULE_CONNECTED)
    alpha = d.alpha
    if any((i in alpha) == (j in alpha) for i, j, _ in d.edges):
        violations.append(RULE_BICOLORED)
    cycles = _cycles(d)
    if any(len(c) % 2 for c in cycles):
        violations.append(RULE_EVEN_CYCLES)
    for cycle in cycles:
        signs = {d.sign(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])}
        if signs != {EDGE_SOLID, EDGE_DOTTED}:
            violations.append(RULE_MIXED_CYCLES)
            break
    b = partial_cartan(d)
    if not is_positive_definite(b.matrix):
        violations.append(RULE_POSITIVE_DEFINITE)
    determinant = b.determinant
    if d.class_type is not None and determinant != d.class_type.cartan_determinant:
        violations.append(RULE_DETERMINANT)
    if violations:
        _LOGGER.debug("Diagram %s violates %s", d.name, ", ".join(violations))
    return ValidationReport(d.name, tuple(violations), determinant)


def _switching(
    d1: CarterDiagram, d2: CarterDiagram, mapping: dict[int, int]
) -> frozenset[int] | None:
    """Solve ε on d1's vertices with s2(π u, π v) = ε_u ε_v s1(u, v)."""
    eps: dict[int, int] = {}
    for start in range(d1.rank):
        if start in eps:
            continue
        eps[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, s1 in d1.neighbors(u):
                want = eps[u] * s1 * d2.sign(mapping[u], mapping[v])
                if v not in eps:
                    eps[v] = want
                    queue.append(v)
                elif eps[v] != want:
                    return None
    return frozenset(v for v, e in eps.items() if e < 0)


def similar(d1: CarterDiagram, d2: CarterDiagram) -> SimilarityWitness | None:
    """Find a vertex bijection and sign flips carrying d1's signs onto d2's.

    Candidate bijections are the graph isomorphisms of the unsigned graphs;
    for each, the flip set is solved component by component.
    """
    if d1.rank != d2.rank or len(d1.edges) != len(d2.edges):
        return None
    if d1.edges == d2.edges:
        return SimilarityWitness.identity(d1.rank)
    for mapping in GraphMatcher(d1.graph, d2.graph).isomorphisms_iter():
        flips = _switching(d1, d2, mapping)
        if flips is not None:
            return SimilarityWitness(tuple(mapping[i] for i in range(d1.rank)), flips)
    return None


def to_dot(d: CarterDiagram) -> str:
    """Graphviz source: solid edges ``style=solid``, dotted ``style=dashed``."""
    lines = [f'graph "{d.name}" {{', "\tnode [shape=circle];"]
    for i, label in enumerate(d.vertices):
        colour = "white" if i in d.alpha else "black"
        font = "black" if i in d.alpha else "white"
        lines.append(
            f'\t"{i}" [label="{label}", style=filled, fillcolor={colour}, fontcolor={font}];'
        )
    for i, j, s in d.edges:
        style = "dashed" if s == EDGE_DOTTED else "solid"
        lines.append(f'\t"{i}" -- "{j}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
