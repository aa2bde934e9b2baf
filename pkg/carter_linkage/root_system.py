"""Simply-laced root systems A_l, D_l, E6, E7, E8 in simple-root coordinates.

Simple roots are numbered as follows (1-based):

- A_l: the chain 1 - 2 - ... - l.
- D_l: the chain 1 - 2 - ... - (l-1), with l attached to l-2.
- E_l: Bourbaki, the chain 1 - 3 - 4 - ... - l, with 2 attached to 4.

With roots stored over the simple-root basis the Cartan matrix is the Gram
matrix, so inner products are one integer matrix product.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .const import E_RANKS, FAMILIES, FAMILY_A, FAMILY_D, FAMILY_E, MAX_RANK, MIN_RANK
from .exceptions import AmbientMismatchError, InvalidTypeError, ParseError
from .linalg import RatMatrix, integer_nullspace, rank

_LOGGER = logging.getLogger(__name__)

_TYPE_PATTERN = re.compile(r"^\s*([ADEade])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class AdeType:
    """Type tag of a simply-laced Dynkin diagram."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidTypeError(f"unknown family {self.family!r}")
        if self.rank < MIN_RANK[self.family]:
            raise InvalidTypeError(f"{self.family}{self.rank}: rank below {MIN_RANK[self.family]}")
        if self.family == FAMILY_E and self.rank not in E_RANKS:
            raise InvalidTypeError(f"E{self.rank} is not a finite root system")
        if self.rank > MAX_RANK + 1:
            raise InvalidTypeError(f"{self.family}{self.rank}: rank above {MAX_RANK + 1} unsupported")

    @classmethod
    def parse(cls, text: str) -> AdeType:
        """Parse ``"E8"`` / ``"d5"``."""
        match = _TYPE_PATTERN.match(text)
        if match is None:
            raise ParseError(f"not an ADE type: {text!r}")
        return cls(match.group(1).upper(), int(match.group(2)))

    @classmethod
    def try_make(cls, family: str, rank: int) -> AdeType | None:
        """Return the type, or None when the combination does not exist."""
        try:
            return cls(family, rank)
        except InvalidTypeError:
            return None

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def root_count(self) -> int:
        l = self.rank
        if self.family == FAMILY_A:
            return l * (l + 1)
        if self.family == FAMILY_D:
            return 2 * l * (l - 1)
        return {6: 72, 7: 126, 8: 240}[l]

    @property
    def cartan_determinant(self) -> int:
        """Determinant of the Cartan matrix (order of the weight lattice quotient)."""
        if self.family == FAMILY_A:
            return self.rank + 1
        if self.family == FAMILY_D:
            return 4
        return 9 - self.rank

    def dynkin_edges(self) -> list[tuple[int, int]]:
        """Edges of the Dynkin diagram, 0-based, in the numbering of this module."""
        l = self.rank
        if self.family == FAMILY_A:
            return [(i, i + 1) for i in range(l - 1)]
        if self.family == FAMILY_D:
            return [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, l - 1)]


def cartan_matrix(t: AdeType) -> RatMatrix:
    """Cartan matrix of a simply-laced type."""
    rows = [[2 if i == j else 0 for j in range(t.rank)] for i in range(t.rank)]
    for i, j in t.dynkin_edges():
        rows[i][j] = rows[j][i] = -1
    return RatMatrix.from_rows(rows)


@dataclass(frozen=True, order=True)
class Root:
    """A root as an integer vector over the simple roots of its ambient system."""

    coords: tuple[int, ...]
    ambient: AdeType

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(self.coords)

    @property
    def is_negative(self) -> bool:
        return all(c <= 0 for c in self.coords) and any(self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords), self.ambient)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootSystem:
    """The complete root set of an ADE type, sorted lexicographically."""

    type: AdeType
    cartan: RatMatrix
    roots: tuple[Root, ...]
    maximal: Root

    @property
    def rank(self) -> int:
        return self.type.rank

    def __len__(self) -> int:
        return len(self.roots)

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan.to_int_rows(), dtype=np.int64)

    @cached_property
    def coord_array(self) -> np.ndarray:
        """Roots as rows of an integer array, in the order of ``roots``."""
        return np.array([r.coords for r in self.roots], dtype=np.int64)

    @cached_property
    def gram_array(self) -> np.ndarray:
        """All pairwise inner products of roots."""
        return self.coord_array @ self.cartan_array @ self.coord_array.T

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {r.coords: i for i, r in enumerate(self.roots)}

    @property
    def simple_roots(self) -> list[Root]:
        return [
            self.root(tuple(int(i == j) for j in range(self.rank)))
            for i in range(self.rank)
        ]

    @property
    def positive_roots(self) -> list[Root]:
        return [r for r in self.roots if r.is_positive]

    def contains(self, coords: Sequence[int]) -> bool:
        return tuple(int(c) for c in coords) in self._index

    def index(self, root: Root | Sequence[int]) -> int:
        """Position of a root in ``roots``."""
        coords = root.coords if isinstance(root, Root) else tuple(int(c) for c in root)
        try:
            return self._index[coords]
        except KeyError as err:
            raise KeyError(f"{coords} is not a root of {self.type}") from err

    def root(self, coords: Sequence[int]) -> Root:
        """Look up the root with the given coordinates."""
        return self.roots[self.index(coords)]

    def reflect(self, vector: Root, mirror: Root) -> Root:
        """s_mirror(vector) = vector - (vector, mirror) mirror."""
        k = inner(vector, mirror)
        return self.root(tuple(v - k * m for v, m in zip(vector.coords, mirror.coords)))

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "count": len(self.roots),
            "cartan": self.cartan.to_int_rows(),
            "roots": [list(r.coords) for r in self.roots],
        }


def _simple_reflection(cartan: np.ndarray, vector: tuple[int, ...], i: int) -> tuple[int, ...]:
    k = int(cartan[i] @ np.array(vector, dtype=np.int64))
    out = list(vector)
    out[i] -= k
    return tuple(out)


@lru_cache(maxsize=None)
def generate(t: AdeType) -> RootSystem:
    """Close the simple roots under the simple reflections.

    Args:
        t: The ADE type to generate

    Returns:
        The root system with roots sorted lexicographically by coordinates
    """
    cartan = cartan_matrix(t)
    c = np.array(cartan.to_int_rows(), dtype=np.int64)
    simple = [tuple(int(i == j) for j in range(t.rank)) for i in range(t.rank)]
    seen: set[tuple[int, ...]] = set(simple)
    queue = deque(simple)
    while queue:
        vector = queue.popleft()
        for i in range(t.rank):
            image = _simple_reflection(c, vector, i)
            if image not in seen:
                seen.add(image)
                queue.append(image)

    roots = tuple(Root(coords, t) for coords in sorted(seen))
    positives = [r for r in roots if r.is_positive]
    maximal = next(
        r for r in positives
        if all(all(a >= b for a, b in zip(r.coords, other.coords)) for other in positives)
    )
    _LOGGER.debug("Generated %s: %d roots, maximal root %s", t, len(roots), maximal)
    return RootSystem(type=t, cartan=cartan, roots=roots, maximal=maximal)


def inner(u: Root, v: Root) -> int:
    """Inner product ᵗu·C·v under the ambient Cartan form."""
    if u.ambient != v.ambient:
        raise AmbientMismatchError(f"roots of {u.ambient} and {v.ambient} cannot be paired")
    c = generate(u.ambient).cartan_array
    return int(np.array(u.coords) @ c @ np.array(v.coords))


def maximal_root(rs: RootSystem) -> Root:
    """The highest root: the positive root dominating all others coordinatewise."""
    return rs.maximal


def _coords(v: Root | Sequence[int]) -> tuple[int, ...]:
    return v.coords if isinstance(v, Root) else tuple(int(c) for c in v)


def in_span(v: Root | Sequence[int], basis: Sequence[Root]) -> bool:
    """True iff v is a rational linear combination of ``basis`` (exact rank test)."""
    if isinstance(v, Root) and any(b.ambient != v.ambient for b in basis):
        raise AmbientMismatchError("vector and basis live in different root systems")
    if not basis:
        return not any(_coords(v))
    base = RatMatrix.from_rows([b.coords for b in basis])
    extended = RatMatrix.from_rows([b.coords for b in basis] + [_coords(v)])
    return rank(extended) == rank(base)


def span_mask(rs: RootSystem, basis: Sequence[Root]) -> np.ndarray:
    """Boolean mask over ``rs.roots`` selecting the roots lying in span(basis).

    A vector lies in the row space of the basis exactly when it is orthogonal
    (coordinate dot product) to every kernel vector of the basis matrix.
    """
    if any(b.ambient != rs.type for b in basis):
        raise AmbientMismatchError(f"basis does not live in {rs.type}")
    if not basis:
        return np.zeros(len(rs.roots), dtype=bool)
    kernel = integer_nullspace(RatMatrix.from_rows([b.coords for b in basis]))
    if not kernel:
        return np.ones(len(rs.roots), dtype=bool)
    k = np.array(kernel, dtype=np.int64)
    return np.all(rs.coord_array @ k.T == 0, axis=1)
