"""Abstract simplicial complexes on ``[n]`` and their proper colorings."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


class ColoringError(ValueError):
    """Raised when a coloring is not a proper coloring of the complex it is paired with."""


def _maximal(faces) -> tuple:
    """Sorted antichain of the inclusion-maximal members of ``faces``."""
    faces = sorted({tuple(sorted(set(f))) for f in faces}, key=lambda f: (-len(f), f))
    kept: list = []
    for f in faces:
        sf = set(f)
        if not any(sf <= set(g) for g in kept):
            kept.append(f)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the vertex set ``1..n`` given by its facets.

    ``facets == ()`` is the void complex (no faces at all) and
    ``facets == ((),)`` is the empty complex ``{∅}``.  Use :meth:`from_faces`
    to build one from an arbitrary generating family.
    """

    n: int
    facets: tuple

    def __post_init__(self):
        for f in self.facets:
            if list(f) != sorted(set(f)):
                raise ValueError(f"facet {f} must be a strictly increasing tuple")
            if any(not 1 <= v <= self.n for v in f):
                raise ValueError(f"facet {f} is not a subset of [1..{self.n}]")
        if _maximal(self.facets) != tuple(self.facets):
            raise ValueError("facets must be a sorted antichain; use SimplicialComplex.from_faces")

    @classmethod
    def from_faces(cls, n: int, faces) -> "SimplicialComplex":
        return cls(n, _maximal(faces))

    @classmethod
    def void(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def empty(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, ((),))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (tuple(range(1, n + 1)),))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; ``-1`` for ``{∅}`` and (by convention) ``-2`` for the void complex."""
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def faces(self) -> frozenset:
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return frozenset(out)

    @cached_property
    def _by_dim(self) -> dict:
        by: dict = {}
        for f in self.faces:
            by.setdefault(len(f) - 1, []).append(f)
        return {i: sorted(fs) for i, fs in by.items()}

    def faces_of_dim(self, i: int) -> list:
        if i < -1:
            raise ValueError("dimension must be >= -1")
        return list(self._by_dim.get(i, []))

    def f_vector(self) -> list:
        """``[f_{-1}, f_0, ..., f_dim]``."""
        return [len(self._by_dim.get(i, [])) for i in range(-1, self.dim + 1)]

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.faces

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self.facets for v in f}))

    def edges(self) -> list:
        return self.faces_of_dim(1)

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class Coloring:
    """A map from vertices ``1..n`` to colors ``1..d``; ``colors[i-1]`` colors vertex ``i``."""

    d: int
    colors: tuple

    def __post_init__(self):
        if any(not 1 <= c <= self.d for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.d}")

    @classmethod
    def trivial(cls, n: int) -> "Coloring":
        return cls(n, tuple(range(1, n + 1)))

    def __call__(self, vertex: int) -> int:
        return self.colors[vertex - 1]

    def of_face(self, face) -> frozenset:
        return frozenset(self.colors[v - 1] for v in face)

    def vertices_of_color(self, j: int) -> list:
        return [i + 1 for i, c in enumerate(self.colors) if c == j]


def check_coloring(complex: SimplicialComplex, coloring: Coloring) -> None:
    """Raise :class:`ColoringError` unless ``coloring`` is proper for ``complex``."""
    if len(coloring.colors) != complex.n:
        raise ColoringError(f"coloring has {len(coloring.colors)} entries but the complex has {complex.n} vertices")
    for f in complex.facets:
        cs = [coloring(v) for v in f]
        if len(set(cs)) != len(cs):
            raise ColoringError(f"facet {list(f)} has repeated colors {cs}")


def is_proper(complex: SimplicialComplex, coloring: Coloring) -> bool:
    try:
        check_coloring(complex, coloring)
    except ColoringError:
        return False
    return True


def is_balanced(complex: SimplicialComplex, coloring: Coloring) -> bool:
    return is_proper(complex, coloring) and coloring.d == complex.dim + 1


def faces_of_dim(complex: SimplicialComplex, i: int) -> list:
    return complex.faces_of_dim(i)


def restrict_colors(complex: SimplicialComplex, coloring: Coloring, S) -> SimplicialComplex:
    """The color-selected subcomplex: faces all of whose colors lie in ``S``."""
    check_coloring(complex, coloring)
    S = frozenset(S)
    if complex.is_void:
        return complex
    return SimplicialComplex.from_faces(
        complex.n, [tuple(v for v in f if coloring(v) in S) for f in complex.facets]
    )


def induced(complex: SimplicialComplex, vertices) -> SimplicialComplex:
    """Induced subcomplex on a vertex subset."""
    W = set(vertices)
    if complex.is_void:
        return complex
    return SimplicialComplex.from_faces(complex.n, [tuple(v for v in f if v in W) for f in complex.facets])


def link(complex: SimplicialComplex, F) -> SimplicialComplex:
    F = tuple(sorted(F))
    if F not in complex.faces:
        raise ValueError(f"{list(F)} is not a face")
    sF = set(F)
    return SimplicialComplex.from_faces(
        complex.n, [tuple(v for v in f if v not in sF) for f in complex.facets if sF <= set(f)]
    )


def skeleton(complex: SimplicialComplex, i: int) -> SimplicialComplex:
    if i < -1:
        raise ValueError("skeleton dimension must be >= -1")
    if complex.is_void:
        return complex
    return SimplicialComplex.from_faces(complex.n, [f for f in complex.faces if len(f) <= i + 1])


def reduced_euler_characteristic(complex: SimplicialComplex) -> int:
    return sum((-1 if i % 2 else 1) * len(complex.faces_of_dim(i)) for i in range(-1, complex.dim + 1))

