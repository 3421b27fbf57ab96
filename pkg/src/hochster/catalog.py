"""Built-in example objects.

Every entry carries a simplicial poset.  Entries built from a simplicial
complex also carry the complex and a natural proper coloring; for
``running_example`` the poset is the cell poset subdivided by the complex
rather than its face poset.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .complex import Coloring, SimplicialComplex
from .poset import BOTTOM, SimplicialPoset, from_facets

# Vertices 1,2,3 get color 1; 4,5,6,7 color 2; 8 color 3.
RUNNING_EXAMPLE_FACETS = (
    (1, 5, 8), (1, 6, 8), (2, 4, 8), (2, 6, 8), (3, 4, 8), (3, 5, 8), (2, 7), (3, 7),
)
RUNNING_EXAMPLE_COLORS = (1, 1, 1, 2, 2, 2, 2, 3)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    poset: SimplicialPoset
    complex: SimplicialComplex | None = None
    coloring: Coloring | None = None

    @property
    def is_complex(self) -> bool:
        return self.complex is not None


def simplex(n: int) -> CatalogEntry:
    if n < 1:
        raise ValueError("simplex needs n >= 1")
    K = SimplicialComplex.simplex(n)
    return CatalogEntry(f"simplex:{n}", from_facets(K), K, Coloring.trivial(n))


def cross_polytope_boundary(n: int) -> CatalogEntry:
    """Boundary of the n-dimensional cross-polytope.

    Vertex ``2i-1`` is ``+e_i`` and vertex ``2i`` is ``-e_i``; both get color ``i``.
    """
    if n < 1:
        raise ValueError("cross_polytope_boundary needs n >= 1")
    facets = []
    for signs in range(2**n):
        facets.append(tuple(2 * i + 1 + ((signs >> i) & 1) for i in range(n)))
    K = SimplicialComplex.from_faces(2 * n, facets)
    return CatalogEntry(
        f"cross_polytope_boundary:{n}", from_facets(K), K, Coloring(n, tuple(i // 2 + 1 for i in range(2 * n)))
    )


def injective_words(n: int) -> CatalogEntry:
    """Injective words on ``[n]`` ordered by the subword relation."""
    if not 1 <= n <= 9:
        raise ValueError("injective_words needs 1 <= n <= 9")
    letters = "".join(str(i) for i in range(1, n + 1))
    ranks = {BOTTOM: 0}
    covers = set()
    for k in range(1, n + 1):
        for w in permutations(letters, k):
            word = "".join(w)
            ranks[word] = k
            for pos in range(k):
                sub = word[:pos] + word[pos + 1 :]
                covers.add((sub or BOTTOM, word))
    return CatalogEntry(f"injective_words:{n}", SimplicialPoset(ranks, frozenset(covers)))


def delta_family(d: int, delta: int) -> CatalogEntry:
    """Two facets ``{x_1..x_d}`` and ``{x_0..x_{delta-1}}``; vertex ``x_i`` is numbered ``i + 1``.

    The coloring gives ``x_i`` color ``i`` for ``i >= 1`` and ``x_0`` color ``d``.
    """
    if not 1 <= delta <= d:
        raise ValueError("delta_family needs 1 <= delta <= d")
    big = tuple(range(2, d + 2))
    small = tuple(range(1, delta + 1))
    K = SimplicialComplex.from_faces(d + 1, [big, small])
    colors = (d,) + tuple(range(1, d + 1))
    return CatalogEntry(f"delta_family:{d},{delta}", from_facets(K), K, Coloring(d, colors))


def _running_example_cells() -> SimplicialPoset:
    # A triangle with vertices 1,2,3 and edges 4={2,3}, 5={1,3}, 6={1,2}, a
    # second edge 7 parallel to 4, and the 2-cell 8 bounded by 4, 5, 6.
    ranks = {BOTTOM: 0, "1": 1, "2": 1, "3": 1, "4": 2, "5": 2, "6": 2, "7": 2, "8": 3}
    covers = {(BOTTOM, v) for v in "123"}
    for e, ends in {"4": "23", "5": "13", "6": "12", "7": "23"}.items():
        covers |= {(v, e) for v in ends}
    covers |= {(e, "8") for e in "456"}
    return SimplicialPoset(ranks, frozenset(covers))


def running_example() -> CatalogEntry:
    """The 8-vertex colored complex together with the 8-cell poset it subdivides.

    The complex is the barycentric subdivision of the poset: complex vertex
    ``i`` is poset element ``"i"`` and its color is that element's rank.
    """
    K = SimplicialComplex.from_faces(8, RUNNING_EXAMPLE_FACETS)
    return CatalogEntry("running_example", _running_example_cells(), K, Coloring(3, RUNNING_EXAMPLE_COLORS))


def running_example_faces() -> CatalogEntry:
    """The same colored complex with its own face poset (29 elements)."""
    K = SimplicialComplex.from_faces(8, RUNNING_EXAMPLE_FACETS)
    return CatalogEntry("running_example_faces", from_facets(K), K, Coloring(3, RUNNING_EXAMPLE_COLORS))


NAMES = (
    "simplex",
    "cross_polytope_boundary",
    "injective_words",
    "delta_family",
    "running_example",
    "running_example_faces",
)


def catalog(name: str, *params) -> CatalogEntry:
    """Look up a catalog object by name, e.g. ``catalog("delta_family", 4, 2)``."""
    builders = {
        "simplex": (simplex, 1),
        "cross_polytope_boundary": (cross_polytope_boundary, 1),
        "injective_words": (injective_words, 1),
        "delta_family": (delta_family, 2),
        "running_example": (running_example, 0),
        "running_example_faces": (running_example_faces, 0),
    }
    if name not in builders:
        raise ValueError(f"unknown catalog name {name!r}; choose from {', '.join(NAMES)}")
    fn, arity = builders[name]
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))


def parse_spec(spec: str) -> CatalogEntry:
    """Parse ``name`` or ``name:p1,p2`` (e.g. ``delta_family:4,2``)."""
    name, _, rest = spec.partition(":")
    params = [p for p in rest.split(",") if p.strip()] if rest else []
    return catalog(name.strip(), *params)


def full_catalog() -> list:
    """The instance set used for whole-catalog runs."""
    out = [running_example(), running_example_faces()]
    out += [simplex(n) for n in range(1, 5)]
    out += [cross_polytope_boundary(n) for n in range(1, 4)]
    out += [injective_words(n) for n in range(1, 4)]
    out += [delta_family(d, k) for d in range(1, 5) for k in range(1, d + 1)]
    return out
