"""Simplicial posets: ranked posets whose lower intervals are Boolean algebras.

Elements carry opaque string ids (distinct cells may share vertex sets, as in
the complex of injective words).  Internally elements are numbered ``0..N``
in ``(rank, id)`` order, so index ``0`` is always the bottom ``∅``; every
downstream module works with these indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .complex import Coloring, SimplicialComplex

BOTTOM = "∅"


class InvalidPosetError(ValueError):
    """Raised when an operation needs a valid simplicial poset and gets something else."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid simplicial poset: " + "; ".join(self.violations))


class NoCommonUpperBound:
    """Sentinel returned by :func:`meet` when two elements have no common upper bound."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NO_UPPER_BOUND"

    def __bool__(self):
        return False


NO_UPPER_BOUND = NoCommonUpperBound()


@dataclass(frozen=True, eq=False)
class SimplicialPoset:
    """A finite ranked poset given by element ranks and Hasse-diagram covers.

    ``ranks`` maps element id to rank; ``covers`` is a collection of
    ``(lower_id, upper_id)`` pairs.  Construction only checks that the ids are
    known; :func:`validate` checks the simplicial-poset axioms.
    """

    ranks: dict
    covers: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ranks", dict(self.ranks))
        object.__setattr__(self, "covers", frozenset((str(a), str(b)) for a, b in self.covers))
        for a, b in self.covers:
            for x in (a, b):
                if x not in self.ranks:
                    raise ValueError(f"cover ({a}, {b}) mentions unknown element {x!r}")

    @classmethod
    def from_ranks_and_covers(cls, ranks, covers, bottom: str | None = None) -> "SimplicialPoset":
        """Build a poset, synthesising the bottom element when it is missing."""
        ranks = {str(k): int(v) for k, v in dict(ranks).items()}
        covers = {(str(a), str(b)) for a, b in covers}
        if not any(r == 0 for r in ranks.values()):
            bottom = bottom or BOTTOM
            ranks[bottom] = 0
            covers |= {(bottom, x) for x, r in ranks.items() if r == 1}
        return cls(ranks, frozenset(covers))

    def __eq__(self, other):
        return isinstance(other, SimplicialPoset) and self.ranks == other.ranks and self.covers == other.covers

    def __hash__(self):
        return hash((frozenset(self.ranks.items()), self.covers))

    # -- indexing -----------------------------------------------------------

    @cached_property
    def ids(self) -> tuple:
        return tuple(sorted(self.ranks, key=lambda x: (self.ranks[x], x)))

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.ids)}

    @cached_property
    def rank_of(self) -> tuple:
        return tuple(self.ranks[x] for x in self.ids)

    def __len__(self) -> int:
        return len(self.ranks)

    @property
    def bottom(self) -> str:
        return self.ids[0]

    @property
    def d(self) -> int:
        """Maximum rank, i.e. one more than the dimension of the cell complex."""
        return max(self.ranks.values(), default=0)

    @property
    def dim(self) -> int:
        return self.d - 1

    def elements_of_rank(self, r: int) -> list:
        return [i for i, rr in enumerate(self.rank_of) if rr == r]

    @cached_property
    def _lower_covers(self) -> tuple:
        low = [[] for _ in self.ids]
        for a, b in self.covers:
            low[self.index[b]].append(self.index[a])
        return tuple(tuple(sorted(x)) for x in low)

    @cached_property
    def _upper_covers(self) -> tuple:
        up = [[] for _ in self.ids]
        for a, b in self.covers:
            up[self.index[a]].append(self.index[b])
        return tuple(tuple(sorted(x)) for x in up)

    def lower_covers(self, i: int) -> tuple:
        return self._lower_covers[i]

    def upper_covers(self, i: int) -> tuple:
        return self._upper_covers[i]

    @cached_property
    def down(self) -> tuple:
        """``down[i]``: frozenset of indices ``j <= i``."""
        order = sorted(range(len(self.ids)), key=lambda i: self.rank_of[i])
        down: list = [None] * len(self.ids)
        for i in order:
            acc = {i}
            for j in self._lower_covers[i]:
                if down[j] is None:
                    # a cover that does not raise rank; validate() reports it
                    continue
                acc |= down[j]
            down[i] = frozenset(acc)
        return tuple(down)

    @cached_property
    def up(self) -> tuple:
        up = [set() for _ in self.ids]
        for i, dn in enumerate(self.down):
            for j in dn:
                up[j].add(i)
        return tuple(frozenset(u) for u in up)

    def leq(self, i: int, j: int) -> bool:
        return i in self.down[j]

    def comparable(self, i: int, j: int) -> bool:
        return i in self.down[j] or j in self.down[i]

    def atoms(self, i: int) -> frozenset:
        return frozenset(j for j in self.down[i] if self.rank_of[j] == 1)

    def _idx(self, x) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if not 0 <= x < len(self.ids):
                raise KeyError(f"unknown element index {x}")
            return x
        try:
            return self.index[str(x)]
        except KeyError:
            raise KeyError(f"unknown element id {x!r}") from None

    # -- pair queries -------------------------------------------------------

    @cached_property
    def _pair_cache(self) -> dict:
        return {}

    def pair(self, i: int, j: int):
        """``(meet_index, minimal_upper_bounds)`` for indices ``i, j``.

        ``meet_index`` is :data:`NO_UPPER_BOUND` when the pair has no common
        upper bound (the upper-bound tuple is then empty).
        """
        key = (i, j) if i <= j else (j, i)
        hit = self._pair_cache.get(key)
        if hit is not None:
            return hit
        common_up = self.up[i] & self.up[j]
        if not common_up:
            res = (NO_UPPER_BOUND, ())
        else:
            mubs = tuple(sorted(g for g in common_up if not any(h != g and h in self.down[g] for h in common_up)))
            lower = self.down[i] & self.down[j]
            meet = max(lower, key=lambda x: (self.rank_of[x], x))
            if any(x not in self.down[meet] for x in lower):
                raise InvalidPosetError([f"elements {self.ids[i]!r}, {self.ids[j]!r} have no meet"])
            res = (meet, mubs)
        self._pair_cache[key] = res
        return res


def validate(P: SimplicialPoset) -> list:
    """List of violated simplicial-poset axioms; empty when ``P`` is valid."""
    out = []
    bottoms = [x for x, r in P.ranks.items() if r == 0]
    if len(bottoms) != 1:
        out.append(f"expected exactly one rank-0 element, found {sorted(bottoms)}")
    if any(r < 0 for r in P.ranks.values()):
        out.append("negative rank")
    for a, b in sorted(P.covers):
        if P.ranks[b] != P.ranks[a] + 1:
            out.append(f"cover {a!r} < {b!r} changes rank by {P.ranks[b] - P.ranks[a]}, not 1")
    if out:
        return out
    bot = P.index[bottoms[0]]
    for i, x in enumerate(P.ids):
        if bot not in P.down[i]:
            out.append(f"element {x!r} is not above the bottom")
            continue
        if i != bot and not P.lower_covers(i):
            out.append(f"element {x!r} of positive rank covers nothing")
        interval = P.down[i]
        r = P.rank_of[i]
        if len(interval) != 2**r:
            out.append(f"interval [∅, {x!r}] has {len(interval)} elements, expected 2^{r} = {2**r}")
            continue
        atoms = {y: P.atoms(y) for y in interval}
        if len(set(atoms.values())) != len(interval):
            out.append(f"interval [∅, {x!r}] has two elements with the same atoms")
            continue
        for y in interval:
            for z in interval:
                if (y in P.down[z]) != (atoms[y] <= atoms[z]):
                    out.append(f"interval [∅, {x!r}] is not Boolean at {P.ids[y]!r}, {P.ids[z]!r}")
                    break
            else:
                continue
            break
    return out


def require_valid(P: SimplicialPoset) -> None:
    problems = validate(P)
    if problems:
        raise InvalidPosetError(problems)


def face_id(face) -> str:
    if not face:
        return BOTTOM
    sep = "" if max(face) < 10 else ","
    return sep.join(str(v) for v in face)


def from_facets(complex: SimplicialComplex) -> SimplicialPoset:
    """The face poset of a (non-void) simplicial complex."""
    if complex.is_void:
        raise ValueError("the void complex has no face poset")
    ranks = {face_id(f): len(f) for f in complex.faces}
    covers = set()
    for f in complex.faces:
        for k in range(len(f)):
            covers.add((face_id(f[:k] + f[k + 1 :]), face_id(f)))
    return SimplicialPoset(ranks, frozenset(covers))


def meet(P: SimplicialPoset, F, G):
    """Id of ``F ∧ G``, or :data:`NO_UPPER_BOUND` when no common upper bound exists."""
    m, _ = P.pair(P._idx(F), P._idx(G))
    return m if m is NO_UPPER_BOUND else P.ids[m]


def minimal_upper_bounds(P: SimplicialPoset, F, G) -> frozenset:
    _, mubs = P.pair(P._idx(F), P._idx(G))
    return frozenset(P.ids[g] for g in mubs)


def poset_skeleton(P: SimplicialPoset, i: int) -> SimplicialPoset:
    """Restriction to the elements of rank ``<= i + 1``."""
    if i < -1:
        raise ValueError("skeleton dimension must be >= -1")
    keep = {x: r for x, r in P.ranks.items() if r <= i + 1}
    return SimplicialPoset(keep, frozenset((a, b) for a, b in P.covers if b in keep))


def maximal_chains(P: SimplicialPoset) -> list:
    """Maximal chains of ``P ∖ ∅`` as tuples of indices, each increasing."""
    chains = []

    def walk(chain):
        nxt = P.upper_covers(chain[-1])
        if not nxt:
            chains.append(tuple(chain))
            return
        for b in nxt:
            walk(chain + [b])

    for a in P.upper_covers(0):
        walk([a])
    return chains


def barycentric_subdivision(P: SimplicialPoset) -> tuple:
    """Order complex of ``P ∖ ∅`` with its rank coloring.

    Vertex ``v`` of the result is the element with index ``v`` (the bottom
    has index 0), so vertices follow ``(rank, id)`` order.
    """
    require_valid(P)
    n = len(P) - 1
    chains = maximal_chains(P)
    sd = SimplicialComplex.from_faces(n, chains if chains else [()])
    coloring = Coloring(P.d, tuple(P.rank_of[1:]))
    return sd, coloring


def sd_vertex_labels(P: SimplicialPoset) -> dict:
    """Map Sd-vertex number to poset element id."""
    return {i: P.ids[i] for i in range(1, len(P))}
