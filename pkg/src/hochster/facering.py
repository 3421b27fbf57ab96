"""Arithmetic in the face ring of a simplicial poset via straightening.

A monomial in the variables ``y_F`` is stored as a sorted tuple of element
indices with repetition (``y_1^2 y_12`` is ``(i1, i1, i12)``).  Because
indices follow ``(rank, id)`` order, a monomial is *standard* exactly when
consecutive entries are comparable, i.e. its support is a chain of
``P ∖ ∅``.  Straightening coefficients are nonnegative integers; they are
reduced into the field only when a :class:`FacePolynomial` is formed.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field

from .linalg import QQ, ExactField
from .poset import NO_UPPER_BOUND, SimplicialPoset, require_valid

STRATEGIES = ("lex", "high")


class StraighteningError(RuntimeError):
    pass


@dataclass(frozen=True)
class FacePolynomial:
    """A field-linear combination of standard monomials (``{monomial_key: coefficient}``)."""

    terms: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FacePolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)


def chain_exponents(m: tuple) -> list:
    """``[(index, exponent), ...]`` for a monomial key."""
    out: list = []
    for x in m:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


class FaceRing:
    """The face ring ``k[Δ]`` of a simplicial poset over an exact field."""

    def __init__(self, P: SimplicialPoset, field: ExactField = QQ, strategy: str = "lex"):
        require_valid(P)
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        self.P = P
        self.field = ExactField.parse(field)
        self.strategy = strategy
        self._rank = P.rank_of
        self._down = P.down
        self._memo: dict = {}
        self._theta_memo: dict = {}
        self._std: dict = {}
        self._lock = threading.RLock()
        self.rewrites = 0

    # -- monomials ----------------------------------------------------------

    def key(self, faces) -> tuple:
        """Monomial key for a multiset of element ids or indices (``∅`` is dropped)."""
        out = []
        for F in faces:
            i = self.P._idx(F)
            if i != 0:
                out.append(i)
        return tuple(sorted(out))

    def degree(self, m: tuple) -> int:
        return sum(self._rank[x] for x in m)

    def multidegree(self, m: tuple) -> tuple:
        b = [0] * self.P.d
        for x in m:
            b[self._rank[x] - 1] += 1
        return tuple(b)

    def is_standard(self, m: tuple) -> bool:
        down = self._down
        return all(a == b or a in down[b] for a, b in zip(m, m[1:]))

    def format(self, m: tuple) -> str:
        if not m:
            return "1"
        ids = self.P.ids
        return "*".join(f"y{ids[x]}" + (f"^{e}" if e > 1 else "") for x, e in chain_exponents(m))

    def format_poly(self, p: FacePolynomial) -> str:
        if not p.terms:
            return "0"
        parts = []
        for m in sorted(p.terms, key=lambda m: (self.degree(m), m)):
            c = p.terms[m]
            mono = self.format(m)
            if c == 1:
                parts.append(mono)
            elif mono == "1":
                parts.append(str(c))
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    # -- straightening ------------------------------------------------------

    def _find_pair(self, m: tuple, strategy: str):
        down = self._down
        n = len(m)
        if strategy == "lex":
            for i in range(n):
                a = m[i]
                for j in range(i + 1, n):
                    b = m[j]
                    if a != b and a not in down[b]:
                        return i, j
        else:
            for i in range(n - 1, -1, -1):
                a = m[i]
                for j in range(i - 1, -1, -1):
                    b = m[j]
                    if a != b and b not in down[a]:
                        return j, i
        return None

    def _straighten_key(self, m: tuple, strategy: str) -> dict:
        """``{standard_key: positive integer}`` with ``y^m = Σ c·y^key``."""
        memo = self._memo.setdefault(strategy, {})
        hit = memo.get(m)
        if hit is not None:
            return hit
        fuel = [self._fuel(m)]
        res = self._straighten_rec(m, strategy, memo, fuel)
        return res

    def _fuel(self, m: tuple) -> int:
        return max(1000, (self.degree(m) * len(self.P)) ** 3)

    def _straighten_rec(self, m, strategy, memo, fuel) -> dict:
        hit = memo.get(m)
        if hit is not None:
            return hit
        pair = self._find_pair(m, strategy)
        if pair is None:
            res = {m: 1}
        else:
            fuel[0] -= 1
            if fuel[0] < 0:
                raise StraighteningError(f"straightening did not terminate on {self.format(m)}")
            self.rewrites += 1
            i, j = pair
            a, b = m[i], m[j]
            meet, mubs = self.P.pair(a, b)
            res = {}
            if meet is not NO_UPPER_BOUND:
                rank = self._rank
                rest = list(m[:i] + m[i + 1 : j] + m[j + 1 :])
                if meet != 0:
                    rest.append(meet)
                for g in mubs:
                    if rank[a] + rank[b] != rank[meet] + rank[g]:
                        raise StraighteningError("rank additivity fails; poset is not simplicial")
                    sub = self._straighten_rec(tuple(sorted(rest + [g])), strategy, memo, fuel)
                    for k, c in sub.items():
                        res[k] = res.get(k, 0) + c
        memo[m] = res
        return res

    def _to_poly(self, raw: dict, scale=1) -> FacePolynomial:
        red = self.field.reduce
        terms = {}
        for k, c in raw.items():
            v = red(c * scale)
            if v:
                terms[k] = v
        return FacePolynomial(terms)

    def straighten(self, faces, strategy: str | None = None) -> FacePolynomial:
        """Standard-monomial expansion of ``∏ y_F`` over the multiset ``faces``."""
        m = []
        for F in faces:
            i = self.P._idx(F)
            if i == 0:
                raise ValueError("y_∅ is the constant 1 and cannot be a factor")
            m.append(i)
        with self._lock:
            raw = self._straighten_key(tuple(sorted(m)), strategy or self.strategy)
        return self._to_poly(raw)

    def multiply(self, p: FacePolynomial, q: FacePolynomial) -> FacePolynomial:
        acc: dict = {}
        with self._lock:
            for m1, c1 in p.terms.items():
                for m2, c2 in q.terms.items():
                    for k, c in self._straighten_key(tuple(sorted(m1 + m2)), self.strategy).items():
                        acc[k] = acc.get(k, 0) + c1 * c2 * c
        return self._to_poly(acc)

    def monomial(self, faces) -> FacePolynomial:
        return self.straighten(faces) if faces else self.one()

    def one(self) -> FacePolynomial:
        return FacePolynomial({(): 1})

    def add(self, p: FacePolynomial, q: FacePolynomial) -> FacePolynomial:
        acc = dict(p.terms)
        for k, c in q.terms.items():
            acc[k] = acc.get(k, 0) + c
        return self._to_poly(acc)

    # -- universal parameters ------------------------------------------------

    def theta(self, j: int) -> FacePolynomial:
        if not 1 <= j <= self.P.d:
            raise ValueError(f"theta index {j} out of range 1..{self.P.d}")
        return FacePolynomial({(x,): 1 for x in self.P.elements_of_rank(j)})

    def theta_times(self, j: int, m: tuple) -> dict:
        """``θ_j · y^m`` as ``{standard_key: integer}`` (unreduced)."""
        key = (j, m)
        hit = self._theta_memo.get(key)
        if hit is not None:
            return hit
        if not 1 <= j <= self.P.d:
            raise ValueError(f"theta index {j} out of range 1..{self.P.d}")
        acc: dict = {}
        with self._lock:
            for x in self.P.elements_of_rank(j):
                for k, c in self._straighten_key(tuple(sorted(m + (x,))), self.strategy).items():
                    acc[k] = acc.get(k, 0) + c
        acc = {k: c for k, c in acc.items() if c}
        self._theta_memo[key] = acc
        return acc

    def theta_action(self, j: int, m: tuple) -> FacePolynomial:
        return self._to_poly(self.theta_times(j, m))

    # -- graded pieces --------------------------------------------------------

    def standard_monomials_of_degree(self, D: int) -> list:
        """All standard monomials of degree ``D`` ordered lexicographically by key."""
        if D < 0:
            raise ValueError("degree must be >= 0")
        hit = self._std.get(D)
        if hit is not None:
            return hit
        rank = self._rank
        up = self.P.up
        out: list = []

        def grow(prefix, last, remaining):
            if remaining == 0:
                out.append(tuple(prefix))
                return
            cands = range(1, len(rank)) if last is None else sorted(up[last])
            for x in cands:
                if rank[x] <= remaining and (last is None or x >= last):
                    prefix.append(x)
                    grow(prefix, x, remaining - rank[x])
                    prefix.pop()

        grow([], None, D)
        out.sort()
        self._std[D] = out
        return out

    def hilbert_function(self, upto: int) -> list:
        return [len(self.standard_monomials_of_degree(D)) for D in range(upto + 1)]


def _ring(P: SimplicialPoset, field=QQ) -> FaceRing:
    field = ExactField.parse(field)
    cache = P.__dict__.setdefault("_face_rings", {})
    ring = cache.get(field.characteristic)
    if ring is None:
        ring = cache[field.characteristic] = FaceRing(P, field)
    return ring


def face_ring(P: SimplicialPoset, field=QQ) -> FaceRing:
    """Shared :class:`FaceRing` for ``P`` over ``field`` (memo tables are reused)."""
    return _ring(P, field)


def straighten(P: SimplicialPoset, faces, field=QQ) -> FacePolynomial:
    return _ring(P, field).straighten(faces)


def multiply(P: SimplicialPoset, p: FacePolynomial, q: FacePolynomial, field=QQ) -> FacePolynomial:
    return _ring(P, field).multiply(p, q)


def standard_monomials_of_degree(P: SimplicialPoset, D: int) -> list:
    return _ring(P).standard_monomials_of_degree(D)


def theta_action(P: SimplicialPoset, j: int, m: tuple, field=QQ) -> FacePolynomial:
    return _ring(P, field).theta_action(j, m)


def universal_parameters(P: SimplicialPoset, field=QQ) -> list:
    R = _ring(P, field)
    return [R.theta(j) for j in range(1, P.d + 1)]
