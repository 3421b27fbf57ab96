"""Flag f- and h-vectors of colored complexes and Hilbert-series numerators."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complex import Coloring, SimplicialComplex, check_coloring
from .poset import SimplicialPoset, barycentric_subdivision, require_valid


def color_subsets(d: int) -> list:
    """All subsets of ``{1..d}`` as frozensets, ordered by size then lexicographically."""
    return [frozenset(c) for k in range(d + 1) for c in combinations(range(1, d + 1), k)]


def flag_f(complex: SimplicialComplex, coloring: Coloring) -> dict:
    """``{S: #faces with color set exactly S}`` for every ``S ⊆ [d]``."""
    check_coloring(complex, coloring)
    f = {S: 0 for S in color_subsets(coloring.d)}
    for F in complex.faces:
        f[coloring.of_face(F)] += 1
    return f


def flag_h(complex: SimplicialComplex, coloring: Coloring) -> dict:
    f = flag_f(complex, coloring)
    return {S: sum((-1) ** (len(S) - len(T)) * f[T] for T in f if T <= S) for S in f}


def f_from_h(h: dict) -> dict:
    return {S: sum(v for T, v in h.items() if T <= S) for S in h}


@dataclass(frozen=True)
class GradedSeriesNumerator:
    """An integer polynomial; exponents are tuples (multigraded, ``nvars`` variables) or ints.

    ``weights`` records the denominator ``∏ (1 - t^w)`` the numerator sits over.
    """

    coeffs: dict
    nvars: int | None = None
    weights: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {e: c for e, c in self.coeffs.items() if c})

    @property
    def multigraded(self) -> bool:
        return self.nvars is not None

    def specialize(self, weights=None) -> "GradedSeriesNumerator":
        """Send ``t_j`` to ``t^{w_j}`` (default ``w_j = j``)."""
        if not self.multigraded:
            raise ValueError("numerator is already singly graded")
        weights = tuple(weights) if weights is not None else tuple(range(1, self.nvars + 1))
        out: dict = {}
        for e, c in self.coeffs.items():
            deg = sum(a * w for a, w in zip(e, weights))
            out[deg] = out.get(deg, 0) + c
        return GradedSeriesNumerator(out, None, weights)

    def as_list(self) -> list:
        """Coefficient list of a singly graded numerator, constant term first."""
        if self.multigraded:
            raise ValueError("multigraded numerator has no coefficient list")
        top = max(self.coeffs, default=-1)
        return [self.coeffs.get(k, 0) for k in range(top + 1)]

    def __str__(self):
        return format_polynomial(self.coeffs, self.multigraded)


def format_polynomial(coeffs: dict, multigraded: bool) -> str:
    def mono(e):
        if multigraded:
            parts = []
            for j, a in enumerate(e, start=1):
                if a == 1:
                    parts.append(f"t{j}")
                elif a:
                    parts.append(f"t{j}^{a}")
            return "*".join(parts)
        if e == 0:
            return ""
        return "t" if e == 1 else f"t^{e}"

    keys = sorted(coeffs, key=lambda e: (sum(e), tuple(-a for a in e)) if multigraded else e)
    out = ""
    for e in keys:
        c = coeffs[e]
        m = mono(e)
        body = str(abs(c)) if (not m or abs(c) != 1) else ""
        term = body + ("*" if body and m else "") + m
        if not out:
            out = ("-" if c < 0 else "") + term
        else:
            out += (" - " if c < 0 else " + ") + term
    return out or "0"


def hilbert_numerator_sr(complex: SimplicialComplex, coloring: Coloring) -> GradedSeriesNumerator:
    """Numerator of the multigraded Hilbert series over ``∏_j (1 - t_j)``."""
    h = flag_h(complex, coloring)
    d = coloring.d
    coeffs = {tuple(1 if j in S else 0 for j in range(1, d + 1)): v for S, v in h.items()}
    return GradedSeriesNumerator(coeffs, d, (1,) * d)


def hilbert_numerator_face_ring(P: SimplicialPoset) -> GradedSeriesNumerator:
    """Numerator of ``Hilb(k[Δ], t)`` over ``∏_{j=1}^d (1 - t^j)``."""
    require_valid(P)
    sd, kappa = barycentric_subdivision(P)
    return hilbert_numerator_sr(sd, kappa).specialize()


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def denominator(weights) -> list:
    out = [1]
    for w in weights:
        factor = [1] + [0] * (w - 1) + [-1]
        out = poly_mul(out, factor)
    return out


def expand_series(numerator: GradedSeriesNumerator, upto: int, weights=None) -> list:
    """Coefficients ``0..upto`` of ``numerator / ∏ (1 - t^w)`` by truncated division."""
    weights = tuple(weights) if weights is not None else numerator.weights
    num = numerator.as_list()
    den = denominator(weights)
    out = []
    for k in range(upto + 1):
        c = num[k] if k < len(num) else 0
        for i in range(1, min(k, len(den) - 1) + 1):
            c -= den[i] * out[k - i]
        out.append(c)
    return out
