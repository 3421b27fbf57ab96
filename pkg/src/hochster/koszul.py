"""Tor over colorful and universal parameter rings via graded Koszul strands.

Two routes to the same numbers on the colorful side:

* :func:`gamma_tor_strand` builds the multigraded strand of
  ``k[Δ] ⊗ Λ(k^d)`` and takes homology directly;
* :func:`gamma_tor_hochster` reads the answer off reduced cohomology of
  color-selected subcomplexes.

On the universal side, :func:`theta_tor` computes Koszul homology of
``θ_1..θ_d`` on the face ring one ℕ-degree at a time, up to a degree bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product

from .cohomology import reduced_cohomology
from .complex import Coloring, SimplicialComplex, check_coloring, restrict_colors
from .facering import FaceRing, face_ring
from .flagvec import GradedSeriesNumerator, color_subsets, hilbert_numerator_face_ring
from .linalg import QQ, ExactField, SparseMatrix, compose, rank
from .poset import SimplicialPoset, require_valid


@dataclass
class BettiTable:
    """Graded Tor dimensions: ``entries[(m, degree)] = dim Tor_m(·, k)_degree``.

    ``degree`` is an int for ℕ-graded tables and a tuple for multigraded ones.
    Missing keys mean zero (within ``bound`` when one is recorded).
    """

    entries: dict
    d: int
    system: str
    characteristic: int = 0
    multigraded: bool = False
    bound: int | None = None
    certification: str = "exact"
    excess: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}
        for (m, _), v in self.entries.items():
            if v < 0 or not 0 <= m <= self.d:
                raise ValueError(f"bad Betti entry {m}: {v}")

    def get(self, m: int, degree) -> int:
        return self.entries.get((m, degree), 0)

    def totals(self) -> list:
        out = [0] * (self.d + 1)
        for (m, _), v in self.entries.items():
            out[m] += v
        return out

    def projective_dimension(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table")
        return max(m for m, _ in self.entries)

    def by_homological_index(self) -> dict:
        out: dict = {}
        for (m, deg), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            out.setdefault(m, {})[deg] = v
        return out

    def to_json(self) -> dict:
        def deg(x):
            return list(x) if isinstance(x, tuple) else x

        return {
            "system": self.system,
            "d": self.d,
            "field": self.characteristic,
            "bound": self.bound,
            "multigraded": self.multigraded,
            "certification": self.certification,
            "entries": [
                {"m": m, "degree": deg(D), "dim": v}
                for (m, D), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1]))
            ],
            "excess": [{"m": m, "degree": deg(D), "dim": v} for (m, D), v in sorted(self.excess.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        mg = bool(data.get("multigraded"))

        def deg(x):
            return tuple(x) if mg else int(x)

        return cls(
            {(e["m"], deg(e["degree"])): e["dim"] for e in data["entries"]},
            data["d"],
            data["system"],
            data.get("field", 0),
            mg,
            data.get("bound"),
            data.get("certification", "exact"),
            {(e["m"], deg(e["degree"])): e["dim"] for e in data.get("excess", [])},
        )


# -- colorful parameters: direct strand computation --------------------------


def _faces_by_colors(complex: SimplicialComplex, coloring: Coloring) -> dict:
    out: dict = {}
    for F in complex.faces:
        out.setdefault(coloring.of_face(F), []).append(F)
    for v in out.values():
        v.sort()
    return out


def _gamma_times(complex, coloring, j: int, mono: tuple) -> list:
    """``γ_j · x^a`` for ``mono = ((vertex, exponent), ...)``; returns the list of result monomials."""
    supp = [v for v, _ in mono]
    for k, (v, e) in enumerate(mono):
        if coloring(v) == j:
            return [mono[:k] + ((v, e + 1),) + mono[k + 1 :]]
    out = []
    faces = complex.faces
    for i in coloring.vertices_of_color(j):
        if tuple(sorted(supp + [i])) in faces:
            out.append(tuple(sorted(mono + ((i, 1),))))
    return out


def _strand_basis(by_colors, coloring, b: tuple, m: int) -> dict:
    d = len(b)
    idx: dict = {}
    supp_b = [j for j in range(1, d + 1) if b[j - 1] > 0]
    for J in combinations(supp_b, m):
        c = list(b)
        for j in J:
            c[j - 1] -= 1
        S = frozenset(j for j in range(1, d + 1) if c[j - 1] > 0)
        for F in by_colors.get(S, []):
            mono = tuple((v, c[coloring(v) - 1]) for v in F)
            idx[(J, mono)] = len(idx)
    return idx


def gamma_tor_strand(
    complex: SimplicialComplex, coloring: Coloring, b, field: ExactField = QQ, check: bool = True
) -> list:
    """``[dim Tor_m^A(k[Δ], k)_b for m = 0..d]`` from the Koszul strand in multidegree ``b``."""
    check_coloring(complex, coloring)
    field = ExactField.parse(field)
    b = tuple(int(x) for x in b)
    d = coloring.d
    if len(b) != d or any(x < 0 for x in b):
        raise ValueError(f"multidegree must be a length-{d} vector of nonnegative integers")
    by_colors = _faces_by_colors(complex, coloring)
    bases = [_strand_basis(by_colors, coloring, b, m) for m in range(d + 1)]
    red = field.reduce
    diffs = [None]
    for m in range(1, d + 1):
        rows = []
        tgt = bases[m - 1]
        for (J, mono) in bases[m]:
            row: dict = {}
            for ell, j in enumerate(J):
                sign = -1 if ell % 2 else 1
                rest = J[:ell] + J[ell + 1 :]
                for new in _gamma_times(complex, coloring, j, mono):
                    col = tgt[(rest, new)]
                    row[col] = row.get(col, 0) + sign
            rows.append({c: red(v) for c, v in row.items() if red(v)})
        diffs.append(SparseMatrix(len(bases[m]), len(tgt), rows))
    if check:
        for m in range(2, d + 1):
            if compose(diffs[m], diffs[m - 1], field).nnz:
                raise AssertionError(f"Koszul differential squares to nonzero at m={m}, b={b}")
    ranks = [0] + [rank(diffs[m], field) for m in range(1, d + 1)] + [0]
    return [len(bases[m]) - ranks[m] - ranks[m + 1] for m in range(d + 1)]


# -- colorful parameters: Hochster-type formula -----------------------------


def gamma_tor_hochster(complex: SimplicialComplex, coloring: Coloring, field: ExactField = QQ) -> BettiTable:
    """Multigraded Tor over ``k[γ_1..γ_d]`` from cohomology of color-selected subcomplexes."""
    check_coloring(complex, coloring)
    field = ExactField.parse(field)
    d = coloring.d
    entries = {}
    if not complex.is_void:
        for S in color_subsets(d):
            dims = reduced_cohomology(restrict_colors(complex, coloring, S), field)
            b = tuple(1 if j in S else 0 for j in range(1, d + 1))
            for m in range(0, d + 1):
                i = len(S) - m - 1
                if -1 <= i and i + 1 < len(dims) and dims[i + 1]:
                    entries[(m, b)] = dims[i + 1]
    return BettiTable(entries, d, "gamma", field.characteristic, multigraded=True)


def non_squarefree_degrees(d: int, max_total: int | None = None) -> list:
    """Multidegrees with max component exactly 2 and total at most ``d + 2`` (by default)."""
    max_total = d + 2 if max_total is None else max_total
    out = []
    for b in product(range(3), repeat=d):
        if max(b, default=0) == 2 and sum(b) <= max_total:
            out.append(b)
    return out


# -- grading specialisation and Euler checks --------------------------------


def specialize_multigraded(table: BettiTable, weights=None) -> BettiTable:
    """Collapse ``ε_j ↦ w_j`` (default ``w_j = j``)."""
    if not table.multigraded:
        raise ValueError("table is already singly graded")
    weights = tuple(weights) if weights is not None else tuple(range(1, table.d + 1))
    out: dict = {}
    for (m, b), v in table.entries.items():
        D = sum(x * w for x, w in zip(b, weights))
        out[(m, D)] = out.get((m, D), 0) + v
    return BettiTable(out, table.d, table.system, table.characteristic, False, table.bound, table.certification)


def alternating_sum(table: BettiTable) -> dict:
    acc: dict = {}
    for (m, D), v in table.entries.items():
        acc[D] = acc.get(D, 0) + (-1) ** m * v
    return {k: v for k, v in acc.items() if v}


def euler_consistency(table: BettiTable, numerator: GradedSeriesNumerator) -> bool:
    """Does ``Σ_m (-1)^m Hilb(Tor_m)`` equal ``numerator`` (up to the table's degree bound)?"""
    if table.multigraded != numerator.multigraded:
        raise ValueError("grading mismatch between Betti table and numerator")
    alt = alternating_sum(table)
    num = numerator.coeffs
    if table.bound is None or table.multigraded:
        return alt == num
    B = table.bound
    if any(D > B for D in num):
        return False
    return {D: v for D, v in alt.items() if D <= B} == num


# -- universal parameters ---------------------------------------------------


def koszul_theta_homology(R: FaceRing, js, D: int, check: bool = True) -> list:
    """Koszul homology ``[dim H_m for m = 0..len(js)]`` of ``(θ_j)_{j in js}`` on ``k[Δ]`` in degree ``D``."""
    js = tuple(sorted(js))
    k = len(js)
    field = R.field
    red = field.reduce
    bases = []
    for m in range(k + 1):
        idx: dict = {}
        for J in combinations(js, m):
            deg = D - sum(J)
            if deg < 0:
                continue
            for mono in R.standard_monomials_of_degree(deg):
                idx[(J, mono)] = len(idx)
        bases.append(idx)
    diffs = [None]
    for m in range(1, k + 1):
        tgt = bases[m - 1]
        rows = []
        for (J, mono) in bases[m]:
            row: dict = {}
            for ell, j in enumerate(J):
                sign = -1 if ell % 2 else 1
                rest = J[:ell] + J[ell + 1 :]
                for key, c in R.theta_times(j, mono).items():
                    col = tgt[(rest, key)]
                    row[col] = row.get(col, 0) + sign * c
            rows.append({c: v for c, v in ((c, red(v)) for c, v in row.items()) if v})
        diffs.append(SparseMatrix(len(bases[m]), len(tgt), rows))
    if check:
        for m in range(2, k + 1):
            if compose(diffs[m], diffs[m - 1], field).nnz:
                raise AssertionError(f"Koszul differential squares to nonzero at m={m}, D={D}")
    ranks = [0] + [rank(diffs[m], field) if diffs[m].nrows and diffs[m].ncols else 0 for m in range(1, k + 1)] + [0]
    return [len(bases[m]) - ranks[m] - ranks[m + 1] for m in range(k + 1)]


def default_theta_bound(d: int) -> int:
    return d * (d + 1) // 2 + d


def theta_tor(P: SimplicialPoset, field: ExactField = QQ, max_degree: int | None = None, check: bool = True) -> BettiTable:
    """ℕ-graded ``Tor^{k[Θ]}(k[Δ], k)`` in degrees ``0..max_degree``."""
    require_valid(P)
    field = ExactField.parse(field)
    d = P.d
    bound = default_theta_bound(d) if max_degree is None else int(max_degree)
    if bound < 0:
        raise ValueError("degree bound must be >= 0")
    R = face_ring(P, field)
    entries = {}
    for D in range(bound + 1):
        for m, h in enumerate(koszul_theta_homology(R, range(1, d + 1), D, check=check)):
            if h:
                entries[(m, D)] = h
    top = d * (d + 1) // 2
    excess = {k: v for k, v in entries.items() if k[1] > top}
    table = BettiTable(entries, d, "theta", field.characteristic, False, bound, "within-bound", excess)
    if not excess and euler_consistency(table, hilbert_numerator_face_ring(P)):
        table.certification = "consistent-not-certified"
    return table
