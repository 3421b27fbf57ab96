"""Depth of face rings, computed three independent ways.

* skeleta: the largest δ whose (δ-1)-skeleton is Cohen-Macaulay;
* regular sequences: how long a prefix θ_1..θ_k has vanishing Koszul H_1;
* Auslander-Buchsbaum: d minus the projective dimension read off a Betti table.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field as dc_field

from .cohomology import poset_is_cohen_macaulay
from .facering import face_ring
from .koszul import (
    BettiTable,
    default_theta_bound,
    gamma_tor_hochster,
    koszul_theta_homology,
    specialize_multigraded,
    theta_tor,
)
from .linalg import QQ, ExactField, SparseMatrix, rank
from .poset import SimplicialPoset, barycentric_subdivision, poset_skeleton, require_valid

REGULAR = "regular-up-to-bound"
WITNESSED = "zero-divisor-witness"
INHERITED = "fails-with-shorter-prefix"


def _require_nonempty(P: SimplicialPoset):
    require_valid(P)
    if P.d == 0:
        raise ValueError("depth needs a poset with at least one element of positive rank")


def depth_duval(P: SimplicialPoset, field: ExactField = QQ) -> int:
    """Largest δ such that the (δ-1)-skeleton of ``P`` is Cohen-Macaulay."""
    _require_nonempty(P)
    field = ExactField.parse(field)
    best = 0
    for delta in range(1, P.d + 1):
        if poset_is_cohen_macaulay(poset_skeleton(P, delta - 1), field):
            best = delta
    return best


@dataclass
class PrefixStatus:
    length: int
    status: str
    degree: int | None = None  # lowest degree with nonzero H_1
    h1: int = 0


def regseq_statuses(P: SimplicialPoset, field: ExactField = QQ, max_degree: int | None = None) -> list:
    """Per-prefix regularity of ``θ_1, ..., θ_k`` for ``k = 1..d`` up to a degree bound."""
    _require_nonempty(P)
    field = ExactField.parse(field)
    bound = default_theta_bound(P.d) if max_degree is None else int(max_degree)
    R = face_ring(P, field)
    out = []
    failed = False
    for k in range(1, P.d + 1):
        if failed:
            out.append(PrefixStatus(k, INHERITED))
            continue
        status = PrefixStatus(k, REGULAR)
        for D in range(bound + 1):
            h = koszul_theta_homology(R, range(1, k + 1), D)
            if any(h[1:]):
                status = PrefixStatus(k, WITNESSED, D, h[1])
                break
        failed = status.status != REGULAR
        out.append(status)
    return out


def depth_regseq(P: SimplicialPoset, field: ExactField = QQ, max_degree: int | None = None) -> tuple:
    """``(depth, statuses)``: length of the longest prefix not yet shown irregular."""
    statuses = regseq_statuses(P, field, max_degree)
    depth = 0
    for s in statuses:
        if s.status != REGULAR:
            break
        depth = s.length
    return depth, statuses


def depth_ab(table: BettiTable) -> int:
    """``d - pd`` for a Betti table over a polynomial ring in ``d`` variables."""
    return table.d - table.projective_dimension()


def zero_divisor_witness(P: SimplicialPoset, j: int, element, field: ExactField = QQ) -> bool:
    """Is ``y_element`` nonzero modulo ``(θ_1..θ_{j-1})`` while ``θ_j · y_element = 0``?"""
    require_valid(P)
    R = face_ring(P, field)
    x = P._idx(element)
    mono = (x,)
    if R.theta_times(j, mono):
        return False
    # y_x lies in the ideal iff appending it does not raise the rank of the image in its degree
    D = R.degree(mono)
    basis = R.standard_monomials_of_degree(D)
    pos = {m: k for k, m in enumerate(basis)}
    red = R.field.reduce
    rows = []
    for i in range(1, j):
        if i > D:
            break
        for m in R.standard_monomials_of_degree(D - i):
            row = {pos[k]: red(c) for k, c in R.theta_times(i, m).items() if red(c)}
            if row:
                rows.append(row)
    image = SparseMatrix(len(rows), len(basis), rows)
    extended = SparseMatrix(len(rows) + 1, len(basis), rows + [{pos[mono]: 1}])
    return rank(extended, R.field) > rank(image, R.field)


@dataclass
class DepthReport:
    field: str
    d: int
    bound: int
    duval_depth: int
    regseq_depth: int
    statuses: list
    ab_depth: int
    ab_depth_sd: int
    agreement: bool
    witnesses: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        out = asdict(self)
        out["statuses"] = [asdict(s) for s in self.statuses]
        return out

    def summary(self) -> str:
        lines = [
            f"field {self.field}, d = {self.d}, degree bound {self.bound}",
            f"depth via skeleta:           {self.duval_depth}",
            f"depth via regular sequence:  {self.regseq_depth}",
            f"depth via Auslander-Buchsbaum (face ring):  {self.ab_depth}",
            f"depth via Auslander-Buchsbaum (subdivision): {self.ab_depth_sd}",
        ]
        for s in self.statuses:
            extra = f" (H_1 = {s.h1} in degree {s.degree})" if s.status == WITNESSED else ""
            lines.append(f"  theta_1..theta_{s.length}: {s.status}{extra}")
        lines.append("agreement" if self.agreement else "DISAGREEMENT")
        return "\n".join(lines)


def depth_report(
    P: SimplicialPoset, field: ExactField = QQ, max_degree: int | None = None, retries: int = 2
) -> DepthReport:
    """Run all three methods; raise the degree bound when regularity is only known up to it."""
    _require_nonempty(P)
    field = ExactField.parse(field)
    bound = default_theta_bound(P.d) if max_degree is None else int(max_degree)
    duval = depth_duval(P, field)
    reg, statuses = depth_regseq(P, field, bound)
    for _ in range(retries):
        if reg <= duval:
            break
        bound *= 2
        reg, statuses = depth_regseq(P, field, bound)
    theta = theta_tor(P, field, bound)
    ab = depth_ab(theta)
    sd, kappa = barycentric_subdivision(P)
    ab_sd = depth_ab(specialize_multigraded(gamma_tor_hochster(sd, kappa, field)))
    witnesses = [{"prefix": s.length, "degree": s.degree, "h1": s.h1} for s in statuses if s.status == WITNESSED]
    return DepthReport(
        str(field), P.d, bound, duval, reg, statuses, ab, ab_sd, duval == reg == ab == ab_sd, witnesses
    )
