"""Reduced simplicial cohomology over an exact field, and Cohen-Macaulay tests."""
from __future__ import annotations

from .complex import SimplicialComplex, link, reduced_euler_characteristic
from .linalg import QQ, ExactField, SparseMatrix, rank
from .poset import SimplicialPoset, barycentric_subdivision, require_valid


def coboundary(complex: SimplicialComplex, i: int) -> SparseMatrix:
    """Coboundary ``C^i -> C^{i+1}`` in the row-vector convention.

    Row ``r`` is the image of the ``r``-th ``i``-face.  For ``i = -1`` this is
    the augmentation (the empty face maps to the sum of all vertices).
    Sign of ``F ⊂ G`` is ``(-1)^k`` where ``k`` is the position of ``G ∖ F`` in ``G``.
    """
    src = complex.faces_of_dim(i)
    tgt = complex.faces_of_dim(i + 1)
    pos = {f: k for k, f in enumerate(src)}
    rows = [{} for _ in src]
    for c, g in enumerate(tgt):
        for k in range(len(g)):
            rows[pos[g[:k] + g[k + 1 :]]][c] = -1 if k % 2 else 1
    return SparseMatrix(len(src), len(tgt), rows)


def boundary(complex: SimplicialComplex, i: int) -> SparseMatrix:
    """Boundary ``C_i -> C_{i-1}``: the transpose of :func:`coboundary` at ``i - 1``."""
    return coboundary(complex, i - 1).transpose()


def reduced_cohomology(complex: SimplicialComplex, field: ExactField = QQ) -> list:
    """``[dim H~^{-1}, dim H~^0, ..., dim H~^{dim}]``; ``[]`` for the void complex."""
    if complex.is_void:
        return []
    field = ExactField.parse(field)
    top = complex.dim
    ranks = {i: rank(coboundary(complex, i), field) for i in range(-1, top)}
    out = []
    for i in range(-1, top + 1):
        f = len(complex.faces_of_dim(i))
        out.append(f - ranks.get(i, 0) - ranks.get(i - 1, 0))
    return out


def reduced_homology(complex: SimplicialComplex, field: ExactField = QQ) -> list:
    """Same layout as :func:`reduced_cohomology`, computed from boundary matrices."""
    if complex.is_void:
        return []
    field = ExactField.parse(field)
    top = complex.dim
    ranks = {i: rank(boundary(complex, i), field) for i in range(0, top + 1)}
    return [
        len(complex.faces_of_dim(i)) - ranks.get(i, 0) - ranks.get(i + 1, 0) for i in range(-1, top + 1)
    ]


def euler_from_cohomology(dims) -> int:
    """``Σ_i (-1)^i dim H~^i`` for a list starting at ``i = -1``."""
    return sum((1 if k % 2 else -1) * h for k, h in enumerate(dims))


def _cm_link_ok(lk: SimplicialComplex, field) -> bool:
    if len(lk.facets) == 1:
        return True  # a simplex or {∅}
    dims = reduced_cohomology(lk, field)
    return all(h == 0 for h in dims[:-1])


def is_cohen_macaulay(complex: SimplicialComplex, field: ExactField = QQ) -> bool:
    """Reisner's criterion: every link has vanishing reduced cohomology below its top degree."""
    if complex.is_void:
        raise ValueError("Cohen-Macaulayness is not defined for the void complex")
    field = ExactField.parse(field)
    if not _cm_link_ok(complex, field):
        return False
    seen = set()
    for F in sorted(complex.faces, key=lambda f: (len(f), f)):
        if not F:
            continue
        lk = link(complex, F)
        if lk.facets in seen:
            continue
        seen.add(lk.facets)
        if not _cm_link_ok(lk, field):
            return False
    return True


def poset_is_cohen_macaulay(P: SimplicialPoset, field: ExactField = QQ) -> bool:
    """Cohen-Macaulayness of the cell complex of ``P``, read off its barycentric subdivision."""
    require_valid(P)
    sd, _ = barycentric_subdivision(P)
    return is_cohen_macaulay(sd, field)


__all__ = [
    "coboundary",
    "boundary",
    "reduced_cohomology",
    "reduced_homology",
    "reduced_euler_characteristic",
    "euler_from_cohomology",
    "is_cohen_macaulay",
    "poset_is_cohen_macaulay",
]
