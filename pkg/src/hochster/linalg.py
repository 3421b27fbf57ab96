"""Exact sparse linear algebra over the rationals or a prime field.

Every homological dimension in the package is reduced to :func:`rank`.
Matrices are stored row-wise as ``{column: value}`` dictionaries; values are
Python integers (or :class:`fractions.Fraction` over the rationals).
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

DEFAULT_PRIME = 32003


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class ExactField:
    """The rationals (``characteristic == 0``) or the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p != 0 and not _is_prime(p)):
            raise ValueError(f"field characteristic must be 0 or a prime, got {p}")

    @classmethod
    def parse(cls, value) -> "ExactField":
        if isinstance(value, ExactField):
            return value
        return cls(int(value))

    def reduce(self, c):
        """Canonical representative of the scalar ``c``."""
        p = self.characteristic
        if p == 0:
            if isinstance(c, Fraction) and c.denominator == 1:
                return c.numerator
            return c
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, p) % p
        return c % p

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"ZZ/{self.characteristic}"


QQ = ExactField(0)


@dataclass
class SparseMatrix:
    """A ``nrows x ncols`` matrix; ``rows[i]`` maps column index to a nonzero entry."""

    nrows: int
    ncols: int
    rows: list = field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in range(self.nrows)]
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        for r in self.rows:
            for c, v in r.items():
                if not 0 <= c < self.ncols:
                    raise ValueError(f"column index {c} out of range")
                if v == 0:
                    raise ValueError("stored zero entry")

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries) -> "SparseMatrix":
        """Build from ``(row, col, value)`` triples; duplicates are rejected."""
        rows = [{} for _ in range(nrows)]
        for i, j, v in entries:
            if not 0 <= i < nrows:
                raise ValueError(f"row index {i} out of range")
            if j in rows[i]:
                raise ValueError(f"duplicate coordinate ({i}, {j})")
            if v != 0:
                rows[i][j] = v
        return cls(nrows, ncols, rows)

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrix":
        dense = [list(r) for r in dense]
        ncols = len(dense[0]) if dense else 0
        return cls(len(dense), ncols, [{j: v for j, v in enumerate(r) if v != 0} for r in dense])

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, [{i: 1} for i in range(n)])

    def transpose(self) -> "SparseMatrix":
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return SparseMatrix(self.ncols, self.nrows, cols)

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def permuted(self, row_perm, col_perm) -> "SparseMatrix":
        """Row ``i`` moves to ``row_perm[i]``, column ``j`` to ``col_perm[j]``."""
        rows = [{} for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            rows[row_perm[i]] = {col_perm[j]: v for j, v in r.items()}
        return SparseMatrix(self.nrows, self.ncols, rows)


def compose(first: SparseMatrix, second: SparseMatrix, field: ExactField = QQ) -> SparseMatrix:
    """Matrix of ``second ∘ first`` in the row-vector convention.

    Row ``i`` of ``first`` is the image of basis vector ``i``; applying
    ``second`` to it gives row ``i`` of the result.
    """
    if first.ncols != second.nrows:
        raise ValueError(f"shape mismatch: {first.nrows}x{first.ncols} then {second.nrows}x{second.ncols}")
    out = []
    for r in first.rows:
        acc: dict = {}
        for k, a in r.items():
            for j, b in second.rows[k].items():
                acc[j] = acc.get(j, 0) + a * b
        out.append({j: v for j, v in acc.items() if field.reduce(v) != 0})
    return SparseMatrix(first.nrows, second.ncols, out)


def _rows_mod_p(rows, p):
    out = []
    for r in rows:
        rr = {}
        for j, v in r.items():
            if isinstance(v, Fraction):
                v = v.numerator * pow(v.denominator, -1, p)
            v %= p
            if v:
                rr[j] = v
        if rr:
            out.append(rr)
    return out


def _rows_integral(rows):
    out = []
    for r in rows:
        if not r:
            continue
        dens = [v.denominator for v in r.values() if isinstance(v, Fraction)]
        if dens:
            m = lcm(*dens)
            out.append({j: int(v * m) for j, v in r.items()})
        else:
            out.append(dict(r))
    return out


def _eliminate(rows, p):
    """Markowitz-style elimination; returns the rank.

    Pivot row = the shortest active row, pivot column = its least populated
    column.  With ``p == 0`` updates are fraction-free and each updated row is
    divided by its content.
    """
    n = len(rows)
    active = dict(enumerate(rows))
    col_rows: dict = {}
    for i, r in active.items():
        for j in r:
            col_rows.setdefault(j, set()).add(i)
    heap = [(len(r), i) for i, r in active.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        length, i = heapq.heappop(heap)
        r = active.get(i)
        if r is None or len(r) != length:
            continue
        c = min(r, key=lambda j: (len(col_rows[j]), j))
        a = r[c]
        del active[i]
        for j in r:
            col_rows[j].discard(i)
        rank += 1
        targets = list(col_rows[c])
        if p:
            inv = pow(a, -1, p)
            for s in targets:
                row = active[s]
                f = row[c] * inv % p
                for j, v in r.items():
                    w = (row.get(j, 0) - f * v) % p
                    if w:
                        if j not in row:
                            col_rows[j].add(s)
                        row[j] = w
                    elif j in row:
                        del row[j]
                        col_rows[j].discard(s)
                if row:
                    heapq.heappush(heap, (len(row), s))
                else:
                    del active[s]
        else:
            for s in targets:
                row = active[s]
                b = row[c]
                g = gcd(a, b)
                fa, fb = a // g, b // g
                new = {}
                for j, v in row.items():
                    new[j] = fa * v
                for j, v in r.items():
                    new[j] = new.get(j, 0) - fb * v
                content = 0
                for j in list(new):
                    if new[j] == 0:
                        del new[j]
                    else:
                        content = gcd(content, new[j])
                for j in row:
                    if j not in new:
                        col_rows[j].discard(s)
                for j in new:
                    if j not in row:
                        col_rows[j].add(s)
                if content > 1:
                    for j in new:
                        new[j] //= content
                if new:
                    active[s] = new
                    heapq.heappush(heap, (len(new), s))
                else:
                    del active[s]
        if rank == n:
            break
    return rank


def rank(M: SparseMatrix, field: ExactField = QQ) -> int:
    """Exact rank of ``M`` over ``field``."""
    field = ExactField.parse(field)
    p = field.characteristic
    rows = _rows_mod_p(M.rows, p) if p else _rows_integral(M.rows)
    if len(rows) > M.ncols:
        # eliminate along the shorter side
        T = SparseMatrix(len(rows), M.ncols, rows).transpose()
        rows = [r for r in T.rows if r]
    return _eliminate(rows, p)


def homology_dims(d_in: SparseMatrix, d_out: SparseMatrix, field: ExactField = QQ, check: bool = True) -> int:
    """Dimension of ``ker(d_out) / im(d_in)`` at the middle term.

    Row-vector convention: ``d_in`` is ``C^{k-1} -> C^k`` with one row per
    basis vector of ``C^{k-1}``, ``d_out`` is ``C^k -> C^{k+1}``.
    """
    field = ExactField.parse(field)
    if d_in.ncols != d_out.nrows:
        raise ValueError(f"shape mismatch: d_in has {d_in.ncols} columns, d_out has {d_out.nrows} rows")
    if check and compose(d_in, d_out, field).nnz:
        raise AssertionError("composite of consecutive differentials is nonzero")
    dim = d_out.nrows - rank(d_out, field) - rank(d_in, field)
    assert dim >= 0
    return dim
