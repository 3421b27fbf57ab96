"""Compare the universal-parameter Betti table of a face ring with the
rank-specialized colorful table of its barycentric subdivision.

The entrywise inequality theta <= gamma is a theorem, so a violation raises
:class:`InequalityViolation`.  Equality is the open question under test.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .complex import Coloring, SimplicialComplex
from .facering import face_ring
from .flagvec import flag_f, hilbert_numerator_face_ring
from .koszul import (
    BettiTable,
    euler_consistency,
    gamma_tor_hochster,
    specialize_multigraded,
    theta_tor,
)
from .linalg import QQ, ExactField
from .poset import SimplicialPoset, barycentric_subdivision, from_facets, require_valid

EQUAL = "equal"
UNEQUAL = "unequal"
INCONCLUSIVE = "inconclusive"


class InequalityViolation(AssertionError):
    """theta_tor exceeded the specialized colorful table somewhere (an implementation bug)."""


@dataclass
class ConjectureReport:
    instance: str
    field: str
    bound: int
    table_theta: BettiTable
    table_gamma_specialized: BettiTable
    verdict: str
    inequality_ok: bool
    euler_theta: bool
    euler_gamma: bool
    murai_dims_ok: bool
    cells: dict = dc_field(default_factory=dict)  # (m, D) -> (theta, gamma) where they differ
    seed: int | None = None

    @property
    def discrepancy_candidate(self) -> bool:
        """Unequal cells that survived every consistency check."""
        return self.verdict == UNEQUAL

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "field": self.field,
            "bound": self.bound,
            "seed": self.seed,
            "verdict": self.verdict,
            "inequality_ok": self.inequality_ok,
            "euler_theta": self.euler_theta,
            "euler_gamma": self.euler_gamma,
            "murai_dims_ok": self.murai_dims_ok,
            "cells": [{"m": m, "degree": D, "theta": a, "gamma": b} for (m, D), (a, b) in sorted(self.cells.items())],
            "table_theta": self.table_theta.to_json(),
            "table_gamma_specialized": self.table_gamma_specialized.to_json(),
        }


def compare_tables(theta: BettiTable, gamma: BettiTable, bound: int) -> dict:
    keys = {k for k in theta.entries if k[1] <= bound} | {k for k in gamma.entries if k[1] <= bound}
    return {k: (theta.get(*k), gamma.get(*k)) for k in sorted(keys) if theta.get(*k) != gamma.get(*k)}


def sd_hilbert_function(P: SimplicialPoset, upto: int) -> list:
    """Graded dimensions of the subdivision's Stanley-Reisner ring (color j in degree j), from flag f-numbers."""
    sd, kappa = barycentric_subdivision(P)
    dims = [0] * (upto + 1)
    for S, f in flag_f(sd, kappa).items():
        if not f:
            continue
        # monomials supported on one face with color set S: exponents >= 1 on each color
        series = [0] * (upto + 1)
        start = sum(S)
        if start > upto:
            continue
        series[start] = 1
        for j in S:
            for D in range(j, upto + 1):
                series[D] += series[D - j]
        for D in range(upto + 1):
            dims[D] += f * series[D]
    return dims


def murai_dims_ok(P: SimplicialPoset, upto: int) -> bool:
    """Do the face ring and the subdivision's ring have the same graded dimensions up to ``upto``?"""
    return face_ring(P).hilbert_function(upto) == sd_hilbert_function(P, upto)


def decide(theta: BettiTable, gamma: BettiTable, bound: int, euler_theta: bool, euler_gamma: bool) -> tuple:
    """``(verdict, cells, inequality_ok)`` for a pair of ℕ-graded tables."""
    cells = compare_tables(theta, gamma, bound)
    ineq = all(a <= b for a, b in cells.values())
    if not cells and euler_theta and euler_gamma:
        verdict = EQUAL
    elif cells and ineq and euler_theta and euler_gamma:
        verdict = UNEQUAL
    else:
        verdict = INCONCLUSIVE
    return verdict, cells, ineq


def check_conjecture(
    P: SimplicialPoset,
    field: ExactField = QQ,
    max_degree: int | None = None,
    instance: str = "",
    seed: int | None = None,
    theta: BettiTable | None = None,
) -> ConjectureReport:
    require_valid(P)
    field = ExactField.parse(field)
    if theta is None:
        theta = theta_tor(P, field, max_degree)
    bound = theta.bound
    sd, kappa = barycentric_subdivision(P)
    gamma = specialize_multigraded(gamma_tor_hochster(sd, kappa, field))
    gamma.bound = bound
    num = hilbert_numerator_face_ring(P)
    e_theta = euler_consistency(theta, num)
    e_gamma = euler_consistency(gamma, num)
    verdict, cells, ineq = decide(theta, gamma, bound, e_theta, e_gamma)
    if not ineq:
        bad = {k: v for k, v in cells.items() if v[0] > v[1]}
        raise InequalityViolation(f"{instance or 'instance'} over {field}: theta exceeds gamma at {bad}")
    return ConjectureReport(
        instance, str(field), bound, theta, gamma, verdict, ineq, e_theta, e_gamma,
        murai_dims_ok(P, bound), cells, seed,
    )


# -- batch runs -------------------------------------------------------------


@dataclass
class Instance:
    name: str
    poset: SimplicialPoset
    seed: int | None = None


def _run_one(job):
    inst, characteristic, bound = job
    try:
        return check_conjecture(inst.poset, ExactField(characteristic), bound, inst.name, inst.seed)
    except InequalityViolation:
        raise
    except Exception as exc:  # recorded, the batch continues
        return {"instance": inst.name, "field": characteristic, "error": f"{type(exc).__name__}: {exc}"}


def batch(instances, fields=(0,), bound: int | None = None, map_fn=map) -> dict:
    """Check every instance over every field; ``map_fn`` may be a pool's ``map``."""
    jobs = [(inst, ExactField.parse(f).characteristic, bound) for inst in instances for f in fields]
    results = list(map_fn(_run_one, jobs))
    summary = {"total": 0, EQUAL: 0, UNEQUAL: 0, INCONCLUSIVE: 0, "errors": 0}
    reports, errors, discrepancies = [], [], []
    for r in results:
        summary["total"] += 1
        if isinstance(r, dict):
            summary["errors"] += 1
            errors.append(r)
            continue
        summary[r.verdict] += 1
        reports.append(r)
        if r.discrepancy_candidate:
            discrepancies.append(r.to_json())
    return {"summary": summary, "reports": reports, "errors": errors, "discrepancies": discrepancies}


# -- random instances -------------------------------------------------------


def random_complex(rng: random.Random, max_vertices: int = 7, max_dim: int = 2, pure: bool | None = None) -> SimplicialComplex:
    """A random complex on at most ``max_vertices`` vertices, pure or not."""
    n = rng.randint(2, max_vertices)
    if pure is None:
        pure = rng.random() < 0.5
    top = rng.randint(0, min(max_dim, n - 1))
    count = rng.randint(1, 6)
    facets = []
    for _ in range(count):
        size = top + 1 if pure else rng.randint(1, top + 1)
        facets.append(tuple(sorted(rng.sample(range(1, n + 1), size))))
    return SimplicialComplex.from_faces(n, facets)


def random_proper_coloring(rng: random.Random, complex: SimplicialComplex) -> Coloring:
    """Greedy coloring in a random vertex order, then a random relabeling of colors."""
    n = complex.n
    nbrs = {v: set() for v in range(1, n + 1)}
    for a, b in complex.edges():
        nbrs[a].add(b)
        nbrs[b].add(a)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    colors = {}
    for v in order:
        used = {colors[u] for u in nbrs[v] if u in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    d = max(colors.values())
    d += rng.randint(0, 1)  # sometimes leave a color unused
    perm = list(range(1, d + 1))
    rng.shuffle(perm)
    return Coloring(d, tuple(perm[colors[v] - 1] for v in range(1, n + 1)))


def random_poset(rng: random.Random, max_vertices: int = 6, max_dim: int = 2, copies: int = 3) -> SimplicialPoset:
    """Face poset of a random complex with extra simplices glued along the boundary of existing ones."""
    K = random_complex(rng, max_vertices, max_dim)
    P = from_facets(K)
    ranks = dict(P.ranks)
    covers = set(P.covers)
    for c in range(copies):
        cands = [x for x, r in sorted(ranks.items()) if r >= 2]
        if not cands:
            break
        x = rng.choice(cands)
        new = f"{x}'{c}"
        ranks[new] = ranks[x]
        covers |= {(lo, new) for lo, hi in covers if hi == x}
    out = SimplicialPoset(ranks, frozenset(covers))
    require_valid(out)
    return out


def random_instances(seed: int, count: int, max_vertices: int = 7, max_dim: int = 2) -> list:
    """``count`` instances alternating random complexes and glued posets; each records its own seed."""
    master = random.Random(seed)
    out = []
    for k in range(count):
        s = master.randrange(2**63)
        rng = random.Random(s)
        if k % 2 == 0:
            K = random_complex(rng, max_vertices, max_dim)
            if K.dim < 0:
                K = SimplicialComplex.from_faces(K.n, [(1,)])
            out.append(Instance(f"random_complex:{s}", from_facets(K), s))
        else:
            out.append(Instance(f"random_poset:{s}", random_poset(rng, min(max_vertices, 6), max_dim), s))
    return out


def one_dimensional_instances(seed: int, count: int) -> list:
    """Random multigraphs (rank <= 2 simplicial posets with parallel edges)."""
    master = random.Random(seed)
    out = []
    for _ in range(count):
        s = master.randrange(2**63)
        rng = random.Random(s)
        n = rng.randint(2, 5)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.6] or [(1, 2)]
        ranks = {"∅": 0, **{str(v): 1 for v in range(1, n + 1)}}
        covers = {("∅", str(v)) for v in range(1, n + 1)}
        for k, (a, b) in enumerate(edges):
            for c in range(rng.randint(1, 3)):
                e = f"e{a}{b}_{c}"
                ranks[e] = 2
                covers |= {(str(a), e), (str(b), e)}
        out.append(Instance(f"multigraph:{s}", SimplicialPoset(ranks, frozenset(covers)), s))
    return out
