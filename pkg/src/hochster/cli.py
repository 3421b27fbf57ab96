"""Command-line front end (``hochster <command> ...``)."""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog as cat
from .cohomology import is_cohen_macaulay, poset_is_cohen_macaulay
from .complex import Coloring, ColoringError, is_balanced, is_proper
from .conjecture import InequalityViolation, Instance, batch, check_conjecture, random_instances
from .depth import depth_report
from .facering import FacePolynomial, StraighteningError, face_ring
from .flagvec import expand_series, flag_f, flag_h, hilbert_numerator_face_ring, hilbert_numerator_sr
from .io import InputError, coloring_to_json, complex_to_json, load, poset_to_json
from .koszul import gamma_tor_hochster, specialize_multigraded, theta_tor
from .linalg import ExactField
from .poset import InvalidPosetError, barycentric_subdivision, from_facets, sd_vertex_labels
from .render import render_betti, render_rows

DEFAULT_SEED = 20240611

USER_ERRORS = (InputError, InvalidPosetError, ColoringError, StraighteningError, ValueError, OSError)


class UsageError(Exception):
    pass


def parse_field(text: str) -> ExactField:
    t = text.strip().upper()
    if t in ("QQ", "Q"):
        return ExactField(0)
    t = t.removeprefix("ZZ/").removeprefix("F")
    try:
        return ExactField(int(t))
    except ValueError as exc:
        raise UsageError(f"bad field {text!r}: {exc}") from exc


# -- inputs -----------------------------------------------------------------


class Target:
    """What a command operates on: a poset, and when available a complex with a coloring."""

    def __init__(self, name, poset=None, complex=None, coloring=None):
        self.name = name
        self.poset = poset
        self.complex = complex
        self.coloring = coloring

    def need_poset(self):
        if self.poset is None:
            self.poset = from_facets(self.complex)
        return self.poset

    def need_complex(self):
        if self.complex is None:
            raise UsageError(f"{self.name} is a simplicial poset, not a simplicial complex")
        return self.complex


def load_target(args) -> Target:
    if args.catalog and args.input:
        raise UsageError("--catalog and --input are mutually exclusive")
    if args.catalog:
        e = cat.parse_spec(args.catalog)
        return Target(e.name, e.poset, e.complex, e.coloring)
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            doc = load(fh.read())
        return Target(args.input, doc.get("poset"), doc.get("complex"), doc.get("coloring"))
    raise UsageError("give --catalog NAME or --input FILE")


def add_input(p, field=True):
    p.add_argument("--catalog", help="catalog object, e.g. delta_family:4,2")
    p.add_argument("--input", help="JSON file with a complex, coloring and/or poset")
    if field:
        p.add_argument("--field", default="0", help="0 for QQ or a prime p")
    p.add_argument("--format", choices=("table", "json"), default="table")


def emit(args, out, data, text):
    if args.format == "json":
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def colored(t: Target, which: str = "natural"):
    """``(complex, coloring)``; posets fall back to their subdivision colored by rank."""
    if t.complex is None:
        sd, kappa = barycentric_subdivision(t.poset)
        return sd, kappa
    if which == "trivial":
        return t.complex, Coloring.trivial(t.complex.n)
    if t.coloring is None:
        raise UsageError(f"{t.name} has no coloring; pass --coloring trivial or supply one")
    return t.complex, t.coloring


def set_label(S) -> str:
    return "{" + ",".join(str(j) for j in sorted(S)) + "}"


# -- commands ---------------------------------------------------------------


def cmd_info(args, out):
    t = load_target(args)
    field = parse_field(args.field)
    data = {"name": t.name}
    lines = [t.name]
    if t.complex is not None:
        K = t.complex
        data["complex"] = {"n": K.n, "dim": K.dim, "facets": len(K.facets), "f_vector": K.f_vector()}
        if not K.is_void:
            data["complex"]["cohen_macaulay"] = is_cohen_macaulay(K, field)
        lines.append(f"complex: n = {K.n}, dim = {K.dim}, {len(K.facets)} facets, f = {K.f_vector()}")
        if t.coloring is not None:
            data["coloring"] = {
                "d": t.coloring.d,
                "proper": is_proper(K, t.coloring),
                "balanced": is_proper(K, t.coloring) and is_balanced(K, t.coloring),
            }
            lines.append(f"coloring: d = {t.coloring.d}, proper = {data['coloring']['proper']}")
    if t.poset is not None or (t.complex is not None and not t.complex.is_void):
        P = t.need_poset()
        counts = [len(P.elements_of_rank(r)) for r in range(P.d + 1)]
        cm = poset_is_cohen_macaulay(P, field) if P.d else True
        data["poset"] = {"elements": len(P), "d": P.d, "rank_counts": counts, "cohen_macaulay": cm}
        lines.append(f"poset: {len(P)} elements, d = {P.d}, by rank {counts}, Cohen-Macaulay over {field}: {cm}")
    emit(args, out, data, "\n".join(lines))
    return 0


def cmd_flags(args, out):
    t = load_target(args)
    K, kappa = colored(t, args.coloring)
    f, h = flag_f(K, kappa), flag_h(K, kappa)
    rows = [[set_label(S), f[S], h[S]] for S in f]
    data = {"d": kappa.d, "flags": [{"S": sorted(S), "f": f[S], "h": h[S]} for S in f]}
    emit(args, out, data, render_rows(["S", "f_S", "h_S"], rows))
    return 0


def cmd_hilbert(args, out):
    t = load_target(args)
    data, lines = {}, []
    if t.complex is not None and (t.coloring is not None or args.coloring == "trivial"):
        K, kappa = colored(t, args.coloring)
        num = hilbert_numerator_sr(K, kappa)
        one = num.specialize([1] * kappa.d)
        data["multigraded"] = {str(list(e)): c for e, c in sorted(num.coeffs.items())}
        data["standard"] = one.as_list()
        lines += [f"multigraded numerator over prod(1 - t_j): {num}", f"standard grading numerator over (1-t)^{kappa.d}: {one}"]
    if t.poset is not None or t.complex is not None:
        P = t.need_poset()
        num = hilbert_numerator_face_ring(P)
        series = expand_series(num, args.terms - 1) if args.terms > 0 else []
        data["face_ring"] = {"numerator": num.as_list(), "weights": list(num.weights), "series": series}
        rows = [[k, c] for k, c in enumerate(num.as_list())]
        lines.append(f"face ring numerator over prod_j (1 - t^j), j = 1..{P.d}: {num}")
        lines.append(render_rows(["degree", "coefficient"], rows).rstrip())
        lines.append(f"series: {series}")
    emit(args, out, data, "\n".join(lines))
    return 0


def parse_weights(text, d):
    if text == "ones":
        return [1] * d
    if text == "rank":
        return list(range(1, d + 1))
    try:
        w = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad weights {text!r}") from exc
    if len(w) != d:
        raise UsageError(f"need {d} weights, got {len(w)}")
    return w


def cmd_betti_gamma(args, out):
    t = load_target(args)
    field = parse_field(args.field)
    K, kappa = colored(t, args.coloring)
    table = gamma_tor_hochster(K, kappa, field)
    weights = args.weights or ("rank" if t.complex is None else "ones")
    flat = specialize_multigraded(table, parse_weights(weights, kappa.d))
    data = {"multigraded": table.to_json(), "specialized": flat.to_json(), "weights": weights}
    emit(args, out, data, render_betti(flat))
    return 0


def cmd_betti_theta(args, out):
    t = load_target(args)
    field = parse_field(args.field)
    table = theta_tor(t.need_poset(), field, args.max_degree)
    text = render_betti(table) + f"degree bound {table.bound}, {table.certification}\n"
    emit(args, out, table.to_json(), text)
    return 0


def cmd_depth(args, out):
    t = load_target(args)
    r = depth_report(t.need_poset(), parse_field(args.field), args.max_degree)
    emit(args, out, r.to_json(), r.summary())
    return 0 if r.agreement else 2


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("HOCHSTER_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"HOCHSTER_JOBS must be an integer, got {env!r}") from exc
    return 1


def cmd_conjecture(args, out):
    fields = [parse_field(f) for f in args.field.split(",")]
    instances = []
    if args.catalog == "all":
        instances = [Instance(e.name, e.poset) for e in cat.full_catalog()]
    elif args.catalog or args.input:
        t = load_target(args)
        instances = [Instance(t.name, t.need_poset())]
    if args.random:
        instances += random_instances(args.seed, args.random)
    if not instances:
        raise UsageError("give --catalog, --input or --random N")
    jobs = _jobs(args)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            res = batch(instances, fields, args.max_degree, pool.map)
    else:
        res = batch(instances, fields, args.max_degree)
    s = res["summary"]
    data = {
        "seed": args.seed,
        "summary": s,
        "reports": [r.to_json() for r in res["reports"]],
        "errors": res["errors"],
        "discrepancies": res["discrepancies"],
    }
    rows = [
        [r.instance, r.field, r.bound, r.verdict, r.inequality_ok, r.euler_theta and r.euler_gamma, r.murai_dims_ok]
        for r in res["reports"]
    ]
    text = render_rows(["instance", "field", "bound", "verdict", "inequality", "euler", "dims"], rows)
    text += f"{s['equal']} equal, {s['unequal']} unequal, {s['inconclusive']} inconclusive, {s['errors']} errors\n"
    for e in res["errors"]:
        text += f"error: {e['instance']} over field {e['field']}: {e['error']}\n"
    emit(args, out, data, text)
    if s["unequal"]:
        return 2
    if s["errors"] or s["inconclusive"]:
        return 1
    return 0


def cmd_sd(args, out):
    t = load_target(args)
    P = t.need_poset()
    sd, kappa = barycentric_subdivision(P)
    labels = sd_vertex_labels(P)
    data = {"complex": complex_to_json(sd), "coloring": coloring_to_json(kappa), "labels": {str(k): v for k, v in labels.items()}}
    lines = [f"vertex {v}: element {labels[v]} (color {kappa(v)})" for v in range(1, sd.n + 1)]
    lines += ["facets:"] + ["  " + " ".join(str(v) for v in f) for f in sd.facets]
    emit(args, out, data, "\n".join(lines))
    return 0


_TOKEN = re.compile(r"^(y|theta)(.+?)(?:\^(\d+))?$")


def parse_monomial(R, text: str) -> FacePolynomial:
    """``y12*y21^2*theta1`` style products; ``1`` is the unit."""
    result = R.one()
    for tok in text.replace(" ", "").split("*"):
        if tok in ("", "1"):
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise UsageError(f"cannot parse factor {tok!r}; use y<id>, theta<j> or a power like y1^2")
        kind, name, power = m.group(1), m.group(2), int(m.group(3) or 1)
        if kind == "theta":
            factor = R.theta(int(name))
        else:
            if name not in R.P.index:
                raise UsageError(f"no element {name!r} in the poset")
            factor = R.monomial([name])
        for _ in range(power):
            result = R.multiply(result, factor)
    return result


def cmd_ring(args, out):
    t = load_target(args)
    R = face_ring(t.need_poset(), parse_field(args.field))
    product = R.one()
    for expr in args.factors:
        product = R.multiply(product, parse_monomial(R, expr))
    terms = [
        {"monomial": R.format(m), "coefficient": str(c), "degree": R.degree(m), "multidegree": list(R.multidegree(m))}
        for m, c in sorted(product.terms.items(), key=lambda kv: (R.degree(kv[0]), kv[0]))
    ]
    emit(args, out, {"product": " * ".join(args.factors), "terms": terms}, R.format_poly(product))
    return 0


def cmd_catalog(args, out):
    if args.name:
        e = cat.parse_spec(args.name)
        data = {"name": e.name, "poset": poset_to_json(e.poset)}
        if e.complex is not None:
            data["complex"] = complex_to_json(e.complex)
            data["coloring"] = coloring_to_json(e.coloring)
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
        return 0
    entries = cat.full_catalog()
    if args.format == "json":
        out.write(json.dumps({"names": list(cat.NAMES), "instances": [e.name for e in entries]}, indent=2) + "\n")
    else:
        rows = [[e.name, len(e.poset), e.poset.d, "complex" if e.is_complex else "poset"] for e in entries]
        out.write(render_rows(["name", "elements", "d", "kind"], rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hochster", description="Betti tables, face rings and depth of simplicial posets")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="summary of an input object")
    add_input(p)
    p.set_defaults(fn=cmd_info)

    for name, fn, help_ in (("flags", cmd_flags, "flag f- and h-numbers"), ("hilbert", cmd_hilbert, "Hilbert series numerators")):
        p = sub.add_parser(name, help=help_)
        add_input(p, field=False)
        p.add_argument("--coloring", choices=("natural", "trivial"), default="natural")
        if name == "hilbert":
            p.add_argument("--terms", type=int, default=10, help="series coefficients to print")
        p.set_defaults(fn=fn)

    p = sub.add_parser("betti-gamma", help="Tor over the colorful parameters")
    add_input(p)
    p.add_argument("--coloring", choices=("natural", "trivial"), default="natural")
    p.add_argument("--weights", help="ones, rank, or comma-separated color degrees")
    p.set_defaults(fn=cmd_betti_gamma)

    p = sub.add_parser("betti-theta", help="Tor over the universal parameters")
    add_input(p)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(fn=cmd_betti_theta)

    p = sub.add_parser("depth", help="depth three ways")
    add_input(p)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(fn=cmd_depth)

    p = sub.add_parser("conjecture", help="compare theta and subdivision tables")
    p.add_argument("--catalog", help="catalog object or 'all'")
    p.add_argument("--input")
    p.add_argument("--field", default="0", help="comma-separated list, e.g. 0,2")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--random", type=int, default=0, metavar="N", help="add N random instances")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(fn=cmd_conjecture)

    p = sub.add_parser("sd", help="barycentric subdivision")
    add_input(p, field=False)
    p.set_defaults(fn=cmd_sd)

    p = sub.add_parser("ring", help="face ring arithmetic")
    rsub = p.add_subparsers(dest="op", required=True)
    q = rsub.add_parser("mul", help="multiply monomials and straighten")
    add_input(q)
    q.add_argument("factors", nargs="+", help="e.g. y1*y2 or theta1^2")
    q.set_defaults(fn=cmd_ring)

    p = sub.add_parser("catalog", help="list catalog objects or dump one as JSON")
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(fn=cmd_catalog)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.fn(args, out)
    except InequalityViolation as exc:
        err.write(f"error: proved inequality violated (implementation bug): {exc}\n")
        return 1
    except InvalidPosetError as exc:
        err.write("error: invalid simplicial poset: " + "; ".join(exc.violations) + "\n")
        return 1
    except ColoringError as exc:
        err.write(f"error: improper coloring: {exc}\n")
        return 1
    except (UsageError, *USER_ERRORS) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
