"""JSON encodings of complexes, colorings and simplicial posets."""
from __future__ import annotations

import json

from .complex import Coloring, SimplicialComplex
from .poset import SimplicialPoset, require_valid


class InputError(ValueError):
    """Malformed user input."""


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"n": K.n, "facets": [list(f) for f in K.facets]}


def complex_from_json(data) -> SimplicialComplex:
    if not isinstance(data, dict) or "n" not in data or "facets" not in data:
        raise InputError('a complex needs keys "n" and "facets"')
    n = _int(data["n"], "n")
    if n < 0:
        raise InputError(f"n must be non-negative, got {n}")
    facets = []
    for f in data["facets"]:
        if not isinstance(f, list):
            raise InputError(f"facet {f!r} is not a list")
        facets.append(tuple(sorted(_int(v, "vertex") for v in f)))
    try:
        return SimplicialComplex.from_faces(n, facets)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def coloring_to_json(c: Coloring) -> dict:
    return {"d": c.d, "colors": list(c.colors)}


def coloring_from_json(data) -> Coloring:
    if not isinstance(data, dict) or "d" not in data or "colors" not in data:
        raise InputError('a coloring needs keys "d" and "colors"')
    try:
        return Coloring(_int(data["d"], "d"), tuple(_int(c, "color") for c in data["colors"]))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def poset_to_json(P: SimplicialPoset) -> dict:
    return {
        "elements": [{"id": x, "rank": P.ranks[x]} for x in P.ids],
        "covers": [[a, b] for a, b in sorted(P.covers)],
    }


def poset_from_json(data, validate: bool = True) -> SimplicialPoset:
    if not isinstance(data, dict) or "elements" not in data or "covers" not in data:
        raise InputError('a poset needs keys "elements" and "covers"')
    ranks = {}
    for e in data["elements"]:
        if not isinstance(e, dict) or "id" not in e or "rank" not in e:
            raise InputError(f"element {e!r} needs keys id and rank")
        if str(e["id"]) in ranks:
            raise InputError(f"duplicate element id {e['id']!r}")
        ranks[str(e["id"])] = _int(e["rank"], "rank")
    covers = []
    for c in data["covers"]:
        if not isinstance(c, list) or len(c) != 2:
            raise InputError(f"cover {c!r} must be a pair of ids")
        a, b = (str(x) for x in c)
        for x in (a, b):
            if x not in ranks:
                raise InputError(f"cover mentions unknown element {x!r}")
        covers.append((a, b))
    try:
        P = SimplicialPoset.from_ranks_and_covers(ranks, covers)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if validate:
        require_valid(P)
    return P


def load(text: str) -> dict:
    """Parse a document holding any of ``complex``/``coloring``/``poset`` (or one bare object)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("top-level JSON value must be an object")
    out = {}
    if "facets" in data:
        out["complex"] = complex_from_json(data)
    elif "elements" in data:
        out["poset"] = poset_from_json(data)
    else:
        if "complex" in data:
            out["complex"] = complex_from_json(data["complex"])
        if "coloring" in data:
            out["coloring"] = coloring_from_json(data["coloring"])
        if "poset" in data:
            out["poset"] = poset_from_json(data["poset"])
    if "colors" in data and "d" in data:
        out["coloring"] = coloring_from_json(data)
    if not out:
        raise InputError("no complex, coloring or poset found in input")
    return out
