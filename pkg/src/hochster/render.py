"""Plain-text tables."""
from __future__ import annotations

from .koszul import BettiTable


def render_betti(table: BettiTable) -> str:
    """Macaulay2-style Betti table: row ``i``, column ``m`` holds entry ``(m, i + m)``."""
    if table.multigraded:
        raise ValueError("specialize a multigraded table before rendering it")
    if not table.entries:
        return "       0\ntotal: 0\n"
    ncols = max(m for m, _ in table.entries) + 1
    rows = sorted({D - m for m, D in table.entries})
    lo, hi = rows[0], rows[-1]
    totals = [0] * ncols
    for (m, _), v in table.entries.items():
        totals[m] += v
    cells = {}
    for i in range(lo, hi + 1):
        cells[i] = [str(table.get(m, i + m)) if table.get(m, i + m) else "." for m in range(ncols)]
    widths = [max([len(str(m)), len(str(totals[m]))] + [len(cells[i][m]) for i in cells]) for m in range(ncols)]

    def line(label, items):
        return f"{label:>6} " + " ".join(s.rjust(w) for s, w in zip(items, widths))

    out = [line("", [str(m) for m in range(ncols)]), line("total:", [str(t) for t in totals])]
    out += [line(f"{i}:", cells[i]) for i in range(lo, hi + 1)]
    return "\n".join(out) + "\n"


def render_rows(header: list, rows: list) -> str:
    """Right-aligned text table."""
    table = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[k]) for r in table) for k in range(len(header))]
    return "\n".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) for r in table) + "\n"
