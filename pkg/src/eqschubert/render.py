"""Canonical text, JSON and CSV renderings.

Monomials always print in graded-lex descending order and coefficients
serialize as decimal strings, so every export is byte-stable for a fixed
input and code version.
"""

from __future__ import annotations

import csv
import io
import json

from .grass import Partition, default_d_max, enumerate_classes
from .polyring import Polynomial


def poly_text(p, symbol="x"):
    """Human-readable polynomial, e.g. ``2*x1^2*x2 + x3 - 1``."""
    items = p.canonical_terms()
    if not items:
        return "0"
    chunks = []
    for exps, c in items:
        factors = [
            "%s%d%s" % (symbol, i + 1, "^%d" % e if e > 1 else "")
            for i, e in enumerate(exps)
            if e
        ]
        body = "*".join(factors)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = "%d*%s" % (mag, body)
        chunks.append(("- " if c < 0 else "+ ") + text)
    first = chunks[0]
    out = ("-" + first[2:]) if first.startswith("- ") else first[2:]
    return " ".join([out] + chunks[1:])


def poly_json(p):
    """List of {"e": exponents, "c": coefficient-as-string} terms."""
    return [{"e": list(exps), "c": str(c)} for exps, c in p.canonical_terms()]


def poly_from_json(obj, nvars):
    return Polynomial.from_exponents(nvars, ((tuple(t["e"]), int(t["c"])) for t in obj))


def qelem_text(elem, symbol="x"):
    """Render a module element like ``s[2] + s[1,1] + (x2)*s[1] + q*s[]``."""
    items = elem.canonical_items()
    if not items:
        return "0"
    pieces = []
    for (w, d), c in items:
        label = "s[%s]" % ",".join(str(p) for p in w)
        q = "" if d == 0 else ("q" if d == 1 else "q^%d" % d)
        if c == 1:
            coeff = ""
        else:
            coeff = "(%s)" % poly_text(c, symbol)
        body = "*".join(x for x in (q, coeff, label) if x)
        pieces.append(body)
    return " + ".join(pieces)


def table_entries(ctx, d_max=None):
    """Canonical export rows for the full product table.

    One row per nonzero coefficient, pairs listed once with u <= v in the
    class order, sorted by (u, v, d, w).
    """
    from .quantum import eq_table

    if d_max is None:
        d_max = default_d_max(ctx)
    table = eq_table(ctx)
    classes = enumerate_classes(ctx)
    rows = []
    for i, u in enumerate(classes):
        for v in classes[i:]:
            elem = table.element(u, v)
            for (w, d), c in elem.canonical_items():
                if d <= d_max:
                    rows.append(
                        {
                            "u": list(u.parts),
                            "v": list(v.parts),
                            "w": list(w),
                            "d": d,
                            "poly": poly_json(c),
                        }
                    )
    return rows


def table_json(ctx, d_max=None):
    payload = {
        "k": ctx.k,
        "n": ctx.n,
        "d_max": default_d_max(ctx) if d_max is None else d_max,
        "variables": ctx.r,
        "entries": table_entries(ctx, d_max),
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def table_csv(ctx, d_max=None):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "v", "w", "d", "poly"])
    for row in table_entries(ctx, d_max):
        writer.writerow(
            [
                json.dumps(row["u"], separators=(",", ":")),
                json.dumps(row["v"], separators=(",", ":")),
                json.dumps(row["w"], separators=(",", ":")),
                row["d"],
                poly_text(poly_from_json(row["poly"], ctx.r)),
            ]
        )
    return buf.getvalue()


def restriction_table_json(ctx, family="schubert"):
    from .equivariant import fixed_points, restriction_table

    table = restriction_table(ctx, family)
    rows = [
        {
            "class": list(p.parts),
            "point": list(pt.subset),
            "poly": poly_json(table.restriction(p, pt)),
        }
        for p in enumerate_classes(ctx)
        for pt in fixed_points(ctx)
    ]
    payload = {"k": ctx.k, "n": ctx.n, "family": family, "entries": rows}
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def partition_argument(ctx, text):
    """Parse a partition given as a JSON array, e.g. ``[2,1]``."""
    parts = json.loads(text)
    if not isinstance(parts, list) or not all(isinstance(p, int) for p in parts):
        raise ValueError("expected a JSON array of integers")
    return Partition(tuple(parts), ctx)
