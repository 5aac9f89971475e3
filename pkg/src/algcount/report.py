"""Serialization of count reports, class tables and transversals.

Big integers go out as decimal strings so no JSON consumer loses
precision.  Field elements are ints over prime fields and coefficient
lists (constant term first) over extension fields.
"""

from __future__ import annotations

import csv
import io
import json

from .burnside import CountReport, FixClassRecord
from .field import FieldCtx, make_field
from .group import format_key, similarity_key
from .matrix import MatF

CLASS_COLUMNS = ["invariant_factors", "class_size", "fix_dim", "contribution"]


def element_out(ctx: FieldCtx, a: int):
    return a if ctx.e == 1 else list(ctx.to_coeffs(a))


def element_in(ctx: FieldCtx, obj) -> int:
    return obj if ctx.e == 1 else ctx.from_coeffs(obj)


def matrix_out(m: MatF) -> list:
    return [[element_out(m.ctx, x) for x in m.row(i)] for i in range(m.rows)]


def matrix_in(ctx: FieldCtx, rows) -> MatF:
    return MatF.from_rows(ctx, [[element_in(ctx, x) for x in r] for r in rows])


def _class_dict(ctx: FieldCtx, rec: FixClassRecord) -> dict:
    return {
        "invariant_factors": format_key(ctx, rec.key),
        "class_size": str(rec.class_size),
        "fix_dim": rec.fix_dim,
        "contribution": str(rec.contribution),
        "representative": matrix_out(rec.representative),
    }


def histogram_dict(report: CountReport) -> dict:
    return {str(k): str(v) for k, v in report.histogram().items()}


def report_to_dict(report: CountReport) -> dict:
    ctx = make_field(report.p, report.e)
    return {
        "p": report.p,
        "e": report.e,
        "q": report.q,
        "n": report.n,
        "group_order": str(report.group_order),
        "burnside_sum": str(report.burnside_sum),
        "orbit_count": str(report.orbit_count),
        "lower_bound": {"num": str(report.lower_bound_num), "den": str(report.lower_bound_den)},
        "filter": report.filter,
        "classes": [_class_dict(ctx, rec) for rec in report.class_table],
        "histogram": histogram_dict(report),
    }


def report_from_dict(d: dict) -> CountReport:
    ctx = make_field(d["p"], d["e"])
    records = []
    for c in d["classes"]:
        rep = matrix_in(ctx, c["representative"])
        size = int(c["class_size"])
        records.append(FixClassRecord(
            key=similarity_key(rep),
            representative=rep,
            class_size=size,
            fix_dim=c["fix_dim"],
            fixed_count=int(c["contribution"]) // size,
        ))
    return CountReport(
        p=d["p"], e=d["e"], q=d["q"], n=d["n"],
        group_order=int(d["group_order"]),
        burnside_sum=int(d["burnside_sum"]),
        orbit_count=int(d["orbit_count"]),
        lower_bound_num=int(d["lower_bound"]["num"]),
        lower_bound_den=int(d["lower_bound"]["den"]),
        filter=d["filter"],
        class_table=records,
    )


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def report_to_json(report: CountReport) -> str:
    return dumps(report_to_dict(report))


def report_from_json(text: str) -> CountReport:
    return report_from_dict(json.loads(text))


def classes_to_csv(report: CountReport) -> str:
    ctx = make_field(report.p, report.e)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CLASS_COLUMNS)
    for rec in report.class_table:
        w.writerow([";".join(format_key(ctx, rec.key)), rec.class_size,
                    rec.fix_dim, rec.contribution])
    return buf.getvalue()


def _class_table_text(report: CountReport) -> list:
    ctx = make_field(report.p, report.e)
    rows = [("invariant factors", "size", "fix_dim", "contribution")]
    for rec in report.class_table:
        rows.append((", ".join(format_key(ctx, rec.key)), str(rec.class_size),
                     str(rec.fix_dim), str(rec.contribution)))
    widths = [max(len(r[k]) for r in rows) for k in range(4)]
    return [
        "  ".join([r[0].ljust(widths[0])] + [r[k].rjust(widths[k]) for k in range(1, 4)])
        for r in rows
    ]


def report_to_text(report: CountReport) -> str:
    head = f"n = {report.n} over F_{report.q}"
    if report.filter:
        head += f", filter = {report.filter}"
    lines = [
        head,
        f"|GL_{report.n}(F_{report.q})| = {report.group_order}",
        f"Burnside sum   = {report.burnside_sum}",
        f"orbit count    = {report.orbit_count}",
        f"lower bound    = {report.lower_bound_num}/{report.lower_bound_den}",
        "",
    ]
    lines += _class_table_text(report)
    return "\n".join(lines) + "\n"


def fixdim_table_to_dict(report: CountReport) -> dict:
    d = report_to_dict(report)
    keys = ("p", "e", "q", "n", "group_order", "classes", "histogram")
    return {k: d[k] for k in keys}


def fixdim_table_to_text(report: CountReport) -> str:
    lines = [f"similarity classes of GL_{report.n}(F_{report.q})", ""]
    lines += _class_table_text(report)
    lines += ["", "fix_dim  matrices"]
    lines += [f"{k:>7}  {v}" for k, v in report.histogram().items()]
    return "\n".join(lines) + "\n"


def tensor_record(t, index: int) -> dict:
    ctx = t.ctx
    return {
        "index": index,
        "mats": [matrix_out(m) for m in t.mats],
        "products": [[[element_out(ctx, x) for x in t.product(i, j)]
                      for j in range(t.n)] for i in range(t.n)],
    }


def transversal_to_dict(ctx: FieldCtx, n: int, reps: list) -> dict:
    return {
        "p": ctx.p, "e": ctx.e, "q": ctx.q, "n": n,
        "count": len(reps),
        "representatives": [tensor_record(t, k) for k, t in enumerate(reps)],
    }


def transversal_to_csv(ctx: FieldCtx, n: int, reps: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "mats", "products"])
    for k, t in enumerate(reps):
        rec = tensor_record(t, k)
        w.writerow([k, json.dumps(rec["mats"], separators=(",", ":")),
                    json.dumps(rec["products"], separators=(",", ":"))])
    return buf.getvalue()


def transversal_to_text(ctx: FieldCtx, n: int, reps: list) -> str:
    lines = [f"{len(reps)} isomorphism classes of {n}-dimensional algebras over F_{ctx.q}"]
    s = ctx.element_str
    for k, t in enumerate(reps):
        lines.append("")
        lines.append(f"#{k}")
        for i in range(n):
            for j in range(n):
                prod = t.product(i, j)
                terms = [f"{s(c)}*e{m + 1}" if c != 1 else f"e{m + 1}"
                         for m, c in enumerate(prod) if c]
                lines.append(f"  e{i + 1}e{j + 1} = {' + '.join(terms) or '0'}")
    return "\n".join(lines) + "\n"
