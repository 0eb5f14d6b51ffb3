"""Command-line front end: ``cyorb {hodge,euler,zeta,relations,presets}``.

Exit codes: 0 success, 2 usage, 3 validation, 4 Weil-symbol registry conflict.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .algebra import ParamPoly
from .arith import check_relations, stringy_euler
from .errors import (
    CyError,
    InvalidRecord,
    MissingFrobeniusData,
    PreconditionViolated,
    RegistryConflict,
    SpecError,
    TooFewFactors,
    UnknownPreset,
)
from .geometry import EllipticRecord, K3Record
from .hodge import (
    RECURRENCES,
    HodgeDiamond,
    euler_characteristic,
    euler_sequence,
    factor_tables,
    hodge_diamond,
    recurrence_check,
    y_factors,
)
from .presets import list_presets, load_preset, payload_from_json
from .weil import (
    ZTable,
    betti_by_weight,
    euler_from_zeta,
    orbifold_zeta,
    render_notes,
    zf_render,
)

SCHEMA = "cy/1"

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_REGISTRY = 0, 2, 3, 4


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# factor specs


@dataclass(frozen=True)
class FactorSpec:
    source: str  # preset | file
    target: str
    count: int = 1

    def label(self) -> str:
        base = f"{self.source}:{self.target}"
        return base if self.count == 1 else f"{base}*{self.count}"


def parse_factor_spec(text: str) -> list[FactorSpec]:
    """``"preset:s6-18,preset:e6*2,file:k3.json"`` into specs."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise SpecError(f"empty item in factor spec {text!r}")
        count = 1
        head, star, tail = item.rpartition("*")
        if star:
            if not tail.isdigit() or int(tail) < 1:
                raise SpecError(f"repetition must be a positive integer in {item!r}")
            item, count = head, int(tail)
        source, colon, target = item.partition(":")
        if not colon or source not in ("preset", "file") or not target:
            raise SpecError(f"factor {item!r} must look like preset:NAME or file:PATH")
        out.append(FactorSpec(source, target, count))
    return out


def _load(spec: FactorSpec) -> Any:
    if spec.source == "preset":
        return load_preset(spec.target)
    path = Path(spec.target)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidRecord(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(obj, dict):
        raise InvalidRecord(f"{path}: top-level JSON value must be an object")
    return payload_from_json(obj)


def load_factors(text: str) -> list[Any]:
    items: list[Any] = []
    for spec in parse_factor_spec(text):
        payload = _load(spec)
        items.extend([payload] * spec.count)
    return items


def _records(items: list[Any], d: int) -> list[K3Record | EllipticRecord]:
    for it in items:
        if isinstance(it, ZTable):
            raise UsageError(f"{it.name or 'Z-table'} is a Z-table; use the zeta command")
        if it.d != d:
            raise UsageError(f"factor {it.name or it.kind} has order {it.d}, but --d is {d}")
    return items


def _ztables(items: list[Any], d: int) -> list[ZTable]:
    for it in items:
        if not isinstance(it, ZTable):
            raise UsageError(f"{it.name or it.kind} is a record, not a Z-table")
        if it.d != d:
            raise UsageError(f"Z-table {it.name} has order {it.d}, but --d is {d}")
    return items


def _single_k3(text: str) -> K3Record:
    items = load_factors(text)
    if len(items) != 1 or not isinstance(items[0], K3Record):
        raise UsageError("--k3 must name exactly one K3 record")
    return items[0]


# ---------------------------------------------------------------------------
# rendering helpers


def _num(p: ParamPoly) -> Any:
    """JSON value of a polynomial: an int when possible, else its string form."""
    if p.is_constant():
        c = p.constant()
        return int(c) if c.denominator == 1 else str(c)
    return str(p)


def diamond_rows(diamond: HodgeDiamond) -> list[list[tuple[int, int]]]:
    """Index pairs of the rows of the displayed diamond, top (p+q = 2n) first."""
    n = diamond.dim
    rows = []
    for s in range(2 * n, -1, -1):
        rows.append([(p, s - p) for p in range(min(n, s), max(0, s - n) - 1, -1)])
    return rows


def diamond_text(diamond: HodgeDiamond) -> str:
    rows = diamond_rows(diamond)
    cells = [[str(diamond.h(p, q)) for p, q in row] for row in rows]
    width = max(len(c) for row in cells for c in row)
    lines = ["   ".join(t.center(width) for t in texts) for texts in cells]
    full = max(len(line) for line in lines)
    return "\n".join(line.center(full).rstrip() for line in lines)


def diamond_latex(diamond: HodgeDiamond, euler: ParamPoly) -> str:
    n = diamond.dim
    cols = 2 * n + 1
    body = []
    for row in diamond_rows(diamond):
        cells = [""] * cols
        for p, q in row:
            cells[n + q - p] = diamond.h(p, q).to_latex()
        body.append(" & ".join(cells) + r" \\")
    return "\n".join([
        r"\documentclass{standalone}",
        r"\begin{document}",
        r"$\begin{array}{" + "c" * cols + "}",
        *body,
        r"\end{array}$",
        rf"\quad $e = {euler.to_latex()}$",
        r"\end{document}",
    ])


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str, latex: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, ensure_ascii=False))
    elif args.format == "latex":
        if latex is None:
            raise UsageError(f"{payload['command']} has no LaTeX output")
        print(latex)
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands


def cmd_hodge(args: argparse.Namespace) -> int:
    records = _records(load_factors(args.factors), args.d)
    diamond = hodge_diamond(factor_tables(records))
    e = euler_characteristic(diamond)
    payload = {
        "command": "hodge", "d": args.d, "factors": [r.name or r.kind for r in records],
        "dim": diamond.dim,
        "hodge": [[_num(x) for x in row] for row in diamond.entries],
        "euler": _num(e),
    }
    text = f"{diamond_text(diamond)}\n\ne = {e}"
    _emit(args, payload, text, diamond_latex(diamond, e))
    return EXIT_OK


def cmd_euler(args: argparse.Namespace) -> int:
    k3 = _single_k3(args.k3) if args.k3 else None
    if k3 is not None and k3.d != args.d:
        raise UsageError(f"--k3 record has order {k3.d}, but --d is {args.d}")
    if args.nmax < 1:
        raise UsageError("--nmax must be at least 1")
    rows = []
    diamond_vals = euler_sequence(args.d, k3, args.nmax) if args.method in ("diamond", "both") else None
    for n in range(1, args.nmax + 1):
        row: dict[str, Any] = {"n": n}
        if diamond_vals is not None:
            row["diamond"] = diamond_vals[n - 1]
        if args.method in ("stringy", "both"):
            if n == 1:
                row["stringy"] = diamond_vals[0] if diamond_vals else (
                    ParamPoly.const(24) if k3 is not None else ParamPoly.const(0))
            else:
                row["stringy"] = stringy_euler(y_factors(args.d, k3, n), args.d)
        if args.method == "both":
            diff = row["diamond"] - row["stringy"]
            row["agree"] = (k3.reduce(diff) if k3 is not None else diff) == 0
        rows.append(row)

    recurrence: dict[str, Any] | None = None
    if args.d in RECURRENCES and args.nmax >= len(RECURRENCES[args.d]) + 1:
        rep = recurrence_check(args.d, k3, args.nmax)
        recurrence = {
            "coefficients": list(rep.coefficients),
            "holds": rep.holds,
            "residuals": [{"n": i + 1, "residual": _num(r)} for i, r in rep.residuals],
        }

    label = "Y" if k3 is not None else "X"
    cols = [c for c in ("diamond", "stringy") if c in rows[0]]
    lines = [f"e({label}_{{{args.d},n}})  " + "  ".join(cols) + ("  agree" if args.method == "both" else "")]
    for row in rows:
        cells = [f"n={row['n']}"] + [str(row[c]) for c in cols]
        if "agree" in row:
            cells.append("yes" if row["agree"] else "NO")
        lines.append("  ".join(cells))
    if recurrence is not None:
        lines.append(f"recurrence {tuple(recurrence['coefficients'])}: "
                     + ("holds" if recurrence["holds"] else "fails"))
    elif args.d in RECURRENCES:
        lines.append(f"recurrence not checked (needs --nmax >= {len(RECURRENCES[args.d]) + 1})")

    payload: dict[str, Any] = {
        "command": "euler", "d": args.d, "k3": k3.name if k3 is not None else None,
        "method": args.method,
        "values": [{k: (_num(v) if isinstance(v, ParamPoly) else v) for k, v in row.items()} for row in rows],
    }
    if recurrence is not None:
        payload["recurrence"] = recurrence
    latex = None
    if args.format == "latex":
        body = [rf"{row['n']} & " + " & ".join(f"${row[c].to_latex()}$" for c in cols) + r" \\" for row in rows]
        latex = "\n".join([
            r"\documentclass{standalone}", r"\begin{document}",
            r"\begin{tabular}{" + "c" * (len(cols) + 1) + "}",
            "$n$ & " + " & ".join(cols) + r" \\ \hline", *body,
            r"\end{tabular}", r"\end{document}",
        ])
    _emit(args, payload, "\n".join(lines), latex)
    return EXIT_OK


def cmd_zeta(args: argparse.Namespace) -> int:
    tables = _ztables(load_factors(args.factors), args.d)
    z = orbifold_zeta(tables)
    style = args.style
    text = zf_render(z, style)
    notes = render_notes(z)
    payload: dict[str, Any] = {
        "command": "zeta", "d": args.d, "factors": [t.name for t in tables], "style": style,
        "zeta": z.to_json(), "rendered": text, "euler": euler_from_zeta(z),
        "betti": {str(w): b for w, b in betti_by_weight(z).items()},
    }
    if notes:
        payload["notes"] = notes
    out = text + "".join(f"\nnote: {n}" for n in notes)
    latex_style = "paired-latex" if style == "paired" else "latex"
    latex = "\n".join([
        r"\documentclass{standalone}", r"\begin{document}",
        f"$Z_q(T) = {zf_render(z, latex_style)}$", r"\end{document}",
    ])
    _emit(args, payload, out, latex)
    return EXIT_OK


def cmd_relations(args: argparse.Namespace) -> int:
    rec = _single_k3(args.k3)
    report = check_relations(rec)
    width = max(len(e.id) for e in report.entries)
    lines = [f"{e.id.ljust(width)}  {e.verdict:<12}  {e.lhs}" + (f"  ({e.note})" if e.note else "")
             for e in report.entries]
    payload = {"command": "relations", "d": rec.d, "k3": rec.name, **report.to_json()}
    latex = "\n".join([
        r"\documentclass{standalone}", r"\begin{document}", r"\begin{tabular}{lll}",
        *[rf"{e.id} & {e.verdict} & ${e.lhs.to_latex()}$ \\" for e in report.entries],
        r"\end{tabular}", r"\end{document}",
    ])
    _emit(args, payload, "\n".join(lines), latex)
    return EXIT_OK


def cmd_presets(args: argparse.Namespace) -> int:
    entries = list_presets()
    payload = {"command": "presets",
               "presets": [{"name": n, "kind": k, "summary": s} for n, k, s in entries]}
    width = max(len(n) for n, _, _ in entries)
    text = "\n".join(f"{n.ljust(width)}  {k:<8}  {s}" for n, k, s in entries)
    _emit(args, payload, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyorb", description="Hodge numbers, Euler numbers and zeta "
                                     "functions of generalized Borcea-Voisin quotients.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    def order(p: argparse.ArgumentParser) -> None:
        p.add_argument("--d", type=int, required=True, choices=(2, 3, 4, 6), help="order of the automorphism")

    p = sub.add_parser("hodge", help="orbifold Hodge diamond of a product quotient")
    order(p)
    p.add_argument("--factors", required=True, help='e.g. "preset:s6-18,preset:e6*2" or "file:k3.json"')
    fmt(p)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("euler", help="Euler numbers of Y_{d,n} (with --k3) or X_{d,n}")
    order(p)
    p.add_argument("--k3", help="K3 record spec; omit for pure elliptic products")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--method", choices=("diamond", "stringy", "both"), default="both")
    fmt(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("zeta", help="zeta function from Z-tables")
    order(p)
    p.add_argument("--factors", required=True, help='e.g. "preset:zeta-s6-18,preset:zeta-e6"')
    p.add_argument("--style", choices=("linear", "paired"), default="paired")
    fmt(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("relations", help="check the invariant relations of a K3 record")
    p.add_argument("--k3", required=True)
    fmt(p)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("presets", help="list bundled presets")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_presets)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RegistryConflict as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REGISTRY
    except (UsageError, SpecError, UnknownPreset, TooFewFactors, MissingFrobeniusData,
            PreconditionViolated) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
