"""Bundled records and Z-tables.

Every preset is defined here in code.  The JSON files under ``data/`` are
exports of these definitions; setting ``CY_DATA_DIR`` makes lookups read
``<CY_DATA_DIR>/<name>.json`` first, which is how user-edited copies are
picked up.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from .errors import MissingFrobeniusData, UnknownPreset
from .geometry import EllipticRecord, K3Record, make_k3, record_from_json, symbolic_k3
from .weil import WeilMonomial, ZetaFactorSet, ZTable, ztable_from_cells

Payload = K3Record | EllipticRecord | ZTable

DATA_DIR = Path(__file__).with_name("data")


@dataclass(frozen=True)
class PresetEntry:
    name: str
    kind: str  # elliptic | k3 | ztable
    summary: str
    build: Callable[[], Payload]
    # (field, tag, note); tag is "source" for values read off the source
    # tables and "derived" for values obtained from an oracle
    provenance: tuple[tuple[str, str, str], ...] = ()
    d: int = 0

    @property
    def payload(self) -> Payload:
        return self.build()


def _z(*pairs: tuple[str, int]) -> ZetaFactorSet:
    return ZetaFactorSet.from_pairs(pairs)


def _cycle(a: int, q_exp: int, mult: int) -> list[tuple[WeilMonomial, int]]:
    """``(1 - (q^e T)^a)^mult`` split into linear factors over the a-th roots of unity."""
    return [(WeilMonomial(Fraction(q_exp), (), Fraction(k, a)), mult) for k in range(a)]


# ---------------------------------------------------------------------------
# records

S6_18 = dict(
    r=19, m=1, alpha=0, beta=1, ell=3, p25=9, p34=6, k=6, b=0, a=0, N=10, n=9,
    nprime=0, gD=0, gG=0, gGq=0, gF1=1, gF2=0, gF1q=0, gF2q=0,
)
S6_18_PROVENANCE = tuple(
    [(f, "source", "invariant table of surface no. 18") for f in
     ("r", "m", "n", "nprime", "k", "a", "p34", "p25", "ell", "N", "b", "alpha", "beta")]
    + [
        ("gD", "derived", "holomorphic Lefschetz residual 3+3l-3g(D)-p34/2-p25 = 0 with l=3, p34=6, p25=9"),
        ("gG", "derived", "relation (4') with the tabulated r, m, alpha, beta, k, nprime, p25"),
        ("gF1", "derived", "relation (5): g(F1)+g(F2) = 1; the split between F1 and F2 is arbitrary"),
        ("gF2", "derived", "relation (5): g(F1)+g(F2) = 1; the split between F1 and F2 is arbitrary"),
        ("gGq", "derived", "Riemann-Hurwitz for G/gamma^3 with g(G)=0"),
        ("gF1q", "derived", "Riemann-Hurwitz for F/gamma^2 with g(D)=0 and relation (10)"),
        ("gF2q", "derived", "Riemann-Hurwitz for F/gamma^2 with g(D)=0 and relation (10)"),
    ]
)

SIXLINES = dict(r=19, m=3, N=9, Nprime=0)
SIXLINES_PROVENANCE = (
    ("N", "derived", "nine fixed rational curves: sector (1,0) of the Z-table is 1/((1-T)^9(1-qT)^9)"),
    ("Nprime", "derived", "no fixed curve of positive genus: sector (1,0) carries no H^1 factor"),
    ("r", "derived", "r = 10 + N - N'"),
    ("m", "derived", "m = 22 - r"),
)


def record_s6_18() -> K3Record:
    return make_k3(6, "numeric", "s6-18", **S6_18)


def record_sixlines() -> K3Record:
    return make_k3(2, "numeric", "k3-sixlines", **SIXLINES)


# ---------------------------------------------------------------------------
# Z-tables

E2_CASES: dict[str, ZetaFactorSet] = {
    "all-rational": _z(("1", -4)),
    "two-rational": _z(("1", -3), ("-1", -1)),
    "one-rational": _z(("1", -2), ("zeta^(1/3)", -1), ("zeta^(2/3)", -1)),
}


def ztable_e2(case: str | None) -> ZTable:
    if case is None:
        raise MissingFrobeniusData(
            f"zeta-e2 needs a 2-torsion case selector, one of {sorted(E2_CASES)}")
    if case not in E2_CASES:
        raise UnknownPreset(f"unknown zeta-e2 case {case!r}; expected one of {sorted(E2_CASES)}")
    return ztable_from_cells(2, {
        (0, 0): _z(("1", -1), ("q", -1)),
        (0, 1): _z(("alpha_q", 1), ("alpha_q_bar", 1)),
        (1, 0): E2_CASES[case],
    }, f"zeta-e2:{case}")


def ztable_sixlines() -> ZTable:
    return ztable_from_cells(2, {
        (0, 0): _z(("1", -1), ("q", -19), ("q^2", -1)),
        (0, 1): _z(("gamma_q*q", -1), ("gamma_q*pi^2", -1), ("gamma_q*pi_bar^2", -1)),
        (1, 0): _z(("1", -9), ("q", -9)),
    }, "zeta-sixlines")


def ztable_s2_generic(cycles: list[int] | None) -> ZTable:
    """Generic order-2 K3 with Frobenius permuting curves in cycles ``a_1..a_s``.

    The anti-invariant column and the genus contribution of the fixed curve are
    not determined by cycle data and are left as 1.
    """
    if not cycles:
        raise MissingFrobeniusData("zeta-s2-generic needs Frobenius cycle lengths, e.g. zeta-s2-generic:1+1+2")
    if any(a < 1 for a in cycles):
        raise MissingFrobeniusData(f"cycle lengths must be positive, got {cycles}")
    c00: list[tuple[WeilMonomial, int]] = [(WeilMonomial(), -1), (WeilMonomial.q(1), -1), (WeilMonomial.q(2), -1)]
    c10: list[tuple[WeilMonomial, int]] = [(WeilMonomial(), -1), (WeilMonomial.q(1), -1)]
    for a in cycles:
        c00 += _cycle(a, 1, -1)
        c10 += _cycle(a, 0, -1) + _cycle(a, 1, -1)
    label = "+".join(map(str, cycles))
    return ztable_from_cells(2, {
        (0, 0): ZetaFactorSet.from_pairs(c00),
        (1, 0): ZetaFactorSet.from_pairs(c10),
    }, f"zeta-s2-generic:{label}")


def ztable_s6_18() -> ZTable:
    return ztable_from_cells(6, {
        (0, 0): _z(("1", -1), ("q", -19), ("q^2", -1)),
        (0, 1): _z(("beta_q", -1)),
        (0, 3): _z(("c_q*q", -1)),
        (0, 5): _z(("beta_q_bar", -1)),
        (1, 0): _z(("1", -3), ("q", -18)),
        (2, 0): _z(("1", -6), ("q", -15)),
        (3, 0): _z(("1", -10), ("q", -10)),
        (3, 2): _z(("delta_q", 1)),
        (3, 4): _z(("delta_q_bar", 1)),
        (4, 0): _z(("1", -15), ("q", -6)),
        (5, 0): _z(("1", -18), ("q", -3)),
    }, "zeta-s6-18")


def ztable_e6() -> ZTable:
    return ztable_from_cells(6, {
        (0, 0): _z(("1", -1), ("q", -1)),
        (0, 1): _z(("alpha_q", 1)),
        (0, 5): _z(("alpha_q_bar", 1)),
        (1, 0): _z(("1", -1)),
        (2, 0): _z(("1", -2)), (2, 3): _z(("1", -1)),
        (3, 0): _z(("1", -2)), (3, 2): _z(("1", -1)), (3, 4): _z(("1", -1)),
        (4, 0): _z(("1", -2)), (4, 3): _z(("1", -1)),
        (5, 0): _z(("1", -1)),
    }, "zeta-e6")


# ---------------------------------------------------------------------------
# catalogue

_PRESETS: dict[str, PresetEntry] = {}


def _add(entry: PresetEntry) -> None:
    _PRESETS[entry.name] = entry


for _d in (2, 3, 4, 6):
    _add(PresetEntry(f"e{_d}", "elliptic", f"elliptic curve with an order-{_d} automorphism",
                     (lambda d=_d: EllipticRecord.standard(d, f"e{d}")), d=_d))
for _d in (2, 3, 4, 6):
    _add(PresetEntry(f"k3-generic-{_d}", "k3", f"symbolic K3 surface, order {_d}",
                     (lambda d=_d: symbolic_k3(d, f"k3-generic-{d}")), d=_d))
_add(PresetEntry("s6-18", "k3", "K3 surface no. 18 with an order-6 automorphism",
                 record_s6_18, S6_18_PROVENANCE, d=6))
_add(PresetEntry("k3-sixlines", "k3", "double cover of the plane branched along six lines (Z-table: zeta-sixlines)",
                 record_sixlines, SIXLINES_PROVENANCE, d=2))
for _case in E2_CASES:
    _add(PresetEntry(f"zeta-e2:{_case}", "ztable", f"order-2 elliptic curve, 2-torsion case {_case}",
                     (lambda c=_case: ztable_e2(c)), d=2))
_add(PresetEntry("zeta-sixlines", "ztable", "six-lines K3 surface", ztable_sixlines,
                 (("gamma_q", "source", "printed as y_q in the resulting zeta function; identified with gamma_q"),), d=2))
_add(PresetEntry("zeta-s6-18", "ztable", "K3 surface no. 18", ztable_s6_18,
                 (("c_q", "source", "registered as self-conjugate of order 2"),), d=6))
_add(PresetEntry("zeta-e6", "ztable", "order-6 elliptic curve y^2 = x^3 + 1", ztable_e6, d=6))

PARAMETRIC = {
    "zeta-e2": "needs a case selector: all-rational, two-rational or one-rational",
    "zeta-s2-generic": "needs Frobenius cycle lengths, e.g. zeta-s2-generic:1+1+2",
}


def list_presets() -> list[tuple[str, str, str]]:
    return [(e.name, e.kind, e.summary) for e in sorted(_PRESETS.values(), key=lambda e: e.name)]


def preset_entry(name: str) -> PresetEntry:
    try:
        return _PRESETS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}") from None


def _user_file(name: str) -> Path | None:
    root = os.environ.get("CY_DATA_DIR")
    if not root:
        return None
    path = Path(root) / f"{name.replace(':', '_')}.json"
    return path if path.is_file() else None


def payload_from_json(obj: dict[str, Any]) -> Payload:
    if obj.get("kind") == "ztable":
        return ZTable.from_json(obj)
    return record_from_json(obj)


def load_preset(name: str) -> Payload:
    """Resolve a preset name (parametric names included)."""
    user = _user_file(name)
    if user is not None:
        return payload_from_json(json.loads(user.read_text()))
    base, _, arg = name.partition(":")
    if base == "zeta-e2":
        return ztable_e2(arg or None)
    if base == "zeta-s2-generic":
        try:
            cycles = [int(x) for x in arg.split("+")] if arg else None
        except ValueError:
            raise MissingFrobeniusData(f"bad cycle lengths {arg!r}") from None
        return ztable_s2_generic(cycles)
    return preset_entry(name).payload


def record_preset(name: str) -> K3Record | EllipticRecord:
    p = load_preset(name)
    if isinstance(p, ZTable):
        raise UnknownPreset(f"{name!r} is a Z-table, not a record")
    return p


def ztable_preset(name: str) -> ZTable:
    p = load_preset(name)
    if not isinstance(p, ZTable):
        raise UnknownPreset(f"{name!r} is a record, not a Z-table")
    return p


def preset_json(name: str) -> dict[str, Any]:
    entry = preset_entry(name)
    payload = entry.payload
    if isinstance(payload, ZTable):
        out = payload.to_json()
    elif isinstance(payload, EllipticRecord):
        out = {"schema": "cy/1", "kind": "elliptic", "d": payload.d, "name": payload.name,
               "fixCounts": list(payload.fix_counts)}
    else:
        out = {"schema": "cy/1", "name": payload.name, **payload.to_json()}
    if entry.provenance:
        out["provenance"] = [{"field": f, "tag": t, "note": n} for f, t, n in entry.provenance]
    return out


def export_presets(directory: Path = DATA_DIR) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(_PRESETS):
        path = directory / f"{name.replace(':', '_')}.json"
        path.write_text(json.dumps(preset_json(name), indent=2, ensure_ascii=False, sort_keys=False) + "\n")
        written.append(path)
    return written
