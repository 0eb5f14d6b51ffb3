"""Invariant records for the building blocks and their F-tables.

An F-table for a factor ``X`` with an order-``d`` automorphism is a ``d x d``
grid of integral :class:`PuiseuxPoly` values.  Row ``k`` describes the fixed
locus of the ``k``-th power, column ``j`` the ``zeta^j`` eigenspace, and the
entry is the Hodge polynomial of that piece.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .algebra import ParamPoly, PuiseuxPoly, const, sym
from .errors import InvalidRecord, OutOfRange

ORDERS = (2, 3, 4, 6)

ELLIPTIC_FIX_COUNTS: dict[int, tuple[int, ...]] = {
    2: (4,),
    3: (3, 3),
    4: (2, 4, 2),
    6: (1, 3, 4, 3, 1),
}

# invariant names per order; "n" is optional for d = 6 (only one relation uses it)
K3_INVARIANTS: dict[int, tuple[str, ...]] = {
    2: ("r", "m", "N", "Nprime"),
    3: ("r", "m", "k", "gC", "h"),
    4: ("r", "m", "k", "gG", "n1", "n2", "N", "a", "b", "gD", "gDq"),
    6: ("r", "m", "alpha", "beta", "ell", "gD", "p25", "p34", "k", "b", "nprime",
        "gG", "gGq", "a", "N", "gF1", "gF2", "gF1q", "gF2q", "n"),
}
OPTIONAL_INVARIANTS = {6: frozenset({"n"})}
ALIASES = {"w": "nprime"}

K3_EULER = 24
ELLIPTIC_EULER = 0


def _check_order(d: int) -> None:
    if d not in ORDERS:
        raise InvalidRecord(f"order must be one of {ORDERS}, got {d!r}")


@dataclass(frozen=True)
class EllipticRecord:
    """Elliptic curve with an order-``d`` automorphism.

    ``fix_counts[k-1]`` is the number of points fixed by the ``k``-th power.
    """

    d: int
    fix_counts: tuple[int, ...]
    name: str = ""

    def __post_init__(self) -> None:
        _check_order(self.d)
        expected = ELLIPTIC_FIX_COUNTS[self.d]
        if tuple(self.fix_counts) != expected:
            raise InvalidRecord(
                f"elliptic fixed-point counts for d={self.d} must be {expected}, got {tuple(self.fix_counts)}"
            )

    @classmethod
    def standard(cls, d: int, name: str = "") -> EllipticRecord:
        _check_order(d)
        return cls(d, ELLIPTIC_FIX_COUNTS[d], name)

    kind = "elliptic"
    dim = 1


@dataclass(frozen=True)
class K3Record:
    """K3 surface with a purely non-symplectic automorphism of order ``d``.

    ``values`` maps every invariant name for the order to a :class:`ParamPoly`;
    a free symbol of the same name means "left symbolic".
    """

    d: int
    mode: str
    values: Mapping[str, ParamPoly] = field(hash=False)
    name: str = ""

    kind = "k3"
    dim = 2

    def __post_init__(self) -> None:
        _check_order(self.d)
        if self.mode not in ("numeric", "symbolic"):
            raise InvalidRecord(f"mode must be 'numeric' or 'symbolic', got {self.mode!r}")
        names = K3_INVARIANTS[self.d]
        unknown = set(self.values) - set(names)
        if unknown:
            raise InvalidRecord(f"unknown invariants for d={self.d}: {sorted(unknown)}")
        missing = [n for n in names if n not in self.values]
        if missing:
            raise InvalidRecord(f"missing invariants for d={self.d}: {missing}")
        if self.mode == "numeric":
            self._validate_numeric()

    def _validate_numeric(self) -> None:
        optional = OPTIONAL_INVARIANTS.get(self.d, frozenset())
        for name, v in self.values.items():
            if not v.is_constant():
                if name in optional and v == sym(name):
                    continue
                raise InvalidRecord(f"numeric record has non-numeric invariant {name} = {v}")
            c = v.constant()
            if c.denominator != 1 or c < 0:
                raise InvalidRecord(f"invariant {name} must be a non-negative integer, got {c}")
        rel = self.dimension_relation()
        if rel != 0:
            raise InvalidRecord(f"eigenspace dimensions do not add up to 22 (excess {rel})")
        if self.d == 4 and self.alpha_4.constant() < 0:
            raise InvalidRecord("22 - r - 2m must be non-negative for d=4")

    # access ---------------------------------------------------------------
    def __getitem__(self, name: str) -> ParamPoly:
        return self.values[ALIASES.get(name, name)]

    def get(self, name: str) -> ParamPoly:
        return self[name]

    @property
    def alpha_4(self) -> ParamPoly:
        return 22 - self["r"] - 2 * self["m"]

    def is_numeric(self) -> bool:
        return self.mode == "numeric"

    def env(self) -> dict[str, Fraction]:
        """Numeric values of every constant invariant (aliases included)."""
        out = {n: v.constant() for n, v in self.values.items() if v.is_constant()}
        for alias, target in ALIASES.items():
            if target in out:
                out[alias] = out[target]
        return out

    def eigendims(self) -> dict[int, ParamPoly]:
        """Dimension of the ``zeta^j`` eigenspace on the middle cohomology."""
        r, m = self["r"], self["m"]
        if self.d == 2:
            return {0: r, 1: m}
        if self.d == 3:
            return {0: r, 1: m, 2: m}
        if self.d == 4:
            return {0: r, 1: m, 2: self.alpha_4, 3: m}
        al, be = self["alpha"], self["beta"]
        return {0: r, 1: m, 2: al, 3: be, 4: al, 5: m}

    def dimension_relation(self) -> ParamPoly:
        """``sum of eigendims - 22``; zero for a genuine record."""
        return sum(self.eigendims().values(), ParamPoly()) - 22

    def reduce(self, expr: ParamPoly) -> ParamPoly:
        """Eliminate one free eigendimension using the dimension relation."""
        r, m = self["r"], self["m"]
        if self.d == 2 and m == sym("m"):
            return expr.subs({"m": 22 - r})
        if self.d == 3 and m == sym("m"):
            return expr.subs({"m": (22 - r) / 2})
        if self.d == 6 and self["beta"] == sym("beta"):
            return expr.subs({"beta": 22 - r - 2 * m - 2 * self["alpha"]})
        return expr

    def substitute(self, expr: ParamPoly) -> ParamPoly:
        """Replace record symbols in ``expr`` by this record's values."""
        env: dict[str, ParamPoly] = dict(self.values)
        env["w"] = self["nprime"] if "nprime" in self.values else sym("w")
        return expr.subs(env)

    def to_json(self) -> dict[str, Any]:
        inv: dict[str, Any] = {}
        for name in K3_INVARIANTS[self.d]:
            v = self.values[name]
            if v.is_constant():
                c = v.constant()
                inv[name] = int(c) if c.denominator == 1 else str(c)
            elif v == sym(name):
                inv[name] = None
            else:
                inv[name] = str(v)
        return {"kind": "k3", "d": self.d, "mode": self.mode, "invariants": inv}


def make_k3(d: int, mode: str = "numeric", name: str = "", **invariants: object) -> K3Record:
    """Build a :class:`K3Record`; absent or ``None`` invariants become symbols."""
    _check_order(d)
    values: dict[str, ParamPoly] = {}
    for key in invariants:
        if ALIASES.get(key, key) not in K3_INVARIANTS[d]:
            raise InvalidRecord(f"unknown invariant {key!r} for d={d}")
    for inv in K3_INVARIANTS[d]:
        raw = invariants.get(inv)
        if raw is None and inv == "nprime":
            raw = invariants.get("w")
        if raw is None:
            if mode == "numeric" and inv not in OPTIONAL_INVARIANTS.get(d, ()):
                raise InvalidRecord(f"numeric record is missing invariant {inv!r}")
            values[inv] = sym(inv)
        elif isinstance(raw, ParamPoly):
            values[inv] = raw
        elif isinstance(raw, bool) or not isinstance(raw, (int, Fraction)):
            raise InvalidRecord(f"invariant {inv!r} must be an integer or null, got {raw!r}")
        else:
            values[inv] = const(raw)
    return K3Record(d, mode, values, name)


def symbolic_k3(d: int, name: str = "") -> K3Record:
    return make_k3(d, "symbolic", name)


def record_from_json(obj: Mapping[str, Any]) -> K3Record | EllipticRecord:
    """Parse the record JSON layout ``{"kind", "d", "mode", "invariants"}``."""
    if not isinstance(obj, Mapping):
        raise InvalidRecord("record must be a JSON object")
    kind = obj.get("kind")
    d = obj.get("d")
    if not isinstance(d, int) or isinstance(d, bool):
        raise InvalidRecord("record field 'd' must be an integer")
    if kind == "elliptic":
        counts = obj.get("fixCounts", obj.get("fix_counts"))
        if counts is None:
            return EllipticRecord.standard(d, obj.get("name", ""))
        if isinstance(counts, Mapping):
            counts = [counts.get(str(k), counts.get(k)) for k in range(1, d)]
        if not isinstance(counts, list):
            raise InvalidRecord("fixCounts must be a list or object")
        return EllipticRecord(d, tuple(counts), obj.get("name", ""))
    if kind != "k3":
        raise InvalidRecord(f"record kind must be 'k3' or 'elliptic', got {kind!r}")
    mode = obj.get("mode", "numeric")
    inv = obj.get("invariants", {})
    if not isinstance(inv, Mapping):
        raise InvalidRecord("'invariants' must be an object")
    return make_k3(d, mode, obj.get("name", ""), **dict(inv))


# ---------------------------------------------------------------------------
# F-tables

X = PuiseuxPoly.X()
Y = PuiseuxPoly.Y()
XY = PuiseuxPoly.monomial(1, 1)
ONE = PuiseuxPoly.const(1)
ZERO = PuiseuxPoly()


def _curve(c0: object, genus: object, cxy: object) -> PuiseuxPoly:
    """``c0 + genus*(X+Y) + cxy*XY``."""
    return c0 * ONE + genus * (X + Y) + cxy * XY


@dataclass(frozen=True)
class FTable:
    d: int
    entries: tuple[tuple[PuiseuxPoly, ...], ...]
    name: str = ""

    def __post_init__(self) -> None:
        if len(self.entries) != self.d or any(len(row) != self.d for row in self.entries):
            raise InvalidRecord(f"F-table must be {self.d}x{self.d}")

    def entry(self, k: int, j: int) -> PuiseuxPoly:
        return self.entries[k][j]

    def column(self, j: int) -> tuple[PuiseuxPoly, ...]:
        return tuple(row[j] for row in self.entries)

    @property
    def dim(self) -> int:
        """2 for a surface, 1 for a curve (read off the top-degree class)."""
        return 2 if self.entries[0][0].coefficient(2, 2) != 0 else 1

    def map(self, fn) -> FTable:
        return FTable(self.d, tuple(tuple(fn(e) for e in row) for row in self.entries), self.name)


def _table(d: int, cells: Mapping[tuple[int, int], PuiseuxPoly], name: str = "") -> FTable:
    return FTable(d, tuple(tuple(cells.get((k, j), ZERO) for j in range(d)) for k in range(d)), name)


def ftable_elliptic(rec: EllipticRecord) -> FTable:
    d = rec.d
    c = rec.fix_counts
    cells: dict[tuple[int, int], PuiseuxPoly] = {(0, 0): ONE + XY}
    if d == 2:
        cells[(0, 1)] = X + Y
        cells[(1, 0)] = c[0] * ONE
    elif d == 3:
        cells.update({(0, 1): X, (0, 2): Y, (1, 0): c[0] * ONE, (2, 0): c[1] * ONE})
    elif d == 4:
        # the swapped pair f3, f4 gives one invariant and one zeta^2 class
        cells.update({(0, 1): X, (0, 3): Y, (1, 0): c[0] * ONE, (2, 0): ONE * 3,
                      (2, 2): ONE, (3, 0): c[2] * ONE})
    else:
        cells.update({
            (0, 1): X, (0, 5): Y,
            (1, 0): c[0] * ONE, (5, 0): c[4] * ONE,
            (2, 0): ONE * 2, (2, 3): ONE, (4, 0): ONE * 2, (4, 3): ONE,
            (3, 0): ONE * 2, (3, 2): ONE, (3, 4): ONE,
        })
    return _table(d, cells, rec.name)


def ftable_k3(rec: K3Record) -> FTable:
    v = rec
    d = rec.d
    r, m = v["r"], v["m"]
    X2, Y2, XY2 = X * X, Y * Y, XY * XY
    cells: dict[tuple[int, int], PuiseuxPoly] = {(0, 0): XY2 + r * XY + ONE}
    if d == 2:
        N, Np = v["N"], v["Nprime"]
        cells[(0, 1)] = X2 + Y2 + (m - 2) * XY
        cells[(1, 0)] = _curve(N, Np, N)
    elif d == 3:
        k, gC, h = v["k"], v["gC"], v["h"]
        cells[(0, 1)] = X2 + (m - 1) * XY
        cells[(0, 2)] = Y2 + (m - 1) * XY
        cells[(1, 0)] = _curve(k, gC, h + k)
        cells[(2, 0)] = _curve(k + h, gC, k)
    elif d == 4:
        k, gG, n12 = v["k"], v["gG"], v["n1"] + v["n2"]
        N, a, gD, gDq = v["N"], v["a"], v["gD"], v["gDq"]
        cells[(0, 1)] = X2 + (m - 1) * XY
        cells[(0, 2)] = rec.alpha_4 * XY
        cells[(0, 3)] = Y2 + (m - 1) * XY
        cells[(1, 0)] = _curve(k, gG, n12 + k)
        cells[(2, 0)] = _curve(N - a, gDq, N - a)
        cells[(2, 2)] = _curve(a, gD - gDq, a)
        cells[(3, 0)] = _curve(k + n12, gG, k)
    else:
        al, be, ell, gD = v["alpha"], v["beta"], v["ell"], v["gD"]
        p25, p34, k, b, npr = v["p25"], v["p34"], v["k"], v["b"], v["nprime"]
        gG, gGq, a, N = v["gG"], v["gGq"], v["a"], v["N"]
        gFq = v["gF1q"] + v["gF2q"]
        gF = v["gF1"] + v["gF2"]
        cells[(0, 1)] = X2 + (m - 1) * XY
        cells[(0, 2)] = al * XY
        cells[(0, 3)] = be * XY
        cells[(0, 4)] = al * XY
        cells[(0, 5)] = Y2 + (m - 1) * XY
        cells[(1, 0)] = _curve(ell, gD, ell + p25 + p34)
        cells[(2, 0)] = _curve(k - b, gGq, k - b + npr + p25)
        cells[(2, 3)] = _curve(b, gG - gGq, b + npr)
        cells[(3, 0)] = _curve(N - 2 * a, gFq, N - 2 * a)
        half = (gF - gFq) / 2
        cells[(3, 2)] = _curve(a, half, a)
        cells[(3, 4)] = _curve(a, half, a)
        cells[(4, 0)] = _curve(k - b + npr + p25, gGq, k - b)
        cells[(4, 3)] = _curve(b + npr, gG - gGq, b)
        cells[(5, 0)] = _curve(ell + p25 + p34, gD, ell)
    return _table(d, cells, rec.name)


def ftable(rec: K3Record | EllipticRecord) -> FTable:
    return ftable_k3(rec) if isinstance(rec, K3Record) else ftable_elliptic(rec)


# ---------------------------------------------------------------------------
# Euler characteristics of fixed loci


def fix_euler(rec: K3Record | EllipticRecord, k: int) -> ParamPoly:
    """Euler characteristic of the fixed locus of the ``k``-th power."""
    d = rec.d
    if not 1 <= k <= d - 1:
        raise OutOfRange(f"power must lie in 1..{d - 1}, got {k}")
    g = math.gcd(k, d)
    if isinstance(rec, EllipticRecord):
        return const(rec.fix_counts[g - 1])
    v = rec
    if d == 2:
        return 2 * v["N"] - 2 * v["Nprime"]
    if d == 3:
        return 2 * v["k"] - 2 * v["gC"] + v["h"]
    if d == 4:
        if g == 1:
            return 2 * v["k"] - 2 * v["gG"] + v["n1"] + v["n2"]
        return 2 * v["N"] - 2 * v["gD"]
    if g == 1:
        return 2 * v["ell"] - 2 * v["gD"] + v["p25"] + v["p34"]
    if g == 2:
        return 2 * v["k"] - 2 * v["gG"] + 2 * v["nprime"] + v["p25"]
    return 2 * v["N"] - 2 * v["gF1"] - 2 * v["gF2"]


def _pair_gcd(g: int, h: int, d: int) -> int:
    return math.gcd(math.gcd(g % d, h % d), d)


def elliptic_euler_pair(rec: EllipticRecord, g: int, h: int) -> int:
    t = _pair_gcd(g, h, rec.d)
    if t == rec.d:
        return ELLIPTIC_EULER
    return rec.fix_counts[t - 1]


def k3_euler_pair(rec: K3Record, g: int, h: int) -> ParamPoly:
    t = _pair_gcd(g, h, rec.d)
    if t == rec.d:
        return const(K3_EULER)
    return fix_euler(rec, t)


def euler_pair(rec: K3Record | EllipticRecord, g: int, h: int) -> ParamPoly:
    if isinstance(rec, K3Record):
        return k3_euler_pair(rec, g, h)
    return const(elliptic_euler_pair(rec, g, h))


def preset(name: str) -> K3Record | EllipticRecord:
    """Look up a bundled record by name."""
    from .presets import record_preset

    return record_preset(name)
