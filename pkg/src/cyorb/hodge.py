"""Orbifold Hodge numbers of diagonal quotients of products.

The generating polynomial of ``(X_1 x ... x X_n) / G`` with
``G = {g in Z_d^n : sum g_i = 0}`` is

    sum_j  prod_i  sum_m (XY)^(m/d) * F_i[m][j]

and the Hodge numbers are the coefficients of its integral part.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import CyclotomicNumber, ParamPoly, PuiseuxPoly, const, integral_part
from .errors import InvalidRecord, PreconditionViolated, TooFewFactors
from .geometry import EllipticRecord, FTable, K3Record, ftable

# printed linear recurrences: a_n = sum_i c_i * a_(n-i)
RECURRENCES: dict[int, tuple[int, ...]] = {
    6: (12, -19, -12, 20),
    4: (9, 1, -9),
    3: (7, 8),
}


def sector_sum(table: FTable, j: int) -> PuiseuxPoly:
    if not 0 <= j < table.d:
        raise ValueError(f"eigenvalue index must lie in 0..{table.d - 1}")
    total = PuiseuxPoly()
    for m in range(table.d):
        e = table.entries[m][j]
        if e:
            total = total + PuiseuxPoly.xy_root(m, table.d) * e
    return total


def _check_tables(tables: Sequence[FTable]) -> int:
    if len(tables) < 2:
        raise TooFewFactors(f"need at least two factors, got {len(tables)}")
    ds = {t.d for t in tables}
    if len(ds) != 1:
        raise InvalidRecord(f"all factors must share the same order, got {sorted(ds)}")
    return ds.pop()


def _grouped(tables: Sequence[FTable]) -> list[tuple[FTable, int]]:
    groups: list[tuple[FTable, int]] = []
    for t in tables:
        for idx, (u, c) in enumerate(groups):
            if u is t or u.entries == t.entries:
                groups[idx] = (u, c + 1)
                break
        else:
            groups.append((t, 1))
    return groups


def orbifold_poincare(tables: Sequence[FTable]) -> PuiseuxPoly:
    """Unfiltered generating polynomial (fractional exponents included)."""
    d = _check_tables(tables)
    groups = _grouped(tables)
    total = PuiseuxPoly()
    for j in range(d):
        prod = PuiseuxPoly.const(1)
        for t, count in groups:
            s = sector_sum(t, j)
            if not s:
                prod = PuiseuxPoly()
                break
            prod = prod * s**count
        total = total + prod
    return total


@dataclass(frozen=True)
class HodgeDiamond:
    dim: int
    entries: tuple[tuple[ParamPoly, ...], ...]

    def h(self, p: int, q: int) -> ParamPoly:
        if not (0 <= p <= self.dim and 0 <= q <= self.dim):
            return ParamPoly()
        return self.entries[p][q]

    def is_numeric(self) -> bool:
        return all(e.is_constant() for row in self.entries for e in row)

    def numeric(self) -> list[list[int]]:
        return [[int(e.constant()) for e in row] for row in self.entries]

    def map(self, fn) -> HodgeDiamond:
        return HodgeDiamond(self.dim, tuple(tuple(fn(e) for e in row) for row in self.entries))

    def symmetric(self) -> bool:
        n = self.dim
        return all(
            self.h(p, q) == self.h(q, p) and self.h(p, q) == self.h(n - p, n - q)
            for p in range(n + 1)
            for q in range(n + 1)
        )


def diamond_from_poly(poly: PuiseuxPoly, dim: int) -> HodgeDiamond:
    filtered = integral_part(poly)
    for (p, q), c in filtered.terms.items():
        if p > dim or q > dim:
            raise ArithmeticError(f"term X^{p}Y^{q} exceeds dimension {dim}")
    entries = tuple(
        tuple(filtered.coefficient(p, q) for q in range(dim + 1)) for p in range(dim + 1)
    )
    diamond = HodgeDiamond(dim, entries)
    if diamond.is_numeric():
        for row in entries:
            for e in row:
                c = e.constant()
                if c.denominator != 1 or c < 0:
                    raise InvalidRecord(f"record data produce a non-integral Hodge number {c}")
    return diamond


def hodge_diamond(tables: Sequence[FTable]) -> HodgeDiamond:
    poly = orbifold_poincare(tables)
    return diamond_from_poly(poly, sum(t.dim for t in tables))


def euler_characteristic(diamond: HodgeDiamond) -> ParamPoly:
    total = ParamPoly()
    for p, row in enumerate(diamond.entries):
        for q, e in enumerate(row):
            total = total + e if (p + q) % 2 == 0 else total - e
    return total


def factor_tables(records: Iterable[K3Record | EllipticRecord]) -> list[FTable]:
    return [ftable(r) for r in records]


def y_factors(d: int, k3: K3Record | None, n: int) -> list[K3Record | EllipticRecord]:
    """``[S, E, ..., E]`` (n factors) or ``n`` elliptic curves when ``k3`` is None."""
    e = EllipticRecord.standard(d, f"e{d}")
    return ([k3] + [e] * (n - 1)) if k3 is not None else [e] * n


def euler_sequence(d: int, k3: K3Record | None, nmax: int) -> list[ParamPoly]:
    """``[e(n=1), ..., e(n=nmax)]`` from diamonds (n=1 is the factor itself)."""
    e_elliptic = EllipticRecord.standard(d)
    seq = [const(24) if k3 is not None else const(0)]
    tables = factor_tables(y_factors(d, k3, 1))
    elliptic_table = ftable(e_elliptic)
    for _ in range(2, nmax + 1):
        tables = tables + [elliptic_table]
        seq.append(euler_characteristic(hodge_diamond(tables)))
    return seq


@dataclass(frozen=True)
class RecurrenceReport:
    d: int
    coefficients: tuple[int, ...]
    values: tuple[ParamPoly, ...]  # a_0 .. a_(nmax-1); a_i = e(n = i + 1)
    residuals: tuple[tuple[int, ParamPoly], ...]

    @property
    def holds(self) -> bool:
        return all(r == 0 for _, r in self.residuals)


def recurrence_check(d: int, k3: K3Record | None, nmax: int) -> RecurrenceReport:
    """Compare the Euler sequence with the printed recurrence for order ``d``."""
    if d not in RECURRENCES:
        raise PreconditionViolated(f"no printed recurrence for d={d}")
    coeffs = RECURRENCES[d]
    order = len(coeffs)
    if nmax < order + 1:
        raise PreconditionViolated(f"nmax must be at least {order + 1} for d={d}")
    values = euler_sequence(d, k3, nmax)
    residuals = []
    for i in range(order, len(values)):
        res = values[i] - sum((c * values[i - 1 - t] for t, c in enumerate(coeffs)), ParamPoly())
        if k3 is not None:
            res = k3.reduce(res)
        residuals.append((i, res))
    return RecurrenceReport(d, coeffs, tuple(values), tuple(residuals))


# ---------------------------------------------------------------------------
# eigenspace decomposition of invariants


def eigenspace_invariant_dim(dims: Sequence[Mapping[int, int]], d: int) -> int:
    """``sum_j prod_i dim(V_i)_{zeta^j}``."""
    return sum(
        _prod(int(v.get(j, 0)) for v in dims) for j in range(d)
    )


def character_invariant_dim(dims: Sequence[Mapping[int, int]], d: int) -> Fraction:
    """Average of the character of ``V_1 (x) ... (x) V_n`` over ``G_{d,n}``."""
    n = len(dims)
    zeta = [CyclotomicNumber.zeta(d, k) for k in range(d)]
    total = CyclotomicNumber.from_rational(d, 0)
    count = 0
    for g in itertools.product(range(d), repeat=n):
        if sum(g) % d:
            continue
        count += 1
        term = CyclotomicNumber.from_rational(d, 1)
        for gi, v in zip(g, dims):
            tr = CyclotomicNumber.from_rational(d, 0)
            for j, mult in v.items():
                if mult:
                    tr = tr + zeta[(j * gi) % d] * mult
            term = term * tr
        total = total + term
    avg = total * Fraction(1, count)
    return Fraction(avg.rational_part())


def _prod(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out
