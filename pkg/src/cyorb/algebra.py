"""Exact arithmetic kernel.

Three value types live here:

* :class:`ParamPoly` -- sparse polynomials with rational coefficients in named
  invariant symbols (``r``, ``m``, ``N``, ``gD``, ...).
* :class:`PuiseuxPoly` -- polynomials in ``X`` and ``Y`` whose exponents are
  multiples of ``1/D`` and whose coefficients are :class:`ParamPoly`.
* :class:`CyclotomicNumber` -- elements of ``Q(zeta_d)`` for ``d`` in
  ``{2, 3, 4, 6}``, stored in the power basis below ``phi(d)``.

All values are immutable; every operation returns a fresh object.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import MissingSymbol

Rational = Fraction
Number = Union[int, Fraction]

# Symbol registry: interned names in a stable order used for display.
_NAMES: list[str] = []
_INDEX: dict[str, int] = {}

DEFAULT_SYMBOLS = (
    "r", "m", "alpha", "beta", "ell", "p25", "p34", "k", "b", "nprime", "a",
    "N", "Nprime", "gD", "gDq", "gG", "gGq", "gF1", "gF2", "gF1q", "gF2q",
    "gC", "h", "n1", "n2", "w", "n",
)

LATEX_NAMES = {
    "alpha": r"\alpha", "beta": r"\beta", "ell": r"\ell",
    "p25": "p_{(2,5)}", "p34": "p_{(3,4)}", "nprime": "n'", "Nprime": "N'",
    "gD": "g(D)", "gDq": r"g(D/\gamma)", "gG": "g(G)", "gGq": r"g(G/\gamma)",
    "gF1": "g(F_1)", "gF2": "g(F_2)", "gF1q": r"g(F_1/\gamma)",
    "gF2q": r"g(F_2/\gamma)", "gC": "g(C)", "n1": "n_1", "n2": "n_2",
}


def intern(name: str) -> int:
    """Return the registry index of ``name``, registering it if new."""
    idx = _INDEX.get(name)
    if idx is None:
        if not name or not name.replace("_", "").isalnum():
            raise ValueError(f"invalid symbol name {name!r}")
        idx = len(_NAMES)
        _NAMES.append(name)
        _INDEX[name] = idx
    return idx


def registered_symbols() -> tuple[str, ...]:
    return tuple(_NAMES)


for _name in DEFAULT_SYMBOLS:
    intern(_name)


Monomial = tuple  # tuple of (registry index, exponent) sorted by index


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for i, e in b:
        exps[i] = exps.get(i, 0) + e
    return tuple(sorted(exps.items()))


def _mono_key(mono: Monomial) -> tuple:
    # graded lex, highest first; constants sort last
    vec = [0] * len(_NAMES)
    for i, e in mono:
        vec[i] = e
    return (-sum(e for _, e in mono), [-v for v in vec])


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class ParamPoly:
    """Polynomial over ``Q`` in registered invariant symbols."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None) -> None:
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[mono] = c
        self._terms = clean
        self._hash: int | None = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, value: Number) -> ParamPoly:
        return cls({(): value})

    @classmethod
    def symbol(cls, name: str) -> ParamPoly:
        return cls({((intern(name), 1),): 1})

    @classmethod
    def _from_clean(cls, terms: dict[Monomial, Fraction]) -> ParamPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[str, Fraction]:
        return {self._mono_str(m): c for m, c in self._terms.items()}

    def items(self) -> Iterator[tuple[dict[str, int], Fraction]]:
        for mono, c in self._terms.items():
            yield {_NAMES[i]: e for i, e in mono}, c

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant(self) -> Fraction:
        """The value of a constant polynomial; ``ValueError`` otherwise."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def symbols(self) -> set[str]:
        return {_NAMES[i] for m in self._terms for i, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    def coefficient_of(self, name: str) -> Fraction:
        """Coefficient of the linear monomial ``name``."""
        return self._terms.get(((intern(name), 1),), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: object) -> ParamPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return ParamPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> ParamPoly:
        return ParamPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> ParamPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> ParamPoly:
        return (-self) + other

    def __mul__(self, other: object) -> ParamPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamPoly()
            return ParamPoly._from_clean({m: c * other for m, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return ParamPoly({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> ParamPoly:
        if isinstance(other, ParamPoly):
            other = other.constant()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of ParamPoly by zero")
        inv = 1 / Fraction(other)
        return self * inv

    def __pow__(self, n: int) -> ParamPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # substitution -------------------------------------------------------
    def subs(self, env: Mapping[str, object]) -> ParamPoly:
        """Partial substitution; symbols absent from ``env`` stay free."""
        values = {intern(k): _coerce(v) for k, v in env.items()}
        result = ParamPoly()
        for mono, c in self._terms.items():
            term = ParamPoly.const(c)
            rest = []
            for i, e in mono:
                if i in values:
                    term = term * values[i] ** e
                else:
                    rest.append((i, e))
            result = result + term * ParamPoly({tuple(rest): 1})
        return result

    def evaluate(self, env: Mapping[str, Number]) -> Fraction:
        total = Fraction(0)
        for mono, c in self._terms.items():
            v = c
            for i, e in mono:
                name = _NAMES[i]
                if name not in env:
                    raise MissingSymbol(name)
                v *= Fraction(env[name]) ** e
            total += v
        return total

    # comparison ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # display ------------------------------------------------------------
    @staticmethod
    def _mono_str(mono: Monomial, latex: bool = False) -> str:
        parts = []
        for i, e in mono:
            name = LATEX_NAMES.get(_NAMES[i], _NAMES[i]) if latex else _NAMES[i]
            if e == 1:
                parts.append(name)
            else:
                parts.append(f"{name}^{{{e}}}" if latex else f"{name}^{e}")
        return (" " if latex else "*").join(parts)

    def _ordered(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (mono, c) in enumerate(self._ordered()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = _fmt_frac(mag)
            elif mag == 1:
                body = self._mono_str(mono)
            else:
                body = f"{_fmt_frac(mag)}*{self._mono_str(mono)}"
            if idx == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (mono, c) in enumerate(self._ordered()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mag.denominator == 1:
                num = str(mag.numerator)
            else:
                num = rf"\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
            if not mono:
                body = num
            elif mag == 1:
                body = self._mono_str(mono, latex=True)
            else:
                body = f"{num}\\,{self._mono_str(mono, latex=True)}"
            out.append(body if idx == 0 and sign == "+" else
                       (f"-{body}" if idx == 0 else f" {sign} {body}"))
        return "".join(out)

    def __repr__(self) -> str:
        return f"ParamPoly({str(self)!r})"


def _coerce(x: object) -> ParamPoly:
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return ParamPoly.const(x)
    return NotImplemented  # type: ignore[return-value]


def sym(name: str) -> ParamPoly:
    return ParamPoly.symbol(name)


def const(value: Number) -> ParamPoly:
    return ParamPoly.const(value)


def param_arith(a: ParamPoly, b: ParamPoly, op: str) -> ParamPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unsupported operation {op!r}")


def param_eval(a: ParamPoly, env: Mapping[str, Number]) -> Fraction:
    return a.evaluate(env)


# ---------------------------------------------------------------------------
# Puiseux polynomials in X, Y


class PuiseuxPoly:
    """``sum c * X^(xnum/D) * Y^(ynum/D)`` with :class:`ParamPoly` coefficients.

    The shared denominator is kept in lowest terms, so two equal values always
    have identical ``denom`` and ``terms``.
    """

    __slots__ = ("denom", "_terms")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None, denom: int = 1) -> None:
        if denom < 1:
            raise ValueError("denominator must be positive")
        clean: dict[tuple[int, int], ParamPoly] = {}
        for (xn, yn), c in (terms or {}).items():
            if xn < 0 or yn < 0:
                raise ValueError("exponents must be non-negative")
            c = _coerce(c)
            if c is NotImplemented:
                raise TypeError(f"bad coefficient {c!r}")
            if c:
                key = (xn, yn)
                clean[key] = clean[key] + c if key in clean else c
                if not clean[key]:
                    del clean[key]
        g = denom
        for xn, yn in clean:
            g = math.gcd(g, xn, yn)
            if g == 1:
                break
        if g > 1:
            clean = {(xn // g, yn // g): c for (xn, yn), c in clean.items()}
            denom //= g
        self.denom = denom
        self._terms = clean

    @classmethod
    def const(cls, c: object) -> PuiseuxPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, xnum: int, ynum: int, denom: int = 1, coeff: object = 1) -> PuiseuxPoly:
        return cls({(xnum, ynum): coeff}, denom)

    @classmethod
    def X(cls) -> PuiseuxPoly:
        return cls.monomial(1, 0)

    @classmethod
    def Y(cls) -> PuiseuxPoly:
        return cls.monomial(0, 1)

    @classmethod
    def xy_root(cls, m: int, d: int) -> PuiseuxPoly:
        """``(XY)^(m/d)``."""
        return cls.monomial(m, m, d)

    @property
    def terms(self) -> dict[tuple[int, int], ParamPoly]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Fraction, Fraction, ParamPoly]]:
        for (xn, yn), c in self._terms.items():
            yield Fraction(xn, self.denom), Fraction(yn, self.denom), c

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_integral(self) -> bool:
        return self.denom == 1

    def _rescaled(self, denom: int) -> dict[tuple[int, int], ParamPoly]:
        f = denom // self.denom
        return {(xn * f, yn * f): c for (xn, yn), c in self._terms.items()}

    def __add__(self, other: object) -> PuiseuxPoly:
        other = _coerce_puiseux(other)
        if other is NotImplemented:
            return NotImplemented
        L = math.lcm(self.denom, other.denom)
        out = self._rescaled(L)
        for k, c in other._rescaled(L).items():
            out[k] = out[k] + c if k in out else c
        return PuiseuxPoly(out, L)

    __radd__ = __add__

    def __neg__(self) -> PuiseuxPoly:
        return PuiseuxPoly({k: -c for k, c in self._terms.items()}, self.denom)

    def __sub__(self, other: object) -> PuiseuxPoly:
        other = _coerce_puiseux(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> PuiseuxPoly:
        return (-self) + other

    def __mul__(self, other: object) -> PuiseuxPoly:
        other = _coerce_puiseux(other)
        if other is NotImplemented:
            return NotImplemented
        L = math.lcm(self.denom, other.denom)
        a = self._rescaled(L)
        b = other._rescaled(L)
        out: dict[tuple[int, int], ParamPoly] = {}
        for (x1, y1), c1 in a.items():
            for (x2, y2), c2 in b.items():
                k = (x1 + x2, y1 + y2)
                prod = c1 * c2
                out[k] = out[k] + prod if k in out else prod
        return PuiseuxPoly(out, L)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PuiseuxPoly:
        return puiseux_pow(self, n)

    def __eq__(self, other: object) -> bool:
        other = _coerce_puiseux(other)
        if other is NotImplemented:
            return NotImplemented
        return self.denom == other.denom and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.denom, frozenset(self._terms.items())))

    def map_coefficients(self, fn) -> PuiseuxPoly:
        return PuiseuxPoly({k: fn(c) for k, c in self._terms.items()}, self.denom)

    def subs(self, env: Mapping[str, object]) -> PuiseuxPoly:
        return self.map_coefficients(lambda c: c.subs(env))

    def swap_xy(self) -> PuiseuxPoly:
        return PuiseuxPoly({(y, x): c for (x, y), c in self._terms.items()}, self.denom)

    def integral_part(self) -> PuiseuxPoly:
        return integral_part(self)

    def coefficient(self, p: int, q: int) -> ParamPoly:
        return coefficient(self, p, q)

    def evaluate_xy(self, x: complex, y: complex) -> complex:
        """Numeric evaluation (principal roots); constant coefficients only."""
        total = 0j
        for ex, ey, c in self.items():
            total += float(c.constant()) * (complex(x) ** float(ex)) * (complex(y) ** float(ey))
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (xn, yn), c in sorted(self._terms.items(), key=lambda kc: (kc[0][0] + kc[0][1], kc[0])):
            mono = []
            for var, num in (("X", xn), ("Y", yn)):
                if num == 0:
                    continue
                e = Fraction(num, self.denom)
                mono.append(var if e == 1 else f"{var}^({_fmt_frac(e)})" if e.denominator > 1 else f"{var}^{e}")
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if len(c._terms) > 1 else cs)
            elif c == 1:
                parts.append("*".join(mono))
            else:
                parts.append(f"({cs})*" + "*".join(mono) if len(c._terms) > 1 else f"{cs}*" + "*".join(mono))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PuiseuxPoly({str(self)!r})"


def _coerce_puiseux(x: object) -> PuiseuxPoly:
    if isinstance(x, PuiseuxPoly):
        return x
    p = _coerce(x)
    if p is NotImplemented:
        return NotImplemented  # type: ignore[return-value]
    return PuiseuxPoly.const(p)


def puiseux_arith(a: PuiseuxPoly, b: PuiseuxPoly, op: str) -> PuiseuxPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unsupported operation {op!r}")


def puiseux_pow(a: PuiseuxPoly, n: int) -> PuiseuxPoly:
    if not isinstance(n, int) or n < 0:
        raise ValueError("exponent must be a non-negative integer")
    result = PuiseuxPoly.const(1)
    base = a
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def integral_part(a: PuiseuxPoly) -> PuiseuxPoly:
    """Keep only terms whose X and Y exponents are both integers."""
    D = a.denom
    return PuiseuxPoly(
        {(xn // D, yn // D): c for (xn, yn), c in a._terms.items() if xn % D == 0 and yn % D == 0}
    )


def coefficient(a: PuiseuxPoly, p: int, q: int) -> ParamPoly:
    return a._terms.get((p * a.denom, q * a.denom), ParamPoly())


# ---------------------------------------------------------------------------
# Cyclotomic numbers

# coordinates of zeta_d^k in the basis {1, zeta_d, ..., zeta_d^(phi(d)-1)}
_POWERS: dict[int, tuple[tuple[int, ...], ...]] = {
    2: ((1,), (-1,)),
    3: ((1, 0), (0, 1), (-1, -1)),
    4: ((1, 0), (0, 1), (-1, 0), (0, -1)),
    6: ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)),
}

SUPPORTED_ORDERS = tuple(sorted(_POWERS))


def euler_phi(d: int) -> int:
    return len(_POWERS[d][0])


class CyclotomicNumber:
    """Element of ``Q(zeta_d)``; coordinates may be rationals or :class:`ParamPoly`."""

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords: Iterable[object]) -> None:
        if order not in _POWERS:
            raise ValueError(f"cyclotomic order {order} not supported")
        coords = tuple(coords)
        if len(coords) != euler_phi(order):
            raise ValueError(f"expected {euler_phi(order)} coordinates, got {len(coords)}")
        self.order = order
        self.coords = tuple(_norm_coord(c) for c in coords)

    @classmethod
    def from_rational(cls, order: int, value: object) -> CyclotomicNumber:
        return cls(order, (value,) + (0,) * (euler_phi(order) - 1))

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> CyclotomicNumber:
        return cls(order, _POWERS[order][k % order])

    def _check(self, other: object) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError("cyclotomic orders differ")
            return other
        if isinstance(other, (int, Fraction, ParamPoly)):
            return CyclotomicNumber.from_rational(self.order, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> CyclotomicNumber:
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(self.order, (a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, (-a for a in self.coords))

    def __sub__(self, other: object) -> CyclotomicNumber:
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> CyclotomicNumber:
        return (-self) + other

    def __mul__(self, other: object) -> CyclotomicNumber:
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        powers = _POWERS[self.order]
        phi = len(self.coords)
        out: list[object] = [0] * phi
        for i, a in enumerate(self.coords):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coords):
                if _is_zero(b):
                    continue
                ab = a * b
                for t, z in enumerate(powers[i + j]):
                    if z:
                        out[t] = out[t] + z * ab
        return CyclotomicNumber(self.order, out)

    __rmul__ = __mul__

    def conjugate(self) -> CyclotomicNumber:
        powers = _POWERS[self.order]
        d = self.order
        out: list[object] = [0] * len(self.coords)
        for i, a in enumerate(self.coords):
            for t, z in enumerate(powers[(-i) % d]):
                if z:
                    out[t] = out[t] + z * a
        return CyclotomicNumber(self.order, out)

    def norm(self) -> object:
        """Field norm down to ``Q`` (the product with the complex conjugate)."""
        n = self * self.conjugate()
        if any(not _is_zero(c) for c in n.coords[1:]):
            raise ArithmeticError("norm is not rational")  # unreachable for d <= 6
        return n.coords[0]

    def inverse(self) -> CyclotomicNumber:
        n = self.norm()
        if isinstance(n, ParamPoly):
            if not n.is_constant():
                raise TypeError("cannot invert a cyclotomic number with symbolic coordinates")
            n = n.constant()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        return self.conjugate() * Fraction(1, 1) * (1 / Fraction(n))

    def __truediv__(self, other: object) -> CyclotomicNumber:
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> CyclotomicNumber:
        return self._check(other) * self.inverse()

    def __pow__(self, n: int) -> CyclotomicNumber:
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicNumber.from_rational(self.order, 1)
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coords)

    def is_rational(self) -> bool:
        return all(_is_zero(c) for c in self.coords[1:])

    def rational_part(self) -> object:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        total = 0j
        for i, c in enumerate(self.coords):
            if isinstance(c, ParamPoly):
                c = c.constant()
            total += float(c) * z**i
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and all(
                _coerce(a) == _coerce(b) for a, b in zip(self.coords, other.coords)
            )
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self == CyclotomicNumber.from_rational(self.order, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, tuple(_coerce(c) for c in self.coords)))

    def __str__(self) -> str:
        out = ""
        for i, c in enumerate(self.coords):
            if _is_zero(c):
                continue
            z = "" if i == 0 else (f"z{self.order}" if i == 1 else f"z{self.order}^{i}")
            if isinstance(c, Fraction):
                sign, mag = ("-" if c < 0 else "+"), abs(c)
                body = _fmt_frac(mag) if not z else (z if mag == 1 else f"{_fmt_frac(mag)}*{z}")
            else:
                sign, body = "+", f"({c})" + (f"*{z}" if z else "")
            if not out:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out or "0"

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.order}, {self.coords!r})"


def _norm_coord(c: object) -> object:
    if isinstance(c, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, ParamPoly) and c.is_constant():
        return c.constant()
    if isinstance(c, (Fraction, ParamPoly)):
        return c
    raise TypeError(f"bad cyclotomic coordinate {c!r}")


def _is_zero(c: object) -> bool:
    return (not c) if not isinstance(c, ParamPoly) else c.is_zero()


def cyclo_arith(a: CyclotomicNumber, b: CyclotomicNumber, op: str) -> CyclotomicNumber:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unsupported operation {op!r}")
