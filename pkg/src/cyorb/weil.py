"""Zeta functions as signed multisets of Frobenius eigenvalues.

A :class:`ZetaFactorSet` stands for ``prod (1 - lambda*T)^mult``; positive
multiplicities sit in the numerator.  Each eigenvalue is a
:class:`WeilMonomial` ``root * q^e * prod s_i^k_i`` where ``root`` is an
explicit root of unity (stored as a fraction of a turn) and the ``s_i`` are
formal Weil symbols.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .errors import NonUnitConstantTerm, RegistryConflict, RenderError, TooFewFactors

# ---------------------------------------------------------------------------
# symbols


@dataclass(frozen=True)
class WeilSymbol:
    name: str
    conjugate: str
    weight: int = 0
    trace_name: str | None = None
    order: int | None = None
    display: str | None = None
    latex: str | None = None
    note: str | None = None

    @property
    def label(self) -> str:
        return self.display or self.name

    @property
    def tex(self) -> str:
        return self.latex or self.label

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "conjugate": self.conjugate, "weight": self.weight}
        for key in ("trace_name", "order", "display", "latex", "note"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> WeilSymbol:
        return cls(
            name=obj["name"], conjugate=obj.get("conjugate", obj["name"]),
            weight=int(obj.get("weight", 0)), trace_name=obj.get("trace_name"),
            order=obj.get("order"), display=obj.get("display"), latex=obj.get("latex"),
            note=obj.get("note"),
        )


class WeilRegistry:
    """Append-only table of Weil symbols; conjugation must be an involution."""

    def __init__(self, symbols: Iterable[WeilSymbol] = ()) -> None:
        self._symbols: dict[str, WeilSymbol] = {}
        self._order: dict[str, int] = {}
        pending = list(symbols)
        for s in pending:
            self._add(s)
        self.validate()

    def _add(self, s: WeilSymbol) -> None:
        old = self._symbols.get(s.name)
        if old is not None:
            if old != s:
                raise RegistryConflict(f"symbol {s.name!r} already declared with different attributes")
            return
        if s.name == s.conjugate and s.weight != 0:
            raise RegistryConflict(f"self-conjugate symbol {s.name!r} must have weight 0")
        self._symbols[s.name] = s
        self._order[s.name] = len(self._order)

    def register(self, *symbols: WeilSymbol) -> None:
        for s in symbols:
            self._add(s)
        self.validate()

    def validate(self) -> None:
        for s in self._symbols.values():
            partner = self._symbols.get(s.conjugate)
            if partner is None:
                raise RegistryConflict(f"conjugate {s.conjugate!r} of {s.name!r} is not declared")
            if partner.conjugate != s.name:
                raise RegistryConflict(f"conjugation is not an involution on {s.name!r}")
            if partner.weight != s.weight or partner.order != s.order:
                raise RegistryConflict(f"{s.name!r} and its conjugate disagree on weight or order")

    def __getitem__(self, name: str) -> WeilSymbol:
        try:
            return self._symbols[name]
        except KeyError:
            raise RegistryConflict(f"undeclared Weil symbol {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._symbols

    def rank(self, name: str) -> int:
        return self._order[name]

    def symbols(self) -> list[WeilSymbol]:
        return list(self._symbols.values())


DEFAULT_SYMBOLS = (
    WeilSymbol("alpha_q", "alpha_q_bar", 1, "a_q", display="α_q", latex=r"\alpha_q"),
    WeilSymbol("alpha_q_bar", "alpha_q", 1, "a_q", display="ᾱ_q", latex=r"\bar{\alpha}_q"),
    WeilSymbol("beta_q", "beta_q_bar", 2, "b_q", display="β_q", latex=r"\beta_q"),
    WeilSymbol("beta_q_bar", "beta_q", 2, "b_q", display="β̄_q", latex=r"\bar{\beta}_q"),
    WeilSymbol("delta_q", "delta_q_bar", 1, "d_q", display="δ_q", latex=r"\delta_q"),
    WeilSymbol("delta_q_bar", "delta_q", 1, "d_q", display="δ̄_q", latex=r"\bar{\delta}_q"),
    WeilSymbol("pi", "pi_bar", 1, "t_π", display="π", latex=r"\pi"),
    WeilSymbol("pi_bar", "pi", 1, "t_π", display="π̄", latex=r"\bar{\pi}"),
    WeilSymbol("gamma_q", "gamma_q", 0, order=2, display="y_q", latex="y_q"),
    WeilSymbol("c_q", "c_q", 0, order=2, display="c_q", latex="c_q", note="declared self-conjugate"),
)

REGISTRY = WeilRegistry(DEFAULT_SYMBOLS)


# ---------------------------------------------------------------------------
# monomials

_SUP = str.maketrans("0123456789-/", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻ᐟ")


def _sup(e: int | Fraction) -> str:
    if e == 1:
        return ""
    return str(e).translate(_SUP) if Fraction(e).denominator == 1 else f"^({e})"


@dataclass(frozen=True, order=False)
class WeilMonomial:
    """``exp(2 pi i root) * q^q_exp * prod sym^k``."""

    q_exp: Fraction = Fraction(0)
    syms: tuple[tuple[str, int], ...] = ()
    root: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "q_exp", Fraction(self.q_exp))
        object.__setattr__(self, "root", Fraction(self.root) % 1)
        object.__setattr__(self, "syms", _canon_syms(dict(self.syms)))

    @classmethod
    def q(cls, e: int | Fraction = 1) -> WeilMonomial:
        return cls(Fraction(e))

    @classmethod
    def of(cls, q_exp: int | Fraction = 0, root: int | Fraction = 0, **syms: int) -> WeilMonomial:
        return cls(Fraction(q_exp), tuple(syms.items()), Fraction(root))

    @classmethod
    def parse(cls, text: str) -> WeilMonomial:
        """Parse ``"-gamma_q*pi^2*q^(1/2)"``-style text; ``zeta^(1/3)`` sets the root."""
        text = text.replace(" ", "")
        root = Fraction(0)
        if text.startswith("-"):
            root, text = Fraction(1, 2), text[1:]
        q_exp = Fraction(0)
        syms: dict[str, int] = {}
        if text not in ("", "1"):
            for tok in text.split("*"):
                base, _, exp = tok.partition("^")
                e = Fraction(exp.strip("()")) if exp else Fraction(1)
                if base == "q":
                    q_exp += e
                elif base == "zeta":
                    root += e
                else:
                    if e.denominator != 1 or e < 0:
                        raise ValueError(f"symbol exponent must be a natural number: {tok!r}")
                    syms[base] = syms.get(base, 0) + int(e)
        return cls(q_exp, tuple(syms.items()), root)

    def __mul__(self, other: WeilMonomial) -> WeilMonomial:
        s = dict(self.syms)
        for k, v in other.syms:
            s[k] = s.get(k, 0) + v
        return WeilMonomial(self.q_exp + other.q_exp, tuple(s.items()), self.root + other.root)

    def scale(self, e: Fraction) -> WeilMonomial:
        return WeilMonomial(self.q_exp + e, self.syms, self.root)

    def conjugate(self, registry: WeilRegistry = REGISTRY) -> WeilMonomial:
        s: dict[str, int] = {}
        for k, v in self.syms:
            c = registry[k].conjugate
            s[c] = s.get(c, 0) + v
        return WeilMonomial(self.q_exp, tuple(s.items()), -self.root)

    def weight(self, registry: WeilRegistry = REGISTRY) -> Fraction:
        """``log_q |lambda|^2``."""
        return 2 * self.q_exp + sum(registry[k].weight * v for k, v in self.syms)

    def poincare_dual(self, dim: int, registry: WeilRegistry = REGISTRY) -> WeilMonomial:
        """``q^dim / lambda`` written through the conjugate."""
        c = self.conjugate(registry)
        return WeilMonomial(dim - self.q_exp - sum(registry[k].weight * v for k, v in self.syms),
                            c.syms, c.root)

    def divide_symbol(self, name: str) -> WeilMonomial | None:
        s = dict(self.syms)
        if s.get(name, 0) < 1:
            return None
        s[name] -= 1
        return WeilMonomial(self.q_exp, tuple(s.items()), self.root)

    def sort_key(self, registry: WeilRegistry = REGISTRY) -> tuple:
        return (self.q_exp, self.root,
                tuple((registry.rank(k) if k in registry else 1 << 20, k, v) for k, v in self.syms))

    def is_integral(self) -> bool:
        return self.q_exp.denominator == 1

    def __str__(self) -> str:
        parts = []
        if self.root == Fraction(1, 2):
            prefix = "-"
        elif self.root:
            prefix = ""
            parts.append(f"zeta^({self.root})")
        else:
            prefix = ""
        parts.extend(k if v == 1 else f"{k}^{v}" for k, v in self.syms)
        if self.q_exp:
            parts.append("q" if self.q_exp == 1 else
                         f"q^{self.q_exp}" if self.q_exp.denominator == 1 else f"q^({self.q_exp})")
        return prefix + ("*".join(parts) or "1")


def _canon_syms(s: Mapping[str, int], registry: WeilRegistry | None = None) -> tuple[tuple[str, int], ...]:
    reg = registry or REGISTRY
    out = {}
    for k, v in s.items():
        if k in reg and reg[k].order:
            v %= reg[k].order
        if v:
            out[k] = v
    return tuple(sorted(out.items(), key=lambda kv: (reg.rank(kv[0]) if kv[0] in reg else 1 << 20, kv[0])))


ONE = WeilMonomial()


# ---------------------------------------------------------------------------
# factor sets


@dataclass(frozen=True)
class ZetaFactorSet:
    mults: Mapping[WeilMonomial, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "mults", {k: v for k, v in dict(self.mults).items() if v})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[WeilMonomial | str, int]]) -> ZetaFactorSet:
        c: Counter = Counter()
        for mono, m in pairs:
            if isinstance(mono, str):
                mono = WeilMonomial.parse(mono)
            c[mono] += m
        return cls(dict(c))

    @classmethod
    def one(cls) -> ZetaFactorSet:
        return cls({})

    @property
    def denom(self) -> int:
        return math.lcm(1, *(m.q_exp.denominator for m in self.mults))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZetaFactorSet):
            return NotImplemented
        return self.mults == other.mults

    def __hash__(self) -> int:
        return hash(frozenset(self.mults.items()))

    def items(self) -> Iterator[tuple[WeilMonomial, int]]:
        return iter(self.mults.items())

    def __bool__(self) -> bool:
        return bool(self.mults)

    def __mul__(self, other: ZetaFactorSet) -> ZetaFactorSet:
        """Product of rational functions (multiplicities add)."""
        c = Counter(self.mults)
        c.update(other.mults)
        return ZetaFactorSet(dict(c))

    def signed_degree(self) -> int:
        return sum(self.mults.values())

    def numerator(self) -> dict[WeilMonomial, int]:
        return {k: v for k, v in self.mults.items() if v > 0}

    def denominator(self) -> dict[WeilMonomial, int]:
        return {k: -v for k, v in self.mults.items() if v < 0}

    def sorted_items(self, registry: WeilRegistry = REGISTRY) -> list[tuple[WeilMonomial, int]]:
        return sorted(self.mults.items(), key=lambda kv: kv[0].sort_key(registry))

    def to_json(self) -> dict[str, Any]:
        D = self.denom
        factors = []
        for mono, mult in self.sorted_items():
            e = mono.q_exp * D
            entry: dict[str, Any] = {
                "q_exp": str(int(e)) if D == 1 else f"{int(e)}/{D}",
                "syms": dict(mono.syms),
                "mult": mult,
            }
            if mono.root:
                entry["root"] = str(mono.root)
            factors.append(entry)
        return {"denom": D, "factors": factors}

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> ZetaFactorSet:
        pairs = []
        for f in obj.get("factors", []):
            mono = WeilMonomial(Fraction(str(f.get("q_exp", "0"))), tuple(f.get("syms", {}).items()),
                                Fraction(str(f.get("root", "0"))))
            pairs.append((mono, int(f["mult"])))
        return cls.from_pairs(pairs)


def zf_tensor(f: ZetaFactorSet, g: ZetaFactorSet) -> ZetaFactorSet:
    out: Counter = Counter()
    for a, ma in f.mults.items():
        for b, mb in g.mults.items():
            out[a * b] += ma * mb
    return ZetaFactorSet(dict(out))


def zf_tensor_power(f: ZetaFactorSet, n: int) -> ZetaFactorSet:
    if n < 1:
        raise ValueError("tensor power needs n >= 1")
    result = f
    for _ in range(n - 1):
        result = zf_tensor(result, f)
    return result


def zf_scale(f: ZetaFactorSet, e: int | Fraction) -> ZetaFactorSet:
    e = Fraction(e)
    if e < 0:
        raise ValueError("twist exponent must be non-negative")
    return ZetaFactorSet({m.scale(e): v for m, v in f.mults.items()})


def zf_pow(f: ZetaFactorSet, s: int) -> ZetaFactorSet:
    return ZetaFactorSet({m: v * s for m, v in f.mults.items()})


def zf_integral_filter(f: ZetaFactorSet) -> ZetaFactorSet:
    return ZetaFactorSet({m: v for m, v in f.mults.items() if m.is_integral()})


def is_conjugation_closed(f: ZetaFactorSet, registry: WeilRegistry = REGISTRY) -> bool:
    return all(f.mults.get(m.conjugate(registry), 0) == v for m, v in f.mults.items())


def poincare_duality_holds(f: ZetaFactorSet, dim: int, registry: WeilRegistry = REGISTRY) -> bool:
    return all(f.mults.get(m.poincare_dual(dim, registry), 0) == v for m, v in f.mults.items())


def betti_by_weight(f: ZetaFactorSet, registry: WeilRegistry = REGISTRY) -> dict[int, int]:
    """Betti numbers read off a pure zeta function: ``b_w`` from weight ``w``."""
    sums: Counter = Counter()
    for m, v in f.mults.items():
        w = m.weight(registry)
        if w.denominator != 1:
            raise ValueError(f"eigenvalue {m} has fractional weight")
        sums[int(w)] += v
    out = {}
    for w, s in sorted(sums.items()):
        # odd-degree cohomology sits in the numerator
        sign = 1 if w % 2 else -1
        if s * sign < 0:
            raise ValueError(f"weight {w} classes carry the wrong sign")
        out[w] = abs(s)
    return out


def euler_from_zeta(f: ZetaFactorSet) -> int:
    return -f.signed_degree()


# ---------------------------------------------------------------------------
# Z-tables and the orbifold zeta driver


@dataclass(frozen=True)
class ZTable:
    d: int
    entries: tuple[tuple[ZetaFactorSet, ...], ...]
    name: str = ""
    symbols: tuple[WeilSymbol, ...] = ()

    def __post_init__(self) -> None:
        if len(self.entries) != self.d or any(len(r) != self.d for r in self.entries):
            raise ValueError(f"Z-table must be {self.d}x{self.d}")

    def entry(self, k: int, j: int) -> ZetaFactorSet:
        return self.entries[k][j]

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schema": "cy/1", "kind": "ztable", "d": self.d, "name": self.name,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }
        if self.symbols:
            out["symbols"] = [s.to_json() for s in self.symbols]
        return out

    @classmethod
    def from_json(cls, obj: Mapping[str, Any], registry: WeilRegistry = REGISTRY) -> ZTable:
        symbols = tuple(WeilSymbol.from_json(s) for s in obj.get("symbols", []))
        if symbols:
            registry.register(*symbols)
        entries = tuple(tuple(ZetaFactorSet.from_json(e) for e in row) for row in obj["entries"])
        return cls(int(obj["d"]), entries, obj.get("name", ""), symbols)


def ztable_from_cells(d: int, cells: Mapping[tuple[int, int], ZetaFactorSet], name: str = "") -> ZTable:
    one = ZetaFactorSet.one()
    return ZTable(d, tuple(tuple(cells.get((k, j), one) for j in range(d)) for k in range(d)), name)


def sector_factor_set(table: ZTable, j: int) -> ZetaFactorSet:
    """``prod_m Z[m][j](q^(m/d) T)``."""
    out = ZetaFactorSet.one()
    for m in range(table.d):
        out = out * zf_scale(table.entries[m][j], Fraction(m, table.d))
    return out


def orbifold_zeta(ztables: Sequence[ZTable], *, raw: bool = False) -> ZetaFactorSet:
    if len(ztables) < 2:
        raise TooFewFactors(f"need at least two factors, got {len(ztables)}")
    ds = {t.d for t in ztables}
    if len(ds) != 1:
        raise ValueError(f"all Z-tables must share the same order, got {sorted(ds)}")
    d = ds.pop()
    n = len(ztables)
    groups: list[tuple[ZTable, int]] = []
    for t in ztables:
        for idx, (u, c) in enumerate(groups):
            if u is t or u.entries == t.entries:
                groups[idx] = (u, c + 1)
                break
        else:
            groups.append((t, 1))
    total = ZetaFactorSet.one()
    for j in range(d):
        acc: ZetaFactorSet | None = None
        for t, count in groups:
            part = zf_tensor_power(sector_factor_set(t, j), count)
            acc = part if acc is None else zf_tensor(acc, part)
            if not acc:
                break
        total = total * acc
    total = zf_pow(total, (-1) ** (n + 1))
    return total if raw else zf_integral_filter(total)


# ---------------------------------------------------------------------------
# rendering

_ROOT_TRACE = {Fraction(1, 3): -1, Fraction(2, 3): -1, Fraction(1, 4): 0, Fraction(3, 4): 0,
               Fraction(1, 6): 1, Fraction(5, 6): 1}


@dataclass(frozen=True)
class _Term:
    """One rendered factor: linear ``1 - lam T`` or quadratic."""

    mult: int
    key: tuple
    text: str
    tex: str


def _mono_tokens(mono: WeilMonomial, registry: WeilRegistry, double: bool = False,
                 extra_q: int = 0) -> tuple[list[str], list[str], int]:
    """Text and LaTeX tokens of ``mono`` (or ``mono^2 q^extra_q``) and its sign."""
    factor = 2 if double else 1
    txt, tex = [], []
    sign = 1
    root = mono.root * factor % 1
    if root == Fraction(1, 2):
        sign = -1
    elif root:
        den = root.denominator
        num = root.numerator
        txt.append(f"ζ{str(den).translate(str.maketrans('0123456789', '₀₁₂₃₄₅₆₇₈₉'))}{_sup(num)}")
        tex.append(rf"\zeta_{{{den}}}" + (f"^{{{num}}}" if num != 1 else ""))
    for k, v in mono.syms:
        v *= factor
        s = registry[k] if k in registry else WeilSymbol(k, k)
        txt.append(s.label + _sup(v))
        tex.append(s.tex + (f"^{{{v}}}" if v != 1 else ""))
    e = mono.q_exp * factor + extra_q
    if e:
        txt.append("q" + _sup(e))
        tex.append("q" + (f"^{{{e}}}" if e != 1 else ""))
    return txt, tex, sign


def _linear_term(mono: WeilMonomial, mult: int, registry: WeilRegistry) -> _Term:
    txt, tex, sign = _mono_tokens(mono, registry)
    op = "−" if sign > 0 else "+"
    top = "-" if sign > 0 else "+"
    body = " ".join(txt + ["T"]) if txt else "T"
    body_tex = r"\,".join(tex) + "T" if tex else "T"
    return _Term(mult, mono.sort_key(registry), f"1 {op} {body}", f"1{top}{body_tex}")


def _quadratic_term(mu: WeilMonomial, trace: str | int, q_w: int, mult: int,
                    key: tuple, registry: WeilRegistry) -> _Term:
    txt, tex, sign = _mono_tokens(mu, registry)
    txt2, tex2, sign2 = _mono_tokens(mu, registry, double=True, extra_q=q_w)
    if isinstance(trace, int):
        c = -trace * sign
        if c == 0:
            lin, lin_tex = "", ""
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            body = mag + " ".join(txt + ["T"]) if txt else mag + "T"
            bt = (str(abs(c)) if abs(c) != 1 else "") + r"\,".join(tex) + "T"
            lin = f" {'+' if c > 0 else '−'} {body}"
            lin_tex = f"{'+' if c > 0 else '-'}{bt}"
    else:
        op = "−" if sign > 0 else "+"
        lin = f" {op} " + " ".join([trace] + txt + ["T"])
        lin_tex = ("-" if sign > 0 else "+") + r"\,".join([trace.replace("π", r"\pi")] + tex) + "T"
    quad_op = "+" if sign2 > 0 else "−"
    quad = f" {quad_op} " + " ".join(txt2 + ["T²"])
    quad_tex = ("+" if sign2 > 0 else "-") + r"\,".join(tex2) + "T^{2}"
    return _Term(mult, key, f"1{lin}{quad}", f"1{lin_tex}{quad_tex}")


def _paired_terms(f: ZetaFactorSet, registry: WeilRegistry) -> list[_Term]:
    if not is_conjugation_closed(f, registry):
        raise RenderError("paired rendering needs a conjugation-closed factor set")
    remaining = dict(f.mults)
    terms: list[_Term] = []
    for lam, _ in f.sorted_items(registry):
        m = remaining.get(lam, 0)
        if not m:
            continue
        partner = None
        for name, _ in lam.syms:
            s = registry[name]
            if s.trace_name is None or s.conjugate == name:
                continue
            mu = lam.divide_symbol(name)
            other = mu * WeilMonomial(0, ((s.conjugate, 1),))
            mo = remaining.get(other, 0)
            if other != lam and mo and (mo > 0) == (m > 0):
                partner = (other, mu, s.trace_name, s.weight)
                break
        if partner is None and lam.root in _ROOT_TRACE:
            other = WeilMonomial(lam.q_exp, lam.syms, -lam.root)
            mo = remaining.get(other, 0)
            if mo and (mo > 0) == (m > 0):
                partner = (other, WeilMonomial(lam.q_exp, lam.syms), _ROOT_TRACE[lam.root], 0)
        if partner is None:
            terms.append(_linear_term(lam, m, registry))
            remaining[lam] = 0
            continue
        other, mu, trace, w = partner
        k = min(abs(m), abs(remaining[other])) * (1 if m > 0 else -1)
        terms.append(_quadratic_term(mu, trace, w, k, lam.sort_key(registry), registry))
        remaining[lam] -= k
        remaining[other] -= k
        if remaining[lam]:
            terms.append(_linear_term(lam, remaining[lam], registry))
            remaining[lam] = 0
    return terms


def _assemble(terms: list[_Term], latex: bool) -> str:
    num = [t for t in terms if t.mult > 0]
    den = [t for t in terms if t.mult < 0]

    def join(ts: list[_Term]) -> str:
        parts = []
        for t in ts:
            body = t.tex if latex else t.text
            k = abs(t.mult)
            if latex:
                parts.append(f"\\left({body}\\right)" + (f"^{{{k}}}" if k != 1 else ""))
            else:
                parts.append(f"({body})" + (f"^{{{k}}}" if k != 1 else ""))
        return ("" if latex else " ").join(parts)

    if not num and not den:
        return "1"
    top = join(num) if num else "1"
    if not den:
        return top
    if latex:
        return f"\\frac{{{top}}}{{{join(den)}}}"
    return f"{top} / {join(den)}"


def zf_render(f: ZetaFactorSet, style: str = "linear", registry: WeilRegistry = REGISTRY) -> str:
    if style == "paired":
        terms = _paired_terms(f, registry)
        return _assemble(terms, latex=False)
    if style == "paired-latex":
        return _assemble(_paired_terms(f, registry), latex=True)
    terms = [_linear_term(m, v, registry) for m, v in f.sorted_items(registry)]
    if style == "linear":
        return _assemble(terms, latex=False)
    if style == "latex":
        return _assemble(terms, latex=True)
    raise RenderError(f"unknown style {style!r}")


def render_notes(f: ZetaFactorSet, registry: WeilRegistry = REGISTRY) -> list[str]:
    """Caveats attached to symbols occurring in ``f``."""
    names = sorted({k for m in f.mults for k, _ in m.syms}, key=registry.rank)
    return [f"{registry[k].label}: {registry[k].note}" for k in names if registry[k].note]


def paired_factors(f: ZetaFactorSet, registry: WeilRegistry = REGISTRY) -> list[tuple[str, int]]:
    """``(factor text, signed multiplicity)`` in paired style."""
    return [(t.text, t.mult) for t in _paired_terms(f, registry)]


# ---------------------------------------------------------------------------
# resultant oracle


class _UPoly:
    """Dense univariate polynomial over any commutative ring."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence[Any]) -> None:
        c = list(coeffs)
        while c and _zero(c[-1]):
            c.pop()
        self.c = c

    def __add__(self, o: _UPoly) -> _UPoly:
        n = max(len(self.c), len(o.c))
        return _UPoly([(self.c[i] if i < len(self.c) else 0) + (o.c[i] if i < len(o.c) else 0)
                       for i in range(n)])

    def __neg__(self) -> _UPoly:
        return _UPoly([-x for x in self.c])

    def __sub__(self, o: _UPoly) -> _UPoly:
        return self + (-o)

    def __mul__(self, o: _UPoly) -> _UPoly:
        if not self.c or not o.c:
            return _UPoly([])
        out: list[Any] = [0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if _zero(a):
                continue
            for j, b in enumerate(o.c):
                out[i + j] = out[i + j] + a * b
        return _UPoly(out)


def _zero(x: Any) -> bool:
    return x == 0


def berkowitz_det(M: Sequence[Sequence[Any]], one: Any, zero: Any) -> Any:
    """Division-free determinant (Berkowitz)."""
    n = len(M)
    if n == 0:
        return one
    C = [one, -M[0][0]]
    for r in range(1, n):
        A = [row[:r] for row in M[:r]]
        R = M[r][:r]
        S = [M[i][r] for i in range(r)]
        a = M[r][r]
        q = [one, -a]
        vec = S
        for _ in range(r):
            dot = zero
            for x, y in zip(R, vec):
                dot = dot + x * y
            q.append(-dot)
            vec = [sum((A[i][k] * vec[k] for k in range(r)), zero) for i in range(r)]
        newC = []
        for i in range(r + 2):
            acc = zero
            for j in range(min(i, r) + 1):
                if i - j < len(q):
                    acc = acc + q[i - j] * C[j]
            newC.append(acc)
        C = newC
    det = C[n]
    return det if n % 2 == 0 else -det


def poly_tensor_resultant(fcoeffs: Sequence[Any], gcoeffs: Sequence[Any]) -> list[Any]:
    """Coefficients of ``f (x) g`` via ``res_s(f(s), s^deg(g) g(t/s))``.

    Inputs are coefficient lists ``[c_0, c_1, ...]`` in ``T`` with ``c_0 = 1``.
    """
    f = list(fcoeffs)
    g = list(gcoeffs)
    for p in (f, g):
        while len(p) > 1 and _zero(p[-1]):
            p.pop()
        if not p or p[0] != 1:
            raise NonUnitConstantTerm("characteristic polynomials must have constant term 1")
    n, m = len(f) - 1, len(g) - 1
    if n == 0 or m == 0:
        return [1]
    # f(s) with coefficients in R[t]; leading coefficient first for Sylvester
    fs = [_UPoly([c]) for c in reversed(f)]
    # h(s) = sum_k g_k t^k s^(m-k); coefficient of s^(m-k) is g_k t^k
    hs = [_UPoly([0] * k + [g[k]]) for k in range(m + 1)]  # already leading-first in s
    size = n + m
    zero, one = _UPoly([]), _UPoly([1])
    M = [[zero] * size for _ in range(size)]
    for i in range(m):
        for j, c in enumerate(fs):
            M[i][i + j] = c
    for i in range(n):
        for j, c in enumerate(hs):
            M[m + i][i + j] = c
    det = berkowitz_det(M, one, zero)
    coeffs = det.c or [0]
    c0 = coeffs[0]
    if c0 not in (1, -1):
        raise ArithmeticError(f"unexpected constant term {c0}")
    return [x * c0 for x in coeffs]


def expand_polynomial(monos: Mapping[WeilMonomial, int], q: int, values: Mapping[str, int]) -> list[Fraction]:
    """Expand ``prod (1 - lam T)^k`` (k >= 0) with ``q`` and symbols specialised."""
    poly = _UPoly([Fraction(1)])
    for mono, k in monos.items():
        if k < 0:
            raise ValueError("expand_polynomial takes numerator factors only")
        lam = specialise(mono, q, values)
        for _ in range(k):
            poly = poly * _UPoly([Fraction(1), -lam])
    return list(poly.c) or [Fraction(0)]


def specialise(mono: WeilMonomial, q: int, values: Mapping[str, int]) -> Fraction:
    if mono.root not in (0, Fraction(1, 2)):
        raise ValueError("only real roots of unity can be specialised to rationals")
    if mono.q_exp.denominator != 1:
        raise ValueError("fractional q exponent cannot be specialised")
    lam = Fraction(q) ** int(mono.q_exp)
    for k, v in mono.syms:
        lam *= Fraction(values[k]) ** v
    return -lam if mono.root else lam
