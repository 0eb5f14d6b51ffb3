"""Randomized algebraic property checks shared by the acceptance run."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from cyorb.algebra import CyclotomicNumber, ParamPoly, PuiseuxPoly, integral_part, sym
from cyorb.geometry import EllipticRecord, symbolic_k3
from cyorb.hodge import factor_tables, hodge_diamond
from cyorb.presets import record_preset, ztable_preset
from cyorb.weil import (
    WeilMonomial,
    ZetaFactorSet,
    is_conjugation_closed,
    orbifold_zeta,
    poincare_duality_holds,
    zf_integral_filter,
    zf_pow,
    zf_scale,
    zf_tensor,
)

SYMS = ("r", "m", "N", "k")
WEIL_PAIRS = (("alpha_q", "alpha_q_bar"), ("delta_q", "delta_q_bar"), ("pi", "pi_bar"))


def rand_frac(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 3))


def rand_param(rng: random.Random) -> ParamPoly:
    p = ParamPoly.const(rand_frac(rng))
    for _ in range(rng.randint(0, 3)):
        p = p + rand_frac(rng) * sym(rng.choice(SYMS)) ** rng.randint(1, 2)
    return p


def rand_puiseux(rng: random.Random) -> PuiseuxPoly:
    d = rng.choice((1, 2, 3, 6))
    out = PuiseuxPoly()
    for _ in range(rng.randint(0, 4)):
        out = out + PuiseuxPoly.monomial(rng.randint(0, 6), rng.randint(0, 6), d, rng.choice(
            (rng.randint(-3, 3), rand_param(rng))))
    return out


def rand_cyclo(rng: random.Random, order: int) -> CyclotomicNumber:
    out = CyclotomicNumber.from_rational(order, rand_frac(rng))
    for k in range(1, order):
        if rng.random() < 0.5:
            out = out + CyclotomicNumber.zeta(order, k) * rand_frac(rng)
    return out


def rand_zeta(rng: random.Random, closed: bool = False) -> ZetaFactorSet:
    pairs: list[tuple[WeilMonomial, int]] = []
    for _ in range(rng.randint(0, 3)):
        q_exp = Fraction(rng.randint(0, 6), rng.choice((1, 2, 3, 6)))
        mult = rng.choice((-2, -1, 1, 2))
        if rng.random() < 0.5:
            a, b = rng.choice(WEIL_PAIRS)
            pairs.append((WeilMonomial(q_exp, ((a, 1),)), mult))
            if closed:
                pairs.append((WeilMonomial(q_exp, ((b, 1),)), mult))
        else:
            extra = (("gamma_q", 1),) if rng.random() < 0.3 else ()
            pairs.append((WeilMonomial(q_exp, extra), mult))
    return ZetaFactorSet.from_pairs(pairs)


def prop_param_ring(rng: random.Random) -> None:
    a, b, c = rand_param(rng), rand_param(rng), rand_param(rng)
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a * 1 == a and a + 0 == a


def prop_puiseux_ring(rng: random.Random) -> None:
    a, b, c = rand_puiseux(rng), rand_puiseux(rng), rand_puiseux(rng)
    assert a * b == b * a and (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    ia = integral_part(a)
    assert integral_part(ia) == ia
    assert integral_part(a + b) == ia + integral_part(b)


def prop_cyclotomic_field(rng: random.Random) -> None:
    order = rng.choice((2, 3, 4, 6))
    a, b, c = (rand_cyclo(rng, order) for _ in range(3))
    assert (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if not a.is_zero():
        assert a * a.inverse() == CyclotomicNumber.from_rational(order, 1)


def prop_tensor(rng: random.Random) -> None:
    f, g, h = rand_zeta(rng), rand_zeta(rng), rand_zeta(rng)
    unit = ZetaFactorSet.from_pairs([("1", 1)])
    assert zf_tensor(unit, f) == f
    assert zf_tensor(f, g) == zf_tensor(g, f)
    assert zf_tensor(zf_tensor(f, g), h) == zf_tensor(f, zf_tensor(g, h))
    assert zf_tensor(f, g).signed_degree() == f.signed_degree() * g.signed_degree()


def prop_conjugation_closure(rng: random.Random) -> None:
    f, g = rand_zeta(rng, closed=True), rand_zeta(rng, closed=True)
    assert is_conjugation_closed(f) and is_conjugation_closed(g)
    assert is_conjugation_closed(zf_tensor(f, g))
    assert is_conjugation_closed(zf_scale(f, Fraction(rng.randint(0, 6), 6)))
    assert is_conjugation_closed(zf_pow(f, rng.randint(-2, 2)))
    assert is_conjugation_closed(zf_integral_filter(f))
    assert is_conjugation_closed(f * g)


PROPERTIES: tuple[Callable[[random.Random], None], ...] = (
    prop_param_ring, prop_puiseux_ring, prop_cyclotomic_field, prop_tensor, prop_conjugation_closure,
)


def check_preset_structure() -> int:
    """Duality of zeta outputs and symmetry/vanishing of diamonds across presets."""
    checked = 0
    zeta_inputs = [
        (["zeta-sixlines", f"zeta-e2:{case}"], 3) for case in ("all-rational", "two-rational", "one-rational")
    ] + [(["zeta-s6-18"] + ["zeta-e6"] * (n - 1), n + 1) for n in (2, 3, 4)]
    for names, dim in zeta_inputs:
        z = orbifold_zeta([ztable_preset(n) for n in names])
        assert poincare_duality_holds(z, dim), names
        assert is_conjugation_closed(z), names
        checked += 1
    factor_lists = []
    for d in (2, 3, 4, 6):
        e = EllipticRecord.standard(d)
        factor_lists += [[e] * 3, [symbolic_k3(d), e], [symbolic_k3(d), e, e]]
    factor_lists += [[record_preset("s6-18")] + [EllipticRecord.standard(6)] * k for k in (1, 2)]
    factor_lists += [[record_preset("k3-sixlines"), EllipticRecord.standard(2)]]
    for facs in factor_lists:
        dm = hodge_diamond(factor_tables(facs))
        n = dm.dim
        assert dm.symmetric()
        assert dm.h(0, 0) == 1 and dm.h(n, 0) == 1
        assert all(dm.h(p, 0) == 0 for p in range(1, n))
        checked += 1
    return checked


def run_property_suite(cases: int = 500, seed: int = 0) -> int:
    rng = random.Random(seed)
    for i in range(cases):
        PROPERTIES[i % len(PROPERTIES)](rng)
    return cases + check_preset_structure()
