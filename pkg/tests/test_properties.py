from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from cyorb.weil import WeilMonomial, ZetaFactorSet, poincare_duality_holds, zf_pow, zf_scale, zf_tensor

import property_suite as ps

RNG = st.randoms(use_true_random=False)


@settings(max_examples=60, deadline=None)
@given(RNG)
def test_param_ring_laws(rng):
    ps.prop_param_ring(rng)


@settings(max_examples=60, deadline=None)
@given(RNG)
def test_puiseux_ring_and_integral_part(rng):
    ps.prop_puiseux_ring(rng)


@settings(max_examples=60, deadline=None)
@given(RNG)
def test_cyclotomic_field_laws(rng):
    ps.prop_cyclotomic_field(rng)


@settings(max_examples=60, deadline=None)
@given(RNG)
def test_tensor_monoid(rng):
    ps.prop_tensor(rng)


@settings(max_examples=60, deadline=None)
@given(RNG)
def test_conjugation_closure_preserved(rng):
    ps.prop_conjugation_closure(rng)


@given(RNG, st.integers(-3, 3), st.integers(-3, 3))
def test_pow_is_additive(rng, s, t):
    f = ps.rand_zeta(rng)
    assert zf_pow(f, s) * zf_pow(f, t) == zf_pow(f, s + t)


@given(RNG, st.fractions(0, 3, max_denominator=6), st.fractions(0, 3, max_denominator=6))
def test_scale_composes_and_distributes(rng, a, b):
    f, g = ps.rand_zeta(rng), ps.rand_zeta(rng)
    assert zf_scale(zf_scale(f, a), b) == zf_scale(f, a + b)
    assert zf_scale(zf_tensor(f, g), a) == zf_tensor(zf_scale(f, a), g)


@given(st.integers(0, 3), st.integers(-2, 2))
def test_trivial_motive_duality(dim, mult):
    f = ZetaFactorSet.from_pairs([(WeilMonomial.q(Fraction(i)), mult) for i in range(dim + 1)])
    assert poincare_duality_holds(f, dim)
