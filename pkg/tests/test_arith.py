from __future__ import annotations

from fractions import Fraction

import pytest

from cyorb.algebra import CyclotomicNumber, sym
from cyorb.errors import InvalidSelfIntersection, PreconditionViolated, SingularLinearization
from cyorb.geometry import EllipticRecord, make_k3, preset, symbolic_k3
from cyorb.arith import (
    check_relations,
    hol_relation_check,
    lefschetz_hol_curve,
    lefschetz_hol_point,
    lefschetz_top,
    riemann_hurwitz,
    stringy_euler,
    stringy_euler_bruteforce,
)

Z6 = CyclotomicNumber.zeta(6)
S18_VALUES = dict(r=19, m=1, alpha=0, beta=1, ell=3, p25=9, p34=6, k=6, b=0, a=0, N=10, n=9,
                  nprime=0, gD=0, gG=0, gGq=0, gF1=1, gF2=0, gF1q=0, gF2q=0)


def _s18(**over: int):
    return make_k3(6, **{**S18_VALUES, **over})


def test_stringy_euler_small():
    e2 = EllipticRecord.standard(2)
    assert stringy_euler([e2, e2], 2) == 24
    assert stringy_euler([preset("s6-18")], 6) == 24
    assert stringy_euler([preset("s6-18"), EllipticRecord.standard(6)], 6) == 204


def test_stringy_euler_matches_bruteforce():
    e3 = EllipticRecord.standard(3)
    facs = [symbolic_k3(3), e3, e3]
    assert stringy_euler(facs, 3) == stringy_euler_bruteforce(facs, 3)


def test_lefschetz_top():
    r, m, al, be = sym("r"), sym("m"), sym("alpha"), sym("beta")
    k3 = symbolic_k3(6)
    assert lefschetz_top(k3, 1) == 2 + r + m - al - be
    assert lefschetz_top(k3, 3) == 2 + r + 2 * al - be - 2 * m
    assert lefschetz_top(preset("s6-18"), 2) == 21


def test_hol_point():
    assert lefschetz_hol_point((3, 4), 6) == Fraction(1, 3) - Z6 / 6
    one = CyclotomicNumber.from_rational(6, 1)
    direct = one / ((one - Z6 ** 2) * (one - Z6 ** 5))
    assert lefschetz_hol_point((2, 5), 6) == direct
    assert lefschetz_hol_point((1, 1), 2) == CyclotomicNumber.from_rational(2, Fraction(1, 4))


def test_hol_point_singular():
    with pytest.raises(SingularLinearization):
        lefschetz_hol_point((0, 1), 6)


def test_hol_curve():
    assert lefschetz_hol_curve(0, -2, 1, 6) == Z6 - 2
    assert lefschetz_hol_curve(1, 0, 1, 6).is_zero()
    gD = sym("gD")
    one = CyclotomicNumber.from_rational(6, 1)
    expected = (one + Z6) * (1 - gD) / ((one - Z6) * (one - Z6))
    assert lefschetz_hol_curve(gD, 2 * gD - 2, 1, 6) == expected


def test_hol_curve_bad_selfint():
    with pytest.raises(InvalidSelfIntersection):
        lefschetz_hol_curve(0, 0, 1, 6)


def test_hol_relation():
    assert hol_relation_check(preset("s6-18")) == 0
    assert hol_relation_check(_s18(ell=1, gD=0, p34=0, p25=6)) == 0
    assert hol_relation_check(_s18(ell=1, gD=0, p34=0, p25=0)) == 6


def test_riemann_hurwitz():
    s18 = preset("s6-18")
    assert riemann_hurwitz(s18, "G") == 0
    assert riemann_hurwitz(s18, "F") == 0
    assert not riemann_hurwitz(symbolic_k3(6), "G").is_constant()


def test_riemann_hurwitz_needs_rational_d():
    with pytest.raises(PreconditionViolated):
        riemann_hurwitz(_s18(gD=1), "F")
    with pytest.raises(PreconditionViolated):
        riemann_hurwitz(symbolic_k3(2), "G")


def test_relations_s6_18():
    rep = check_relations(preset("s6-18"))
    assert rep["3"].lhs == 0 and rep["3"].verdict == "holds"
    assert rep["1"].lhs == 2 and rep["1"].verdict == "fails"
    assert rep["1'"].verdict == "holds"
    assert rep["6"].verdict == "holds"


def test_relation_nine_inapplicable_when_d_curve_has_genus():
    rep = check_relations(_s18(gD=1))
    assert rep["9"].verdict == "inapplicable"


def test_relations_symbolic():
    rep = check_relations(symbolic_k3(6))
    assert rep["3"].verdict == "symbolic"


@pytest.mark.parametrize("name", ["k3-generic-2", "k3-generic-3", "k3-generic-4"])
def test_relations_small_orders(name):
    rep = check_relations(preset(name))
    assert "dim" in rep.ids()


def test_relations_sixlines_numeric():
    rep = check_relations(preset("k3-sixlines"))
    assert all(e.verdict == "holds" for e in rep.entries)
