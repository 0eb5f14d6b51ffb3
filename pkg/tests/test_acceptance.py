"""Acceptance checks, one per criterion.

Each ``check_N`` returns a short detail string and raises ``AssertionError``
on failure.  Under pytest every criterion prints one PASS/FAIL line (also
collected into the terminal summary by ``conftest.py``); running this file
directly prints the same lines.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

import pytest

from cyorb.algebra import CyclotomicNumber, PuiseuxPoly, sym
from cyorb.arith import (
    check_relations,
    hol_lefschetz_expected,
    hol_lefschetz_sum,
    hol_relation_check,
    lefschetz_top,
    printed_stringy_6,
    stringy_euler,
)
from cyorb.geometry import EllipticRecord, K3Record, fix_euler, symbolic_k3
from cyorb.hodge import (
    character_invariant_dim,
    eigenspace_invariant_dim,
    euler_characteristic,
    factor_tables,
    hodge_diamond,
    orbifold_poincare,
    recurrence_check,
    y_factors,
)
from cyorb.presets import list_presets, record_preset, ztable_preset
from cyorb.weil import (
    WeilMonomial,
    ZetaFactorSet,
    expand_polynomial,
    orbifold_zeta,
    paired_factors,
    poly_tensor_resultant,
    zf_tensor,
)

RESULTS: dict[int, tuple[bool, str]] = {}


def _elliptic(d: int) -> EllipticRecord:
    return EllipticRecord.standard(d)


def _within(start: float, limit: float) -> float:
    elapsed = time.perf_counter() - start
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
    return elapsed


# ---------------------------------------------------------------------------


def check_1() -> str:
    t0 = time.perf_counter()
    k3 = symbolic_k3(2)
    diamond = hodge_diamond(factor_tables([k3, _elliptic(2)]))
    N, Np = sym("N"), sym("Nprime")
    env = {"r": 10 + N - Np, "m": 12 - N + Np}
    h11 = diamond.h(1, 1).subs(env)
    h21 = diamond.h(2, 1).subs(env)
    assert h11 == 11 + 5 * N - Np, h11
    assert h21 == 11 + 5 * Np - N, h21
    el = _within(t0, 1)
    return f"h11 = {h11}, h21 = {h21} ({el:.3f}s)"


def _printed_closed_form(d: int, n: int) -> PuiseuxPoly:
    X, Y, XY = PuiseuxPoly.X(), PuiseuxPoly.Y(), PuiseuxPoly.monomial(1, 1)
    one = PuiseuxPoly.const(1)

    def w(k: int) -> PuiseuxPoly:
        return PuiseuxPoly.xy_root(k, d)

    if d == 2:
        return (X + Y) ** n + (one + XY + 4 * w(1)) ** n
    if d == 3:
        return X ** n + Y ** n + (one + w(1)) ** (3 * n)
    if d == 4:
        return X ** n + Y ** n + (one + XY + 2 * w(1) + 3 * w(2) + 2 * w(3)) ** n + w(2) ** n
    return (X ** n + Y ** n + (one + XY + w(1) + 2 * w(2) + 2 * w(3) + 2 * w(4) + w(5)) ** n
            + 2 * PuiseuxPoly.xy_root(n, 2) + (w(2) + w(4)) ** n)


def check_2() -> str:
    t0 = time.perf_counter()
    count = 0
    for d in (2, 3, 4, 6):
        for n in range(2, 6):
            got = orbifold_poincare(factor_tables([_elliptic(d)] * n))
            assert got == _printed_closed_form(d, n), (d, n)
            count += 1
    el = _within(t0, 5)
    return f"{count} closed forms equal ({el:.2f}s)"


def check_3() -> str:
    t0 = time.perf_counter()
    diamond = hodge_diamond(factor_tables([_elliptic(2)] * 3))
    h11, h21 = diamond.h(1, 1), diamond.h(2, 1)
    e = euler_characteristic(diamond)
    assert (h11, h21, e) == (51, 3, 96), (h11, h21, e)
    el = _within(t0, 1)
    return f"(h11, h21, e) = (51, 3, 96) ({el:.3f}s)"


def check_4() -> str:
    t0 = time.perf_counter()
    parts = []
    for d in (3, 4):
        rep = recurrence_check(d, symbolic_k3(d), 7)
        assert rep.values[0] == 24
        assert rep.holds, [(i, str(r)) for i, r in rep.residuals]
        parts.append(f"d={d} symbolic")
    rep = recurrence_check(6, record_preset("s6-18"), 7)
    assert rep.values[0] == 24
    assert rep.holds, [(i, str(r)) for i, r in rep.residuals]
    parts.append("d=6 s6-18 " + ",".join(str(v) for v in rep.values))
    el = _within(t0, 30)
    return "; ".join(parts) + f" ({el:.2f}s)"


def check_5() -> str:
    t0 = time.perf_counter()
    for d in (2, 3, 4, 6):
        for n in range(2, 6):
            facs = [_elliptic(d)] * n
            diamond_e = euler_characteristic(hodge_diamond(factor_tables(facs)))
            assert diamond_e == stringy_euler(facs, d), (d, n)
    s6 = record_preset("s6-18")
    values = []
    for n in range(2, 5):
        facs = y_factors(6, s6, n)
        de = euler_characteristic(hodge_diamond(factor_tables(facs)))
        se = stringy_euler(facs, 6)
        printed = s6.substitute(printed_stringy_6(n))
        assert de == se == printed, (n, de, se, printed)
        values.append(int(de.constant()))
    assert values == [204, 2088, 20832], values
    el = _within(t0, 60)
    return f"pure elliptic n<=5 agree; s6-18: {values} ({el:.2f}s)"


def check_6() -> str:
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    for _ in range(200):
        d = rng.choice((2, 3, 4, 6))
        n = rng.randint(1, 4)
        dims = [{j: rng.randint(0, 3) for j in range(d)} for _ in range(n)]
        assert eigenspace_invariant_dim(dims, d) == character_invariant_dim(dims, d), (d, dims)
    el = _within(t0, 10)
    return f"200 random instances agree ({el:.2f}s)"


def check_7() -> str:
    t0 = time.perf_counter()
    checked = 0
    for name, kind, _ in list_presets():
        if kind == "ztable":
            continue
        rec = record_preset(name)
        if isinstance(rec, K3Record) and not rec.is_numeric():
            continue
        for k in range(1, rec.d):
            assert lefschetz_top(rec, k) == fix_euler(rec, k), (name, k)
            checked += 1
    s6 = record_preset("s6-18")
    total = hol_lefschetz_sum(s6)
    expected = CyclotomicNumber.zeta(6, 0) + CyclotomicNumber.zeta(6, 5)
    assert total == expected == hol_lefschetz_expected(6), total
    assert hol_relation_check(s6) == 0
    residual = s6.substitute(3 + 3 * sym("ell") - 3 * sym("gD") - sym("p34") / 2 - sym("p25"))
    assert residual == 0
    el = _within(t0, 1)
    return f"{checked} (preset, k) traces; L_hol = {total} ({el:.3f}s)"


def check_8() -> str:
    t0 = time.perf_counter()
    rep = check_relations(record_preset("s6-18"))
    for rid in ("2", "3", "5", "6", "7", "8", "9", "1'", "4'"):
        assert rep[rid].verdict == "holds", (rid, rep[rid])
    assert rep["1"].lhs == 2 and rep["1"].verdict == "fails"
    assert rep["4"].lhs == 9 and rep["4"].verdict == "fails"
    el = _within(t0, 1)
    return f"(1) -> 2, (4) -> 9, others hold ({el:.3f}s)"


# printed Y_{2,2} zeta functions (y_q read as gamma_q)
_Y22_NUMERATOR = [
    ("alpha_q*gamma_q*q", 1), ("alpha_q_bar*gamma_q*q", 1),
    ("alpha_q*gamma_q*pi^2", 1), ("alpha_q_bar*gamma_q*pi^2", 1),
    ("alpha_q*gamma_q*pi_bar^2", 1), ("alpha_q_bar*gamma_q*pi_bar^2", 1),
]
_Y22_DENOMINATORS = {
    "all-rational": [("1", 1), ("q", 56), ("q^2", 56), ("q^3", 1)],
    "two-rational": [("1", 1), ("q", 47), ("-q", 9), ("-q^2", 9), ("q^2", 47), ("q^3", 1)],
    "one-rational": [("1", 1), ("q", 38), ("q^2", 38), ("q^3", 1),
                     ("zeta^(1/3)*q^2", 9), ("zeta^(2/3)*q^2", 9),
                     ("zeta^(1/3)*q", 9), ("zeta^(2/3)*q", 9)],
}
_Y22_QUADRATICS = {
    "1−a_qy_qqT+y_q²q³T²", "1−a_qπ²y_qT+π⁴y_q²qT²", "1−a_qπ̄²y_qT+π̄⁴y_q²qT²",
}


def check_9() -> str:
    t0 = time.perf_counter()
    six = ztable_preset("zeta-sixlines")
    for case, den in _Y22_DENOMINATORS.items():
        z = orbifold_zeta([six, ztable_preset(f"zeta-e2:{case}")])
        expected = ZetaFactorSet.from_pairs(_Y22_NUMERATOR + [(m, -k) for m, k in den])
        assert z == expected, case
        quads = {"".join(t.split()) for t, k in paired_factors(z) if k > 0}
        assert quads == _Y22_QUADRATICS, quads
    el = _within(t0, 5)
    return f"three rows equal, paired numerators match ({el:.2f}s)"


# printed Y_{6,n} zeta functions; n = 2 carries the q-twisted delta factors
_Y6 = {
    2: [("alpha_q*beta_q", 1), ("q*delta_q", 1), ("q*delta_q_bar", 1), ("alpha_q_bar*beta_q_bar", 1),
        ("1", -1), ("q", -103), ("q^2", -103), ("q^3", -1)],
    3: [("1", -1), ("q", -340), ("alpha_q_bar^2*beta_q_bar", -1), ("alpha_q^2*beta_q", -1),
        ("q^2", -1402), ("q^3", -340), ("q^2*c_q", -2), ("q^4", -1)],
    4: [("alpha_q^3*beta_q", 1), ("q^2*delta_q", 1), ("q^2*delta_q_bar", 1),
        ("alpha_q_bar^3*beta_q_bar", 1), ("1", -1), ("q", -868), ("q^2", -9548),
        ("q^2*c_q", -1), ("q^3*c_q", -1), ("q^3", -9548), ("q^4", -868), ("q^5", -1)],
}


def check_10() -> str:
    t0 = time.perf_counter()
    s6, e6 = ztable_preset("zeta-s6-18"), ztable_preset("zeta-e6")
    for n, pairs in _Y6.items():
        z = orbifold_zeta([s6] + [e6] * (n - 1))
        assert z == ZetaFactorSet.from_pairs(pairs), n
    el = _within(t0, 30)
    return f"n = 2, 3, 4 equal (103; 340/1402; 868/9548) ({el:.2f}s)"


def _random_eigenvalues(rng: random.Random, k: int) -> dict[WeilMonomial, int]:
    out: dict[WeilMonomial, int] = {}
    for _ in range(k):
        mono = WeilMonomial.of(rng.randint(0, 2), rng.choice((0, Fraction(1, 2))),
                               **{s: rng.randint(0, 1) for s in ("delta_q", "pi")})
        out[mono] = out.get(mono, 0) + 1
    return out


SPECIAL = {"q": 2, "values": {"delta_q": 3, "pi": 5}}


def check_11() -> str:
    t0 = time.perf_counter()
    rng = random.Random(11)
    for _ in range(100):
        df = rng.randint(1, 3)
        dg = rng.randint(1, 4 - df)
        f, g = _random_eigenvalues(rng, df), _random_eigenvalues(rng, dg)
        tensor = zf_tensor(ZetaFactorSet(f), ZetaFactorSet(g))
        lhs = expand_polynomial(tensor.mults, SPECIAL["q"], SPECIAL["values"])
        rhs = poly_tensor_resultant(expand_polynomial(f, SPECIAL["q"], SPECIAL["values"]),
                                    expand_polynomial(g, SPECIAL["q"], SPECIAL["values"]))
        assert lhs == rhs, (f, g, lhs, rhs)
    el = _within(t0, 5)
    return f"100 random pairs agree ({el:.2f}s)"


def check_12() -> str:
    from property_suite import run_property_suite

    t0 = time.perf_counter()
    n = run_property_suite(cases=500, seed=12)
    el = _within(t0, 60)
    return f"{n} randomized property cases ({el:.2f}s)"


CHECKS = {i: globals()[f"check_{i}"] for i in range(1, 13)}


def run_check(i: int) -> tuple[bool, str]:
    try:
        detail = CHECKS[i]()
        ok = True
    except AssertionError as exc:
        ok, detail = False, f"assertion failed: {exc}"
    RESULTS[i] = (ok, detail)
    print(f"criterion {i:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok, detail


@pytest.mark.parametrize("criterion", list(CHECKS))
def test_criterion(criterion: int) -> None:
    ok, detail = run_check(criterion)
    assert ok, detail


if __name__ == "__main__":
    sys.path.insert(0, str(__import__("pathlib").Path(__file__).parent))
    results = [run_check(i)[0] for i in CHECKS]
    sys.exit(0 if all(results) else 1)
