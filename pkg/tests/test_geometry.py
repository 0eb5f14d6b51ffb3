from __future__ import annotations

import pytest

from cyorb.algebra import PuiseuxPoly, sym
from cyorb.errors import InvalidRecord, OutOfRange
from cyorb.geometry import (
    EllipticRecord,
    elliptic_euler_pair,
    fix_euler,
    ftable_elliptic,
    ftable_k3,
    make_k3,
    preset,
    record_from_json,
    symbolic_k3,
)

X, Y = PuiseuxPoly.X(), PuiseuxPoly.Y()
XY = PuiseuxPoly.monomial(1, 1)


def test_elliptic_tables():
    t2 = ftable_elliptic(EllipticRecord.standard(2))
    assert t2.entry(0, 0) == 1 + XY
    assert t2.entry(0, 1) == X + Y
    assert t2.entry(1, 0) == PuiseuxPoly.const(4)
    assert t2.entry(1, 1).is_zero()
    assert ftable_elliptic(EllipticRecord.standard(6)).entry(2, 3) == PuiseuxPoly.const(1)
    assert ftable_elliptic(EllipticRecord.standard(4)).entry(1, 0) == PuiseuxPoly.const(2)


def test_k3_tables_symbolic():
    N, Np = sym("N"), sym("Nprime")
    t2 = ftable_k3(symbolic_k3(2))
    assert t2.entry(1, 0) == N + Np * (X + Y) + N * XY
    t4 = ftable_k3(symbolic_k3(4))
    assert t4.entry(0, 2) == (22 - sym("r") - 2 * sym("m")) * XY
    t6 = ftable_k3(symbolic_k3(6))
    a = sym("a")
    genus = (sym("gF1") + sym("gF2") - sym("gF1q") - sym("gF2q")) / 2
    assert t6.entry(3, 2) == a + genus * (X + Y) + a * XY


def test_fix_euler():
    s18 = preset("s6-18")
    assert fix_euler(s18, 1) == 21
    assert fix_euler(s18, 2) == 21
    assert fix_euler(symbolic_k3(2), 1) == 2 * sym("N") - 2 * sym("Nprime")


def test_fix_euler_out_of_range():
    with pytest.raises(OutOfRange):
        fix_euler(preset("s6-18"), 6)
    with pytest.raises(OutOfRange):
        fix_euler(symbolic_k3(2), 0)


def test_elliptic_euler_pairs():
    e2, e6 = EllipticRecord.standard(2), EllipticRecord.standard(6)
    assert elliptic_euler_pair(e2, 0, 0) == 0
    assert elliptic_euler_pair(e2, 1, 1) == 4
    assert elliptic_euler_pair(e6, 2, 3) == 1


def test_presets():
    assert preset("e6").fix_counts == (1, 3, 4, 3, 1)
    s18 = preset("s6-18")
    assert s18.d == 6 and s18.is_numeric()
    assert s18["r"] == 19 and s18["N"] == 10
    k = preset("k3-generic-2")
    assert not k.is_numeric() and k["N"] == sym("N")


def test_elliptic_counts_validated():
    with pytest.raises(InvalidRecord):
        EllipticRecord(3, (1, 2))


def test_unsupported_order():
    with pytest.raises(InvalidRecord):
        EllipticRecord.standard(5)


def test_numeric_k3_validation():
    with pytest.raises(InvalidRecord):
        make_k3(2, r=10, m=11, N=0, Nprime=0)  # 10 + 11 != 22
    with pytest.raises(InvalidRecord):
        make_k3(2, r=10)
    with pytest.raises(InvalidRecord):
        make_k3(2, r=-1, m=23, N=0, Nprime=0)
    with pytest.raises(InvalidRecord):
        make_k3(2, r=10, m=12, N=0, Nprime=0, bogus=1)


def test_record_json_round_trip():
    for name in ("s6-18", "k3-generic-6", "k3-sixlines"):
        rec = preset(name)
        back = record_from_json(rec.to_json())
        assert back.d == rec.d and back.mode == rec.mode
        assert dict(back.values) == dict(rec.values)


def test_record_json_rejects_bad_kind():
    with pytest.raises(InvalidRecord):
        record_from_json({"kind": "surface", "d": 2})
    with pytest.raises(InvalidRecord):
        record_from_json({"kind": "k3", "d": "6"})
