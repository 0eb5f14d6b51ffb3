"""Hodge numbers, Euler numbers and zeta functions of quotients of products
of K3 surfaces and elliptic curves by diagonal cyclic group actions."""

from __future__ import annotations

__version__ = "0.1.0"

from .algebra import CyclotomicNumber, ParamPoly, PuiseuxPoly, const, integral_part, sym
from .arith import (
    check_relations,
    hol_lefschetz_sum,
    lefschetz_top,
    stringy_euler,
)
from .errors import CyError
from .geometry import EllipticRecord, FTable, K3Record, fix_euler, ftable, make_k3, symbolic_k3
from .hodge import (
    HodgeDiamond,
    euler_characteristic,
    hodge_diamond,
    orbifold_poincare,
    recurrence_check,
)
from .presets import list_presets, load_preset, record_preset, ztable_preset
from .weil import (
    WeilMonomial,
    WeilSymbol,
    ZetaFactorSet,
    ZTable,
    orbifold_zeta,
    poly_tensor_resultant,
    zf_render,
    zf_tensor,
)

__all__ = [
    "CyError", "CyclotomicNumber", "EllipticRecord", "FTable", "HodgeDiamond", "K3Record",
    "ParamPoly", "PuiseuxPoly", "WeilMonomial", "WeilSymbol", "ZTable", "ZetaFactorSet",
    "check_relations", "const", "euler_characteristic", "fix_euler", "ftable", "hodge_diamond",
    "hol_lefschetz_sum", "integral_part", "lefschetz_top", "list_presets", "load_preset",
    "make_k3", "orbifold_poincare", "orbifold_zeta", "poly_tensor_resultant", "record_preset",
    "recurrence_check", "stringy_euler", "symbolic_k3", "sym", "zf_render", "zf_tensor",
    "ztable_preset",
]
