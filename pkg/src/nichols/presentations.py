"""Static catalog of family presentations, PBW data, and auxiliary identities.

Each entry records, for one family of the catalog: the defining relations
(expressions over the generators and named derived elements), consequence
identities kept separate as "derived" checks, nonzero witnesses, the PBW
generators with degrees and heights, the claimed growth degree, derivation
fingerprints, one deliberately corrupted relation used as a negative control,
and (where documented) the splitting subspace data and the recursion scalars
for the w_n tower.

Derived elements are defined once per family, in order, through the
expression grammar; brackets denote braided commutators and ad(x)(e) the
adjoint by a generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .spaces import (
    build_e3,
    build_einf,
    build_emn,
    build_endymion3,
    build_estar,
    build_s1m,
    build_s1p,
    build_s20,
)
from .structure import PBWGenerator


@dataclass(frozen=True)
class K1Spec:
    acting: tuple
    targets: tuple
    dim: int
    depth: int


@dataclass(frozen=True)
class WnRecursion:
    ghost: int
    block_eigenvalue: int    # q22 of the second component, +1 or -1


@dataclass(frozen=True)
class Presentation:
    family: str
    display: str
    builder: object
    definitions: tuple          # (name, expr) in evaluation order
    relations: tuple            # (name, expr, kind); kind: defining | derived
    witnesses: tuple            # (name, expr) that must be nonzero
    pbw: tuple                  # PBWGenerator list in the monomial order
    gk: int
    mutated: tuple              # (name, expr) negative control, must be nonzero
    derivation_checks: tuple = ()   # (generator label, expr, expected expr)
    k1: object = None
    wn: object = None
    normalization: tuple = ()   # ((label, scale-expr), ...) applied pre-check
    table_row: object = None    # row in the rank-4 family table, 1-based

    def defining_relations(self):
        return [(n, e) for n, e, k in self.relations if k == "defining"]

    def derived_relations(self):
        return [(n, e) for n, e, k in self.relations if k == "derived"]


def _b(name, degree):
    return PBWGenerator(name, degree, 2)


def _u(name, degree):
    return PBWGenerator(name, degree, 0)


_PRESENTATIONS = {}


def _register(p):
    _PRESENTATIONS[p.family] = p
    return p


# ---------------------------------------------------------------------------
# rank 3: one 2-dim pale block and one point
# ---------------------------------------------------------------------------

_register(Presentation(
    family="Ep",
    display="rank-3 pale block + point, weak interaction, point label +1",
    builder=lambda: build_endymion3(+1),
    definitions=(("z", "[x3_2, x2]"),),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x1 x3_2 anti", "x1*x3_2 + x3_2*x1", "defining"),
        ("x1 x2 q-comm", "x1*x2 - q12*x2*x1", "defining"),
        ("z^2", "z^2", "defining"),
        ("x2 z q-comm", "x2*z - q21*z*x2", "defining"),
    ),
    witnesses=(("x2^2", "x2^2"), ("top monomial", "x1*x3_2*x2*z")),
    pbw=(_b("x1", 1), _b("x3_2", 1), _u("x2", 1), _b("z", 2)),
    gk=1,
    mutated=("x1 x2 sign flip", "x1*x2 + q12*x2*x1"),
    derivation_checks=(
        ("x2", "z", "-x1"),
        ("x1", "z", "0"),
        ("x3_2", "z", "0"),
    ),
))

_register(Presentation(
    family="Em",
    display="rank-3 pale block + point, weak interaction, point label -1",
    builder=lambda: build_endymion3(-1),
    definitions=(("z", "[x3_2, x2]"),),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x1 x3_2 anti", "x1*x3_2 + x3_2*x1", "defining"),
        ("x1 x2 q-comm", "x1*x2 - q12*x2*x1", "defining"),
        ("x2^2", "x2^2", "defining"),
        ("x2 z anti-q-comm", "x2*z + q21*z*x2", "defining"),
    ),
    witnesses=(("z^2", "z^2"), ("top monomial", "x1*x3_2*x2*z")),
    pbw=(_b("x1", 1), _b("x3_2", 1), _b("x2", 1), _u("z", 2)),
    gk=1,
    mutated=("x1 x2 sign flip", "x1*x2 + q12*x2*x1"),
    derivation_checks=(("x2", "z", "-x1"),),
))

_register(Presentation(
    family="Estar",
    display="rank-3 pale block + point, mild interaction",
    builder=build_estar,
    definitions=(
        ("x12", "[x1, x2]"),
        ("z", "[x3_2, x2]"),
        ("z12", "ad(x3_2)(x12)"),
        ("v", "[z, x12]"),
    ),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x1 x3_2 anti", "x1*x3_2 + x3_2*x1", "defining"),
        ("x2^2", "x2^2", "defining"),
        ("x12^2", "x12^2", "defining"),
        ("z12^2", "z12^2", "defining"),
        ("quartic", "x3_2*v - q12^2*v*x3_2 - q12*x12*z12", "defining"),
    ),
    witnesses=(("z^2", "z^2"), ("v", "v")),
    pbw=(_b("x3_2", 1), _u("z", 2), _b("z12", 3), _u("v", 4),
         _b("x1", 1), _b("x12", 2), _b("x2", 1)),
    gk=2,
    mutated=("x1 x3_2 sign flip", "x1*x3_2 - x3_2*x1"),
))


# ---------------------------------------------------------------------------
# rank 4: 3-dim pale block and one point
# ---------------------------------------------------------------------------

_register(Presentation(
    family="E3-",
    display="3-dim pale block + point at -1",
    builder=lambda: build_e3(-1),
    definitions=(
        ("z2", "[x4, x2]"),
        ("z3", "[x4, x3]"),
        ("w", "[z2, x3]"),
    ),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x2^2", "x2^2", "defining"),
        ("x3^2", "x3^2", "defining"),
        ("x1 x2 anti", "x1*x2 + x2*x1", "defining"),
        ("x1 x3 anti", "x1*x3 + x3*x1", "defining"),
        ("x2 x3 anti", "x2*x3 + x3*x2", "defining"),
        ("x4^2", "x4^2", "defining"),
        ("x1 x4 q-comm", "x1*x4 - q12*x4*x1", "defining"),
        ("z3 z2 quartic", "z3*z2 - z2*z3 + (1/2)*z2^2", "defining"),
        ("z2 w", "z2*w + q21*w*z2", "defining"),
        ("z2 x2", "z2*x2 + q21*(x2 + x1)*z2", "derived"),
        ("z3 x2", "z3*x2 + w + q21*(x2 + x1)*z3", "derived"),
        ("x4 z2", "x4*z2 + q21*z2*x4", "derived"),
        ("z3 x3", "z3*x3 + q21*(x3 + x2)*z3", "derived"),
        ("x4 z3", "x4*z3 + q21*(z3 + z2)*x4", "derived"),
        ("w x2", "w*x2 - q21*(x2 + x1)*w", "derived"),
        ("w x3", "w*x3 - q21*(x3 + x2)*w", "derived"),
        ("x4 w", "x4*w + q21^2*w*x4 - (q21/2)*z2^2", "derived"),
        ("z3 w", "z3*w + q21*w*z3", "derived"),
        ("w^2", "w^2", "derived"),
    ),
    witnesses=(("z2^2", "z2^2"), ("z2 z3", "z2*z3"), ("w", "w")),
    pbw=(_b("x1", 1), _b("x2", 1), _b("x3", 1), _b("w", 3),
         _u("z2", 2), _u("z3", 2), _b("x4", 1)),
    gk=2,
    mutated=("x1 x4 sign flip", "x1*x4 + q12*x4*x1"),
    derivation_checks=(
        ("x1", "z2", "-x4"),
        ("x2", "z3", "-x4"),
        ("x2", "z2", "0"),
        ("x3", "z3", "0"),
        ("x1", "w", "z3"),
        ("x2", "w", "-z2"),
        ("x3", "w", "0"),
        ("x4", "w", "0"),
    ),
    table_row=1,
))

_register(Presentation(
    family="E3+",
    display="3-dim pale block + point at +1",
    builder=lambda: build_e3(+1),
    definitions=(
        ("x42", "[x4, x2]"),
        ("x43", "[x4, x3]"),
        ("x443", "ad(x4)(x43)"),
        ("v", "[x42, x3]"),
        ("u", "[x43, x42]"),
        ("w", "[x43, v]"),
    ),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x2^2", "x2^2", "defining"),
        ("x3^2", "x3^2", "defining"),
        ("x1 x2 anti", "x1*x2 + x2*x1", "defining"),
        ("x1 x3 anti", "x1*x3 + x3*x1", "defining"),
        ("x2 x3 anti", "x2*x3 + x3*x2", "defining"),
        ("x4 x1 q-comm", "x4*x1 - q21*x1*x4", "defining"),
        ("x4 x42", "x4*x42 - q21*x42*x4", "defining"),
        ("x4 x443", "x4*x443 - q21*x443*x4", "defining"),
        ("x443 x42", "x443*x42 + q21*x42*x443", "defining"),
        ("x443 x43", "x443*x43 + q21*(x43 + 2*x42)*x443", "defining"),
        ("x4 w", "x4*w - q21^3*w*x4 + 2*q21^2*x42*u", "defining"),
        ("x43 u", "x43*u - u*x43 + x42*u", "defining"),
        ("x42 w", "x42*w + q21*w*x42", "defining"),
        ("x43 w", "x43*w + q21*w*x43", "defining"),
        ("x42^2", "x42^2", "derived"),
        ("x4 u", "x4*u - q21^2*u*x4", "derived"),
        ("x443^2", "x443^2", "derived"),
        ("x443 u", "x443*u - q21^2*u*x443", "derived"),
        ("w x2", "w*x2 + q21^2*(x2 + 2*x1)*w", "derived"),
        ("w x3", "w*x3 + q21^2*(x3 + 2*x2 + x1)*w + q21*v^2", "derived"),
        ("x443 v", "x443*v - q21^3*v*x443 + 2*q21^2*x42*u", "derived"),
        ("u v", "u*v - q21^2*v*u", "derived"),
        ("w v", "w*v - q21*v*w", "derived"),
        ("x443 w", "x443*w + q21^4*w*x443 - 2*q21^3*u^2", "derived"),
        ("u w", "u*w - q21^2*w*u", "derived"),
        ("w^2", "w^2", "derived"),
    ),
    witnesses=(("x4^2", "x4^2"), ("x43^2", "x43^2"), ("u", "u"),
               ("v^2", "v^2"), ("w", "w")),
    pbw=(_b("x1", 1), _b("x2", 1), _b("x3", 1), _u("v", 3), _b("x42", 2),
         _b("w", 5), _u("u", 4), _u("x43", 2), _b("x443", 3), _u("x4", 1)),
    gk=4,
    mutated=("x4 x1 sign flip", "x4*x1 + q21*x1*x4"),
    derivation_checks=(
        ("x1", "x42", "-x4"),
        ("x2", "x43", "-x4"),
        ("x1", "x443", "x4^2"),
        ("x1", "v", "x43"),
        ("x1", "u", "q12*x443 + x42*x4"),
        ("x1", "w", "2*x43^2"),
        ("x2", "v", "-x42"),
        ("x2", "u", "0"),
        ("x2", "w", "-2*u"),
        ("x3", "v", "0"),
        ("x3", "u", "0"),
        ("x3", "w", "0"),
    ),
    k1=K1Spec(acting=("x4",), targets=("x1", "x2", "x3"), dim=6, depth=3),
    table_row=2,
))


# ---------------------------------------------------------------------------
# rank 4: 2-dim pale block and two points
# ---------------------------------------------------------------------------

def _emn_presentation(mu, nu):
    sign = {+1: "+", -1: "-"}
    fam = f"E{sign[mu]}{sign[nu]}"
    common = [
        ("x1^2", "x1^2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x1 x3_2 anti", "x1*x3_2 + x3_2*x1", "defining"),
        ("x1 x2 q-comm", "x1*x2 - q12*x2*x1", "defining"),
        ("x1 x3 q-comm", "x1*x3 - q13*x3*x1", "defining"),
        ("x2 x3 q-comm", "x2*x3 - q23*x3*x2", "defining"),
        ("x3 z q-comm", "x3*z - q32*q31*z*x3", "defining"),
    ]
    if mu > 0:
        common += [("z^2", "z^2", "defining"),
                   ("x2 z q-comm", "x2*z - q21*z*x2", "defining")]
    else:
        common += [("x2^2", "x2^2", "defining"),
                   ("x2 z anti", "x2*z + q21*z*x2", "defining")]
    if nu > 0:
        common += [("w^2", "w^2", "defining"),
                   ("x3 w q-comm", "x3*w - q31*w*x3", "defining")]
    else:
        common += [("x3^2", "x3^2", "defining"),
                   ("x3 w anti", "x3*w + q31*w*x3", "defining")]
    common += [
        ("x1 z", "x1*z + q12*z*x1", "derived"),
        ("x3_2 z", "x3_2*z + q12*z*x3_2", "derived"),
        ("x1 w", "x1*w + q13*w*x1", "derived"),
        ("x3_2 w", "x3_2*w + q13*w*x3_2", "derived"),
        ("w z", "w*z + q32*q31*q12*z*w", "derived"),
        ("x2 w", "x2*w - q23*q21*w*x2", "derived"),
    ]
    heights = {
        (+1, +1): (_b("x1", 1), _b("x3_2", 1), _u("x2", 1), _b("z", 2),
                   _u("x3", 1), _b("w", 2)),
        (+1, -1): (_b("x1", 1), _b("x3_2", 1), _u("x2", 1), _b("z", 2),
                   _b("x3", 1), _u("w", 2)),
        (-1, +1): (_b("x1", 1), _b("x3_2", 1), _b("x2", 1), _u("z", 2),
                   _u("x3", 1), _b("w", 2)),
        (-1, -1): (_b("x1", 1), _b("x3_2", 1), _b("x2", 1), _u("z", 2),
                   _b("x3", 1), _u("w", 2)),
    }[(mu, nu)]
    witnesses = {
        (+1, +1): (("x2^2", "x2^2"), ("x3^2", "x3^2")),
        (+1, -1): (("x2^2", "x2^2"), ("w^2", "w^2")),
        (-1, +1): (("z^2", "z^2"), ("x3^2", "x3^2")),
        (-1, -1): (("z^2", "z^2"), ("w^2", "w^2")),
    }[(mu, nu)]
    return Presentation(
        family=fam,
        display=f"2-dim pale block + 2 points, labels ({sign[mu]}1, {sign[nu]}1)",
        builder=(lambda m=mu, n=nu: build_emn(m, n)),
        definitions=(("z", "[x3_2, x2]"), ("w", "[x3_2, x3]")),
        relations=tuple(common),
        witnesses=witnesses + (("z w", "z*w"),),
        pbw=heights,
        gk=2,
        mutated=("x1 x2 sign flip", "x1*x2 + q12*x2*x1"),
        derivation_checks=(("x2", "z", "-x1"), ("x3", "w", "-a*x1")),
        table_row=3 if (mu, nu) == (+1, +1) else None,
    )


for _mu in (+1, -1):
    for _nu in (+1, -1):
        _register(_emn_presentation(_mu, _nu))


_register(Presentation(
    family="Einf",
    display="2-dim pale block + 2 points, vanishing interaction scalar",
    builder=build_einf,
    definitions=(
        ("x31", "[x3, x1]"),
        ("x13", "[x1, x3]"),
        ("x33_2", "[x3, x3_2]"),
        ("x133_2", "ad(x1)(x33_2)"),
        ("x3_231", "ad(x3_2)(x31)"),
        ("z000", "x2"),
        ("z100", "ad(x3_2)(z000)"),
        ("z010", "ad(x3)(z100)"),
        ("z110", "ad(x3_2)(z010)"),
        ("z001", "ad(x1)(z010)"),
        ("z101", "ad(x3_2)(z001)"),
        ("z011", "ad(x3)(z101)"),
        ("z111", "ad(x3_2)(z011)"),
        ("y", "[z110, z001]"),
    ),
    relations=(
        ("x3_2 x1 anti", "x3_2*x1 + x1*x3_2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x33_2^2", "x33_2^2", "defining"),
        ("x133_2^2", "x133_2^2", "defining"),
        ("x133_2 x3", "x133_2*x3 + q13^2*x3*x133_2", "defining"),
        ("x3^2", "x3^2", "defining"),
        ("x13^2", "x13^2", "defining"),
        ("x1^2", "x1^2", "defining"),
        ("x2 x3 q-comm", "x2*x3 - q23*x3*x2", "defining"),
        ("x1 x2 q-comm", "x1*x2 - q12*x2*x1", "defining"),
        ("z100 x2 q-comm", "z100*x2 - q12*x2*z100", "defining"),
        ("z010^2", "z010^2", "defining"),
        ("z001^2", "z001^2", "defining"),
        ("z101^2", "z101^2", "defining"),
        ("z011^2", "z011^2", "defining"),
        ("x3_2 y", "x3_2*y - q12^2*q13^2*y*x3_2 + q12*q13*z001*z101",
         "defining"),
        ("z110 y", "z110*y - y*z110 + z001*y", "defining"),
        ("z100^2", "z100^2", "derived"),
        ("z010 z100", "z010*z100 + q31*q32*z100*z010", "derived"),
        ("z001 z010", "z001*z010 - q13*q12*z010*z001", "derived"),
        ("z101 z001", "z101*z001 + q13*q12*z001*z101", "derived"),
        ("z101 z110", "z101*z110 + q12*q13*(z110 + z001)*z101", "derived"),
    ),
    witnesses=(("z000^2", "z000^2"), ("z110", "z110"), ("z111", "z111"),
               ("y", "y")),
    pbw=(_u("z000", 1), _b("z100", 2), _b("z010", 3), _b("z001", 4),
         _u("y", 8), _u("z110", 4), _b("z101", 5), _b("z011", 6),
         _u("z111", 7), _b("x3_2", 1), _b("x33_2", 2), _b("x133_2", 3),
         _b("x3", 1), _b("x13", 2), _b("x1", 1)),
    gk=4,
    mutated=("x1 x2 sign flip", "x1*x2 + q12*x2*x1"),
    derivation_checks=(
        ("x2", "z100", "-x1"),
        ("x2", "z010", "-x31"),
        ("x2", "z001", "-2*x1*x31"),
        ("x2", "z110", "-(x3_231 + x1*x31)"),
        ("x2", "z101", "2*x1*x3_231"),
        ("x2", "z011", "2*x31*x3_231"),
        ("x2", "z111", "-2*x1*x31*x3_231"),
        ("x1", "z110", "0"),
        ("x3_2", "z011", "0"),
        ("x3", "z111", "0"),
    ),
    k1=K1Spec(acting=("x1", "x3_2", "x3"), targets=("x2",), dim=8, depth=7),
    table_row=4,
))


# ---------------------------------------------------------------------------
# rank 4: two 2-dim components
# ---------------------------------------------------------------------------

_register(Presentation(
    family="S20",
    display="two pale blocks, weak interaction",
    builder=build_s20,
    definitions=(
        ("z", "[x3_2, x2]"),
        ("s", "[x3_2, x5_2]"),
        ("x15_2", "[x1, x5_2]"),
        ("x5_21", "[x5_2, x1]"),
    ),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x1 x3_2 anti", "x1*x3_2 + x3_2*x1", "defining"),
        ("x2^2", "x2^2", "defining"),
        ("x5_2^2", "x5_2^2", "defining"),
        ("x2 x5_2 anti", "x2*x5_2 + x5_2*x2", "defining"),
        ("x2 x1 q-comm", "x2*x1 - q21*x1*x2", "defining"),
        ("x2 z anti", "x2*z + q21*z*x2", "defining"),
        ("x1 x5_21 anti", "x1*x5_21 + q12*x5_21*x1", "defining"),
        ("x15_2 = z", "x15_2 - z", "defining"),
        ("s x2", "s*x2 + q12*x2*s", "defining"),
        ("s x5_2", "s*x5_2 + q12*x5_2*s + q12*x2*s", "defining"),
        ("s z", "s*z - z*s + z^2", "defining"),
        ("x1 s", "x1*s + q12*(s + z)*x1", "derived"),
        ("x3_2 z", "x3_2*z + q12*z*x3_2", "derived"),
        ("z x5_2", "z*x5_2 + q12*x5_2*z + q12*x2*z", "derived"),
    ),
    witnesses=(("s^2", "s^2"), ("z^2", "z^2"),
               ("top monomial", "x5_2*x2*x3_2*x1")),
    pbw=(_b("x5_2", 1), _u("s", 2), _b("x2", 1), _u("z", 2),
         _b("x3_2", 1), _b("x1", 1)),
    gk=2,
    mutated=("x2 x1 sign flip", "x2*x1 + q21*x1*x2"),
    derivation_checks=(
        ("x2", "z", "-x1"),
        ("x5_2", "z", "0"),
        ("x2", "s", "-(x3_2 + x1)"),
        ("x5_2", "s", "-x1"),
        ("x2", "x15_2", "-x1"),
        ("x1", "z", "0"),
        ("x3_2", "s", "0"),
    ),
    k1=K1Spec(acting=("x1", "x3_2"), targets=("x2", "x5_2"), dim=4, depth=2),
    table_row=5,
))

_register(Presentation(
    family="S1p-half",
    display="pale block + Jordan-plane block, ghost 1",
    builder=lambda: build_s1p("q", "-1/2"),
    definitions=(
        ("z", "[x3_2, x2]"),
        ("s", "[x3_2, x5_2]"),
        ("x15_2", "[x1, x5_2]"),
    ),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x1 x3_2 anti", "x1*x3_2 + x3_2*x1", "defining"),
        ("x1 x2 q-comm", "x1*x2 - q12*x2*x1", "defining"),
        ("z^2", "z^2", "defining"),
        ("x2 z q-comm", "x2*z - q21*z*x2", "defining"),
        ("x15_2 = a z", "x15_2 + (1/2)*z", "defining"),
        ("s x2", "s*x2 - q12*x2*s", "defining"),
        ("s x5_2", "s*x5_2 - q12*(x5_2 + (1/2)*x2)*s", "defining"),
        ("s^2", "s^2", "defining"),
        ("s z anti", "s*z + z*s", "defining"),
        ("x5_2 x2 jordan", "x5_2*x2 - x2*x5_2 + (1/2)*x2^2", "defining"),
        ("x1 z", "x1*z + q12*z*x1", "derived"),
        ("x3_2 z", "x3_2*z + q12*z*x3_2", "derived"),
        ("z x5_2", "z*x5_2 - q12*(x5_2 + (1/2)*x2)*z", "derived"),
        ("x1 s", "x1*s + q12*(s - (1/2)*z)*x1", "derived"),
        ("x3_2 s", "x3_2*s + q12*(s - (1/2)*z)*x3_2", "derived"),
    ),
    witnesses=(("x5_2^2", "x5_2^2"), ("x2^2", "x2^2"), ("s", "s"),
               ("z", "z")),
    pbw=(_u("x5_2", 1), _u("x2", 1), _b("s", 2), _b("z", 2),
         _b("x3_2", 1), _b("x1", 1)),
    gk=2,
    mutated=("x1 x2 sign flip", "x1*x2 + q12*x2*x1"),
    derivation_checks=(
        ("x2", "z", "-x1"),
        ("x2", "s", "(1/2)*(x3_2 + x1)"),
        ("x5_2", "s", "-x1"),
        ("x2", "x15_2", "(1/2)*x1"),
    ),
    k1=K1Spec(acting=("x1", "x3_2"), targets=("x2", "x5_2"), dim=4, depth=2),
    wn=WnRecursion(ghost=1, block_eigenvalue=+1),
    table_row=6,
))

_register(Presentation(
    family="S1p-one",
    display="pale block + Jordan-plane block, ghost 2",
    builder=lambda: build_s1p("q", "-1"),
    definitions=(
        ("z", "[x3_2, x2]"),
        ("s", "[x3_2, x5_2]"),
        ("x15_2", "[x1, x5_2]"),
        ("t", "[s, x5_2]"),
        ("w", "[s, x2]"),
        ("x", "s*z + z*s"),
    ),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x1 x3_2 anti", "x1*x3_2 + x3_2*x1", "defining"),
        ("x1 x2 q-comm", "x1*x2 - q12*x2*x1", "defining"),
        ("z^2", "z^2", "defining"),
        ("x2 z q-comm", "x2*z - q21*z*x2", "defining"),
        ("x15_2 = a z", "x15_2 + z", "defining"),
        ("x5_2 x2 jordan", "x5_2*x2 - x2*x5_2 + (1/2)*x2^2", "defining"),
        ("z x5_2", "z*x5_2 - q12*x5_2*z - w", "defining"),
        ("t x5_2", "t*x5_2 - q12*(x5_2 + x2)*t", "defining"),
        ("z t", "z*t + q12*(t - w)*z", "defining"),
        ("w x5_2", "w*x5_2 - q12*(x5_2 + x2)*w", "defining"),
        ("s t", "s*t + q12*(t - w)*s", "defining"),
        ("x1 t", "x1*t + q12^2*(t - 2*w)*x1 - q12*x", "derived"),
        ("x3_2 t", "x3_2*t + q12^2*(t - 2*w)*x3_2 + 2*q12*s^2 - q12*z*s",
         "derived"),
        ("x3_2 w", "x3_2*w + q12^2*w*x3_2 + q12*x", "derived"),
        ("w^2", "w^2", "derived"),
        ("t^2", "t^2", "derived"),
    ),
    witnesses=(("x2^2", "x2^2"), ("x5_2^2", "x5_2^2"), ("s^2", "s^2"),
               ("x", "x"), ("t", "t"), ("w", "w")),
    pbw=(_u("x2", 1), _u("x5_2", 1), _b("w", 3), _b("t", 3), _b("z", 2),
         _u("x", 4), _u("s", 2), _b("x3_2", 1), _b("x1", 1)),
    gk=4,
    mutated=("x1 x2 sign flip", "x1*x2 + q12*x2*x1"),
    derivation_checks=(
        ("x5_2", "t", "z"),
        ("x2", "t", "s"),
        ("x5_2", "w", "0"),
        ("x2", "w", "z"),
        ("x2", "x", "-z*x1"),
    ),
    k1=K1Spec(acting=("x1", "x3_2"), targets=("x2", "x5_2"), dim=4, depth=2),
    wn=WnRecursion(ghost=2, block_eigenvalue=+1),
    table_row=7,
))

_register(Presentation(
    family="S1m",
    display="pale block + super-Jordan-plane block, ghost 1",
    builder=build_s1m,
    # stated in the normalized basis where the Jordan coefficient of the
    # second component equals its eigenvalue (rescale x5_2 by -1)
    normalization=(("x5_2", "-1"),),
    definitions=(
        ("z", "[x3_2, x2]"),
        ("s", "[x3_2, x5_2]"),
        ("x15_2", "[x1, x5_2]"),
        ("x5_22", "[x5_2, x2]"),
        ("t", "[s, x5_2]"),
        ("w", "[s, x2]"),
    ),
    relations=(
        ("x1^2", "x1^2", "defining"),
        ("x3_2^2", "x3_2^2", "defining"),
        ("x1 x3_2 anti", "x1*x3_2 + x3_2*x1", "defining"),
        ("x1 x2 q-comm", "x1*x2 - q12*x2*x1", "defining"),
        ("x2^2", "x2^2", "defining"),
        ("x2 z anti", "x2*z + q21*z*x2", "defining"),
        ("x15_2 = a z", "x15_2 - z", "defining"),
        ("z x5_2", "z*x5_2 + q12*x5_2*z - w", "defining"),
        ("t x5_2", "t*x5_2 - q12*(x5_2 - x2)*t", "defining"),
        ("x3_2 t", "x3_2*t + q12^2*(t + 2*w)*x3_2 + q12*z*s", "defining"),
        ("w x5_2", "w*x5_2 - q12*(x5_2 - x2)*w", "defining"),
        ("s z jordan", "s*z - z*s + (1/2)*z^2", "defining"),
        ("x5_2 x5_22", "x5_2*x5_22 - x5_22*x5_2 - x2*x5_22", "defining"),
        ("x1 t", "x1*t + q12^2*(t + 2*w)*x1 + (1/2)*q12*z^2", "derived"),
        ("x3_2 x5_22", "x3_2*x5_22 - q12^2*x5_22*x3_2 - 2*w - q12*x2*z",
         "derived"),
        ("x3_2 w", "x3_2*w + q12^2*w*x3_2 + (1/2)*q12*z^2", "derived"),
        ("z x5_22", "z*x5_22 - q12^2*x5_22*z", "derived"),
        ("t x2", "t*x2 - q12*x2*t", "derived"),
        ("w^2", "w^2", "derived"),
        ("t^2", "t^2", "derived"),
    ),
    witnesses=(("x5_2^2", "x5_2^2"), ("z^2", "z^2"), ("s^2", "s^2"),
               ("x5_22", "x5_22"), ("t", "t"), ("w", "w")),
    pbw=(_b("x2", 1), _u("x5_22", 2), _u("x5_2", 1), _b("w", 3), _b("t", 3),
         _u("z", 2), _u("s", 2), _b("x3_2", 1), _b("x1", 1)),
    gk=4,
    mutated=("x1 x2 sign flip", "x1*x2 + q12*x2*x1"),
    derivation_checks=(
        ("x5_2", "t", "z"),
        ("x2", "t", "s"),
        ("x5_2", "w", "0"),
        ("x2", "w", "z"),
        ("x2", "z", "-x1"),
        ("x2", "s", "-(x3_2 + x1)"),
        ("x5_2", "s", "-x1"),
    ),
    k1=K1Spec(acting=("x1", "x3_2"), targets=("x2", "x5_2"), dim=4, depth=2),
    wn=WnRecursion(ghost=1, block_eigenvalue=-1),
    table_row=8,
))


# ---------------------------------------------------------------------------
# public registry
# ---------------------------------------------------------------------------

PRESENTATIONS = dict(_PRESENTATIONS)

# the 11 catalog presentations: 3 rank-3 + 8 rank-4 rows (the four sign cases
# of the pale-block + 2-points family are one row, represented by E++)
CATALOG_ROWS = (
    "Ep", "Em", "Estar",
    "E3-", "E3+", "E++", "Einf", "S20", "S1p-half", "S1p-one", "S1m",
)

# all concrete presentation ids (sign cases expanded)
ALL_FAMILIES = (
    "Ep", "Em", "Estar",
    "E3-", "E3+", "E++", "E+-", "E-+", "E--", "Einf",
    "S20", "S1p-half", "S1p-one", "S1m",
)

# rank-4 family table: (family id, claimed growth degree)
TABLE_ROWS = (
    ("E3-", 2), ("E3+", 4), ("E++", 2), ("Einf", 4),
    ("S20", 2), ("S1p-half", 2), ("S1p-one", 4), ("S1m", 4),
)


def presentation_for(family):
    try:
        return PRESENTATIONS[family]
    except KeyError:
        raise KeyError(f"unknown family {family!r}; "
                       f"known: {', '.join(sorted(PRESENTATIONS))}") from None


# recursion scalars for the w_n tower ---------------------------------------

def wn_scalars(ghost, block_eigenvalue, upto):
    """Closed-form a_n, b_n sequences controlling the w_n tower."""
    G = Fraction(ghost)
    a = [Fraction(1)]
    b = [Fraction(1)]
    if block_eigenvalue == +1:
        for n in range(1, upto + 1):
            a.append(a[-1] * ((G - 1) * n - G / 2))
        for n in range(1, upto + 1):
            if n % 2 == 0:
                k = n // 2
                b.append(-(G / 2) * a[k - 1] + b[n - 1])
            else:
                k = (n - 1) // 2
                b.append(b[n - 1] * (k * (G - 1) + G / 2 - 1) + (G / 2) * a[k])
    else:
        a = []
        for n in range(0, upto + 1):
            prod = Fraction(1)
            for k in range(0, n + 1):
                prod *= (2 * G - 1) * k - 2 * G
            a.append(-prod / (2 ** (n + 1) * G))
        for n in range(0, upto):
            b.append((-1) ** n * G * a[n]
                     - b[n] * (Fraction((2 * G - 1) * n, 2) + (G - 1)))
    return a, b
