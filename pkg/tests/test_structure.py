import pytest

from nichols.engine import get_engine
from nichols.freealg import FreeElement, parse_expr
from nichols.presentations import presentation_for
from nichols.scalars import Scalar
from nichols.spaces import build_e3, build_einf, build_s20
from nichols.structure import (
    PBWGenerator,
    adjoint_subspace,
    gk_from_pbw,
    growth_fit,
    pbw_series,
)


def test_pbw_series_empty():
    assert pbw_series((), 4) == [1, 0, 0, 0, 0]


def test_pbw_series_e3_minus():
    datum = presentation_for("E3-").pbw
    # (1+t)^4 (1+t^3) / (1-t^2)^2, expanded by hand
    assert pbw_series(datum, 5) == [1, 4, 8, 13, 20, 28]


def test_pbw_series_emn_dim2():
    datum = presentation_for("E++").pbw
    # (1+t)^2 (1+t^2)^2 / (1-t)^2 has coefficient 10 at t^2
    assert pbw_series(datum, 2)[2] == 10


def test_pbw_series_single_unbounded():
    datum = (PBWGenerator("x", 1, 0),)
    assert pbw_series(datum, 5) == [1, 1, 1, 1, 1, 1]


def test_gk_values():
    assert gk_from_pbw(presentation_for("E3-").pbw) == 2
    assert gk_from_pbw(presentation_for("E3+").pbw) == 4
    assert gk_from_pbw(presentation_for("S20").pbw) == 2
    assert gk_from_pbw(presentation_for("Ep").pbw) == 1
    assert gk_from_pbw(presentation_for("Estar").pbw) == 2


def test_adjoint_subspace_e3_plus():
    space = build_e3(+1)
    sub = adjoint_subspace(space, ["x4"], ["x1", "x2", "x3"], max_depth=3)
    assert sub.dim == 6
    assert sub.saturated and sub.saturated_at == 3
    assert sub.dims_by_depth == [3, 5, 6, 6]
    # fingerprint identity: the derivation dual to x_{i-j} picks out
    # (-1)^j x4^j on the j-fold adjoint of x_i, all other derivations vanish
    eng = get_engine(space)
    x4 = FreeElement.gen(space, "x4")
    pairs = [(1, 0), (2, 0), (3, 0), (2, 1), (3, 1), (3, 2)]
    by_degree = sorted(zip(pairs, sub.basis), key=lambda t: t[0][1])
    for (i, j), element in zip(pairs, sub.basis):
        prints = sub.fingerprints(element)
        for k in range(1, 4):
            expected = (x4 ** j).scaled((-1) ** j) if k == i - j \
                else FreeElement.zero(space)
            assert eng.is_zero(prints[f"x{k}"] - eng.normal_form(expected)), \
                (i, j, k)
        assert prints["x4"].is_zero()


def test_adjoint_subspace_einf():
    space = build_einf()
    sub = adjoint_subspace(space, ["x1", "x3_2", "x3"], ["x2"], max_depth=7)
    assert sub.dim == 8
    assert sub.saturated and sub.saturated_at == 7
    assert sub.dims_by_depth == [1, 2, 3, 5, 6, 7, 8, 8]


def test_adjoint_subspace_s20():
    space = build_s20()
    sub = adjoint_subspace(space, ["x1", "x3_2"], ["x2", "x5_2"], max_depth=2)
    assert sub.dim == 4
    assert sub.saturated and sub.saturated_at == 2
    # the pale-block relation folds ad_c(x1)(x5_2) into ad_c(x3_2)(x2)
    eng = get_engine(space)
    rel = parse_expr("[x1, x5_2] - [x3_2, x2]", space)
    assert eng.is_zero(rel)


def test_adjoint_subspace_not_saturated():
    space = build_einf()
    sub = adjoint_subspace(space, ["x1", "x3_2", "x3"], ["x2"], max_depth=4)
    assert not sub.saturated
    assert sub.saturated_at is None


def test_adjoint_subspace_disjointness():
    space = build_s20()
    with pytest.raises(ValueError):
        adjoint_subspace(space, ["x1"], ["x1", "x2"], 2)


def test_growth_fit_quadratic():
    dims = [1] + [n + 1 for n in range(1, 12)]  # 1/(1-t)^2
    fit = growth_fit(dims)
    assert abs(fit.degree_estimate - 2) < 0.4
    assert fit.flags == ()
    assert "advisory" in fit.note


def test_growth_fit_e3_minus_engine_dims():
    dims = get_engine(build_e3(-1)).hilbert(6)
    fit = growth_fit(dims)
    assert abs(fit.degree_estimate - 2) < 0.5
    assert fit.flags == ()


def test_growth_fit_flags_super_polynomial():
    # engine output for the 3-dim Jordan block at -1, degrees 0..8
    dims = [1, 3, 7, 16, 35, 75, 158, 330, 685]
    fit = growth_fit(dims)
    assert "growth exceeds window" in fit.flags


def test_growth_fit_needs_points():
    with pytest.raises(ValueError):
        growth_fit([1, 2, 3])
