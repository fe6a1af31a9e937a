from fractions import Fraction

import pytest

from nichols.scalars import Scalar
from nichols.spaces import (
    SpaceError,
    build_block,
    build_diagonal,
    build_e3,
    build_einf,
    build_emn,
    build_endymion3,
    build_estar,
    build_family,
    build_pale_point,
    build_pale_two_points,
    build_s1m,
    build_s1p,
    build_s20,
    build_two_blocks,
    check_braid_equation,
    classify_component,
    classify_space_components,
    diagram,
    ghost,
    gr_diagram,
    parse_config,
)


def all_catalog_spaces():
    return [
        build_endymion3(+1),
        build_endymion3(-1),
        build_estar(),
        build_e3(-1),
        build_e3(+1),
        build_emn(+1, +1),
        build_emn(+1, -1),
        build_emn(-1, +1),
        build_emn(-1, -1),
        build_einf(),
        build_s20(),
        build_s1p("q", "-1/2"),
        build_s1p("q", "-1"),
        build_s1m(),
    ]


def test_braid_equation_all_families():
    for space in all_catalog_spaces():
        assert check_braid_equation(space), space.family


def test_braid_equation_blocks_and_diagonal():
    for space in [build_block(-1, 2), build_block(1, 2), build_block(-1, 3),
                  build_diagonal([["q11", "q12"], ["q21", "q22"]])]:
        assert check_braid_equation(space), space.family


def test_diagonal_braiding_reproduces_matrix():
    space = build_diagonal([["q11", "q12"], ["q21", "q22"]])
    for i in range(2):
        for j in range(2):
            b = space.braiding(i, j)
            assert b.terms == {(j, i): space.scalars[f"q{i + 1}{j + 1}"]}


def test_e3_braiding_jordan_row():
    # c(x4 (x) x2) = q21 (x2 + x1) (x) x4
    space = build_e3(-1)
    b = space.braiding("x4", "x2")
    q21 = space.scalars["q21"]
    assert b.terms == {(1, 3): q21, (0, 3): q21}


def test_pale_point_braiding_row():
    space = build_pale_point()
    b = space.braiding("x2", "x3_2")
    q21 = space.scalars["q21"]
    assert b.terms == {(1, 2): q21, (0, 2): q21}


def test_classify_component():
    q = Scalar.var("q", ("q",))
    m1 = Scalar.const(-1, ("q",))
    z = Scalar.zero(("q",))
    one = Scalar.one(("q",))
    assert classify_component((1,), ((q,),)).kind == "point"
    jordan = ((m1, m1), (z, m1))
    c = classify_component((1,), jordan)
    assert c.kind == "block" and c.eigenvalue == m1
    pale = ((m1, z), (z, m1))
    c = classify_component((1,), pale)
    assert c.kind == "pale_block" and c.dim == 2
    other = ((one, z), (z, m1))
    assert classify_component((1,), other).kind == "other"
    with pytest.raises(SpaceError):
        classify_component((1,), ((z,),))


def test_classify_catalog_shapes():
    assert [c.kind for c in classify_space_components(build_e3(-1))] == \
        ["pale_block", "point"]
    assert [c.kind for c in classify_space_components(build_block(-1, 2).
                                                      specialize({}))] == ["block"]
    s1p = build_s1p("q", "-1")
    kinds = [c.kind for c in classify_space_components(s1p)]
    assert kinds == ["pale_block", "block"]
    s20 = classify_space_components(build_s20())
    assert [c.kind for c in s20] == ["pale_block", "pale_block"]


def test_diagram_two_points_no_edge():
    space = build_diagonal([["q11", "1"], ["1", "q22"]])
    d = diagram(space)
    assert d.edges == ()
    assert list(d.vertices) == [space.scalars["q11"], space.scalars["q22"]]


def test_diagram_rejects_nondiagonal():
    with pytest.raises(SpaceError, match="not diagonal"):
        diagram(build_e3(-1))


def test_gr_diagram_matches_diagram_on_diagonal():
    space = build_diagonal([["q11", "q12"], ["q21", "q22"]])
    assert gr_diagram(space, ["x1", "x2"]) == diagram(space)


def test_gr_diagram_mild_two_blocks_is_affine_cycle():
    # mild interaction: q12 q21 = -1; all vertex and edge labels -1
    space = build_two_blocks("-1", "2", "-1/2", "-1", "1", "1")
    d = gr_diagram(space, ["x1", "x3_2", "x2", "x5_2"])
    m1 = Scalar.const(-1, space.params)
    assert all(v == m1 for v in d.vertices)
    assert all(s == m1 for _, _, s in d.edges)
    assert d.is_cycle()


def test_gr_diagram_pale_two_points_case_iv():
    # pale block + 2 points with mild first interaction and q13 q31 != 1:
    # 4-cycle with labels -1, qt13, qt13, -1 and vertices -1, q22, q33, -1
    space = build_pale_two_points(
        [["-1", "2", "3"], ["-1/2", "7", "5"], ["3", "1/5", "11"]], "1")
    d = gr_diagram(space, ["x1", "x2", "x3", "x3_2"])
    m1 = Scalar.const(-1, space.params)
    qt13 = Scalar.const(9, space.params)
    assert list(d.vertices) == [m1, space.scalars["q22"], space.scalars["q33"], m1]
    assert d.is_cycle()
    labels = sorted(str(s) for _, _, s in d.edges)
    assert labels == sorted([str(m1), str(m1), str(qt13), str(qt13)])


def test_gr_diagram_einf_flag():
    space = build_einf()
    d = gr_diagram(space, ["x1", "x2", "x3", "x3_2"])
    m1 = Scalar.const(-1, space.params)
    one = Scalar.one(space.params)
    assert list(d.vertices) == [m1, one, m1, m1]
    assert {(i, j) for i, j, _ in d.edges} == {(0, 2), (2, 3)}
    assert all(s == m1 for _, _, s in d.edges)


def test_gr_diagram_rejects_bad_flag():
    space = build_s20()
    with pytest.raises(SpaceError, match="triangular"):
        gr_diagram(space, ["x3_2", "x1", "x2", "x5_2"])


def test_ghost_values():
    half = ghost(build_s1p("q", "-1/2"))
    assert half == Scalar.const(1, ("q",))
    assert ghost(build_s1p("q", "-1")) == Scalar.const(2, ("q",))
    assert ghost(build_s1m()) == Scalar.const(1, ("q",))
    # symbolic ghost for S1p(q, a) is -2a
    g = ghost(build_s1p("q", "a"))
    a = Scalar.var("a", ("q", "a"))
    assert g == Scalar.const(-2, ("q", "a")) * a


def test_ghost_invariant_under_rescaling():
    for lam in (Fraction(3), Fraction(-2, 5)):
        space = build_s1m().rescale_basis("x5_2", lam)
        assert ghost(space) == Scalar.const(1, ("q",))


def test_ghost_errors():
    with pytest.raises(SpaceError, match="pale block, ghost undefined"):
        ghost(build_s20())
    mild = build_two_blocks("-1", "2", "-1/2", "-1", "1", "1")
    with pytest.raises(SpaceError, match="not weak"):
        ghost(mild)


def test_specialize_space():
    space = build_e3(-1)
    conc = space.specialize({"q": 2})
    assert conc.params == ()
    assert conc.mode == "specialized"
    assert check_braid_equation(conc)
    with pytest.raises(SpaceError, match="vanishes"):
        space.specialize({"q": 0})


def test_block_family():
    v = build_block(-1, 2)
    c = classify_space_components(v)[0]
    assert c.kind == "block" and c.eigenvalue == Scalar.const(-1, ())
    with pytest.raises(SpaceError):
        build_block(0, 2)


def test_inline_specs():
    for text, family in [
        ("E3-(q)", "E3-"),
        ("E3+(q)", "E3+"),
        ("Emn(+,-;q12,q13,q23;a)", "E+-"),
        ("Einf(q12,q13,q23)", "Einf"),
        ("S20(q)", "S20"),
        ("S1p(q,-1/2)", "S1p-half"),
        ("S1p(q,-1)", "S1p-one"),
        ("S1m(q)", "S1m"),
        ("V(-1,2)", "V(-1,2)"),
        ("Epale(q)", "Ep"),
        ("Estar(q)", "Estar"),
        ("diag(2,3;5,7)", "diag"),
    ]:
        assert build_family(text).family == family


def test_config_round_trip():
    text = """
    # an S1p instance
    family = S1p
    params.q = q
    a = -1/2
    """
    spec = parse_config(text)
    space = build_family(spec)
    assert space.family == "S1p-half"
    with pytest.raises(SpaceError):
        parse_config("params.q = q")


def test_unknown_family():
    with pytest.raises(SpaceError, match="unknown family"):
        build_family("Zork(q)")


def test_action_matrices_validated():
    from nichols.spaces import BraidedSpace
    one = Scalar.one(())
    two = Scalar.const(2, ())
    z = Scalar.zero(())
    # two actions on one 2-dim component + a point; the component blocks
    # [[1,1],[0,1]] and [[1,0],[0,2]] do not commute
    a1 = ((one, one, z), (z, one, z), (z, z, one))
    a2 = ((one, z, z), (z, two, z), (z, z, one))
    with pytest.raises(SpaceError, match="commute"):
        BraidedSpace(("x1", "x2", "x3"), ((0, 1), (2,)), (a1, a2), ())
    # grading violation: component-mixing entry
    b1 = ((one, z, one), (z, one, z), (z, z, one))
    b2 = ((one, z, z), (z, one, z), (z, z, two))
    with pytest.raises(SpaceError, match="grading"):
        BraidedSpace(("x1", "x2", "x3"), ((0, 1), (2,)), (b1, b2), ())
