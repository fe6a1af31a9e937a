import random
from fractions import Fraction

import pytest

from nichols.freealg import (
    ExprParseError,
    FreeAlgebraError,
    FreeElement,
    ad_chain,
    bracket_c,
    derivation,
    group_act,
    parse_expr,
)
from nichols.scalars import Scalar
from nichols.spaces import build_e3, build_einf, build_s1m, build_s20, g_add


E3 = build_e3(-1)


def gen(space, label):
    return FreeElement.gen(space, label)


def test_multiply_words():
    x1, x2 = gen(E3, "x1"), gen(E3, "x2")
    assert (x1 * x2).terms == {(0, 1): Scalar.one(E3.params)}
    both = (x1 + x2) * x1
    assert set(both.terms) == {(0, 0), (1, 0)}
    assert (FreeElement.zero(E3) * x1).is_zero()


def test_mismatched_spaces_rejected():
    other = build_s20()
    with pytest.raises(FreeAlgebraError):
        gen(E3, "x1") * gen(other, "x1")


def test_group_act_jordan():
    # g2 . x3_2 = q21 (x3_2 + x1) in the rank-4 pale + 2 points family
    space = build_einf()
    e = group_act(space, (0, 1, 0), gen(space, "x3_2"))
    q21 = space.scalars["q21"]
    assert e.terms == {(1,): q21, (0,): q21}


def test_group_act_identity_and_products():
    e = gen(E3, "x1") * gen(E3, "x4") + 3 * gen(E3, "x2")
    assert group_act(E3, (0, 0), e) == e
    # g1 is diagonal: on x1 x4 it scales by q11*q12 = -q12, on x2 by -1
    acted = group_act(E3, (1, 0), gen(E3, "x1") * gen(E3, "x4"))
    assert acted == (gen(E3, "x1") * gen(E3, "x4")).scaled(
        -E3.scalars["q12"])
    assert group_act(E3, (1, 0), gen(E3, "x1") * gen(E3, "x2")) == \
        gen(E3, "x1") * gen(E3, "x2")


def random_homogeneous(space, rng, max_len=3):
    """Random Gamma-homogeneous element: rearrangements of one letter pool."""
    n = space.dim
    length = rng.randint(1, max_len)
    pool = [rng.randrange(n) for _ in range(length)]
    words = set()
    for _ in range(3):
        w = pool[:]
        rng.shuffle(w)
        words.add(tuple(w))
    terms = {}
    for w in words:
        c = Scalar.const(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                         space.params)
        if not c.is_zero():
            terms[w] = c
    if not terms:
        terms = {tuple(pool): Scalar.one(space.params)}
    return FreeElement(space, terms)


@pytest.mark.parametrize("build", [build_e3, lambda: build_s1m(),
                                   lambda: build_einf()])
def test_group_act_is_algebra_automorphism(build):
    space = build() if build is not build_e3 else build_e3(+1)
    rng = random.Random(7)
    for _ in range(15):
        e = random_homogeneous(space, rng)
        f = random_homogeneous(space, rng)
        g = tuple(rng.randint(0, 2) for _ in range(space.rank))
        h = tuple(rng.randint(0, 2) for _ in range(space.rank))
        assert group_act(space, g, group_act(space, h, e)) == \
            group_act(space, g_add(g, h), e)
        assert group_act(space, g, e * f) == \
            group_act(space, g, e) * group_act(space, g, f)


def test_bracket_gives_z2():
    # [x4, x2]_c = x4 x2 - q21 (x2 + x1) x4
    z2 = bracket_c(gen(E3, "x4"), gen(E3, "x2"))
    q21 = E3.scalars["q21"]
    assert z2.terms == {(3, 1): Scalar.one(E3.params),
                        (1, 3): -q21, (0, 3): -q21}


def test_bracket_point_q_one():
    from nichols.spaces import build_diagonal
    space = build_diagonal([["1"]])
    x = gen(space, "x1")
    assert bracket_c(x, x).is_zero()


def test_bracket_requires_homogeneous_left():
    mixed = gen(E3, "x1") + gen(E3, "x4")
    with pytest.raises(FreeAlgebraError):
        bracket_c(mixed, gen(E3, "x2"))


@pytest.mark.parametrize("build", [lambda: build_e3(-1), lambda: build_e3(+1),
                                   lambda: build_s20(), lambda: build_einf()])
def test_braided_commutator_identities(build):
    space = build()
    rng = random.Random(11)
    for _ in range(12):
        u = random_homogeneous(space, rng, 2)
        v = random_homogeneous(space, rng, 2)
        w = random_homogeneous(space, rng, 2)
        g = u.gamma_degree()
        h = v.gamma_degree()
        hw = group_act(space, h, w)
        gv = group_act(space, g, v)
        # [uv, w] = u [v, w] + [u, h.w] v
        assert bracket_c(u * v, w) == \
            u * bracket_c(v, w) + bracket_c(u, hw) * v
        # [u, vw] = [u, v] w + (g.v) [u, w]
        assert bracket_c(u, v * w) == \
            bracket_c(u, v) * w + gv * bracket_c(u, w)
        # [[u,v], w] = [u,[v,w]] - (g.v)[u,w] + [u, h.w] v
        assert bracket_c(bracket_c(u, v), w) == \
            bracket_c(u, bracket_c(v, w)) - gv * bracket_c(u, w) + \
            bracket_c(u, hw) * v


def test_ad_chain_matches_nested_brackets():
    space = build_e3(+1)
    x443 = ad_chain(space, ["x4", "x4"], "x3")
    nested = bracket_c(gen(space, "x4"),
                       bracket_c(gen(space, "x4"), gen(space, "x3")))
    assert x443 == nested
    deep = ad_chain(space, ["x4", "x1", "x4"], "x2")
    expect = bracket_c(gen(space, "x4"), bracket_c(
        gen(space, "x1"), bracket_c(gen(space, "x4"), gen(space, "x2"))))
    assert deep == expect


def test_derivation_on_generators():
    for i, li in enumerate(E3.labels):
        for j, lj in enumerate(E3.labels):
            d = derivation(E3, li, gen(E3, lj))
            if i == j:
                assert d == FreeElement.unit(E3)
            else:
                assert d.is_zero()


def test_derivation_z_values():
    z2 = bracket_c(gen(E3, "x4"), gen(E3, "x2"))
    z3 = bracket_c(gen(E3, "x4"), gen(E3, "x3"))
    x4 = gen(E3, "x4")
    assert derivation(E3, "x2", z3) == -x4
    assert derivation(E3, "x1", z2) == -x4
    assert derivation(E3, "x2", z2).is_zero()
    assert derivation(E3, "x3", z2).is_zero()
    w = bracket_c(z2, gen(E3, "x3"))
    assert derivation(E3, "x1", w) == z3
    assert derivation(E3, "x2", w) == -z2
    assert derivation(E3, "x3", w).is_zero()
    assert derivation(E3, "x4", w).is_zero()


@pytest.mark.parametrize("build", [lambda: build_e3(-1), lambda: build_s1m()])
def test_derivation_leibniz(build):
    space = build()
    rng = random.Random(23)
    for _ in range(15):
        x = random_homogeneous(space, rng)
        y = random_homogeneous(space, rng)
        i = rng.randrange(space.dim)
        gi = space.degrees[i]
        assert derivation(space, i, x * y) == \
            derivation(space, i, x) * group_act(space, gi, y) + \
            x * derivation(space, i, y)


def test_derivation_lowers_degree():
    e = gen(E3, "x1") * gen(E3, "x2") * gen(E3, "x1")
    assert derivation(E3, "x1", e).n_degrees() == [2]


def test_parse_basic():
    e = parse_expr("x1*x2 - q12*x2*x1", E3)
    q12 = E3.scalars["q12"]
    assert e.terms == {(0, 1): Scalar.one(E3.params), (1, 0): -q12}
    assert parse_expr("x1^2", E3).terms == {(0, 0): Scalar.one(E3.params)}
    z2 = bracket_c(gen(E3, "x4"), gen(E3, "x2"))
    assert parse_expr("[x4,x2]", E3) == z2
    assert parse_expr("ad(x4)(x2)", E3) == z2
    assert parse_expr("(1/2)*x1", E3) == gen(E3, "x1").scaled(Fraction(1, 2))


def test_parse_names_environment():
    z2 = bracket_c(gen(E3, "x4"), gen(E3, "x2"))
    e = parse_expr("z2^2 + q21*z2", E3, names={"z2": z2})
    assert e == z2 * z2 + z2.scaled(E3.scalars["q21"])


def test_parse_errors():
    with pytest.raises(ExprParseError) as err:
        parse_expr("x1 * zork", E3)
    assert "zork" in str(err.value) and "position" in str(err.value)
    with pytest.raises(ExprParseError):
        parse_expr("x1 +", E3)
    with pytest.raises(FreeAlgebraError):
        parse_expr("[x1 + x4, x2]", E3)  # left argument not homogeneous


def test_str_round_trippable_display():
    z2 = bracket_c(gen(E3, "x4"), gen(E3, "x2"))
    text = str(z2)
    assert parse_expr(text, E3) == z2


def test_n_and_gamma_grading():
    e = gen(E3, "x1") * gen(E3, "x4") - gen(E3, "x4") * gen(E3, "x1")
    assert e.is_n_homogeneous() and e.n_degree() == 2
    assert e.gamma_degree() == (1, 1)
    mixed = gen(E3, "x1") + gen(E3, "x1") * gen(E3, "x1")
    assert not mixed.is_n_homogeneous()
    parts = mixed.homogeneous_parts()
    assert sorted(parts) == [1, 2]
