"""Braided vector spaces realized as Yetter-Drinfeld modules over Z^r.

A space is a finite basis graded by Z^r together with one invertible,
grading-preserving action matrix per group generator; the matrices commute
pairwise.  The braiding is c(v (x) w) = (g.w) (x) v for v of degree g, and
everything downstream (free algebra, Nichols engine) is driven by the action
matrices stored here.

The module also carries the family catalog: the rank-3 spaces built from a
2-dimensional pale block and a point, the rank-4 Endymion and Selene spaces,
Jordan blocks V(eps, l), and generic diagonal braidings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Scalar, ScalarError, parse_scalar

GroupElement = tuple  # exponent vector over the group generators


class SpaceError(ValueError):
    """Invalid space construction or query."""


def g_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def g_sum(elements, rank):
    total = [0] * rank
    for e in elements:
        for i, x in enumerate(e):
            total[i] += x
    return tuple(total)


# ---------------------------------------------------------------------------
# matrices over Scalar
# ---------------------------------------------------------------------------

def _mat_mul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for k in range(n):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                term = a[i][k] * b[k][j]
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else a[i][j] - a[i][j])
        out.append(tuple(row))
    return tuple(out)


def _mat_id(n, params):
    one, zero = Scalar.one(params), Scalar.zero(params)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def _mat_det(m):
    # plain elimination; the sign of the result is not tracked (only zerovs
    # nonzero is ever used)
    n = len(m)
    rows = [list(r) for r in m]
    det = Scalar.one(m[0][0].params)
    for col in range(n):
        piv = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if piv is None:
            return Scalar.zero(m[0][0].params)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        det = det * pv
        for r in range(col + 1, n):
            if rows[r][col].is_zero():
                continue
            f = rows[r][col] / pv
            rows[r] = [rows[r][j] - f * rows[col][j] for j in range(n)]
    return det


def _mat_inv(m, params):
    n = len(m)
    aug = [list(r) + list(_mat_id(n, params)[i]) for i, r in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise SpaceError("action matrix is not invertible")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r == col or aug[r][col].is_zero():
                continue
            f = aug[r][col]
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


# ---------------------------------------------------------------------------
# BraidedSpace
# ---------------------------------------------------------------------------

class BraidedSpace:
    """Immutable Z^r-graded module with commuting invertible actions."""

    def __init__(self, labels, components, actions, params=(),
                 family=None, scalars=None, nonzero=None, assignment=None,
                 validate=True):
        self.labels = tuple(labels)
        self.components = tuple(tuple(c) for c in components)
        self.rank = len(self.components)
        self.params = tuple(params)
        self.actions = tuple(tuple(tuple(row) for row in m) for m in actions)
        self.family = family
        self.scalars = dict(scalars or {})
        self.nonzero = tuple(nonzero or ())
        self.assignment = assignment  # set for specialized spaces
        self.label_index = {lab: i for i, lab in enumerate(self.labels)}
        comp_of = {}
        for ci, comp in enumerate(self.components):
            for i in comp:
                comp_of[i] = ci
        self.component_of = tuple(comp_of[i] for i in range(len(self.labels)))
        self.degrees = tuple(
            tuple(1 if j == self.component_of[i] else 0 for j in range(self.rank))
            for i in range(len(self.labels)))
        self._act_matrices = {}
        self._act_columns = {}
        self._inverses = None
        if validate:
            self._validate()

    # -- invariants ----------------------------------------------------------

    def _validate(self):
        n = self.dim
        if len(self.actions) != self.rank:
            raise SpaceError("one action matrix per group generator required")
        for m in self.actions:
            if len(m) != n or any(len(r) != n for r in m):
                raise SpaceError("action matrix has wrong shape")
            for i in range(n):
                for j in range(n):
                    if self.degrees[i] != self.degrees[j] and not m[i][j].is_zero():
                        raise SpaceError("action does not preserve the grading")
            if _mat_det(m).is_zero():
                raise SpaceError("action matrix is not invertible")
        for a in range(self.rank):
            for b in range(a + 1, self.rank):
                if not _mat_eq(_mat_mul(self.actions[a], self.actions[b]),
                               _mat_mul(self.actions[b], self.actions[a])):
                    raise SpaceError("action matrices do not commute")
        for name, value in self.nonzero:
            if value.is_zero():
                raise SpaceError(f"required nonzero scalar {name} is zero")

    @property
    def dim(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self.label_index[label]
        except KeyError:
            raise SpaceError(f"unknown generator label {label!r}") from None

    def letter_degree(self, i):
        return self.degrees[i]

    @property
    def mode(self):
        return "specialized" if self.assignment is not None else "exact"

    # -- group action --------------------------------------------------------

    def act_matrix(self, g):
        g = tuple(g)
        cached = self._act_matrices.get(g)
        if cached is not None:
            return cached
        m = _mat_id(self.dim, self.params)
        for j, k in enumerate(g):
            if k == 0:
                continue
            base = self.actions[j] if k > 0 else self._inverse(j)
            for _ in range(abs(k)):
                m = _mat_mul(m, base)
        self._act_matrices[g] = m
        return m

    def _inverse(self, j):
        if self._inverses is None:
            self._inverses = [None] * self.rank
        if self._inverses[j] is None:
            self._inverses[j] = _mat_inv(self.actions[j], self.params)
        return self._inverses[j]

    def act_columns(self, g):
        """Per-letter expansion of g:  letter l -> [(i, coeff), ...]."""
        g = tuple(g)
        cached = self._act_columns.get(g)
        if cached is None:
            m = self.act_matrix(g)
            cached = tuple(
                tuple((i, m[i][l]) for i in range(self.dim) if not m[i][l].is_zero())
                for l in range(self.dim))
            self._act_columns[g] = cached
        return cached

    # -- derived spaces ------------------------------------------------------

    def rescale_basis(self, label, scale):
        """New space with basis vector `label` replaced by scale * x_label."""
        if isinstance(scale, (int, Fraction)):
            scale = Scalar.const(scale, self.params)
        if scale.is_zero():
            raise SpaceError("rescaling factor must be nonzero")
        k = self.index(label)
        n = self.dim
        actions = []
        for m in self.actions:
            new = [[m[i][j] for j in range(n)] for i in range(n)]
            for i in range(n):
                if i != k:
                    new[i][k] = m[i][k] * scale
                    new[k][i] = m[k][i] / scale
            actions.append(new)
        return BraidedSpace(self.labels, self.components, actions, self.params,
                            family=self.family, scalars=self.scalars,
                            nonzero=self.nonzero, assignment=self.assignment)

    def specialize(self, assignment):
        """Evaluate every scalar at a rational point; errors on poles/zeros."""
        if not self.params:
            return self
        point = {p: Fraction(v) if not isinstance(v, Fraction) else v
                 for p, v in assignment.items()}
        missing = [p for p in self.params if p not in point]
        if missing:
            raise SpaceError(f"assignment missing parameters {missing}")

        def ev(s):
            return Scalar.const(s.specialize(point), ())

        for name, value in self.nonzero:
            if value.specialize(point) == 0:
                raise SpaceError(
                    f"required nonzero scalar {name} vanishes at {dict(point)}")
        actions = [[[ev(x) for x in row] for row in m] for m in self.actions]
        return BraidedSpace(
            self.labels, self.components, actions, (),
            family=self.family,
            scalars={k: ev(v) for k, v in self.scalars.items()},
            nonzero=(), assignment=dict(point))

    def braiding(self, k, l):
        """c(x_k (x) x_l) = (g_{deg k} . x_l) (x) x_k as a 2-letter element."""
        from .freealg import FreeElement
        if isinstance(k, str):
            k = self.index(k)
        if isinstance(l, str):
            l = self.index(l)
        cols = self.act_columns(self.degrees[k])
        terms = {(i, k): c for i, c in cols[l]}
        return FreeElement(self, terms)

    def __repr__(self):
        fam = self.family or "custom"
        return f"BraidedSpace({fam}, dim={self.dim}, rank={self.rank}, mode={self.mode})"


# ---------------------------------------------------------------------------
# braid equation and component classification
# ---------------------------------------------------------------------------

def check_braid_equation(space):
    """Exact check of (c x 1)(1 x c)(c x 1) = (1 x c)(c x 1)(1 x c) on all triples."""
    n = space.dim
    pair = {}
    for k in range(n):
        cols = space.act_columns(space.degrees[k])
        for l in range(n):
            pair[(k, l)] = [(m, k, c) for m, c in cols[l]]

    def apply(slot, vec):
        out = {}
        for (a, b, c), coeff in vec.items():
            trip = (a, b, c)
            if slot == 0:
                for (m, kk, s) in pair[(trip[0], trip[1])]:
                    key = (m, kk, trip[2])
                    out[key] = out.get(key, Scalar.zero(space.params)) + coeff * s
            else:
                for (m, kk, s) in pair[(trip[1], trip[2])]:
                    key = (trip[0], m, kk)
                    out[key] = out.get(key, Scalar.zero(space.params)) + coeff * s
        return {k: v for k, v in out.items() if not v.is_zero()}

    for a in range(n):
        for b in range(n):
            for c in range(n):
                start = {(a, b, c): Scalar.one(space.params)}
                lhs = apply(0, apply(1, apply(0, start)))
                rhs = apply(1, apply(0, apply(1, start)))
                if lhs != rhs:
                    return False
    return True


@dataclass(frozen=True)
class Classification:
    kind: str            # point | block | pale_block | other
    eigenvalue: object   # Scalar or None
    dim: int

    def __str__(self):
        if self.kind == "point":
            return f"point({self.eigenvalue})"
        if self.kind == "block":
            return f"block({self.eigenvalue})"
        if self.kind == "pale_block":
            return f"pale_block({self.eigenvalue}, dim={self.dim})"
        return "other"


def classify_component(degree, matrix):
    """Shape of a component from the action of its own degree."""
    n = len(matrix)
    params = matrix[0][0].params
    if _mat_det(matrix).is_zero():
        raise SpaceError("component action is not invertible")
    if n == 1:
        return Classification("point", matrix[0][0], 1)
    diag = [matrix[i][i] for i in range(n)]
    scalar = all(
        matrix[i][j].is_zero() for i in range(n) for j in range(n) if i != j
    ) and all(d == diag[0] for d in diag)
    if scalar:
        return Classification("pale_block", diag[0], n)
    if n == 2:
        # single eigenvalue iff (tr/2)^2 = det; Jordan iff also not scalar
        tr = matrix[0][0] + matrix[1][1]
        det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
        eps = tr / Scalar.const(2, params)
        if eps * eps == det:
            return Classification("block", eps, 2)
    return Classification("other", None, n)


def classify_space_components(space):
    out = []
    for ci, comp in enumerate(space.components):
        g = tuple(1 if j == ci else 0 for j in range(space.rank))
        m = space.act_matrix(g)
        sub = tuple(tuple(m[i][j] for j in comp) for i in comp)
        out.append(classify_component(g, sub))
    return out


# ---------------------------------------------------------------------------
# diagonal diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagonalDiagram:
    labels: tuple
    vertices: tuple            # Scalar per vertex
    edges: tuple               # ((i, j, Scalar), ...) with i < j, label != 1

    def edge_map(self):
        return {(i, j): s for i, j, s in self.edges}

    def is_cycle(self):
        if len(self.edges) != len(self.labels):
            return False
        deg = {i: 0 for i in range(len(self.labels))}
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return all(d == 2 for d in deg.values())

    def __str__(self):
        vs = ", ".join(f"{l}:{v}" for l, v in zip(self.labels, self.vertices))
        es = ", ".join(f"{self.labels[i]}--{self.labels[j]}:{s}"
                       for i, j, s in self.edges)
        return f"vertices [{vs}] edges [{es or 'none'}]"


def gr_diagram(space, flag):
    """Diagonal diagram of the associated graded space along a full flag.

    `flag` is an ordering of all basis labels in which every action matrix is
    upper triangular; the diagram is read off the diagonal coefficients.
    """
    order = [space.index(l) if isinstance(l, str) else l for l in flag]
    if sorted(order) != list(range(space.dim)):
        raise SpaceError("flag must enumerate the whole basis")
    for m in space.actions:
        for a, i in enumerate(order):
            for b, j in enumerate(order):
                if a > b and not m[i][j].is_zero():
                    raise SpaceError("actions are not triangular in this flag order")
    n = space.dim
    q = [[None] * n for _ in range(n)]
    for a, i in enumerate(order):
        for b, j in enumerate(order):
            m = space.act_matrix(space.degrees[j])
            q[a][b] = m[i][i]
    vertices = tuple(q[a][a] for a in range(n))
    edges = []
    one = Scalar.one(space.params)
    for a in range(n):
        for b in range(a + 1, n):
            tilde = q[a][b] * q[b][a]
            if tilde != one:
                edges.append((a, b, tilde))
    labels = tuple(space.labels[i] for i in order)
    return DiagonalDiagram(labels, vertices, tuple(edges))


def diagram(space):
    """Dynkin-style diagram of a diagonal-type space."""
    for m in space.actions:
        for i in range(space.dim):
            for j in range(space.dim):
                if i != j and not m[i][j].is_zero():
                    raise SpaceError("not diagonal type")
    return gr_diagram(space, list(space.labels))


# ---------------------------------------------------------------------------
# ghost
# ---------------------------------------------------------------------------

def ghost(space):
    """Ghost invariant of a (2-dim pale block) + (2-dim block) space.

    Normalizes the second component so that its Jordan coefficient equals its
    eigenvalue, then returns -2a (eigenvalue 1) or a (eigenvalue -1).
    """
    if space.dim != 4 or space.rank != 2 or \
            any(len(c) != 2 for c in space.components):
        raise SpaceError("ghost needs two 2-dimensional components")
    shapes = classify_space_components(space)
    minus_one = Scalar.const(-1, space.params)
    if shapes[0].kind != "pale_block" or shapes[0].eigenvalue != minus_one:
        raise SpaceError("first component must be a pale block at -1")
    c0, c1 = space.components
    a_g1, a_g2 = space.act_matrix((1, 0)), space.act_matrix((0, 1))
    q12 = a_g1[c1[0]][c1[0]]
    q21 = a_g2[c0[0]][c0[0]]
    if not (q12 * q21).is_one():
        raise SpaceError("interaction not weak")
    q22 = a_g2[c1[0]][c1[0]]
    b = a_g2[c1[0]][c1[1]] / q22
    if b.is_zero():
        raise SpaceError("second component is a pale block, ghost undefined")
    a = a_g1[c1[0]][c1[1]] / q12
    a = a * (q22 / b)  # rescale x_{5/2} so that b = q22
    one = Scalar.one(space.params)
    if q22 == one:
        return Scalar.const(-2, space.params) * a
    if q22 == minus_one:
        return a
    raise SpaceError("second component eigenvalue must be +1 or -1")


# ---------------------------------------------------------------------------
# family catalog
# ---------------------------------------------------------------------------

@dataclass
class FamilySpec:
    family: str
    params: dict
    signs: dict
    a: str = None
    b: str = None

    def describe(self):
        parts = [self.family]
        if self.signs:
            parts.append(",".join(f"{k}={v}" for k, v in sorted(self.signs.items())))
        if self.params:
            parts.append(",".join(f"{k}={v}" for k, v in sorted(self.params.items())))
        if self.a is not None:
            parts.append(f"a={self.a}")
        if self.b is not None:
            parts.append(f"b={self.b}")
        return "; ".join(parts)


def _collect_params(*exprs):
    """Parameter names are the identifiers appearing in the argument strings."""
    names = []
    for ex in exprs:
        if ex is None:
            continue
        tok = ""
        for ch in ex + " ":
            if ch.isalnum() or ch == "_":
                tok += ch
            else:
                if tok and not tok.isdigit() and tok not in names:
                    names.append(tok)
                tok = ""
    return tuple(names)


def _sc(expr, params):
    return parse_scalar(expr, params)


def _minus_one(params):
    return Scalar.const(-1, params)


def _zero(params):
    return Scalar.zero(params)


def _diag_action(entries):
    n = len(entries)
    z = Scalar.zero(entries[0].params)
    return [[entries[i] if i == j else z for j in range(n)] for i in range(n)]


def build_e3(sign, q="q"):
    """Pale block of dimension 3 plus one point; sign is the point label."""
    params = _collect_params(q)
    qv = _sc(q, params)
    m1, z = _minus_one(params), _zero(params)
    q21 = qv.inverse()
    q22 = Scalar.const(sign, params)
    a1 = _diag_action([m1, m1, m1, qv])
    a2 = [[q21, q21, z, z],
          [z, q21, q21, z],
          [z, z, q21, z],
          [z, z, z, q22]]
    scalars = {"q11": m1, "q12": qv, "q21": q21, "q22": q22, "q": qv}
    name = "E3+" if sign > 0 else "E3-"
    return BraidedSpace(("x1", "x2", "x3", "x4"), ((0, 1, 2), (3,)), (a1, a2),
                        params, family=name, scalars=scalars,
                        nonzero=(("q", qv),))


def _pale_two_points(qmat, a_expr, family, params, extra_nonzero=()):
    """Setup with V1 = <x1, x3_2> pale, V2 = <x2>, V3 = <x3>."""
    q = {(i, j): qmat[i][j] for i in range(3) for j in range(3)}
    z = _zero(params)
    av = _sc(a_expr, params) if a_expr is not None else _zero(params)
    a1 = _diag_action([q[0, 0], q[0, 0], q[0, 1], q[0, 2]])
    a2 = [[q[1, 0], q[1, 0], z, z],
          [z, q[1, 0], z, z],
          [z, z, q[1, 1], z],
          [z, z, z, q[1, 2]]]
    a3 = [[q[2, 0], q[2, 0] * av, z, z],
          [z, q[2, 0], z, z],
          [z, z, q[2, 1], z],
          [z, z, z, q[2, 2]]]
    scalars = {"a": av}
    for i in range(3):
        for j in range(3):
            scalars[f"q{i + 1}{j + 1}"] = q[i, j]
    nonzero = tuple((f"q{i + 1}{j + 1}", q[i, j])
                    for i in range(3) for j in range(3)) + tuple(extra_nonzero)
    return BraidedSpace(("x1", "x3_2", "x2", "x3"), ((0, 1), (2,), (3,)),
                        (a1, a2, a3), params, family=family, scalars=scalars,
                        nonzero=nonzero)


def build_emn(mu, nu, q12="q12", q13="q13", q23="q23", a="a"):
    params = _collect_params(q12, q13, q23, a)
    v12, v13, v23 = (_sc(x, params) for x in (q12, q13, q23))
    av = _sc(a, params)
    m1 = _minus_one(params)
    qmat = [[m1, v12, v13],
            [v12.inverse(), Scalar.const(mu, params), v23],
            [v13.inverse(), v23.inverse(), Scalar.const(nu, params)]]
    fam = f"E{'+' if mu > 0 else '-'}{'+' if nu > 0 else '-'}"
    return _pale_two_points(qmat, a, fam, params, extra_nonzero=(("a", av),))


def build_einf(q12="q12", q13="q13", q23="q23"):
    params = _collect_params(q12, q13, q23)
    v12, v13, v23 = (_sc(x, params) for x in (q12, q13, q23))
    m1 = _minus_one(params)
    one = Scalar.one(params)
    qmat = [[m1, v12, v13],
            [v12.inverse(), one, v23],
            [-v13.inverse(), v23.inverse(), m1]]
    return _pale_two_points(qmat, None, "Einf", params)


def build_pale_two_points(qmat_exprs, a="0"):
    params = _collect_params(*(x for row in qmat_exprs for x in row), a)
    qmat = [[_sc(x, params) for x in row] for row in qmat_exprs]
    return _pale_two_points(qmat, a, "P3", params)


def _two_blocks(q11, q12, q21, q22, a, b, family, params, extra_nonzero=()):
    z = _zero(params)
    a1 = [[q11, z, z, z],
          [z, q11, z, z],
          [z, z, q12, q12 * a],
          [z, z, z, q12]]
    a2 = [[q21, q21, z, z],
          [z, q21, z, z],
          [z, z, q22, q22 * b],
          [z, z, z, q22]]
    scalars = {"q11": q11, "q12": q12, "q21": q21, "q22": q22, "a": a, "b": b}
    nonzero = (("q11", q11), ("q12", q12), ("q21", q21),
               ("q22", q22)) + tuple(extra_nonzero)
    return BraidedSpace(("x1", "x3_2", "x2", "x5_2"), ((0, 1), (2, 3)),
                        (a1, a2), params, family=family, scalars=scalars,
                        nonzero=nonzero)


def build_s20(q="q"):
    params = _collect_params(q)
    qv = _sc(q, params)
    m1 = _minus_one(params)
    return _two_blocks(m1, qv, qv.inverse(), m1,
                       Scalar.one(params), _zero(params), "S20", params)


def build_s1p(q="q", a="a"):
    params = _collect_params(q, a)
    qv, av = _sc(q, params), _sc(a, params)
    m1, one = _minus_one(params), Scalar.one(params)
    fam = "S1p"
    if av == Scalar.const(Fraction(-1, 2), params):
        fam = "S1p-half"
    elif av == m1:
        fam = "S1p-one"
    return _two_blocks(m1, qv, qv.inverse(), one, av, one, fam, params,
                       extra_nonzero=(("a", av),))


def build_s1m(q="q"):
    params = _collect_params(q)
    qv = _sc(q, params)
    m1 = _minus_one(params)
    return _two_blocks(m1, qv, qv.inverse(), m1,
                       m1, Scalar.one(params), "S1m", params)


def build_two_blocks(q11="q11", q12="q12", q21="q21", q22="q22", a="1", b="1"):
    params = _collect_params(q11, q12, q21, q22, a, b)
    vals = [_sc(x, params) for x in (q11, q12, q21, q22, a, b)]
    return _two_blocks(*vals, "B2", params)


def build_pale_point(q11="-1", q12="q12", q21="q21", q22="q22", a="1",
                     family="Epale"):
    """Generic 2-dim pale block plus point with Jordan coefficient a."""
    params = _collect_params(q11, q12, q21, q22, a)
    v11, v12, v21, v22, av = (_sc(x, params) for x in (q11, q12, q21, q22, a))
    z = _zero(params)
    a1 = _diag_action([v11, v11, v12])
    a2 = [[v21, v21 * av, z],
          [z, v21, z],
          [z, z, v22]]
    scalars = {"q11": v11, "q12": v12, "q21": v21, "q22": v22, "a": av}
    nonzero = (("q11", v11), ("q12", v12), ("q21", v21), ("q22", v22))
    return BraidedSpace(("x1", "x3_2", "x2"), ((0, 1), (2,)), (a1, a2),
                        params, family=family, scalars=scalars, nonzero=nonzero)


def build_endymion3(sign, q="q"):
    """E_+(q) / E_-(q): weak interaction, point label +-1."""
    params = _collect_params(q)
    qv = _sc(q, params)
    fam = "Ep" if sign > 0 else "Em"
    m1 = _minus_one(params)
    z = _zero(params)
    q21 = qv.inverse()
    q22 = Scalar.const(sign, params)
    a1 = _diag_action([m1, m1, qv])
    a2 = [[q21, q21, z], [z, q21, z], [z, z, q22]]
    scalars = {"q11": m1, "q12": qv, "q21": q21, "q22": q22, "a": Scalar.one(params),
               "q": qv}
    return BraidedSpace(("x1", "x3_2", "x2"), ((0, 1), (2,)), (a1, a2), params,
                        family=fam, scalars=scalars, nonzero=(("q", qv),))


def build_estar(q="q"):
    """E_*(q): mild interaction (q21 = -1/q), point label -1."""
    params = _collect_params(q)
    qv = _sc(q, params)
    m1 = _minus_one(params)
    z = _zero(params)
    q21 = -qv.inverse()
    a1 = _diag_action([m1, m1, qv])
    a2 = [[q21, q21, z], [z, q21, z], [z, z, m1]]
    scalars = {"q11": m1, "q12": qv, "q21": q21, "q22": m1,
               "a": Scalar.one(params), "q": qv}
    return BraidedSpace(("x1", "x3_2", "x2"), ((0, 1), (2,)), (a1, a2), params,
                        family="Estar", scalars=scalars, nonzero=(("q", qv),))


def build_block(eps, ell):
    """V(eps, ell): one component, the degree acting by a Jordan block."""
    if ell < 2:
        raise SpaceError("block size must be >= 2")
    params = ()
    epsv = Scalar.const(eps, params)
    if epsv.is_zero():
        raise SpaceError("block eigenvalue must be nonzero")
    z, one = Scalar.zero(params), Scalar.one(params)
    m = [[epsv if i == j else (one if i == j - 1 else z) for j in range(ell)]
         for i in range(ell)]
    labels = tuple(f"x{i + 1}" for i in range(ell))
    return BraidedSpace(labels, (tuple(range(ell)),), (m,), params,
                        family=f"V({eps},{ell})",
                        scalars={"eps": epsv})


def build_diagonal(qmat_exprs):
    n = len(qmat_exprs)
    params = _collect_params(*(x for row in qmat_exprs for x in row))
    q = [[_sc(x, params) for x in row] for row in qmat_exprs]
    actions = []
    for i in range(n):
        actions.append(_diag_action([q[i][j] for j in range(n)]))
    labels = tuple(f"x{i + 1}" for i in range(n))
    scalars = {f"q{i + 1}{j + 1}": q[i][j] for i in range(n) for j in range(n)}
    nonzero = tuple((f"q{i + 1}{j + 1}", q[i][j]) for i in range(n) for j in range(n))
    return BraidedSpace(labels, tuple((i,) for i in range(n)), actions, params,
                        family="diag", scalars=scalars, nonzero=nonzero)


# -- inline specs and config files ------------------------------------------

def parse_inline_spec(text):
    text = text.strip()
    if "(" not in text or not text.endswith(")"):
        raise SpaceError(f"cannot parse family spec {text!r}")
    name, rest = text.split("(", 1)
    name = name.strip()
    groups = [[x.strip() for x in grp.split(",") if x.strip()]
              for grp in rest[:-1].split(";")]
    return name, groups


def build_family(spec):
    """Build a catalog space from an inline string or a FamilySpec."""
    if isinstance(spec, FamilySpec):
        return _build_from_spec(spec)
    name, groups = parse_inline_spec(spec)
    flat = [x for grp in groups for x in grp]
    key = name.replace(" ", "")
    if key in ("E3-", "E3m"):
        return build_e3(-1, *flat or ["q"])
    if key in ("E3+", "E3p"):
        return build_e3(+1, *flat or ["q"])
    if key == "Emn":
        signs = groups[0]
        if len(signs) != 2 or any(s not in "+-" for s in signs):
            raise SpaceError("Emn needs signs like Emn(+,-;q12,q13,q23;a)")
        mu = +1 if signs[0] == "+" else -1
        nu = +1 if signs[1] == "+" else -1
        qargs = groups[1] if len(groups) > 1 else ["q12", "q13", "q23"]
        aarg = groups[2][0] if len(groups) > 2 and groups[2] else "a"
        return build_emn(mu, nu, *qargs, aarg)
    if key == "Einf":
        return build_einf(*flat or ["q12", "q13", "q23"])
    if key == "S20":
        return build_s20(*flat or ["q"])
    if key == "S1p":
        return build_s1p(*flat or ["q", "a"])
    if key == "S1m":
        return build_s1m(*flat or ["q"])
    if key in ("Ep", "E+"):
        return build_endymion3(+1, *flat or ["q"])
    if key in ("Em", "E-"):
        return build_endymion3(-1, *flat or ["q"])
    if key == "Estar":
        return build_estar(*flat or ["q"])
    if key == "Epale":
        if len(flat) <= 1:
            return build_endymion3(+1, *flat or ["q"])
        return build_pale_point(*flat)
    if key == "V":
        if len(flat) != 2:
            raise SpaceError("V needs V(eps, ell)")
        return build_block(Fraction(flat[0]), int(flat[1]))
    if key == "diag":
        return build_diagonal(groups)
    if key == "P3":
        rows = groups[:3]
        aarg = groups[3][0] if len(groups) > 3 and groups[3] else "0"
        return build_pale_two_points(rows, aarg)
    if key == "B2":
        return build_two_blocks(*flat)
    raise SpaceError(f"unknown family {name!r}")


def _build_from_spec(spec):
    name = spec.family
    p = dict(spec.params)
    if name in ("E3-", "E3+"):
        return build_e3(-1 if name.endswith("-") else +1, p.get("q", "q"))
    if name == "Emn":
        mu = +1 if spec.signs.get("mu", "+") == "+" else -1
        nu = +1 if spec.signs.get("nu", "+") == "+" else -1
        return build_emn(mu, nu, p.get("q12", "q12"), p.get("q13", "q13"),
                         p.get("q23", "q23"), spec.a or "a")
    if name == "Einf":
        return build_einf(p.get("q12", "q12"), p.get("q13", "q13"),
                          p.get("q23", "q23"))
    if name == "S20":
        return build_s20(p.get("q", "q"))
    if name == "S1p":
        return build_s1p(p.get("q", "q"), spec.a or "a")
    if name == "S1m":
        return build_s1m(p.get("q", "q"))
    if name in ("Ep", "Em"):
        return build_endymion3(+1 if name == "Ep" else -1, p.get("q", "q"))
    if name == "Estar":
        return build_estar(p.get("q", "q"))
    raise SpaceError(f"unknown family {name!r} in config")


def parse_config(text):
    """Flat key/value config: family, params.<name>, signs.mu/nu, a, b."""
    spec = FamilySpec(family=None, params={}, signs={})
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpaceError(f"config line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key == "family":
            spec.family = value
        elif key.startswith("params."):
            spec.params[key[len("params."):]] = value
        elif key.startswith("signs."):
            spec.signs[key[len("signs."):]] = value
        elif key == "a":
            spec.a = value
        elif key == "b":
            spec.b = value
        else:
            raise SpaceError(f"config line {lineno}: unknown key {key!r}")
    if spec.family is None:
        raise SpaceError("config missing 'family'")
    return spec
