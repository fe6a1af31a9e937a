"""Degreewise computation of the Nichols algebra of a braided space.

The graded ideal is built from the joint-derivation-kernel description: an
N-homogeneous element of degree n is zero in the Nichols algebra exactly when
all skew derivations send it to zero one degree down.  Degree n is processed
on the candidate set {x_i . w : w a normal word of degree n-1}, which spans
the tensor component modulo letter * (lower ideal); the kernel of the stacked
derivation map on those candidates is exactly the new ideal component, and
the surviving candidates are the normal words.  Pivoting is greedy in the
word order (degree, then lexicographic in the declared basis order), so
normal forms are deterministic.

Elements whose degree is beyond the table budget are tested for zero by the
same kernel description applied recursively: iterate all derivations and row
reduce, degree by degree, until the span dies (zero) or survives to degree
zero (nonzero).  This never returns a wrong answer; it raises BudgetError
when the configured term budget is exhausted.

An independent oracle is provided by the quantum symmetrizer
S_n = (S_{n-1} (x) id) o (id + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1),
whose rank must equal the normal-word count in every degree.
"""

from __future__ import annotations

import itertools

from .freealg import FreeElement, derivation, derive_raw
from .scalars import Scalar
from .spaces import BraidedSpace, SpaceError


class BudgetError(RuntimeError):
    """A computation exceeded its degree or term budget."""


def default_max_degree(space):
    if space.params:
        return 6 if space.dim >= 4 else (8 if space.dim == 3 else 12)
    return 8 if space.dim >= 4 else (9 if space.dim == 3 else 14)


DEFAULT_BUDGET_TERMS = 5_000_000


class _Level:
    __slots__ = ("normal_words", "pos", "nf_map")

    def __init__(self, normal_words, nf_map):
        self.normal_words = normal_words
        self.pos = {w: i for i, w in enumerate(normal_words)}
        self.nf_map = nf_map


class Engine:
    """Graded Nichols data for one braided space (exact or specialized)."""

    def __init__(self, space, max_degree=None, budget_terms=None):
        self.space = space
        self.max_degree = max_degree or default_max_degree(space)
        self.budget_terms = budget_terms or DEFAULT_BUDGET_TERMS
        one = Scalar.one(space.params)
        lvl0 = _Level([()], {(): {(): one}})
        lvl1 = _Level([(i,) for i in range(space.dim)],
                      {(i,): {(i,): one} for i in range(space.dim)})
        self._levels = [lvl0, lvl1]
        self._symm = {0: {(): {(): one}},
                      1: {(i,): {(i,): one} for i in range(space.dim)}}

    @property
    def mode(self):
        return self.space.mode

    def extend_budget(self, max_degree):
        if max_degree > self.max_degree:
            self.max_degree = max_degree

    # -- graded ideal tables --------------------------------------------------

    def ensure(self, n):
        if n > self.max_degree:
            raise BudgetError(
                f"degree {n} exceeds the budget ({self.max_degree}) for "
                f"{self.space!r}; raise max_degree explicitly to go further")
        while len(self._levels) <= n:
            self._build_level(len(self._levels))

    def _build_level(self, n):
        space = self.space
        prev = self._levels[n - 1]
        width = len(prev.normal_words)
        one = Scalar.one(space.params)
        rows = []          # (pivot coord, row dict, expr dict) in addition order
        normal = []
        nf_map = {}
        for i in range(space.dim):
            base = (i,)
            for wprev in prev.normal_words:
                u = base + wprev
                col = {}
                for j in range(space.dim):
                    img = derive_raw(space, j, {u: one})
                    if not img:
                        continue
                    off = j * width
                    for word, coeff in img.items():
                        nfv = self._nf_word(n - 1, word)
                        for nw, c in nfv.items():
                            key = off + prev.pos[nw]
                            s = col.get(key)
                            s = coeff * c if s is None else s + coeff * c
                            if s.is_zero():
                                col.pop(key, None)
                            else:
                                col[key] = s
                expr = {u: one}
                for pc, row, rexpr in rows:
                    lam = col.get(pc)
                    if lam is None:
                        continue
                    for k, v in row.items():
                        s = col.get(k)
                        s = -(v * lam) if s is None else s - v * lam
                        if s.is_zero():
                            col.pop(k, None)
                        else:
                            col[k] = s
                    for k, v in rexpr.items():
                        s = expr.get(k)
                        s = -(v * lam) if s is None else s - v * lam
                        if s.is_zero():
                            expr.pop(k, None)
                        else:
                            expr[k] = s
                if col:
                    pc = min(col)
                    pv = col[pc]
                    if not pv.is_one():
                        inv = pv.inverse()
                        col = {k: v * inv for k, v in col.items()}
                        expr = {k: v * inv for k, v in expr.items()}
                    rows.append((pc, col, expr))
                    normal.append(u)
                    nf_map[u] = {u: one}
                else:
                    # u - expr_rest is in the ideal; expr carries coefficient 1 on u
                    out = {w: -c for w, c in expr.items() if w != u}
                    nf_map[u] = out
        self._levels.append(_Level(normal, nf_map))

    def _nf_word(self, n, word):
        lvl = self._levels[n]
        hit = lvl.nf_map.get(word)
        if hit is not None:
            return hit
        sub = self._nf_word(n - 1, word[1:])
        head = (word[0],)
        out = {}
        for w, c in sub.items():
            base = lvl.nf_map[head + w]
            for nw, cc in base.items():
                s = out.get(nw)
                s = c * cc if s is None else s + c * cc
                if s.is_zero():
                    out.pop(nw, None)
                else:
                    out[nw] = s
        lvl.nf_map[word] = out
        return out

    # -- public queries -------------------------------------------------------

    def dim_n(self, n):
        if n < 0:
            raise ValueError("degree must be nonnegative")
        self.ensure(n)
        return len(self._levels[n].normal_words)

    def hilbert(self, upto):
        return [self.dim_n(n) for n in range(upto + 1)]

    def normal_words(self, n):
        self.ensure(n)
        return list(self._levels[n].normal_words)

    def normal_form(self, element):
        """Reduction to a combination of normal words (tables required)."""
        out = {}
        for deg, part in element.homogeneous_parts().items():
            self.ensure(deg)
            for word, coeff in part.terms.items():
                for nw, c in self._nf_word(deg, word).items():
                    s = out.get(nw)
                    s = coeff * c if s is None else s + coeff * c
                    if s.is_zero():
                        out.pop(nw, None)
                    else:
                        out[nw] = s
        return FreeElement(self.space, out, _clean=False)

    def is_zero(self, element):
        """Membership of each homogeneous part in the graded ideal; exact."""
        for deg, part in element.homogeneous_parts().items():
            if deg == 0:
                return False  # homogeneous_parts drops zero coefficients
            if deg <= self.max_degree:
                self.ensure(deg)
                reduced = {}
                for word, coeff in part.terms.items():
                    for nw, c in self._nf_word(deg, word).items():
                        s = reduced.get(nw)
                        s = coeff * c if s is None else s + coeff * c
                        if s.is_zero():
                            reduced.pop(nw, None)
                        else:
                            reduced[nw] = s
                if reduced:
                    return False
            else:
                if not self._span_zero(part.terms, deg):
                    return False
        return True

    def is_zero_deep(self, element):
        """is_zero through the derivation-span route regardless of tables."""
        for deg, part in element.homogeneous_parts().items():
            if deg == 0:
                return False
            if not self._span_zero(part.terms, deg):
                return False
        return True

    def _span_zero(self, terms, degree):
        space = self.space
        basis = [dict(terms)]
        work = 0
        for _ in range(degree):
            rows = []  # (pivot word, row)
            for b in basis:
                for i in range(space.dim):
                    img = derive_raw(space, i, b)
                    work += len(b) + len(img)
                    if work > self.budget_terms:
                        raise BudgetError(
                            "zero test exceeded the term budget "
                            f"({self.budget_terms}); use specialized mode "
                            "or raise budget_terms")
                    if not img:
                        continue
                    for pw, row in rows:
                        lam = img.get(pw)
                        if lam is None or lam.is_zero():
                            continue
                        for k, v in row.items():
                            s = img.get(k)
                            s = -(v * lam) if s is None else s - v * lam
                            if s.is_zero():
                                img.pop(k, None)
                            else:
                                img[k] = s
                    if img:
                        pw = min(img)
                        pv = img[pw]
                        if not pv.is_one():
                            inv = pv.inverse()
                            img = {k: v * inv for k, v in img.items()}
                        rows.append((pw, img))
            if not rows:
                return True
            basis = [row for _, row in rows]
        return False

    # -- ideal views ------------------------------------------------------

    def ideal_dim(self, n):
        return self.space.dim ** n - self.dim_n(n) if n >= 1 else 0

    def ideal_basis(self, n):
        return IdealBasis(self, n)

    def derivations_preserve_ideal(self, n, sample=None):
        """Check d_i(J_n) in J_{n-1} on materialized ideal vectors."""
        count = 0
        for vec in self.ideal_basis(n).vectors():
            for i in range(self.space.dim):
                if not self.is_zero(derivation(self.space, i, vec)):
                    return False
            count += 1
            if sample is not None and count >= sample:
                break
        return True

    # -- quantum symmetrizer oracle -----------------------------------------

    def _apply_braiding(self, terms, pos):
        space = self.space
        out = {}
        for word, coeff in terms.items():
            a, b = word[pos], word[pos + 1]
            for m, s in space.act_columns(space.degrees[a])[b]:
                w = word[:pos] + (m, a) + word[pos + 2:]
                c = coeff * s
                t = out.get(w)
                t = c if t is None else t + c
                if t.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = t
        return out

    def _symmetrizer_level(self, n):
        cached = self._symm.get(n)
        if cached is not None:
            return cached
        prev = self._symmetrizer_level(n - 1)
        space = self.space
        one = Scalar.one(space.params)
        table = {}
        for word in itertools.product(range(space.dim), repeat=n):
            acc = {word: one}
            for k in range(n - 1, 0, -1):
                # term c_{n-1} ... c_k : apply braidings at k, k+1, ..., n-1
                t = {word: one}
                for j in range(k, n):
                    t = self._apply_braiding(t, j - 1)
                for w, c in t.items():
                    s = acc.get(w)
                    s = c if s is None else s + c
                    if s.is_zero():
                        acc.pop(w, None)
                    else:
                        acc[w] = s
            out = {}
            for w, c in acc.items():
                for pw, pc in prev[w[:-1]].items():
                    full = pw + (w[-1],)
                    s = out.get(full)
                    s = c * pc if s is None else s + c * pc
                    if s.is_zero():
                        out.pop(full, None)
                    else:
                        out[full] = s
            table[word] = out
        self._symm[n] = table
        return table

    def symmetrizer_rank(self, n):
        """Rank of S_n on the degree-n tensor component; independent oracle."""
        if n <= 1:
            return 1 if n == 0 else self.space.dim
        if n > self.max_degree:
            raise BudgetError(f"symmetrizer degree {n} exceeds the budget")
        table = self._symmetrizer_level(n)
        rows = []
        pivset = {}
        rank = 0
        for word in sorted(table):
            col = dict(table[word])
            for pw, row in rows:
                lam = col.get(pw)
                if lam is None or lam.is_zero():
                    continue
                for k, v in row.items():
                    s = col.get(k)
                    s = -(v * lam) if s is None else s - v * lam
                    if s.is_zero():
                        col.pop(k, None)
                    else:
                        col[k] = s
            if col:
                pw = min(col)
                pv = col[pw]
                if not pv.is_one():
                    inv = pv.inverse()
                    col = {k: v * inv for k, v in col.items()}
                rows.append((pw, col))
                rank += 1
        return rank

    def symmetrizer_kills_ideal(self, n):
        """True iff S_n annihilates every ideal vector e_w - nf(w)."""
        self.ensure(n)
        table = self._symmetrizer_level(n)
        lvl = self._levels[n]
        for word in itertools.product(range(self.space.dim), repeat=n):
            nfv = self._nf_word(n, word)
            if nfv.get(word) is not None and nfv[word].is_one() and len(nfv) == 1:
                continue
            acc = dict(table[word])
            for nw, c in nfv.items():
                for w, s in table[nw].items():
                    t = acc.get(w)
                    t = -(s * c) if t is None else t - s * c
                    if t.is_zero():
                        acc.pop(w, None)
                    else:
                        acc[w] = t
            if acc:
                return False
        return True


class IdealBasis:
    """Echelonized view of one degree of the graded ideal."""

    def __init__(self, engine, n):
        self.engine = engine
        self.n = n
        engine.ensure(n)
        self.dim = engine.ideal_dim(n)
        self.normal_words = engine.normal_words(n)

    def vectors(self):
        """Reduced basis vectors e_w - nf(w), one per non-normal word."""
        eng = self.engine
        space = eng.space
        one = Scalar.one(space.params)
        normal = set(self.normal_words)
        for word in itertools.product(range(space.dim), repeat=self.n):
            if word in normal:
                continue
            terms = {word: one}
            for nw, c in eng._nf_word(self.n, word).items():
                terms[nw] = terms.get(nw, Scalar.zero(space.params)) - c
            yield FreeElement(space, terms)


# ---------------------------------------------------------------------------
# module-level API keyed by space
# ---------------------------------------------------------------------------

_ENGINES = {}


def get_engine(space, max_degree=None, budget_terms=None):
    key = id(space)
    eng = _ENGINES.get(key)
    if eng is None or eng.space is not space:
        eng = Engine(space, max_degree=max_degree, budget_terms=budget_terms)
        _ENGINES[key] = eng
    elif max_degree is not None:
        eng.extend_budget(max_degree)
    return eng


def ideal_basis(space, n):
    return get_engine(space).ideal_basis(n)


def dim_n(space, n):
    return get_engine(space).dim_n(n)


def hilbert(space, upto):
    return get_engine(space, max_degree=upto).hilbert(upto)


def is_zero(space, element):
    return get_engine(space).is_zero(element)


def normal_form(space, element):
    return get_engine(space).normal_form(element)


def symmetrizer_rank(space, n):
    return get_engine(space).symmetrizer_rank(n)


def specialize_space(space, assignment):
    """Evaluate every scalar of the space at a rational point."""
    return space.specialize(assignment)
