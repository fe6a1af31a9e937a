"""Exact rational-function arithmetic in a declared set of parameters.

A :class:`Scalar` is a quotient of two multivariate polynomials with rational
coefficients over an ordered tuple of parameter names.  Every Scalar is kept
in canonical form: numerator and denominator coprime, denominator monic with
respect to the graded lexicographic order on monomials, zero represented as
0/1.  Equality of canonical forms is therefore plain structural equality.

Coefficients are exact rationals (gmpy2.mpq when available).  There is no
floating point anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _Q = Fraction

RationalLike = Union[int, str, Fraction]

_Q0 = _Q(0)
_Q1 = _Q(1)


class ScalarError(ValueError):
    """Invalid scalar operation (division by zero, parameter mismatch...)."""


class PoleError(ScalarError):
    """A specialization hit a zero of the denominator."""


class ScalarParseError(ScalarError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# raw polynomial helpers: a polynomial is a dict {exponent tuple: rational},
# with no zero coefficients stored.
# ---------------------------------------------------------------------------

def _padd(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _Q0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _pneg(a):
    return {e: -c for e, c in a.items()}


def _psub(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _Q0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _pmul(a, b):
    if not a or not b:
        return {}
    if len(b) > len(a):
        a, b = b, a
    out = {}
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, _Q0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _pscale(a, c):
    if not c:
        return {}
    return {e: co * c for e, co in a.items()}


def _deglex_key(e):
    return (sum(e), e)


def _plead(a):
    """Leading exponent under deglex."""
    return max(a, key=_deglex_key)


def _pshift(a, shift):
    return {tuple(x + y for x, y in zip(e, shift)): c for e, c in a.items()}


def _pmin_exps(a, width):
    mins = None
    for e in a:
        if mins is None:
            mins = list(e)
        else:
            for i, x in enumerate(e):
                if x < mins[i]:
                    mins[i] = x
    return tuple(mins) if mins is not None else (0,) * width


def _pdivexact(a, b):
    """Exact polynomial division a / b; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    rem = dict(a)
    quo = {}
    eb = _plead(b)
    cb = b[eb]
    while rem:
        ea = _plead(rem)
        diff = tuple(x - y for x, y in zip(ea, eb))
        if any(d < 0 for d in diff):
            raise ArithmeticError("inexact polynomial division")
        c = rem[ea] / cb
        quo[diff] = c
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e2, diff))
            s = rem.get(e, _Q0) - c2 * c
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return quo


def _deg_in(a, v):
    return max((e[v] for e in a), default=-1)


def _coeffs_in(a, v):
    """Split a by the exponent of variable v: {deg: poly with v-slot zeroed}."""
    out = {}
    for e, c in a.items():
        d = e[v]
        e0 = e[:v] + (0,) + e[v + 1:]
        out.setdefault(d, {})[e0] = c
    return out


def _pgcd(a, b):
    """GCD of two polynomials, up to a unit.  Returns {} only if both are 0."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    width = len(next(iter(a)))
    if len(a) == 1 or len(b) == 1:
        # gcd with a monomial is the common monomial content
        mins_a = _pmin_exps(a, width)
        mins_b = _pmin_exps(b, width)
        return {tuple(min(x, y) for x, y in zip(mins_a, mins_b)): _Q1}
    # strip the common monomial content first, restore it at the end
    ca = _pmin_exps(a, width)
    cb = _pmin_exps(b, width)
    common = tuple(min(x, y) for x, y in zip(ca, cb))
    a0 = _pshift(a, tuple(-x for x in ca))
    b0 = _pshift(b, tuple(-x for x in cb))
    g = _pgcd_primitive(a0, b0)
    return _pshift(g, common)


def _pgcd_primitive(a, b):
    # pick a main variable in which both polynomials are non-constant
    width = len(next(iter(a)))
    best = None
    for v in range(width):
        da, db = _deg_in(a, v), _deg_in(b, v)
        if da > 0 and db > 0:
            if best is None or min(da, db) < best[1]:
                best = (v, min(da, db))
    if best is None:
        return {(0,) * width: _Q1}
    v = best[0]
    return _pgcd_in_var(a, b, v)


def _pgcd_in_var(a, b, v):
    ca, pa = _pcontent_pp(a, v)
    cb, pb = _pcontent_pp(b, v)
    cont = _pgcd(ca, cb)
    # primitive PRS in variable v
    if _deg_in(pa, v) < _deg_in(pb, v):
        pa, pb = pb, pa
    while True:
        r = _ppseudo_rem(pa, pb, v)
        if not r:
            g = pb
            break
        if _deg_in(r, v) == 0:
            width = len(next(iter(a)))
            g = {(0,) * width: _Q1}
            break
        _, r = _pcontent_pp(r, v)
        pa, pb = pb, r
    if _deg_in(g, v) > 0:
        _, g = _pcontent_pp(g, v)
    return _pmul(cont, g)


def _pcontent_pp(a, v):
    """Content (gcd of v-coefficients) and primitive part of a w.r.t. v."""
    coeffs = _coeffs_in(a, v)
    cont = {}
    for p in coeffs.values():
        cont = _pgcd(cont, p)
        if len(cont) == 1 and not any(_plead(cont)):
            break
    pp = _pdivexact(a, cont)
    return cont, pp


def _ppseudo_rem(a, b, v):
    db = _deg_in(b, v)
    lb = {e: c for e, c in b.items() if e[v] == db}
    lb0 = _pshift(lb, tuple(-db if i == v else 0 for i in range(len(next(iter(b))))))
    r = dict(a)
    while r:
        dr = _deg_in(r, v)
        if dr < db:
            break
        lr = {e: c for e, c in r.items() if e[v] == dr}
        lr0 = _pshift(lr, tuple(-dr if i == v else 0 for i in range(len(next(iter(a))))))
        shift = tuple(dr - db if i == v else 0 for i in range(len(next(iter(a)))))
        r = _psub(_pmul(lb0, r), _pmul(lr0, _pshift(b, shift)))
    return r


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

def _as_rational(value):
    if isinstance(value, (int, str)):
        return _Q(value)
    if isinstance(value, Fraction):
        return _Q(value.numerator, value.denominator)
    if isinstance(value, type(_Q0)):
        return value
    raise ScalarError(f"cannot interpret {value!r} as an exact rational")


def _is_unit_poly(p):
    if len(p) != 1:
        return False
    (e, c), = p.items()
    return c == _Q1 and not any(e)


class Scalar:
    """Canonical rational function in a declared tuple of parameters."""

    __slots__ = ("params", "num", "den")

    def __init__(self, params, num, den, normalized=False):
        self.params = params
        if normalized:
            self.num = num
            self.den = den
            return
        if not den:
            raise ScalarError("zero denominator")
        if not num:
            self.num = {}
            self.den = {(0,) * len(params): _Q1}
            return
        g = _pgcd(num, den)
        if len(g) > 1 or any(_plead(g)) or g[_plead(g)] != _Q1:
            num = _pdivexact(num, g)
            den = _pdivexact(den, g)
        lc = den[_plead(den)]
        if lc != _Q1:
            num = {e: c / lc for e, c in num.items()}
            den = {e: c / lc for e, c in den.items()}
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, value, params=()):
        c = _as_rational(value)
        num = {(0,) * len(params): c} if c else {}
        return cls(params, num, {(0,) * len(params): _Q1}, normalized=True)

    @classmethod
    def var(cls, name, params):
        i = params.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(params)))
        return cls(params, {e: _Q1}, {(0,) * len(params): _Q1}, normalized=True)

    @classmethod
    def zero(cls, params=()):
        return cls.const(0, params)

    @classmethod
    def one(cls, params=()):
        return cls.const(1, params)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == self.den

    def is_constant(self):
        return len(self.num) <= 1 and not any(e for e in self.num) \
            and len(self.den) == 1 and not any(e for e in self.den)

    def as_fraction(self):
        if not self.is_constant():
            raise ScalarError(f"{self} is not a constant")
        if not self.num:
            return Fraction(0)
        c = self.num[(0,) * len(self.params)] / self.den[(0,) * len(self.params)]
        return Fraction(c.numerator, c.denominator)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.params != self.params:
                if other.is_constant():
                    return Scalar.const(other.as_fraction(), self.params)
                if self.is_constant():
                    raise _Recoerce(other)
                raise ScalarError(
                    f"parameter mismatch: {self.params} vs {other.params}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.const(other, self.params)
        return NotImplemented

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except _Recoerce as r:
            return r.scalar + self
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            num = _padd(self.num, o.num)
            if _is_unit_poly(self.den):
                # coprime with a unit denominator: already canonical
                return Scalar(self.params, num, self.den, normalized=True)
            return Scalar(self.params, num, self.den)
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return Scalar(self.params, num, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.params, _pneg(self.num), dict(self.den), normalized=True)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Scalar) else -Scalar.const(other, self.params))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except _Recoerce as r:
            return r.scalar * self
        if o is NotImplemented:
            return NotImplemented
        if _is_unit_poly(self.den):
            if _is_unit_poly(o.den):
                return Scalar(self.params, _pmul(self.num, o.num), self.den,
                              normalized=True)
            return Scalar(self.params, _pmul(self.num, o.num), o.den)
        if _is_unit_poly(o.den):
            return Scalar(self.params, _pmul(self.num, o.num), self.den)
        return Scalar(self.params, _pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except _Recoerce as r:
            return r.scalar.inverse() * self
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ScalarError("division by zero scalar")
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        if self.is_zero():
            raise ScalarError("inverse of zero")
        # swapping a canonical pair stays coprime; only re-normalize the lead
        num, den = self.den, self.num
        lc = den[_plead(den)]
        if lc != _Q1:
            num = {e: c / lc for e, c in num.items()}
            den = {e: c / lc for e, c in den.items()}
        return Scalar(self.params, num, den, normalized=True)

    def __pow__(self, n):
        if n == 0:
            return Scalar.one(self.params)
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    # -- structure ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other, self.params)
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.params != self.params:
            if self.is_constant() and other.is_constant():
                return self.as_fraction() == other.as_fraction()
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.params,
                     frozenset(self.num.items()),
                     frozenset(self.den.items())))

    def __bool__(self):
        return bool(self.num)

    def specialize(self, assignment):
        """Exact rational value at a parameter assignment; PoleError on poles."""
        vals = []
        for p in self.params:
            if p not in assignment:
                raise ScalarError(f"assignment missing parameter {p!r}")
            vals.append(_as_rational(assignment[p]))
        den = _peval(self.den, vals)
        if not den:
            point = ", ".join(f"{p}={assignment[p]}" for p in self.params)
            raise PoleError(f"denominator vanishes at ({point})")
        num = _peval(self.num, vals)
        c = num / den
        return Fraction(c.numerator, c.denominator)

    def parameters_used(self):
        used = set()
        for poly in (self.num, self.den):
            for e in poly:
                for i, x in enumerate(e):
                    if x:
                        used.add(self.params[i])
        return used

    # -- printing -----------------------------------------------------------

    def __str__(self):
        if not self.num:
            return "0"
        n = _pstr(self.num, self.params)
        if self.den == {(0,) * len(self.params): _Q1}:
            return n
        d = _pstr(self.den, self.params)
        return f"({n})/({d})"

    def __repr__(self):
        return f"Scalar({self})"


class _Recoerce(Exception):
    """Internal: retry the operation with operands swapped for coercion."""

    def __init__(self, scalar):
        self.scalar = scalar


def _peval(poly, vals):
    total = _Q0
    for e, c in poly.items():
        t = c
        for v, k in zip(vals, e):
            if k:
                t = t * v ** k
        total += t
    return total


def _pstr(poly, params):
    parts = []
    for e in sorted(poly, key=_deglex_key, reverse=True):
        c = poly[e]
        mono = "*".join(
            f"{params[i]}^{x}" if x > 1 else params[i]
            for i, x in enumerate(e) if x)
        if not mono:
            piece = str(c)
        elif c == 1:
            piece = mono
        elif c == -1:
            piece = f"-{mono}"
        else:
            piece = f"{c}*{mono}"
        if parts and not piece.startswith("-"):
            parts.append("+")
            parts.append(piece)
        elif parts:
            parts.append("-")
            parts.append(piece[1:])
        else:
            parts.append(piece)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# parsing: integers, fractions p/q, parameter names, + - * / ^ ( )
# ---------------------------------------------------------------------------

def parse_scalar(text, params=()):
    tokens = _tokenize(text)
    parser = _ScalarParser(tokens, params, text)
    value = parser.parse_expr()
    parser.expect_end()
    return value


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ScalarParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _ScalarParser:
    def __init__(self, tokens, params, text):
        self.tokens = tokens
        self.pos = 0
        self.params = params
        self.text = text

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_end(self):
        kind, _, at = self.peek()
        if kind != "end":
            raise ScalarParseError("trailing input", at)

    def parse_expr(self):
        if self.peek()[0] in "+-":
            sign = self.advance()[0]
            value = self.parse_term()
            if sign == "-":
                value = -value
        else:
            value = self.parse_term()
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self):
        value = self.parse_factor()
        while self.peek()[0] in "*/":
            op = self.advance()[0]
            rhs = self.parse_factor()
            if op == "/":
                if rhs.is_zero():
                    raise ScalarError("division by zero in scalar expression")
                value = value / rhs
            else:
                value = value * rhs
        return value

    def parse_factor(self):
        base = self.parse_atom()
        if self.peek()[0] == "^":
            self.advance()
            neg = False
            if self.peek()[0] == "-":
                self.advance()
                neg = True
            kind, val, at = self.advance()
            if kind != "int":
                raise ScalarParseError("exponent must be an integer", at)
            return base ** (-int(val) if neg else int(val))
        return base

    def parse_atom(self):
        kind, val, at = self.advance()
        if kind == "int":
            return Scalar.const(int(val), self.params)
        if kind == "name":
            if val not in self.params:
                raise ScalarParseError(f"unknown parameter {val!r}", at)
            return Scalar.var(val, self.params)
        if kind == "(":
            value = self.parse_expr()
            kind, _, at = self.advance()
            if kind != ")":
                raise ScalarParseError("expected ')'", at)
            return value
        if kind == "-":
            return -self.parse_atom()
        raise ScalarParseError(f"unexpected token {val!r}", at)
