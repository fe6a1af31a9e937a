"""Free algebra on the basis of a braided vector space.

Elements are finite linear combinations of words over the basis alphabet with
Scalar coefficients; the empty word is the unit.  On top of plain
multiplication the module provides the group action, braided commutators
[u, v]_c = u v - (g_u . v) u for u of group degree g_u, iterated adjoints by
generators, the skew derivations dual to the basis, and a small expression
parser used by the relation catalog and the CLI.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar, ScalarError
from .spaces import BraidedSpace, SpaceError, g_sum


class FreeAlgebraError(ValueError):
    pass


class ExprParseError(FreeAlgebraError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# raw term-dict helpers (shared with the engine's hot loops)
# ---------------------------------------------------------------------------

def add_raw(acc, terms, scale=None):
    """acc += scale * terms, in place; acc maps word -> Scalar."""
    if scale is None:
        for w, c in terms.items():
            s = acc.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = s
    else:
        if scale.is_zero():
            return acc
        for w, c in terms.items():
            piece = c * scale
            s = acc.get(w)
            s = piece if s is None else s + piece
            if s.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = s
    return acc


def mul_raw(a, b):
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            c = ca * cb
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
    return out


def act_raw(space, g, terms):
    """Letterwise action of the group element g (tensor of action matrices)."""
    cols = space.act_columns(g)
    out = {}
    for word, coeff in terms.items():
        partial = [((), coeff)]
        for letter in word:
            col = cols[letter]
            if len(col) == 1:
                i, s = col[0]
                partial = [(w + (i,), c * s) for w, c in partial]
            else:
                partial = [(w + (i,), c * s)
                           for w, c in partial for i, s in col]
        for w, c in partial:
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
    return out


def derive_raw(space, i, terms):
    """Skew derivation dual to basis vector i, twisted by its degree."""
    g = space.degrees[i]
    cols = space.act_columns(g)
    out = {}
    for word, coeff in terms.items():
        for k, letter in enumerate(word):
            if letter != i:
                continue
            # prefix . (g_i . suffix)
            partial = [(word[:k], coeff)]
            for l in word[k + 1:]:
                col = cols[l]
                if len(col) == 1:
                    m, s = col[0]
                    partial = [(w + (m,), c * s) for w, c in partial]
                else:
                    partial = [(w + (m,), c * s)
                               for w, c in partial for m, s in col]
            for w, c in partial:
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
    return out


# ---------------------------------------------------------------------------
# FreeElement
# ---------------------------------------------------------------------------

class FreeElement:
    """Noncommutative polynomial over a braided space's alphabet."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms, _clean=True):
        self.space = space
        if _clean:
            terms = {w: c for w, c in terms.items() if not c.is_zero()}
        self.terms = terms

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, space):
        return cls(space, {}, _clean=False)

    @classmethod
    def unit(cls, space, value=1):
        c = value if isinstance(value, Scalar) else Scalar.const(value, space.params)
        return cls(space, {(): c})

    @classmethod
    def gen(cls, space, which):
        i = space.index(which) if isinstance(which, str) else which
        if not 0 <= i < space.dim:
            raise FreeAlgebraError(f"generator index {i} out of range")
        return cls(space, {(i,): Scalar.one(space.params)}, _clean=False)

    @classmethod
    def word(cls, space, letters, coeff=1):
        c = coeff if isinstance(coeff, Scalar) else Scalar.const(coeff, space.params)
        return cls(space, {tuple(letters): c})

    # -- ring structure ------------------------------------------------------

    def _check(self, other):
        if other.space is not self.space:
            raise FreeAlgebraError("elements live over different spaces")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = FreeElement.unit(self.space, other)
        self._check(other)
        return FreeElement(self.space, add_raw(dict(self.terms), other.terms),
                           _clean=False)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement(self.space, {w: -c for w, c in self.terms.items()},
                           _clean=False)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = FreeElement.unit(self.space, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        self._check(other)
        return FreeElement(self.space, mul_raw(self.terms, other.terms),
                           _clean=False)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c):
        if not isinstance(c, Scalar):
            c = Scalar.const(c, self.space.params)
        if c.is_zero():
            return FreeElement.zero(self.space)
        return FreeElement(self.space,
                           {w: co * c for w, co in self.terms.items()},
                           _clean=False)

    def __pow__(self, n):
        if n < 0:
            raise FreeAlgebraError("free elements have no negative powers")
        out = FreeElement.unit(self.space)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = FreeElement.unit(self.space, other)
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.space is other.space and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.space), frozenset(self.terms.items())))

    def is_zero(self):
        """Syntactic zero in the free algebra (not the Nichols quotient)."""
        return not self.terms

    # -- grading -------------------------------------------------------------

    def n_degrees(self):
        return sorted({len(w) for w in self.terms})

    def is_n_homogeneous(self):
        return len(self.n_degrees()) <= 1

    def n_degree(self):
        degs = self.n_degrees()
        if len(degs) != 1:
            raise FreeAlgebraError("element is not N-homogeneous")
        return degs[0]

    def homogeneous_parts(self):
        parts = {}
        for w, c in self.terms.items():
            parts.setdefault(len(w), {})[w] = c
        return {d: FreeElement(self.space, t, _clean=False)
                for d, t in sorted(parts.items())}

    def gamma_degree(self):
        """Common Z^r-degree of all words; error if mixed."""
        deg = None
        for w in self.terms:
            d = g_sum((self.space.degrees[l] for l in w), self.space.rank)
            if deg is None:
                deg = d
            elif deg != d:
                raise FreeAlgebraError("element is not Gamma-homogeneous")
        if deg is None:
            raise FreeAlgebraError("zero element has no Gamma-degree")
        return deg

    def is_gamma_homogeneous(self):
        try:
            self.gamma_degree()
            return True
        except FreeAlgebraError:
            return False

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        labels = self.space.labels
        pieces = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            body = "*".join(labels[l] for l in w)
            cs = str(c)
            if not body:
                piece = cs if " " not in cs else f"({cs})"
            elif c.is_one():
                piece = body
            elif cs == "-1":
                piece = f"-{body}"
            elif " " in cs or cs.startswith("("):
                piece = f"({cs})*{body}"
            else:
                piece = f"{cs}*{body}"
            if pieces and not piece.startswith("-"):
                pieces.append(f"+ {piece}")
            elif pieces:
                pieces.append(f"- {piece[1:]}")
            else:
                pieces.append(piece)
        return " ".join(pieces)

    def __repr__(self):
        return f"FreeElement({self})"


# ---------------------------------------------------------------------------
# braided operations
# ---------------------------------------------------------------------------

def group_act(space, g, element):
    if isinstance(element, FreeElement):
        return FreeElement(space, act_raw(space, tuple(g), element.terms),
                           _clean=False)
    return act_raw(space, tuple(g), element)


def bracket_c(u, v):
    """[u, v]_c = u v - (g_u . v) u for Gamma-homogeneous u."""
    u._check(v)
    g = u.gamma_degree()
    tw = act_raw(u.space, g, v.terms)
    out = mul_raw(u.terms, v.terms)
    add_raw(out, mul_raw({w: -c for w, c in tw.items()}, u.terms))
    return FreeElement(u.space, out, _clean=False)


def ad_chain(space, indices, target):
    """(ad x_{i1}) ... (ad x_{ik}) applied to a generator or element."""
    if isinstance(target, FreeElement):
        out = target
    else:
        out = FreeElement.gen(space, target)
    for i in reversed([space.index(i) if isinstance(i, str) else i
                       for i in indices]):
        out = bracket_c(FreeElement.gen(space, i), out)
    return out


def derivation(space, i, element):
    i = space.index(i) if isinstance(i, str) else i
    return FreeElement(space, derive_raw(space, i, element.terms),
                       _clean=False)


# ---------------------------------------------------------------------------
# expression parser
#
# expr   := ("+"|"-")? term (("+"|"-") term)*
# term   := factor (("*"|"/") factor)*
# factor := atom ("^" uint)?
# atom   := gen | name | number | "[" expr "," expr "]"
#         | "ad(" gen ")" "(" expr ")" | "(" expr ")"
# ---------------------------------------------------------------------------

def _tokenize_expr(text):
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
        if ch in "+-*/^()[],":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ExprParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _ExprParser:
    def __init__(self, space, names, tokens):
        self.space = space
        self.names = names or {}
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        value = self.parse_expr()
        kind, val, at = self.peek()
        if kind != "end":
            raise ExprParseError(f"trailing input {val!r}", at)
        return value

    def parse_expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            if self.advance()[0] == "-":
                sign = -1
        value = self.parse_term()
        if sign < 0:
            value = -value
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
            if op == "*":
                value = value * rhs
            else:
                if rhs.terms and list(rhs.terms) != [()]:
                    raise FreeAlgebraError("cannot divide by a non-scalar")
                if rhs.is_zero():
                    raise FreeAlgebraError("division by zero")
                value = value.scaled(rhs.terms[()].inverse())
        return value

    def parse_factor(self):
        base = self.parse_atom()
        if self.peek()[0] == "^":
            self.advance()
            kind, val, at = self.advance()
            if kind != "int":
                raise ExprParseError("exponent must be a nonnegative integer", at)
            return base ** int(val)
        return base

    def parse_atom(self):
        kind, val, at = self.advance()
        space = self.space
        if kind == "int":
            return FreeElement.unit(space, int(val))
        if kind == "name":
            if val == "ad" and self.peek()[0] == "(":
                return self.parse_ad(at)
            if val in self.names:
                item = self.names[val]
                if isinstance(item, Scalar):
                    return FreeElement.unit(space, item)
                return item
            if val in space.label_index:
                return FreeElement.gen(space, val)
            if val in space.scalars:
                return FreeElement.unit(space, space.scalars[val])
            if val in space.params:
                return FreeElement.unit(space, Scalar.var(val, space.params))
            raise ExprParseError(f"unknown generator label {val!r}", at)
        if kind == "(":
            value = self.parse_expr()
            kind, _, at = self.advance()
            if kind != ")":
                raise ExprParseError("expected ')'", at)
            return value
        if kind == "[":
            left = self.parse_expr()
            kind, _, at2 = self.advance()
            if kind != ",":
                raise ExprParseError("expected ',' in bracket", at2)
            right = self.parse_expr()
            kind, _, at3 = self.advance()
            if kind != "]":
                raise ExprParseError("expected ']'", at3)
            if not left.is_gamma_homogeneous():
                raise FreeAlgebraError(
                    "bracket needs a Gamma-homogeneous left argument")
            return bracket_c(left, right)
        if kind == "-":
            return -self.parse_atom()
        raise ExprParseError(f"unexpected token {val!r}", at)

    def parse_ad(self, at):
        kind, _, p = self.advance()
        if kind != "(":
            raise ExprParseError("expected '(' after ad", p)
        kind, gen_label, p = self.advance()
        if kind != "name" or gen_label not in self.space.label_index:
            raise ExprParseError("ad() takes a generator label", p)
        kind, _, p = self.advance()
        if kind != ")":
            raise ExprParseError("expected ')'", p)
        kind, _, p = self.advance()
        if kind != "(":
            raise ExprParseError("expected '(' for ad argument", p)
        arg = self.parse_expr()
        kind, _, p = self.advance()
        if kind != ")":
            raise ExprParseError("expected ')'", p)
        return bracket_c(FreeElement.gen(self.space, gen_label), arg)


def parse_expr(text, space, names=None):
    """Parse an expression over a space's generators and named elements."""
    return _ExprParser(space, names, _tokenize_expr(text)).parse()
