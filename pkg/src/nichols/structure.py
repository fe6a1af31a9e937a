"""PBW series, growth estimates, and splitting-technique subspaces.

A PBW datum is a list of generators with N-degrees and heights (2 or
unbounded); its generating series multiplies (1 + t^d) for bounded and
1/(1 - t^d) for unbounded generators.  The number of unbounded generators is
the polynomial growth degree of the series, i.e. the GK dimension claimed by
a presentation.

adjoint_subspace computes ad_c(B(W))(U) for disjoint generator sets W, U by
iterating single-generator adjoints and pruning to a basis inside the Nichols
algebra (independence decided by normal forms).  The adjoint action is
multiplicative, so iterated generator adjoints span the whole subspace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .engine import get_engine
from .freealg import FreeElement, bracket_c, derivation
from .scalars import Scalar


@dataclass(frozen=True)
class PBWGenerator:
    name: str
    degree: int
    height: int = 0  # 0 means unbounded; otherwise 2 in this catalog

    @property
    def bounded(self):
        return self.height != 0


def pbw_series(datum, upto):
    """Coefficients 0..upto of prod (1+t^d) * prod 1/(1-t^d)."""
    if upto < 0:
        raise ValueError("series length must be nonnegative")
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for gen in datum:
        d = gen.degree
        if d <= 0:
            raise ValueError(f"generator {gen.name} must have positive degree")
        if gen.bounded:
            if gen.height != 2:
                raise ValueError("bounded heights are always 2 here")
            nxt = list(coeffs)
            for n in range(d, upto + 1):
                nxt[n] += coeffs[n - d]
            coeffs = nxt
        else:
            # multiply by 1/(1 - t^d) in place
            for n in range(d, upto + 1):
                coeffs[n] += coeffs[n - d]
    return coeffs


def gk_from_pbw(datum):
    """Number of unbounded PBW generators = polynomial growth degree."""
    return sum(1 for gen in datum if not gen.bounded)


@dataclass
class GrowthFit:
    degree_estimate: float
    residual: float
    flags: tuple
    note: str = ("advisory only: polynomial fitting cannot prove finiteness "
                 "or infiniteness of the growth degree")


def _ls_slope(xs, ys):
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    res = math.sqrt(sum((y - (slope * x + intercept)) ** 2
                        for x, y in zip(xs, ys)) / n)
    return slope, res


def growth_fit(dims):
    """Log-log least squares of the cumulative dimension over a tail window."""
    if len(dims) < 5:
        raise ValueError("growth_fit needs at least 4 positive-degree points")
    cum = []
    total = 0
    for d in dims:
        total += d
        cum.append(total)
    top = len(dims) - 1
    tail_lo = max(1, top - max(3, top // 2) + 1)
    xs = [math.log(n) for n in range(tail_lo, top + 1)]
    ys = [math.log(cum[n]) for n in range(tail_lo, top + 1)]
    slope, res = _ls_slope(xs, ys)
    flags = []
    # compare an early window with a late window of equal size; polynomial
    # growth approaches its asymptotic slope from below (observed gap about
    # 0.5-0.7 on catalog data), while super-polynomial growth keeps climbing
    w = max(3, (top - 1) // 2)
    early = range(1, 1 + w)
    late = range(top - w + 1, top + 1)
    if late.start > early.start:
        s_early, _ = _ls_slope([math.log(n) for n in early],
                               [math.log(cum[n]) for n in early])
        s_late, _ = _ls_slope([math.log(n) for n in late],
                              [math.log(cum[n]) for n in late])
        if s_late > s_early + 1.0:
            flags.append("growth exceeds window")
    return GrowthFit(slope, res, tuple(flags))


# ---------------------------------------------------------------------------
# splitting technique
# ---------------------------------------------------------------------------

@dataclass
class AdjointSubspace:
    space: object
    acting: tuple
    targets: tuple
    basis: list                # FreeElements, grouped in discovery order
    dims_by_depth: list        # dimension after each depth
    saturated: bool
    saturated_at: object       # depth at which two consecutive dims agreed

    @property
    def dim(self):
        return len(self.basis)

    def fingerprints(self, element):
        """Normal forms of all skew derivations of one basis element."""
        eng = get_engine(self.space)
        out = {}
        for i, label in enumerate(self.space.labels):
            out[label] = eng.normal_form(derivation(self.space, i, element))
        return out


def adjoint_subspace(space, acting, targets, max_depth):
    """Basis of ad_c(B(W))(U) inside the Nichols algebra, depth-limited.

    acting and targets are disjoint sets of generator labels/indices; the
    subspace is saturated once a whole depth level adds no new dimension.
    """
    acting = tuple(space.index(w) if isinstance(w, str) else w for w in acting)
    targets = tuple(space.index(u) if isinstance(u, str) else u for u in targets)
    if set(acting) & set(targets):
        raise ValueError("acting and target sets must be disjoint")
    eng = get_engine(space, max_degree=max(max_depth + 1,
                                           get_engine(space).max_degree))
    rref_by_degree = {}

    def try_add(element):
        nf = eng.normal_form(element)
        if nf.is_zero():
            return False
        deg = nf.n_degree()
        rows = rref_by_degree.setdefault(deg, [])
        col = dict(nf.terms)
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
        if not col:
            return False
        pw = min(col)
        inv = col[pw].inverse()
        rows.append((pw, {k: v * inv for k, v in col.items()}))
        return True

    basis = []
    level = []
    for u in targets:
        e = FreeElement.gen(space, u)
        if try_add(e):
            basis.append(e)
            level.append(e)
    dims = [len(basis)]
    saturated = False
    saturated_at = None
    for depth in range(1, max_depth + 1):
        new_level = []
        for w in acting:
            xw = FreeElement.gen(space, w)
            for e in level:
                cand = bracket_c(xw, e)
                if cand.is_zero():
                    continue
                if try_add(cand):
                    basis.append(cand)
                    new_level.append(cand)
        dims.append(len(basis))
        if dims[-1] == dims[-2]:
            saturated = True
            saturated_at = depth
            break
        level = new_level
    return AdjointSubspace(space, acting, targets, basis, dims,
                           saturated, saturated_at)
