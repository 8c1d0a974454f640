"""Torus-fixed-point localization on Gr(k,n).

Conventions, pinned once and verified by the test suite through the unit,
GKM, duality, and positivity checks:

* Fixed points are k-subsets of {1..n}.  The partition ``a`` corresponds to
  the subset {a_{k+1-i} + i : i = 1..k} (its staircase).
* ``b_j = x_1 + ... + x_{j-1}`` (so b_1 = 0); every torus weight in sight is
  a difference of b's.
* The restriction of the class of ``a`` to the fixed point of ``m`` is the
  factorial Schur polynomial of shape ``a`` evaluated at the staircase b's of
  ``m`` with shift sequence b, computed here in bialternant (determinant
  ratio) form.  It vanishes unless ``a`` is contained in ``m``, and at its
  own fixed point equals the product of the normal weights there.
* The tangent weights at the subset S are { b_a - b_b : a in S, b not in S };
  pushing forward to a point divides by their product.
* The opposite family is the first one composed with the substitution
  x_j -> -x_{n-j} and the complementary relabeling of fixed points.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import NonPolynomialError
from .grass import Partition, enumerate_classes
from .polyring import Polynomial, RationalExpression


@dataclass(frozen=True)
class FixedPoint:
    """A torus-fixed point: a coordinate k-subset of {1..n}."""

    subset: tuple
    ctx: "GrassContext"

    def __post_init__(self):
        s = tuple(sorted(self.subset))
        object.__setattr__(self, "subset", s)
        if len(s) != self.ctx.k or len(set(s)) != self.ctx.k:
            raise ValueError("subset %r is not a k-set" % (s,))
        if s and (s[0] < 1 or s[-1] > self.ctx.n):
            raise ValueError("subset %r out of range" % (s,))

    def __repr__(self):
        return "FixedPoint(%s)" % (list(self.subset),)


def point_of(p):
    """The fixed point attached to a partition (staircase dictionary)."""
    k = p.ctx.k
    padded = p.padded()
    return FixedPoint(tuple(padded[k - i] + i for i in range(1, k + 1)), p.ctx)


def partition_of(point):
    """Inverse staircase dictionary."""
    k = point.ctx.k
    subset = point.subset
    parts = tuple(subset[k - i] - (k + 1 - i) for i in range(1, k + 1))
    return Partition(parts, point.ctx)


@lru_cache(maxsize=None)
def fixed_points(ctx):
    """All fixed points, ordered like the classes they index."""
    return tuple(point_of(p) for p in enumerate_classes(ctx))


@lru_cache(maxsize=None)
def _b_forms(ctx):
    """b_j = x_1 + ... + x_{j-1} for j = 1..n, as polynomials over r vars."""
    r = ctx.r
    out = [Polynomial.zero(r)]
    for j in range(1, ctx.n):
        out.append(out[-1] + Polynomial.variable(r, j))
    return tuple(out)


def b_difference(ctx, a, b):
    """b_a - b_b."""
    forms = _b_forms(ctx)
    return forms[a - 1] - forms[b - 1]


def tangent_weights(point):
    """The k(n-k) weights of the tangent space at ``point``.

    The weight attached to (a in S, b outside S) is b_a - b_b; the point
    class restricted to the top fixed point is exactly the product of the
    weights there, which fixes the sign convention.
    """
    ctx = point.ctx
    inside = point.subset
    outside = [j for j in range(1, ctx.n + 1) if j not in set(inside)]
    return [b_difference(ctx, a, b) for a in inside for b in outside]


@lru_cache(maxsize=None)
def _euler_factors(point):
    """Tangent weights split into (positive primitive forms, overall sign)."""
    ctx = point.ctx
    inside = point.subset
    outside = [j for j in range(1, ctx.n + 1) if j not in set(inside)]
    sign = 1
    forms = []
    for a in inside:
        for b in outside:
            if a > b:
                forms.append(b_difference(ctx, a, b))
            else:
                forms.append(b_difference(ctx, b, a))
                sign = -sign
    return tuple(forms), sign


@lru_cache(maxsize=None)
def _ffpow(ctx, s, m):
    """Falling product (b_s - b_1)(b_s - b_2)...(b_s - b_m)."""
    if m == 0:
        return Polynomial.const(ctx.r, 1)
    return _ffpow(ctx, s, m - 1) * b_difference(ctx, s, m)


def _restrict_main(ctx, parts, subset):
    """Bialternant evaluation of the factorial Schur at a staircase point."""
    k = ctx.k
    padded = parts + (0,) * (k - len(parts))
    rows = [padded[i] + k - 1 - i for i in range(k)]
    matrix = [[_ffpow(ctx, s, m) for s in subset] for m in rows]
    det = Polynomial.zero(ctx.r)
    for perm in permutations(range(k)):
        sign = _perm_sign(perm)
        prod = Polynomial.const(ctx.r, sign)
        for i in range(k):
            prod = prod * matrix[i][perm[i]]
        det = det + prod
    # Divide by the Vandermonde in the staircase values; subset is ascending,
    # so each pair (c < d) contributes -(b_{s_d} - b_{s_c}).
    sign = 1
    for c in range(k):
        for d in range(c + 1, k):
            det = det.divide_exact(b_difference(ctx, subset[d], subset[c]))
            assert det is not None, "Vandermonde division must be exact"
            sign = -sign
    return det * sign


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _w0_substitution(ctx, p):
    """The involution x_j -> -x_{n-j} on coefficients."""
    r = ctx.r
    return p.remap_variables(tuple(r - j for j in range(r)), negate=True)


@lru_cache(maxsize=None)
def _restrict_cached(ctx, parts, subset, family):
    if family == "schubert":
        return _restrict_main(ctx, parts, subset)
    mu_dual = partition_of(FixedPoint(subset, ctx)).dual()
    value = _restrict_main(ctx, parts, point_of(mu_dual).subset)
    return _w0_substitution(ctx, value)


def restrict_schubert(p, point, family="schubert"):
    """Restriction of a basis class (or its opposite) to a fixed point."""
    if family not in ("schubert", "opposite"):
        raise ValueError("family must be 'schubert' or 'opposite'")
    return _restrict_cached(p.ctx, p.parts, point.subset, family)


class RestrictionTable:
    """All restrictions of one family over one context."""

    def __init__(self, ctx, family):
        self.ctx = ctx
        self.family = family
        self.entries = {
            (p.parts, pt.subset): restrict_schubert(p, pt, family)
            for p in enumerate_classes(ctx)
            for pt in fixed_points(ctx)
        }

    def restriction(self, p, point):
        return self.entries[(p.parts, point.subset)]


@lru_cache(maxsize=None)
def restriction_table(ctx, family="schubert"):
    return RestrictionTable(ctx, family)


# -- localization ------------------------------------------------------------


def integrate(ctx, values):
    """Equivariant push-forward to a point of a class given by restrictions.

    ``values`` maps every fixed point to a polynomial.  The result is the
    Atiyah-Bott sum of values over tangent Euler classes, accumulated
    pairwise in the canonical fixed-point order; it must clear to a
    polynomial or the input table was inconsistent.
    """
    acc = RationalExpression(Polynomial.zero(ctx.r))
    for point in fixed_points(ctx):
        value = values[point]
        if value.is_zero:
            continue
        forms, sign = _euler_factors(point)
        acc = acc.add(RationalExpression(value * sign, forms))
    return acc.expect_polynomial()


def pairing(u, v):
    """Push-forward of (class of u) * (opposite class of v)."""
    ctx = u.ctx
    sigma = restriction_table(ctx, "schubert")
    tilde = restriction_table(ctx, "opposite")
    values = {
        pt: sigma.restriction(u, pt) * tilde.restriction(v, pt)
        for pt in fixed_points(ctx)
    }
    return integrate(ctx, values)


def elr(u, v, w):
    """Equivariant structure constant of sigma(u)*sigma(v) on sigma(w).

    Integrates sigma(u) sigma(v) sigma~(w dual) over the fixed locus; the
    result is homogeneous of degree |u|+|v|-|w| and vanishes when that
    degree is negative.
    """
    ctx = u.ctx
    if u.size + v.size < w.size:
        return Polynomial.zero(ctx.r)
    sigma = restriction_table(ctx, "schubert")
    tilde = restriction_table(ctx, "opposite")
    wd = w.dual()
    values = {}
    for pt in fixed_points(ctx):
        a = sigma.restriction(u, pt)
        if a.is_zero:
            values[pt] = a
            continue
        b = sigma.restriction(v, pt)
        if b.is_zero:
            values[pt] = b
            continue
        values[pt] = a * b * tilde.restriction(wd, pt)
    return integrate(ctx, values)


@lru_cache(maxsize=None)
def elr_table(ctx):
    """All nonzero ELR coefficients keyed by (u.parts, v.parts, w.parts).

    Keys are canonical: u <= v in the class order.  Pointwise products are
    shared across the w-loop but every coefficient still goes through
    :func:`integrate`.
    """
    classes = enumerate_classes(ctx)
    points = fixed_points(ctx)
    sigma = restriction_table(ctx, "schubert")
    tilde = restriction_table(ctx, "opposite")
    zero = Polynomial.zero(ctx.r)
    out = {}
    for i, u in enumerate(classes):
        for v in classes[i:]:
            pair_values = {}
            for pt in points:
                a = sigma.restriction(u, pt)
                if a.is_zero:
                    continue
                b = sigma.restriction(v, pt)
                if b.is_zero:
                    continue
                pair_values[pt] = a * b
            for w in classes:
                if w.size > u.size + v.size:
                    continue
                wd = w.dual()
                values = dict.fromkeys(points, zero)
                for pt, ab in pair_values.items():
                    t = tilde.restriction(wd, pt)
                    if not t.is_zero:
                        values[pt] = ab * t
                c = integrate(ctx, values)
                if not c.is_zero:
                    out[(u.parts, v.parts, w.parts)] = c
    return out


def elr_from_table(ctx, u, v, w):
    """Table lookup with canonicalization; zero when absent."""
    table = elr_table(ctx)
    a, b = sorted((u, v), key=lambda p: p.sort_key)
    return table.get((a.parts, b.parts, w.parts), Polynomial.zero(ctx.r))


def c1_curve_integral(ctx):
    """Degree of q computed honestly: the first Chern class of the tangent
    bundle integrated over the one-dimensional basis class."""
    width = ctx.width
    curve = Partition((width,) * (ctx.k - 1) + (width - 1,), ctx)
    sigma = restriction_table(ctx, "schubert")
    values = {}
    for pt in fixed_points(ctx):
        c1 = Polynomial.zero(ctx.r)
        for wgt in tangent_weights(pt):
            c1 = c1 + wgt
        values[pt] = c1 * sigma.restriction(curve, pt)
    result = integrate(ctx, values)
    if not result.is_homogeneous_of_degree(0):
        raise NonPolynomialError("curve integral is not a constant")
    return result.constant_term()


# -- GKM consistency ----------------------------------------------------------


def gkm_edges(ctx):
    """Pairs of fixed points differing by one transposition, with the
    primitive weight of the connecting invariant curve."""
    points = fixed_points(ctx)
    out = []
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            diff = set(p.subset) ^ set(q.subset)
            if len(diff) == 2:
                a, b = sorted(diff)
                out.append((p, q, b_difference(ctx, b, a)))
    return out


def gkm_violations(ctx, family="schubert"):
    """Edges where a restriction difference is not divisible by the weight."""
    table = restriction_table(ctx, family)
    bad = []
    for p in enumerate_classes(ctx):
        for pt1, pt2, weight in gkm_edges(ctx):
            diff = table.restriction(p, pt1) - table.restriction(p, pt2)
            if diff.is_zero:
                continue
            if diff.divide_exact(weight) is None:
                bad.append((p.parts, pt1.subset, pt2.subset))
    return bad
