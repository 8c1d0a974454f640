"""Exact multivariate polynomial arithmetic over the integers.

A polynomial is a sparse map from a packed exponent key to a nonzero
arbitrary-precision integer coefficient.  Exponent vectors pack into a single
Python int, sixteen bits per variable with the first variable in the highest
lanes, so comparing keys as integers is exactly lexicographic comparison of
exponent vectors.  Every variable has complex degree one; the degree of a
monomial is the sum of its exponents.

Rational expressions keep the denominator factored as a multiset of primitive
linear forms times a positive integer scalar.  Localization sums then cancel
denominators factor by factor; nothing is ever divided out silently.
"""

from __future__ import annotations

import heapq
from math import gcd

from .errors import DimensionMismatchError, NonPolynomialError

_SHIFT = 16
_LANE = (1 << _SHIFT) - 1


def _pack(exponents):
    key = 0
    for e in exponents:
        if e < 0 or e > _LANE:
            raise OverflowError("exponent %r outside packing range" % (e,))
        key = (key << _SHIFT) | e
    return key


def _unpack(key, nvars):
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = key & _LANE
        key >>= _SHIFT
    return tuple(out)


def _key_degree(key):
    d = 0
    while key:
        d += key & _LANE
        key >>= _SHIFT
    return d


class Polynomial:
    """Immutable sparse polynomial with integer coefficients.

    ``terms`` maps packed exponent keys to nonzero coefficients.  Instances
    are treated as immutable values; all operations return new objects.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms):
        self.nvars = nvars
        self.terms = terms
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {0: c} if c else {})

    @classmethod
    def variable(cls, nvars, index):
        """The variable with 1-based ``index``."""
        if not 1 <= index <= nvars:
            raise DimensionMismatchError("variable index %d out of range" % index)
        return cls(nvars, {_pack([1 if i == index - 1 else 0 for i in range(nvars)]): 1})

    @classmethod
    def from_exponents(cls, nvars, items):
        """Build from an iterable of (exponent tuple, coefficient)."""
        terms = {}
        for exps, c in items:
            if len(exps) != nvars:
                raise DimensionMismatchError("exponent vector has wrong length")
            if c:
                key = _pack(exps)
                c2 = terms.get(key, 0) + c
                if c2:
                    terms[key] = c2
                else:
                    del terms[key]
        return cls(nvars, terms)

    @classmethod
    def linear(cls, nvars, coeffs):
        """Linear form sum(coeffs[i] * x_{i+1})."""
        return cls.from_exponents(
            nvars,
            (
                (tuple(1 if j == i else 0 for j in range(nvars)), c)
                for i, c in enumerate(coeffs)
            ),
        )

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max(map(_key_degree, self.terms)) if self.terms else -1

    def is_homogeneous(self):
        degs = {_key_degree(k) for k in self.terms}
        return len(degs) <= 1

    def is_homogeneous_of_degree(self, d):
        """True if every monomial has degree d (vacuously true when zero)."""
        return all(_key_degree(k) == d for k in self.terms)

    def constant_term(self):
        return self.terms.get(0, 0)

    def coefficient(self, exps):
        return self.terms.get(_pack(exps), 0)

    def content(self):
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def exponents(self):
        """Exponent tuples in no particular order."""
        return [_unpack(k, self.nvars) for k in self.terms]

    def canonical_terms(self):
        """(exponent tuple, coefficient) pairs in graded-lex descending order."""
        keys = sorted(self.terms, key=lambda k: (-_key_degree(k), -k))
        return [(_unpack(k, self.nvars), self.terms[k]) for k in keys]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                "polynomials over %d and %d variables" % (self.nvars, other.nvars)
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(self.nvars, other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            c2 = out.get(k, 0) + c
            if c2:
                out[k] = c2
            else:
                del out[k]
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero(self.nvars)
            return Polynomial(self.nvars, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero(self.nvars)
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                c = get(k, 0) + ca * cb
                if c:
                    out[k] = c
                else:
                    del out[k]
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self):
        from .render import poly_text

        return "Polynomial(%d, %s)" % (self.nvars, poly_text(self))

    def sort_id(self):
        return tuple(sorted(self.terms.items()))

    # -- structural operations ----------------------------------------------

    def substitute(self, images, out_nvars):
        """Evaluate with variable i replaced by images[i-1] (all over out_nvars)."""
        if len(images) != self.nvars:
            raise DimensionMismatchError("need one image per variable")
        powers = {}

        def power(i, e):
            p = powers.get((i, e))
            if p is None:
                p = images[i] ** e
                powers[(i, e)] = p
            return p

        acc = Polynomial.zero(out_nvars)
        for key, c in self.terms.items():
            exps = _unpack(key, self.nvars)
            term = Polynomial.const(out_nvars, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    def remap_variables(self, perm, negate=False):
        """Send variable i to +-variable perm[i-1]; perm is 1-based targets.

        With ``negate`` every variable maps to minus its target, so each
        monomial picks up (-1)**degree.
        """
        out = {}
        for key, c in self.terms.items():
            exps = _unpack(key, self.nvars)
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                new[perm[i] - 1] = e
            if negate and (_key_degree(key) & 1):
                c = -c
            k = _pack(new)
            out[k] = out.get(k, 0) + c
        return Polynomial(self.nvars, {k: c for k, c in out.items() if c})

    def evaluate_at_zero(self):
        """All variables set to zero."""
        return self.terms.get(0, 0)

    def divide_exact(self, divisor):
        """Exact quotient self / divisor over Z, or None when not divisible."""
        if isinstance(divisor, int):
            if divisor == 0:
                raise ZeroDivisionError("division by zero polynomial")
            out = {}
            for k, c in self.terms.items():
                if c % divisor:
                    return None
                out[k] = c // divisor
            return Polynomial(self.nvars, out)
        self._check(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return self
        dlead = max(divisor.terms)
        dlc = divisor.terms[dlead]
        dexps = _unpack(dlead, self.nvars)
        dtail = [(k, c) for k, c in divisor.terms.items() if k != dlead]
        work = dict(self.terms)
        heap = [-k for k in work]
        heapq.heapify(heap)
        quotient = {}
        while heap:
            k = -heapq.heappop(heap)
            c = work.get(k)
            if not c:
                continue
            kexps = _unpack(k, self.nvars)
            if any(ke < de for ke, de in zip(kexps, dexps)) or c % dlc:
                return None
            qk = k - dlead
            qc = c // dlc
            quotient[qk] = qc
            del work[k]
            for tk, tc in dtail:
                nk = qk + tk
                nc = work.get(nk, 0) - qc * tc
                if nc:
                    if nk not in work:
                        heapq.heappush(heap, -nk)
                    work[nk] = nc
                elif nk in work:
                    del work[nk]
        return Polynomial(self.nvars, quotient) if not work else None


def is_x_nonnegative(p):
    """True iff every stored coefficient is nonnegative."""
    return all(c > 0 for c in p.terms.values()) if p.terms else True


# -- change of generators ---------------------------------------------------


def to_T_variables(p, m):
    """Substitute x_j -> T_j - T_{j+1}, landing in m = nvars+1 variables."""
    if p.nvars != m - 1:
        raise DimensionMismatchError(
            "polynomial over %d variables cannot map to %d T-variables" % (p.nvars, m)
        )
    images = [
        Polynomial.variable(m, j) - Polynomial.variable(m, j + 1) for j in range(1, m)
    ]
    return p.substitute(images, m)


def express_in_T_differences(p):
    """Inverse of :func:`to_T_variables` on its image.

    Returns the unique preimage when ``p`` lies in the subring generated by
    the consecutive differences T_j - T_{j+1}, and None otherwise.
    """
    m = p.nvars
    if m < 1:
        raise DimensionMismatchError("need at least one variable")
    r = m - 1
    images = []
    for j in range(1, m):
        images.append(Polynomial.linear(r, [1 if j <= i + 1 else 0 for i in range(r)]))
    images.append(Polynomial.zero(r))
    candidate = p.substitute(images, r)
    if to_T_variables(candidate, m) == p:
        return candidate
    return None


# -- factored rational expressions -------------------------------------------


def _normalize_linear(form):
    """Split a linear form into (positive primitive form, integer scale)."""
    if form.is_zero:
        raise ZeroDivisionError("zero linear factor")
    if form.degree() > 1:
        raise ValueError("denominator factor is not linear")
    scale = form.content()
    lead = form.terms[max(form.terms)]
    if lead < 0:
        scale = -scale
    if scale != 1:
        form = Polynomial(form.nvars, {k: c // scale for k, c in form.terms.items()})
    return form, scale


class RationalExpression:
    """numerator / (scale * product of primitive linear factors)."""

    __slots__ = ("numerator", "scale", "factors")

    def __init__(self, numerator, factors=(), scale=1):
        if scale == 0:
            raise ZeroDivisionError("zero denominator scale")
        norm = []
        for f in factors:
            f, s = _normalize_linear(f)
            scale *= s
            norm.append(f)
        if scale < 0:
            scale = -scale
            numerator = -numerator
        if numerator.is_zero:
            norm, scale = [], 1
        self.numerator = numerator
        self.scale = scale
        self.factors = tuple(sorted(norm, key=Polynomial.sort_id))

    @property
    def nvars(self):
        return self.numerator.nvars

    @property
    def is_zero(self):
        return self.numerator.is_zero

    def neg(self):
        out = RationalExpression.__new__(RationalExpression)
        out.numerator = -self.numerator
        out.scale = self.scale
        out.factors = self.factors
        return out

    def __eq__(self, other):
        if not isinstance(other, RationalExpression):
            return NotImplemented
        a, b = self.reduced(), other.reduced()
        return (
            a.numerator == b.numerator and a.scale == b.scale and a.factors == b.factors
        )

    def __repr__(self):
        return "RationalExpression(%r, factors=%d, scale=%d)" % (
            self.numerator,
            len(self.factors),
            self.scale,
        )

    def add(self, other):
        if self.is_zero:
            return other.reduced()
        if other.is_zero:
            return self.reduced()
        mine = _count(self.factors)
        theirs = _count(other.factors)
        union = dict(mine)
        for fid, (f, m) in theirs.items():
            if fid not in union or union[fid][1] < m:
                union[fid] = (f, m)
        s = self.scale * other.scale // gcd(self.scale, other.scale)
        num_a = self.numerator * (s // self.scale)
        num_b = other.numerator * (s // other.scale)
        for fid, (f, m) in union.items():
            for _ in range(m - _multiplicity(mine, fid)):
                num_a = num_a * f
            for _ in range(m - _multiplicity(theirs, fid)):
                num_b = num_b * f
        factors = [f for f, m in union.values() for _ in range(m)]
        return RationalExpression(num_a + num_b, factors, s).reduced()

    def mul(self, other):
        return RationalExpression(
            self.numerator * other.numerator,
            self.factors + other.factors,
            self.scale * other.scale,
        ).reduced()

    def reduced(self):
        """Cancel common linear factors and integer content."""
        if self.is_zero:
            return RationalExpression(self.numerator)
        num = self.numerator
        remaining = []
        for f in self.factors:
            q = num.divide_exact(f)
            if q is not None:
                num = q
            else:
                remaining.append(f)
        scale = self.scale
        g = gcd(num.content(), scale)
        if g > 1:
            num = num.divide_exact(g)
            scale //= g
        out = RationalExpression.__new__(RationalExpression)
        out.numerator = num
        out.scale = scale
        out.factors = tuple(sorted(remaining, key=Polynomial.sort_id))
        return out

    def expect_polynomial(self):
        """The value as a polynomial; errors unless the denominator clears."""
        r = self.reduced()
        if r.factors:
            raise NonPolynomialError(
                "denominator retains %d linear factor(s)" % len(r.factors)
            )
        if r.scale != 1:
            raise NonPolynomialError("denominator retains integer scale %d" % r.scale)
        return r.numerator


def _count(factors):
    out = {}
    for f in factors:
        fid = f.sort_id()
        if fid in out:
            out[fid] = (f, out[fid][1] + 1)
        else:
            out[fid] = (f, 1)
    return out


def _multiplicity(counter, fid):
    return counter[fid][1] if fid in counter else 0


def rational_add(a, b):
    return a.add(b)


def rational_mul(a, b):
    return a.mul(b)


def rational_reduce(a):
    return a.reduced()


def expect_polynomial(e):
    return e.expect_polynomial()
