"""Truncated Laurent series over residue fields, with explicit precision.

Elements of an equal-characteristic complete discrete valuation field
K = F((pi)) are represented as finitely many exact terms (a map from
integer exponents to nonzero rational functions over the residue field)
together with a precision bound N meaning "unknown modulo exponents >= N".
Values built from Laurent polynomials are exact and carry precision
+infinity; inversion is the only operation that creates infinite tails,
and it truncates with an explicit precision.  Precision losses follow the
usual contracts (min for sums, min over cross terms for products,
N - 2*ord for inverses) and are never silently absorbed: asking for an
undetermined coefficient raises ``PrecisionError``.

Newton polygons of polynomials over K serve as an independent ramification
oracle.  The polygon of sum(c_i T^i) is the lower convex hull of the
points (i, ord c_i); orientation convention: a segment of slope s and
horizontal width w records w roots x with ord(x) = -s, i.e. the reported
slope is the pole order of the corresponding roots.  When the constant
coefficient is exactly zero the leftmost hull segment is extended to
abscissa 0, so multiplicities always sum to the degree.

``apply_base_change`` transports series along the constructive extensions
built in :mod:`swancond.basechange` (unramified constant growth, tame and
wild uniformizer roots, the two-variable construction, and the
adjoin-Artin-Schreier-root step whose uniformizer relation is known only
to leading order, which the precision bookkeeping records faithfully).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (ArithmeticDomainError, ContractError, InputError,
                     PrecisionError)
from .residue import ResidueField

INF = math.inf


@dataclass(frozen=True)
class LocalField:
    """Descriptor of an equal-characteristic local field F((pi))."""

    residue: ResidueField
    uniformizer: str = "pi"

    @property
    def p(self):
        return self.residue.p


class LaurentSeries:
    """A truncated Laurent series; exact when precision is +infinity.

    All stored exponents are < precision and all stored coefficients are
    nonzero exact rational functions, so the order (minimum stored
    exponent) of a series with at least one term is exact.
    """

    __slots__ = ("field", "terms", "precision")

    def __init__(self, field, terms=None, precision=INF):
        clean = {}
        for e, c in (terms or {}).items():
            if c.field != field.residue:
                raise ContractError("coefficient lives in the wrong residue field")
            if e < precision and not c.is_zero():
                clean[int(e)] = c
        self.field = field
        self.terms = clean
        self.precision = precision

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(field):
        return LaurentSeries(field, {}, INF)

    @staticmethod
    def one(field):
        return LaurentSeries(field, {0: field.residue.one()}, INF)

    @staticmethod
    def monomial(field, exponent, coeff):
        return LaurentSeries(field, {exponent: coeff}, INF)

    @staticmethod
    def unknown(field, precision):
        """The zero-to-precision series O(pi^precision)."""
        return LaurentSeries(field, {}, precision)

    # -- inspectors -----------------------------------------------------------

    def is_exact_zero(self):
        return not self.terms and self.precision == INF

    def order(self):
        """Minimum stored exponent; INF for exact zero.

        Raises ``PrecisionError`` for a series with no terms but finite
        precision, which is indistinguishable from zero.
        """
        if self.terms:
            return min(self.terms)
        if self.precision == INF:
            return INF
        raise PrecisionError(
            f"series O({self.field.uniformizer}^{self.precision}) has no known order")

    def effective_order(self):
        """A lower bound for the order, defined for every series."""
        if self.terms:
            return min(self.terms)
        return self.precision

    def coeff(self, e):
        """The exact coefficient at exponent e (zero when absent)."""
        if e >= self.precision:
            raise PrecisionError(f"coefficient at exponent {e} is not determined")
        return self.terms.get(e, self.field.residue.zero())

    def leading_coeff(self):
        return self.terms[min(self.terms)]

    def residue_class(self):
        """The residue of an integral series (its coefficient at exponent 0)."""
        if self.effective_order() < 0:
            raise ContractError("residue of a non-integral series")
        return self.coeff(0)

    # -- arithmetic -------------------------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, LaurentSeries) or other.field != self.field:
            raise ContractError("series live over different local fields")

    def __add__(self, other):
        self._check_same(other)
        prec = min(self.precision, other.precision)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return LaurentSeries(self.field, out, prec)

    def __neg__(self):
        return LaurentSeries(self.field, {e: -c for e, c in self.terms.items()},
                             self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_same(other)
        if (self.is_exact_zero() or other.is_exact_zero()):
            return LaurentSeries.zero(self.field)
        prec = min(self.precision + other.effective_order(),
                   other.precision + self.effective_order())
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e >= prec:
                    continue
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return LaurentSeries(self.field, out, prec)

    def scale(self, coeff):
        """Multiply by a residue-field constant coefficient."""
        if coeff.is_zero():
            return LaurentSeries(self.field, {}, self.precision)
        return LaurentSeries(self.field,
                             {e: c * coeff for e, c in self.terms.items()},
                             self.precision)

    def shift(self, k):
        """Multiply by pi^k."""
        return LaurentSeries(self.field, {e + k: c for e, c in self.terms.items()},
                             self.precision + k)

    def __pow__(self, k):
        if k < 0:
            raise ContractError("negative powers go through inv()")
        out = LaurentSeries.one(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inv(self, precision=None):
        """Multiplicative inverse, truncated.

        For a series known modulo pi^N with order v the result is known
        modulo pi^(N - 2v); an exact series has an infinite inverse tail,
        so a target precision must be supplied for it.
        """
        if not self.terms:
            if self.precision == INF:
                raise ArithmeticDomainError("inversion of the exact zero series")
            raise PrecisionError("inversion of a series indistinguishable from zero")
        v = min(self.terms)
        if self.precision == INF:
            if precision is None:
                raise PrecisionError(
                    "an exact series needs a target precision to be inverted")
            target = precision
        else:
            target = self.precision - 2 * v
            if precision is not None:
                target = min(target, precision)
        c0 = self.terms[v]
        c0inv = self.field.residue.one() / c0
        # Solve y * self = 1 term by term; y has order -v.
        n_terms = target + v  # exponents -v .. -v + n_terms - 1 are computed
        ys = {}
        for k in range(max(n_terms, 0)):
            if k == 0:
                ys[0] = c0inv
                continue
            acc = self.field.residue.zero()
            for j in range(1, k + 1):
                cj = self.terms.get(v + j)
                yk = ys.get(k - j)
                if cj is not None and yk is not None and not yk.is_zero():
                    acc = acc + cj * yk
            val = -(c0inv * acc)
            if not val.is_zero():
                ys[k] = val
        return LaurentSeries(self.field, {k - v: c for k, c in ys.items()}, target)

    def divide(self, other, precision=None):
        return self * other.inv(precision=precision)

    def truncate(self, precision):
        return LaurentSeries(self.field, self.terms, min(self.precision, precision))

    # -- equality and display -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.field == other.field and self.precision == other.precision
                and self.terms == other.terms)

    def __str__(self):
        name = self.field.uniformizer
        parts = []
        for e in sorted(self.terms):
            cs = str(self.terms[e])
            if "+" in cs or "/" in cs:
                cs = f"({cs})"
            if e == 0:
                parts.append(cs)
            else:
                power = name if e == 1 else f"{name}^{e}"
                parts.append(power if cs == "1" else f"{cs}*{power}")
        if self.precision != INF:
            parts.append(f"O({name}^{self.precision})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"LaurentSeries({self})"

    # -- serialization -----------------------------------------------------------

    def to_record(self):
        return {
            "terms": [[e, str(self.terms[e])] for e in sorted(self.terms)],
            "precision": None if self.precision == INF else self.precision,
        }

    @staticmethod
    def from_record(field, record):
        terms = {}
        for e, cs in record["terms"]:
            terms[int(e)] = field.residue.parse(cs)
        prec = record.get("precision")
        return LaurentSeries(field, terms, INF if prec is None else prec)


# ---------------------------------------------------------------------------
# Newton polygons.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NewtonPolygon:
    """Segments (slope, multiplicity), slopes strictly increasing.

    A segment of slope s and multiplicity w records w roots of pole order
    s at the uniformizer (that is, ord(root) = -s).
    """

    segments: tuple

    def degree(self):
        return sum(m for _, m in self.segments)

    def slope_denominator_lcm(self):
        out = 1
        for s, _ in self.segments:
            out = out * s.denominator // math.gcd(out, s.denominator)
        return out

    def __str__(self):
        return ", ".join(f"(slope {s}, x{m})" for s, m in self.segments) or "(empty)"


def _lower_hull(points):
    pts = sorted(points)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep the hull convex: drop the middle point when it lies on or
            # above the segment from hull[-2] to pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def newton_polygon(coeffs):
    """Newton polygon of the polynomial sum(coeffs[i] * T^i).

    The leading coefficient must be nonzero at known precision.  A
    coefficient with no known terms contributes nothing when its precision
    bound lies on or above the hull; when it could dip below the hull the
    polygon is undetermined and ``PrecisionError`` is raised.
    """
    if not coeffs:
        raise ContractError("empty coefficient list")
    d = len(coeffs) - 1
    lead = coeffs[d]
    if not lead.terms:
        if lead.precision == INF:
            raise ContractError("zero leading coefficient")
        raise PrecisionError("leading coefficient is not determined")
    points = []
    unknown = []
    for i, c in enumerate(coeffs):
        if c.terms:
            points.append((i, min(c.terms)))
        elif c.precision != INF:
            unknown.append((i, c.precision))
    hull = _lower_hull(points)
    i0, v0 = hull[0]
    if i0 > 0:
        # exactly-zero low coefficients: extend the leftmost segment to
        # abscissa 0 so multiplicities sum to the degree
        if len(hull) >= 2:
            s = Fraction(hull[1][1] - v0, hull[1][0] - i0)
        else:
            s = Fraction(0)
        hull = _lower_hull([(0, v0 - s * i0)] + hull)
    def hull_value(x):
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
            if x1 <= x <= x2:
                return y1 + Fraction(y2 - y1, x2 - x1) * (x - x1)
        return None
    for i, bound in unknown:
        hv = hull_value(i)
        if hv is not None and bound < hv:
            raise PrecisionError(
                f"coefficient {i} known only to O(pi^{bound}) could change the polygon")
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(segments))


# ---------------------------------------------------------------------------
# Transport along base changes.
# ---------------------------------------------------------------------------


def apply_base_change(x, bc):
    """Image of a series under a constructive extension of local fields.

    The descriptor ``bc`` is duck-typed (kind, source, target, e plus
    kind-specific data) so this module does not depend on the descriptor
    module.  Exponents scale by the ramification index for uniformizer
    roots; the two-variable change sends pi to U * pi'^p; the
    adjoin-root step rewrites pi'-exponents into tau-exponents with the
    unit relating them absorbed at the precision in force (only its
    residue is known, so the image is known modulo one plus p times the
    lowest exponent).
    """
    if bc.source != x.field:
        raise ContractError("series does not live over the source field")
    kind = bc.kind
    target = bc.target
    if kind == "unramified":
        terms = {e: c.embed_constants(target.residue) for e, c in x.terms.items()}
        return LaurentSeries(target, terms, x.precision)
    if kind in ("tame_root", "wild_root"):
        e0 = bc.e
        terms = {e * e0: c for e, c in x.terms.items()}
        return LaurentSeries(target, terms, x.precision * e0)
    if kind == "prop_p1":
        p = x.field.p
        res = target.residue
        ubig = res.gen("U")
        terms = {}
        for e, c in x.terms.items():
            terms[p * e] = c.widen(res) * ubig ** e
        return LaurentSeries(target, terms, x.precision * p)
    if kind == "adjoin_as":
        p = x.field.p
        wbar = bc.unit_residue
        terms = {}
        prec = x.precision * p
        for e, c in x.terms.items():
            terms[p * e] = c * wbar ** e
            prec = min(prec, p * e + 1)
        return LaurentSeries(target, terms, prec)
    raise InputError(f"unknown base-change kind {kind!r}")
