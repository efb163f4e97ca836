"""Arithmetic inside L = K(alpha), alpha^p - alpha = f, when e(L/K) = 1.

Elements are coordinate vectors in the power basis 1, alpha, ...,
alpha^(p-1); multiplication reduces through the defining relation
alpha^p = alpha + f.  The Galois group is generated by
sigma: alpha -> alpha + 1.

Because the extension has ramification index one and residue degree p
(the purely inseparable, "ferocious" case), valuations are computed
through norms: ord_L(x) = ord_K(N(x)) / p where the norm is the
determinant of the multiplication-by-x operator, so no embedding of L
into a series field over its residue field is ever needed.  Residues are
computed by exact linear algebra in the basis 1, v, ..., v^(p-1) of a
chosen generator v: the coordinates of an integral element land in O_K
(O_L = O_K[v] in this case), and a non-integral solution signals a broken
generator and is surfaced as an error.

The canonical generator for a reduced ferocious datum with leading term
a * pi^(-mp) is v = alpha * pi^m: it is a unit of O_L whose residue
generates the residue extension E = F(a^(1/p)), and its minimal
polynomial (computed as the characteristic polynomial of multiplication
by v) is congruent to T^p - a modulo the maximal ideal.  Seeded random
generators v + delta, with delta drawn from the maximal ideal inside
O_K[v], exercise the well-definedness of everything computed from the
choice of v.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .artin import ASData, CASE_FEROCIOUS, classify
from .errors import (ArithmeticDomainError, ContractError, InvariantViolation,
                     PrecisionError)
from .residue import RatFunc, ResidueField
from .series import INF, LaurentSeries


class ExtElement:
    """An element of L in the basis 1, alpha, ..., alpha^(p-1)."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent, coords):
        p = parent.p
        coords = tuple(coords)
        if len(coords) != p:
            raise ContractError(f"need {p} coordinates")
        for c in coords:
            if c.field != parent.field:
                raise ContractError("coordinate over the wrong base field")
        self.parent = parent
        self.coords = coords

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def from_scalar(parent, s):
        zero = LaurentSeries.zero(s.field)
        return ExtElement(parent, (s,) + (zero,) * (parent.p - 1))

    @staticmethod
    def alpha(parent):
        field = parent.field
        zero = LaurentSeries.zero(field)
        coords = [zero] * parent.p
        coords[1] = LaurentSeries.one(field)
        return ExtElement(parent, coords)

    @staticmethod
    def zero(parent):
        z = LaurentSeries.zero(parent.field)
        return ExtElement(parent, (z,) * parent.p)

    @staticmethod
    def one(parent):
        return ExtElement.from_scalar(parent, LaurentSeries.one(parent.field))

    # -- ring structure ---------------------------------------------------------

    def _check(self, other):
        if other.parent != self.parent:
            raise ContractError("elements of different extensions")

    def __add__(self, other):
        self._check(other)
        return ExtElement(self.parent,
                          tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return ExtElement(self.parent, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        """Multiply by a scalar from K."""
        return ExtElement(self.parent, tuple(c * s for c in self.coords))

    def __mul__(self, other):
        self._check(other)
        p = self.parent.p
        field = self.parent.field
        f = self.parent.f
        prod = [LaurentSeries.zero(field) for _ in range(2 * p - 1)]
        for i, a in enumerate(self.coords):
            if a.is_exact_zero():
                continue
            for j, b in enumerate(other.coords):
                if b.is_exact_zero():
                    continue
                prod[i + j] = prod[i + j] + a * b
        for k in range(2 * p - 2, p - 1, -1):
            c = prod[k]
            if c.is_exact_zero():
                continue
            prod[k - p + 1] = prod[k - p + 1] + c
            prod[k - p] = prod[k - p] + c * f
            prod[k] = LaurentSeries.zero(field)
        return ExtElement(self.parent, tuple(prod[:p]))

    def __pow__(self, k):
        out = ExtElement.one(self.parent)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.parent == other.parent and self.coords == other.coords

    def is_exact_zero(self):
        return all(c.is_exact_zero() for c in self.coords)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coords):
            if c.is_exact_zero():
                continue
            basis = "1" if i == 0 else ("alpha" if i == 1 else f"alpha^{i}")
            parts.append(f"({c})*{basis}" if i else f"({c})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"ExtElement({self})"


def galois_sigma(x, i=1):
    """The automorphism alpha -> alpha + i applied to x."""
    p = x.parent.p
    i %= p
    field = x.parent.field
    out = [LaurentSeries.zero(field) for _ in range(p)]
    res = field.residue
    ii = res.from_int(i)
    for j, c in enumerate(x.coords):
        if c.is_exact_zero():
            continue
        # (alpha + i)^j expanded by the binomial theorem; j < p so no
        # reduction through the defining relation is needed
        for k in range(j + 1):
            binom = res.from_int(math.comb(j, k)) * ii ** (j - k)
            if binom.is_zero():
                continue
            out[k] = out[k] + c.scale(binom)
    return ExtElement(x.parent, out)


def _mult_matrix(x):
    """Columns are the coordinates of x * alpha^j."""
    p = x.parent.p
    cols = []
    current = x
    for _ in range(p):
        cols.append(current.coords)
        current = _times_alpha(current)
    return cols


def _times_alpha(x):
    p = x.parent.p
    f = x.parent.f
    c = x.coords
    top = c[p - 1]
    coords = [top * f] + list(c[:p - 1])
    coords[1] = coords[1] + top
    return ExtElement(x.parent, coords)


def _det(field, cols):
    """Exact determinant by Laplace expansion over row subsets.

    dp[mask] is the minor of the first popcount(mask) columns on the rows
    in mask; sharing the minors needs n * 2^(n-1) series products instead
    of the n! * n of the naive permutation sum.
    """
    n = len(cols)
    zero = LaurentSeries.zero(field)
    dp = {0: LaurentSeries.one(field)}
    for j in range(n):
        new = {}
        for mask, minor in dp.items():
            if minor.is_exact_zero():
                continue
            # Laplace along column j: the sign of row i is
            # (-1)^(j + number of used rows below i)
            sign = 1 if j % 2 == 0 else -1
            for i in range(n):
                bit = 1 << i
                if mask & bit:
                    sign = -sign
                    continue
                entry = cols[j][i]
                if not entry.is_exact_zero():
                    term = minor * entry
                    prev = new.get(mask | bit)
                    if prev is None:
                        new[mask | bit] = term if sign == 1 else -term
                    else:
                        new[mask | bit] = prev + term if sign == 1 else prev - term
        dp = new
        if not dp:
            return zero
    return dp.get((1 << n) - 1, zero)


def _parity(perm):
    seen = [False] * len(perm)
    sign = 1
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


def norm(x):
    """Determinant of multiplication by x, an element of K."""
    return _det(x.parent.field, _mult_matrix(x))


def ord_ext(x, q=None):
    """ord_L(x) = ord_K(norm x) / q for the residue degree q (= p here)."""
    q = q or x.parent.p
    n = norm(x)
    if n.is_exact_zero():
        raise ArithmeticDomainError("valuation of zero")
    if not n.terms:
        raise PrecisionError("norm is indistinguishable from zero")
    return Fraction(n.order(), q)


def ord_alpha_basis(x, m):
    """ord_L(x) read directly off the alpha-basis coordinates.

    For a reduced ferocious datum with break m, alpha = v * pi^(-m) for
    the unit generator v whose residue powers 1, vbar, ..., vbar^(p-1)
    are linearly independent over F; hence the leading parts of the
    summands c_i * alpha^i never cancel and

        ord_L(sum c_i alpha^i) = min_i (ord_K(c_i) - i*m).

    This is the fast path the conductor pipeline runs on; it is
    cross-checked against the norm-based ``ord_ext`` in the test suite.
    """
    best = None
    bound = None
    for i, c in enumerate(x.coords):
        if c.terms:
            w = c.order() - i * m
            best = w if best is None else min(best, w)
        if c.precision != INF:
            b = c.precision - i * m
            bound = b if bound is None else min(bound, b)
    if best is None:
        if bound is None:
            raise ArithmeticDomainError("valuation of zero")
        raise PrecisionError("element is indistinguishable from zero")
    if bound is not None and bound <= best:
        raise PrecisionError(
            f"valuation <= {best} is not separated from the precision bound {bound}")
    return best


def residue_alpha_basis(x, m, gen):
    """Residue of an integral element via the alpha-basis, landing in E.

    The coordinate of alpha^i contributes its coefficient at pi^(i*m)
    times vbar^i; integrality of each summand is checked (no cancellation
    can hide a pole, by the independence of the vbar powers).
    """
    if ord_alpha_basis(x, m) < 0:
        raise ContractError("residue of an element of negative valuation")
    ext = gen.residue_field
    acc = ext.zero()
    vb_pow = ext.one()
    for i, c in enumerate(x.coords):
        acc = acc + c.coeff(i * m).to_root_field(ext) * vb_pow
        vb_pow = vb_pow * gen.vbar
    return acc


def charpoly(x):
    """Characteristic polynomial of multiplication by x (monic, length p+1).

    For x outside K this is also the minimal polynomial, the degree being
    prime.
    """
    p = x.parent.p
    field = x.parent.field
    cols = _mult_matrix(x)
    # entries of T*I - M are degree <= 1 polynomials in T over K
    coeffs = [LaurentSeries.zero(field) for _ in range(p + 1)]
    one = LaurentSeries.one(field)
    for perm in itertools.permutations(range(p)):
        sign = _parity(perm)
        # polynomial product of the selected entries, as coefficient lists
        prod = {0: one}
        for j, i in enumerate(perm):
            entry_const = -cols[j][i]
            entry = {0: entry_const}
            if i == j:
                entry[1] = one
            new = {}
            for d1, c1 in prod.items():
                if c1.is_exact_zero():
                    continue
                for d2, c2 in entry.items():
                    if c2.is_exact_zero():
                        continue
                    d = d1 + d2
                    term = c1 * c2
                    new[d] = new[d] + term if d in new else term
            prod = new
            if not prod:
                break
        for d, c in prod.items():
            coeffs[d] = coeffs[d] + c if sign == 1 else coeffs[d] - c
    return coeffs


def eval_poly(coeffs, x):
    """Evaluate a polynomial with K-coefficients at an element of L."""
    out = ExtElement.zero(x.parent)
    for c in reversed(coeffs):
        out = out * x + ExtElement.from_scalar(x.parent, c)
    return out


def poly_derivative_coeffs(coeffs, p_char, residue_field):
    out = []
    for i in range(1, len(coeffs)):
        factor = i % p_char
        if factor == 0:
            out.append(LaurentSeries.zero(coeffs[i].field))
        else:
            out.append(coeffs[i].scale(residue_field.from_int(factor)))
    return out


@dataclass(frozen=True)
class GeneratorData:
    """A monogenic presentation O_L = O_K[v] for the ferocious case."""

    parent: ASData
    v: ExtElement
    vbar: RatFunc            # residue of v, in the reparametrized field E
    ubar: RatFunc            # vbar^q, an element of F
    phi: tuple               # minimal polynomial of v, monic, length q+1
    q: int                   # residue degree [E:F]
    residue_field: ResidueField   # E, encoded as GF(q)(t) with u = t^q

    def phi_str(self):
        return " + ".join(f"({c})*T^{i}" for i, c in enumerate(self.phi)
                          if not c.is_exact_zero())


def _build_generator(d, v, cls):
    p = d.p
    res = d.field.residue
    ext = cls.residue_ext
    a = d.f.coeff(-p * cls.break_exponent)
    ubar = a
    vbar = ubar.to_root_field(ext).pth_root()
    phi = charpoly(v)
    # verify phi = T^q - ubar modulo the maximal ideal
    ok = not phi[p].is_exact_zero() and (phi[p] - LaurentSeries.one(d.field)).is_exact_zero()
    for i in range(1, p):
        ok = ok and phi[i].effective_order() >= 1
    const = phi[0] + LaurentSeries.monomial(d.field, 0, ubar)
    ok = ok and const.effective_order() >= 1
    if not ok:
        raise InvariantViolation(
            "candidate generator has minimal polynomial not congruent to "
            "T^q - ubar modulo the maximal ideal")
    return GeneratorData(d, v, vbar, ubar, tuple(phi), p, ext)


def canonical_generator(d):
    """The generator v = alpha * pi^m for a reduced ferocious datum."""
    cls = classify(d)
    if cls.case != CASE_FEROCIOUS:
        raise ContractError("generators are defined for the ferocious case")
    if d.field.residue.nvars != 1:
        raise ContractError("monogenic presentations need a rank-one residue field")
    m = cls.break_exponent
    pi_m = LaurentSeries.monomial(d.field, m, d.field.residue.one())
    v = ExtElement.alpha(d).scale(pi_m)
    return _build_generator(d, v, cls)


def random_generator(d, seed, retries=5):
    """A seeded random perturbation v + delta of the canonical generator.

    delta is drawn from the maximal ideal of O_K[v] (series coefficients
    with positive order), which preserves the residue of v and hence the
    generator property; the property is still verified, with bounded
    retries on the (unexpected) failure path.
    """
    cls = classify(d)
    if cls.case != CASE_FEROCIOUS:
        raise ContractError("generators are defined for the ferocious case")
    base = canonical_generator(d)
    rng = random.Random(seed)
    field = d.field
    res = field.residue
    last_error = None
    for _ in range(retries):
        delta = ExtElement.zero(d)
        for j in range(d.p):
            if rng.random() < 0.5:
                continue
            exp = rng.randint(1, 3)
            coeff = _random_ratfunc(rng, res)
            if coeff.is_zero():
                continue
            scalar = LaurentSeries.monomial(field, exp, coeff)
            delta = delta + (base.v ** j).scale(scalar)
        try:
            return _build_generator(d, base.v + delta, cls)
        except InvariantViolation as err:   # pragma: no cover - unreachable
            last_error = err
    raise InvariantViolation(
        f"no valid random generator after {retries} retries: {last_error}")


def _random_ratfunc(rng, res):
    out = res.zero()
    u = res.gen()
    for _ in range(rng.randint(0, 2)):
        c = rng.randrange(res.constants.q)
        e = rng.randint(0, 2)
        out = out + res.constant(c) * u ** e
    return out


def residue_ext(x, gen, guard=4):
    """Residue of an integral element, expressed in E via the generator.

    Solves the p x p linear system over K writing x in the basis
    1, v, ..., v^(p-1) by Cramer's rule (exact determinants), checks the
    coordinates are integral, and reduces them.
    """
    val = ord_ext(x, gen.q)
    if val < 0:
        raise ContractError(f"residue of an element of negative valuation {val}")
    p = x.parent.p
    field = x.parent.field
    powers = [gen.v ** i for i in range(p)]
    cols = [pw.coords for pw in powers]
    D = _det(field, cols)
    if not D.terms:
        raise PrecisionError("generator matrix determinant is indistinguishable from 0")
    dets = []
    for i in range(p):
        replaced = list(cols)
        replaced[i] = x.coords
        dets.append(_det(field, replaced))
    ordD = D.order()
    min_ord = min([det.order() for det in dets if det.terms] + [0, ordD])
    invD = D.inv(precision=guard + 1 - min_ord)
    res_field = field.residue
    acc = gen.residue_field.zero()
    vb_pow = gen.residue_field.one()
    for i in range(p):
        yi = dets[i] * invD
        if yi.terms and yi.order() < 0:
            raise InvariantViolation(
                f"coordinate {i} of {x} in the generator basis is not integral")
        ci = yi.coeff(0)
        acc = acc + ci.to_root_field(gen.residue_field) * vb_pow
        vb_pow = vb_pow * gen.vbar
    return acc
