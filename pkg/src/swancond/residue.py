"""Exact arithmetic in residue fields of equal-characteristic local fields.

The residue fields handled here are rational function fields F = GF(q)(u),
optionally GF(q)(u, U) after a two-variable base change, or reparametrized
fields GF(q)(t) with u = t^(p^m) obtained by adjoining a p-power root of u.
Constant fields are GF(q) with q = p^a, p in {2, 3, 5} and a <= 2, with a
fixed modulus table so that Frobenius inversion is table-driven.

Elements are quotients of multivariate polynomials kept in canonical
reduced form: the denominator is monic (leading coefficient 1 in graded
lexicographic order) and coprime to the numerator.  Because the form is
canonical, two values are equal exactly when their representations are
identical, and all arithmetic is exact.

Characteristic-p specifics:

* ``x`` is a p-th power iff all partial derivatives of ``x`` vanish; p-th
  roots are computed by exponent division plus Frobenius inversion on the
  constants (Frobenius is a bijection of GF(q)).
* the largest perfect subfield (the intersection of the images of all
  Frobenius iterates) is the constant field GF(q), so membership is a
  constancy test.
* ``differential_of`` returns the formal differential in Omega^1_F, the
  basis being du (and dU when present).

Rational functions parse from and print to a small text grammar: integer
coefficients mod p, the constant-field generator ``g`` (when q = p^2),
variables ``u``, ``U``, ``t``, operators ``+ - * / ^`` and parentheses.
Printing is deterministic, monomials in graded-lexicographic order, so
printing then parsing is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArithmeticDomainError, ContractError, InputError

_PRIMES = (2, 3, 5)

# Fixed irreducible quadratics x^2 + c1*x + c0 over GF(p) (Conway choices).
_MODULI = {(2, 2): (1, 1), (3, 2): (2, 2), (5, 2): (2, 4)}


class FiniteField:
    """GF(p^a) with p in {2, 3, 5} and a in {1, 2}.

    Elements are encoded as plain integers c0 + c1*p in [0, q): the digits
    are the coordinates in the basis (1, g), g being the class of x modulo
    the fixed quadratic.  For a = 1 the encoding is the residue 0..p-1.
    """

    __slots__ = ("p", "a", "q", "_m0", "_m1")

    def __init__(self, p, a=1):
        if p not in _PRIMES:
            raise InputError(f"characteristic must be one of {_PRIMES}, got {p!r}")
        if a not in (1, 2):
            raise InputError(f"constant-field degree must be 1 or 2, got {a!r}")
        self.p = p
        self.a = a
        self.q = p ** a
        self._m0, self._m1 = _MODULI.get((p, a), (0, 0))

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.a) == (other.p, other.a)

    def __hash__(self):
        return hash(("FiniteField", self.p, self.a))

    def __repr__(self):
        return f"GF({self.q})"

    def check(self, x):
        if not isinstance(x, int) or not 0 <= x < self.q:
            raise InputError(f"{x!r} is not an element code of {self!r}")
        return x

    def from_int(self, n):
        """Image of the integer n in the prime subfield."""
        return n % self.p

    @property
    def generator(self):
        """The class g of x modulo the quadratic (only when a = 2)."""
        if self.a != 2:
            raise InputError("the prime field has no quadratic generator")
        return self.p

    def elements(self):
        return range(self.q)

    def add(self, x, y):
        p = self.p
        if self.a == 1:
            return (x + y) % p
        return (x + y) % p + ((x // p + y // p) % p) * p

    def neg(self, x):
        p = self.p
        if self.a == 1:
            return (-x) % p
        return (-x) % p + ((-(x // p)) % p) * p

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        p = self.p
        if self.a == 1:
            return (x * y) % p
        x0, x1 = x % p, x // p
        y0, y1 = y % p, y // p
        # (x0 + x1 g)(y0 + y1 g) with g^2 = -(m1 g + m0)
        hi = x1 * y1
        z0 = (x0 * y0 - hi * self._m0) % p
        z1 = (x0 * y1 + x1 * y0 - hi * self._m1) % p
        return z0 + z1 * p

    def pow(self, x, k):
        if k < 0:
            return self.pow(self.inv(x), -k)
        out, base = 1, x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inv(self, x):
        if x == 0:
            raise ArithmeticDomainError("inversion of zero in " + repr(self))
        return self.pow(x, self.q - 2)

    def frobenius(self, x):
        return self.pow(x, self.p)

    def frobenius_inverse(self, x):
        """The unique y with y^p = x (Frobenius is bijective on GF(q))."""
        return self.pow(x, self.p ** (self.a - 1))

    def embed(self, x, target):
        """Embed an element into a larger constant field over the same prime."""
        if self == target:
            return x
        if self.p == target.p and self.a == 1 and target.a == 2:
            return x  # prime-field digits encode identically
        raise InputError(f"no embedding {self!r} -> {target!r}")

    def element_str(self, x):
        p = self.p
        if self.a == 1 or x < p:
            return str(x % p)
        x0, x1 = x % p, x // p
        gpart = "g" if x1 == 1 else f"{x1}*g"
        return f"{gpart}+{x0}" if x0 else gpart


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials: dict {exponent tuple: nonzero coeff code}.
# ---------------------------------------------------------------------------


def _grlex_key(m):
    return (sum(m), m)


def _pzero():
    return {}


def _pconst(nv, c):
    return {(0,) * nv: c} if c else {}


def _pis_const(f):
    return not f or (len(f) == 1 and not any(next(iter(f))))


def _padd(ff, f, g):
    out = dict(f)
    for m, c in g.items():
        s = ff.add(out.get(m, 0), c)
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _pneg(ff, f):
    return {m: ff.neg(c) for m, c in f.items()}


def _psub(ff, f, g):
    return _padd(ff, f, _pneg(ff, g))


def _pscale(ff, f, c):
    if not c:
        return {}
    return {m: ff.mul(cm, c) for m, cm in f.items()}


def _pmul(ff, f, g):
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            s = ff.add(out.get(m, 0), ff.mul(c1, c2))
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _ppow(ff, nv, f, k):
    out = _pconst(nv, 1)
    base = f
    while k:
        if k & 1:
            out = _pmul(ff, out, base)
        base = _pmul(ff, base, base)
        k >>= 1
    return out


def _plead(f):
    return max(f, key=_grlex_key)


def _pmonic(ff, f):
    if not f:
        return f
    return _pscale(ff, f, ff.inv(f[_plead(f)]))


def _pdivmod(ff, f, g):
    """Single-divisor multivariate division in graded-lex order."""
    if not g:
        raise ArithmeticDomainError("polynomial division by zero")
    gl = _plead(g)
    glc_inv = ff.inv(g[gl])
    quo, rem = {}, dict(f)
    stuck = {}
    while rem:
        m = _plead(rem)
        if all(a >= b for a, b in zip(m, gl)):
            c = ff.mul(rem[m], glc_inv)
            mq = tuple(a - b for a, b in zip(m, gl))
            s = ff.add(quo.get(mq, 0), c)
            if s:
                quo[mq] = s
            else:
                quo.pop(mq, None)
            rem = _psub(ff, rem, _pmul(ff, g, {mq: c}))
        else:
            stuck[m] = rem.pop(m)
    return quo, stuck


def _pexact_div(ff, f, g):
    q, r = _pdivmod(ff, f, g)
    if r:
        raise ArithmeticDomainError("inexact polynomial division")
    return q


def _pderiv(ff, f, i):
    out = {}
    p = ff.p
    for m, c in f.items():
        e = m[i]
        if e % p == 0:
            continue
        cm = ff.mul(c, ff.from_int(e))
        mm = m[:i] + (e - 1,) + m[i + 1:]
        s = ff.add(out.get(mm, 0), cm)
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def _ptotal_deg(f):
    return max((sum(m) for m in f), default=0)


def _prem(ff, A, B):
    """Pseudo-remainder of univariate-over-ring polynomials.

    A and B are dicts {degree: coefficient polynomial (width-1 dict)} with
    B nonzero; only used inside the two-variable gcd.
    """
    dB = max(B)
    lB = B[dB]
    R = dict(A)
    while R and max(R) >= dB:
        dR = max(R)
        lR = R[dR]
        newR = {}
        for d, co in R.items():
            if d != dR:
                newR[d] = _pmul(ff, co, lB)
        for d, co in B.items():
            if d == dB:
                continue
            dd = d + dR - dB
            val = _psub(ff, newR.get(dd, {}), _pmul(ff, co, lR))
            if val:
                newR[dd] = val
            else:
                newR.pop(dd, None)
        R = newR
    return R


def _pgcd(ff, nv, f, g):
    """Monic gcd; primitive Euclid in the last variable when nv == 2."""
    if not f:
        return _pmonic(ff, g)
    if not g:
        return _pmonic(ff, f)
    if nv == 1:
        a, b = f, g
        while b:
            _, r = _pdivmod(ff, a, b)
            a, b = b, r
        return _pmonic(ff, a)

    def to_univ(h):
        u = {}
        for (e0, e1), c in h.items():
            u.setdefault(e1, {})[(e0,)] = c
        return u

    def content(u):
        c = {}
        for co in u.values():
            c = _pgcd(ff, 1, c, co)
        return c

    def prim(u):
        if not u:
            return u, {}
        c = content(u)
        return {d: _pexact_div(ff, co, c) for d, co in u.items()}, c

    fpp, fc = prim(to_univ(f))
    gpp, gc = prim(to_univ(g))
    cont = _pgcd(ff, 1, fc, gc)
    A, B = fpp, gpp
    while B:
        R = _prem(ff, A, B)
        A = B
        B, _ = prim(R)
    out = {}
    for d, co in A.items():
        for (e0,), c in _pmul(ff, co, cont).items():
            out[(e0, d)] = c
    return _pmonic(ff, out)


# ---------------------------------------------------------------------------
# Residue field descriptors.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ResidueField:
    """A rational function field GF(q)(variables) with optional reparametrization.

    ``embeddings`` records p-power root adjunctions: an entry
    ``(var, parent_var, k)`` means this field is GF(q)(var) with
    parent_var = var ** k for the p-power k, i.e. the field arose as
    GF(q)(parent_var ** (1/k)).
    """

    constants: FiniteField
    variables: tuple = ("u",)
    embeddings: tuple = ()

    def __post_init__(self):
        if not 1 <= len(self.variables) <= 2:
            raise InputError("residue fields carry one or two variables")
        for _, _, k in self.embeddings:
            kk = k
            while kk % self.constants.p == 0:
                kk //= self.constants.p
            if kk != 1 or k < self.constants.p:
                raise InputError("embedding exponents must be p-powers")

    @property
    def p(self):
        return self.constants.p

    @property
    def nvars(self):
        return len(self.variables)

    def zero(self):
        return RatFunc(self, {}, _pconst(self.nvars, 1), _canonical=True)

    def one(self):
        return self.constant(1)

    def constant(self, code):
        self.constants.check(code)
        return RatFunc(self, _pconst(self.nvars, code), _pconst(self.nvars, 1),
                       _canonical=True)

    def from_int(self, n):
        return self.constant(self.constants.from_int(n))

    def gen(self, name=None):
        name = name or self.variables[0]
        if name not in self.variables:
            raise InputError(f"unknown variable {name!r} in {self.variables}")
        i = self.variables.index(name)
        m = tuple(1 if j == i else 0 for j in range(self.nvars))
        return RatFunc(self, {m: 1}, _pconst(self.nvars, 1), _canonical=True)

    def parse(self, text):
        return parse_ratfunc(self, text)

    def with_variable(self, name):
        """Extend by a fresh transcendental variable (two-variable fields)."""
        if name in self.variables:
            raise InputError(f"variable {name!r} already present")
        return ResidueField(self.constants, self.variables + (name,), self.embeddings)

    def with_constants(self, ff):
        return ResidueField(ff, self.variables, self.embeddings)

    def proot_field(self, power, name="t"):
        """The field GF(q)(name) with variables[0] = name ** power.

        This is the reparametrized encoding of adjoining a p-power root of
        the single variable; only rank-one fields can be reparametrized.
        """
        if self.nvars != 1:
            raise ContractError("p-power roots are adjoined to rank-one fields only")
        parent = self.variables[0]
        return ResidueField(self.constants, (name,), ((name, parent, power),))

    def parent_field(self):
        if not self.embeddings:
            raise ContractError("not a reparametrized field")
        _, parent, _ = self.embeddings[0]
        return ResidueField(self.constants, (parent,))

    def root_power(self):
        return self.embeddings[0][2] if self.embeddings else 1


@dataclass(frozen=True)
class Differential:
    """An element of Omega^1_F: one coefficient per variable of F."""

    field: ResidueField
    coeffs: tuple

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __str__(self):
        parts = []
        for name, c in zip(self.field.variables, self.coeffs):
            if not c.is_zero():
                parts.append(f"({c}) d{name}")
        return " + ".join(parts) if parts else "0"


class RatFunc:
    """An element of a ResidueField in canonical reduced form."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None, _canonical=False):
        ff = field.constants
        if den is None:
            den = _pconst(field.nvars, 1)
        if not den:
            raise ArithmeticDomainError("zero denominator")
        if not _canonical:
            if not num:
                den = _pconst(field.nvars, 1)
            elif _pis_const(den):
                # constant denominator: no gcd needed, just normalize to 1
                c = next(iter(den.values()))
                if c != 1:
                    num = _pscale(ff, num, ff.inv(c))
                    den = _pconst(field.nvars, 1)
            else:
                g = _pgcd(ff, field.nvars, num, den)
                if not _pis_const(g):
                    num = _pexact_div(ff, num, g)
                    den = _pexact_div(ff, den, g)
                lc = den[_plead(den)]
                if lc != 1:
                    inv = ff.inv(lc)
                    num = _pscale(ff, num, inv)
                    den = _pscale(ff, den, inv)
        self.field = field
        self.num = num
        self.den = den

    # -- helpers -----------------------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, RatFunc) or other.field != self.field:
            raise ContractError("operands live in different residue fields")

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return _pis_const(self.num) and _pis_const(self.den)

    def constant_code(self):
        if not self.is_constant():
            raise ContractError("not a constant")
        if not self.num:
            return 0
        c = next(iter(self.num.values()))
        d = next(iter(self.den.values()))
        return self.field.constants.mul(c, self.field.constants.inv(d))

    def total_degree(self):
        return max(_ptotal_deg(self.num), _ptotal_deg(self.den))

    # -- ring/field operations ---------------------------------------------

    def _den_is_one(self):
        d = self.den
        return len(d) == 1 and next(iter(d.values())) == 1 and not any(next(iter(d)))

    def __add__(self, other):
        self._check_same(other)
        ff = self.field.constants
        if self._den_is_one() and other._den_is_one():
            return RatFunc(self.field, _padd(ff, self.num, other.num), self.den,
                           _canonical=True)
        num = _padd(ff, _pmul(ff, self.num, other.den), _pmul(ff, other.num, self.den))
        return RatFunc(self.field, num, _pmul(ff, self.den, other.den))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatFunc(self.field, _pneg(self.field.constants, self.num), self.den,
                       _canonical=True)

    def __mul__(self, other):
        self._check_same(other)
        ff = self.field.constants
        if self._den_is_one() and other._den_is_one():
            return RatFunc(self.field, _pmul(ff, self.num, other.num), self.den,
                           _canonical=True)
        return RatFunc(self.field, _pmul(ff, self.num, other.num),
                       _pmul(ff, self.den, other.den))

    def __truediv__(self, other):
        self._check_same(other)
        if other.is_zero():
            raise ArithmeticDomainError("division by zero")
        ff = self.field.constants
        return RatFunc(self.field, _pmul(ff, self.num, other.den),
                       _pmul(ff, self.den, other.num))

    def __pow__(self, k):
        if k < 0:
            if self.is_zero():
                raise ArithmeticDomainError("negative power of zero")
            inv = RatFunc(self.field, self.den, self.num)
            return inv ** (-k)
        ff = self.field.constants
        nv = self.field.nvars
        return RatFunc(self.field, _ppow(ff, nv, self.num, k),
                       _ppow(ff, nv, self.den, k))

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.field == other.field and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.num.items())),
                     tuple(sorted(self.den.items()))))

    def __str__(self):
        return ratfunc_str(self)

    def __repr__(self):
        return f"RatFunc({ratfunc_str(self)})"

    # -- characteristic-p operations -----------------------------------------

    def derivative(self, name=None):
        """Partial derivative with respect to the named variable."""
        name = name or self.field.variables[0]
        i = self.field.variables.index(name)
        ff = self.field.constants
        dn = _pderiv(ff, self.num, i)
        dd = _pderiv(ff, self.den, i)
        num = _psub(ff, _pmul(ff, dn, self.den), _pmul(ff, self.num, dd))
        den = _pmul(ff, self.den, self.den)
        return RatFunc(self.field, num, den)

    def differential(self):
        return Differential(self.field,
                            tuple(self.derivative(v) for v in self.field.variables))

    def is_pth_power(self):
        """True iff the element lies in F^p (all partials vanish)."""
        return all(self.derivative(v).is_zero() for v in self.field.variables)

    def pth_root(self):
        """The y with y^p = self; raises when self is not a p-th power."""
        if self.is_zero():
            return self
        ff = self.field.constants
        p = ff.p
        nv = self.field.nvars
        w = _pmul(ff, self.num, _ppow(ff, nv, self.den, p - 1))
        root = {}
        for m, c in w.items():
            if any(e % p for e in m):
                raise ArithmeticDomainError(f"{self} is not a p-th power")
            root[tuple(e // p for e in m)] = ff.frobenius_inverse(c)
        return RatFunc(self.field, root, self.den)

    def in_perfect_subfield(self):
        """Membership in the largest perfect subfield, i.e. the constants."""
        return self.is_constant()

    # -- field moves -----------------------------------------------------------

    def embed_constants(self, target_field):
        """Map along an inclusion of constant fields (same variables)."""
        if target_field.variables != self.field.variables:
            raise ContractError("constant embedding must preserve the variables")
        src, dst = self.field.constants, target_field.constants
        num = {m: src.embed(c, dst) for m, c in self.num.items()}
        den = {m: src.embed(c, dst) for m, c in self.den.items()}
        return RatFunc(target_field, num, den, _canonical=True)

    def widen(self, target_field):
        """View an element of GF(q)(u) inside GF(q)(u, U)."""
        if (target_field.constants != self.field.constants
                or target_field.variables[: self.field.nvars] != self.field.variables
                or target_field.nvars != self.field.nvars + 1):
            raise ContractError("not a one-variable extension of the source field")
        pad = (0,)
        num = {m + pad: c for m, c in self.num.items()}
        den = {m + pad: c for m, c in self.den.items()}
        return RatFunc(target_field, num, den, _canonical=True)

    def to_root_field(self, target_field):
        """Image under GF(q)(u) -> GF(q)(t), u = t^k (exponent scaling)."""
        if (not target_field.embeddings
                or target_field.embeddings[0][1] != self.field.variables[0]
                or target_field.constants != self.field.constants):
            raise ContractError("target is not a root reparametrization of the source")
        k = target_field.root_power()
        num = {(m[0] * k,): c for m, c in self.num.items()}
        den = {(m[0] * k,): c for m, c in self.den.items()}
        return RatFunc(target_field, num, den, _canonical=True)

    def descends(self):
        """True iff an element of GF(q)(t), u = t^k, lies in GF(q)(u)."""
        k = self.field.root_power()
        return all(m[0] % k == 0 for m in self.num) and \
            all(m[0] % k == 0 for m in self.den)

    def to_parent(self):
        """Write an element of GF(q)(t), u = t^k, as an element of GF(q)(u)."""
        if not self.descends():
            raise ContractError(f"{self} does not descend to the parent field")
        k = self.field.root_power()
        parent = self.field.parent_field()
        num = {(m[0] // k,): c for m, c in self.num.items()}
        den = {(m[0] // k,): c for m, c in self.den.items()}
        return RatFunc(parent, num, den, _canonical=True)


def differential_of(x):
    """The formal differential of a residue-field element."""
    return x.differential()


# ---------------------------------------------------------------------------
# Canonical text form.
# ---------------------------------------------------------------------------


def _monomial_str(field, m, c):
    cs = field.constants.element_str(c)
    vparts = []
    for name, e in zip(field.variables, m):
        if e == 0:
            continue
        vparts.append(name if e == 1 else f"{name}^{e}")
    if not vparts:
        return cs
    if c == 1:
        return "*".join(vparts)
    if "+" in cs:
        cs = f"({cs})"
    return "*".join([cs] + vparts)


def poly_str(field, poly):
    if not poly:
        return "0"
    monos = sorted(poly, key=_grlex_key, reverse=True)
    return " + ".join(_monomial_str(field, m, poly[m]) for m in monos)


def ratfunc_str(x):
    ns = poly_str(x.field, x.num)
    if _pis_const(x.den) and x.den.get((0,) * x.field.nvars) == 1:
        return ns
    ds = poly_str(x.field, x.den)
    if len(x.num) > 1:
        ns = f"({ns})"
    if len(x.den) > 1:
        ds = f"({ds})"
    return f"{ns}/{ds}"


_SYMBOLS = "+-*/^()"


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SYMBOLS:
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise InputError(f"unexpected character {ch!r} in {text!r}")
    return tokens


class _Parser:
    def __init__(self, field, tokens):
        self.field = field
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.next()
            rhs = self.unary()
            node = node * rhs if op == "*" else node / rhs
        return node

    def unary(self):
        if self.peek() == "-":
            self.next()
            return -self.unary()
        if self.peek() == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.next()
            e = self.next()
            if not isinstance(e, int):
                raise InputError("exponent must be a nonnegative integer")
            return base ** e
        return base

    def atom(self):
        tok = self.next()
        if isinstance(tok, int):
            return self.field.from_int(tok)
        if tok == "(":
            node = self.expr()
            if self.next() != ")":
                raise InputError("unbalanced parenthesis")
            return node
        if tok == "g":
            return self.field.constant(self.field.constants.generator)
        if isinstance(tok, str) and tok in self.field.variables:
            return self.field.gen(tok)
        raise InputError(f"unexpected token {tok!r}")


def parse_ratfunc(field, text):
    """Parse the canonical text grammar into a RatFunc over ``field``."""
    parser = _Parser(field, _tokenize(text))
    value = parser.expr()
    if parser.peek() is not None:
        raise InputError(f"trailing input at token {parser.peek()!r}")
    return value
