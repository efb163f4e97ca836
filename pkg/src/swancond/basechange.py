"""Constructive extensions of local fields as first-class descriptors.

Five kinds of extension K -> K' are built here, each with its ramification
index, residue-field map and uniformizer relation:

* ``unramified``: the constant field grows, everything else is fixed;
* ``tame_root(t)``: pi = pi'^t with t prime to p;
* ``wild_root(p^m)``: pi = pi'^(p^m);
* ``prop_p1``: the completion of the local ring of O_K[T, U^(+-1)]/(U T^p - pi)
  at (T); the residue field gains the variable U and pi = U * pi'^p;
* ``adjoin_as(g)``: K' = K(beta) with beta^p - beta = g for g whose pole
  part has constant coefficients and pole order prime to p, so e = p and
  the residue field is unchanged.  A uniformizer is tau = beta^x * pi^y
  with -x * n + y * p = 1 for n the pole order; then
  tau^p / pi = (beta^p pi^n)^x has unit residue b^x for b the leading
  constant of g, so pi = w * tau^p with w a unit of residue b^(-x) (a
  p-th power, every constant being one).  Only the residue of w is
  tracked; series transport absorbs it at the precision in force.

``omega_log_map`` produces the induced map Omega^1_F(log) -> Omega^1_F'(log)
in the bases {du, dlog pi} and {du, (dU,) dlog pi'}: du always maps to du,
and dlog pi maps to t * dlog pi' (tame), to 0 (wild roots and adjoined
roots, since p * dlog pi' = 0 in characteristic p), and to dU/U for the
two-variable change (dlog pi = dlog U + p dlog pi').  Injectivity and
whether the image avoids the dlog part are decided by exact rank
computations.

The Kummer classifier is the mixed-characteristic decision table for
degree-p Kummer extensions L = K(a^(1/p)) when K contains a primitive
p-th root of unity: purely symbolic, no mixed-characteristic arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import LogDifferential
from .errors import ContractError, InputError
from .residue import RatFunc, ResidueField
from .series import LaurentSeries, LocalField


@dataclass(frozen=True)
class BaseChangeDesc:
    """A constructive extension of local fields."""

    kind: str
    source: LocalField
    target: LocalField
    e: int
    residue_map: str
    uniformizer_relation: str
    param: int | None = None
    adjoined: LaurentSeries | None = None
    unit_residue: RatFunc | None = None

    def to_record(self):
        return {
            "kind": self.kind,
            "e": self.e,
            "residue_map": self.residue_map,
            "uniformizer_relation": self.uniformizer_relation,
            "param": self.param,
            "adjoined": None if self.adjoined is None else self.adjoined.to_record(),
            "unit_residue": None if self.unit_residue is None else str(self.unit_residue),
        }


def _next_name(name):
    return name + "'"


def make_base_change(kind, source, *, t=None, m=None, constant_degree=None,
                     adjoined=None):
    """Build a base-change descriptor of the given kind over ``source``."""
    p = source.p
    res = source.residue
    if kind == "unramified":
        if constant_degree is None:
            raise InputError("unramified changes need the new constant degree")
        ff = res.constants
        if constant_degree < ff.a:
            raise InputError("constant field can only grow")
        from .residue import FiniteField
        target_res = res.with_constants(FiniteField(ff.p, constant_degree))
        target = LocalField(target_res, source.uniformizer)
        return BaseChangeDesc(kind, source, target, 1,
                              f"GF({ff.q}) -> GF({ff.p ** constant_degree})",
                              f"{source.uniformizer} unchanged",
                              param=constant_degree)
    if kind == "tame_root":
        if t is None or t <= 0:
            raise InputError("tame roots need a positive degree t")
        if t % p == 0:
            raise InputError(f"tame root degree {t} is divisible by p = {p}")
        name = _next_name(source.uniformizer)
        target = LocalField(res, name)
        return BaseChangeDesc(kind, source, target, t, "identity",
                              f"{source.uniformizer} = ({name})^{t}", param=t)
    if kind == "wild_root":
        if m is None or m < 1:
            raise InputError("wild roots need a positive exponent m")
        name = _next_name(source.uniformizer)
        target = LocalField(res, name)
        return BaseChangeDesc(kind, source, target, p ** m, "identity",
                              f"{source.uniformizer} = ({name})^{p ** m}", param=m)
    if kind == "prop_p1":
        target_res = res.with_variable("U")
        name = _next_name(source.uniformizer)
        target = LocalField(target_res, name)
        return BaseChangeDesc(kind, source, target, p,
                              "F -> F(U)",
                              f"{source.uniformizer} = U*({name})^{p}")
    if kind == "adjoin_as":
        if adjoined is None or adjoined.field != source:
            raise InputError("adjoin_as needs a defining series over the source")
        poles = [e for e in adjoined.terms if e < 0]
        if not poles:
            raise InputError("adjoin_as needs a series with a pole")
        n = -min(poles)
        if n % p == 0:
            raise InputError("adjoin_as pole order must be prime to p")
        for e in poles:
            if not adjoined.terms[e].is_constant():
                raise InputError("adjoin_as pole coefficients must be constants")
        b = adjoined.terms[-n]
        x = (-pow(n, -1, p)) % p
        wbar = b ** (-x) if x else res.one()
        name = "tau" if source.uniformizer != "tau" else _next_name("tau")
        target = LocalField(res, name)
        return BaseChangeDesc(kind, source, target, p, "identity",
                              f"{source.uniformizer} = w*({name})^{p}, "
                              f"residue(w) = {wbar}",
                              adjoined=adjoined, unit_residue=wbar)
    raise InputError(f"unknown base-change kind {kind!r}")


# ---------------------------------------------------------------------------
# Induced maps on logarithmic differentials.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OmegaLogMap:
    """Matrix of Omega^1_F(log) -> Omega^1_F'(log).

    Rows are indexed by the target basis, columns by the source basis; the
    bases list the residue variables' differentials followed by dlog pi.
    Entries are rational functions over the target residue field.
    """

    source_basis: tuple
    target_basis: tuple
    rows: tuple  # tuple of tuples of RatFunc
    target_field: ResidueField

    def entry(self, i, j):
        return self.rows[i][j]

    def apply(self, coeffs):
        """Image of a source coefficient vector (aligned with source_basis)."""
        if len(coeffs) != len(self.source_basis):
            raise ContractError("coefficient vector does not match the source basis")
        out = []
        for row in self.rows:
            acc = self.target_field.zero()
            for entry, c in zip(row, coeffs):
                acc = acc + entry * c
            out.append(acc)
        return tuple(out)

    def rank(self):
        rows = [list(r) for r in self.rows]
        nrows, ncols = len(rows), len(self.source_basis)
        rank = 0
        for col in range(ncols):
            pivot = None
            for i in range(rank, nrows):
                if not rows[i][col].is_zero():
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = self.target_field.one() / rows[rank][col]
            rows[rank] = [v * inv for v in rows[rank]]
            for i in range(nrows):
                if i != rank and not rows[i][col].is_zero():
                    factor = rows[i][col]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
            rank += 1
        return rank

    def is_injective(self):
        return self.rank() == len(self.source_basis)

    def image_in_nonlog(self):
        """True iff the image lies in Omega^1_F' (no dlog pi' component)."""
        dlog_index = self.target_basis.index("dlogpi")
        return all(v.is_zero() for v in self.rows[dlog_index])

    def compose(self, inner):
        """The matrix of self o inner (inner applied first)."""
        if inner.target_basis != self.source_basis:
            raise ContractError("bases do not chain")
        embedded = [[_lift_entry(v, self.target_field) for v in row]
                    for row in inner.rows]
        rows = []
        for i in range(len(self.target_basis)):
            row = []
            for j in range(len(inner.source_basis)):
                acc = self.target_field.zero()
                for k in range(len(self.source_basis)):
                    acc = acc + self.rows[i][k] * embedded[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return OmegaLogMap(inner.source_basis, self.target_basis, tuple(rows),
                           self.target_field)


def _lift_entry(x, target_field):
    if x.field == target_field:
        return x
    y = x
    if y.field.constants != target_field.constants:
        y = y.embed_constants(y.field.with_constants(target_field.constants))
    if y.field == target_field:
        return y
    if (target_field.nvars == y.field.nvars + 1
            and target_field.variables[:y.field.nvars] == y.field.variables):
        return y.widen(target_field)
    raise ContractError("cannot lift matrix entry into the target residue field")


def _basis_of(field, uniformizer_label="dlogpi"):
    return tuple(f"d{v}" for v in field.variables) + (uniformizer_label,)


def omega_log_map(bc):
    """The induced map on logarithmic differentials of a base change."""
    src = bc.source.residue
    dst = bc.target.residue
    p = src.p
    source_basis = _basis_of(src)
    target_basis = _basis_of(dst)
    zero, one = dst.zero(), dst.one()
    ncols = len(source_basis)
    rows = [[zero for _ in range(ncols)] for _ in range(len(target_basis))]
    # variable differentials always map identically
    for j, v in enumerate(src.variables):
        i = target_basis.index(f"d{v}")
        rows[i][j] = one
    dlog_col = ncols - 1
    if bc.kind == "unramified":
        rows[len(target_basis) - 1][dlog_col] = one
    elif bc.kind == "tame_root":
        rows[len(target_basis) - 1][dlog_col] = dst.from_int(bc.param)
    elif bc.kind in ("wild_root", "adjoin_as"):
        pass  # dlog pi = e * dlog pi' (+ dlog of a unit) dies in characteristic p
    elif bc.kind == "prop_p1":
        rows[target_basis.index("dU")][dlog_col] = one / dst.gen("U")
    else:
        raise InputError(f"unknown base-change kind {bc.kind!r}")
    return OmegaLogMap(source_basis, target_basis,
                       tuple(tuple(r) for r in rows), dst)


def transport_log_class(ld, bc):
    """Image of a refined-conductor class under a base change.

    The level multiplies by the ramification index and the coefficients
    move through the Omega^1(log) matrix.
    """
    omega = omega_log_map(bc)
    dst = bc.target.residue
    coeffs = []
    for c in ld.dvar:
        coeffs.append(_lift_entry(c, dst))
    coeffs.append(_lift_entry(ld.dlogpi, dst))
    image = omega.apply(tuple(coeffs))
    dvar = image[:len(dst.variables)]
    dlogpi = image[-1]
    return LogDifferential(ld.level * bc.e, dst, tuple(dvar), dlogpi)


# ---------------------------------------------------------------------------
# Kummer classification (mixed characteristic; decision table only).
# ---------------------------------------------------------------------------

SHAPE_NONUNIT = "nonunit"
SHAPE_ONE_PLUS_HIGH = "one_plus_high"
SHAPE_UNIT = "unit"
SHAPE_ONE_PLUS_PI_N = "one_plus_pi_n"

_SHAPES = (SHAPE_NONUNIT, SHAPE_ONE_PLUS_HIGH, SHAPE_UNIT, SHAPE_ONE_PLUS_PI_N)


@dataclass(frozen=True)
class KummerDescriptor:
    """Symbolic description of a = the p-th-power datum of L = K(a^(1/p)).

    ``e_k`` is ord_K(p); the descriptor assumes K contains a primitive
    p-th root of unity, which forces (p - 1) | e_k.  The shape names the
    hypothesis satisfied by a:

    * ``nonunit``: ord_K(a) = ord_a != 0;
    * ``one_plus_high``: a in 1 + (zeta_p - 1)^p O_K;
    * ``unit``: a is a unit, with ``residue_is_pth_power`` telling whether
      its residue class lies in F^p;
    * ``one_plus_pi_n``: a in (1 + pi^n u)(1 + pi^(n+1) O_K) for a unit u,
      with ``residue_is_pth_power`` telling whether the residue of u lies
      in F^p.
    """

    p: int
    e_k: int
    contains_zeta_p: bool
    ord_a: int
    shape: str
    n: int | None = None
    residue_is_pth_power: bool | None = None

    def validate(self):
        if self.p not in (2, 3, 5):
            raise InputError(f"p must be 2, 3 or 5, got {self.p}")
        if self.e_k < 1 or self.e_k % (self.p - 1) != 0:
            raise InputError("e_k must be a positive multiple of p - 1 "
                             "when zeta_p lies in K")
        if self.shape not in _SHAPES:
            raise InputError(f"unknown shape {self.shape!r}")
        if self.shape == SHAPE_NONUNIT:
            if self.ord_a == 0:
                raise InputError("nonunit shape requires ord_a != 0")
        elif self.ord_a != 0:
            raise InputError(f"shape {self.shape} requires ord_a = 0")
        if self.shape == SHAPE_ONE_PLUS_PI_N:
            if self.n is None or self.n < 1:
                raise InputError("one_plus_pi_n requires an integer n >= 1")
            if self.residue_is_pth_power is None:
                raise InputError("one_plus_pi_n requires the residue flag")
        if self.shape == SHAPE_UNIT and self.residue_is_pth_power is None:
            raise InputError("unit shape requires the residue flag")

    def to_record(self):
        return {"p": self.p, "e_k": self.e_k,
                "contains_zeta_p": self.contains_zeta_p,
                "ord_a": self.ord_a, "shape": self.shape, "n": self.n,
                "residue_is_pth_power": self.residue_is_pth_power}


@dataclass(frozen=True)
class KummerClassification:
    """Conclusion for a matched hypothesis, or inconclusive."""

    case: int | None
    e: int | None
    residue_extension: str | None

    @property
    def conclusive(self):
        return self.case is not None

    def table_line(self):
        if not self.conclusive:
            return "inconclusive"
        return f"case={self.case} e={self.e} E={self.residue_extension}"


_INCONCLUSIVE = KummerClassification(None, None, None)


def classify_kummer(kd):
    """Decision table for degree-p Kummer extensions with zeta_p in K.

    The five conclusive rows are: (1) a = 1 modulo (zeta_p - 1)^p gives an
    unramified extension; (2) p not dividing ord(a) gives e = p, E = F;
    (3) a unit with residue outside F^p gives e = 1, E = F(a^(1/p))
    purely inseparable; (4) a = 1 + pi^n u with p not dividing n and
    n < e_k p/(p-1) gives e = p, E = F; (5) a = 1 + pi^(mp) u with
    mp < e_k p/(p-1) and the residue of u outside F^p gives e = 1,
    E = F(u^(1/p)).  Descriptors matching no hypothesis (for example unit
    parts whose residues are p-th powers, which the table cannot decide
    without further reduction) come back inconclusive.
    """
    kd.validate()
    if not kd.contains_zeta_p:
        raise ContractError("the classification assumes zeta_p in K")
    p = kd.p
    if kd.shape == SHAPE_NONUNIT:
        if kd.ord_a % p != 0:
            return KummerClassification(2, p, "F")
        return _INCONCLUSIVE
    if kd.shape == SHAPE_ONE_PLUS_HIGH:
        return KummerClassification(1, 1, "unramified")
    if kd.shape == SHAPE_UNIT:
        if not kd.residue_is_pth_power:
            return KummerClassification(3, 1, "F(abar^(1/p))")
        return _INCONCLUSIVE
    # one_plus_pi_n: compare n with ord((zeta_p - 1)^p) = e_k * p / (p - 1)
    n = kd.n
    if n * (p - 1) >= kd.e_k * p:
        return KummerClassification(1, 1, "unramified")
    if n % p != 0:
        return KummerClassification(4, p, "F")
    if not kd.residue_is_pth_power:
        return KummerClassification(5, 1, "F(ubar^(1/p))")
    return _INCONCLUSIVE
