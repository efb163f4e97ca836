"""The geometric (ramification-filtration) conductor in the ferocious case.

For a degree-p extension with e = 1 and purely inseparable residue
extension, the logarithmic conductor equals the non-logarithmic one, and
both are read off a monogenic presentation O_L = O_K[v]: with phi the
minimal polynomial of v and sigma a generator of the Galois group,

    r = ord_L( phi'(v) * (v - sigma(v)) ).

The same number decomposes as r = d + s where d = ord_L(phi'(v)) is the
different contribution and s the largest valuation of a conjugate
difference v - sigma^i(v); both routes are computed and must agree, a
mismatch being an invariant violation rather than a tolerated
discrepancy.  The refined conductor is the class

    d(ubar) / (phi'(v) (v - sigma(v)))

at level r: concretely, c being the level-r unit of the product and
ubar = vbar^q the norm of the residue generator, the coefficient of du is
(d ubar/du) / c, which must descend from E to F; the dlog pi component
vanishes (the class lies in the non-logarithmic part since conductor and
log conductor agree when e = 1).

Ramified (e = p) extensions are not handled here: they are first reduced
to the ferocious case by the ramification-killing base change of
:mod:`swancond.epp`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import LogDifferential, SwanReport
from .artin import CASE_FEROCIOUS, classify
from .errors import ContractError, InvariantViolation
from .extension import (GeneratorData, eval_poly, galois_sigma, ord_alpha_basis,
                        poly_derivative_coeffs, residue_alpha_basis)
from .residue import RatFunc
from .series import LaurentSeries


@dataclass(frozen=True)
class GeometricReport:
    """Conductor data from the monogenic presentation, with audit fields."""

    r: int
    d_term: int
    s: int
    leading_unit: RatFunc          # level-r unit of phi'(v)(v - sigma v), in E
    rsw: LogDifferential
    generator: GeneratorData

    def to_record(self):
        return {"r": self.r, "d_term": self.d_term, "s": self.s,
                "leading_unit": str(self.leading_unit),
                "rsw": self.rsw.to_record()}


def _conductor_pieces(gen):
    d = gen.parent
    p = d.p
    m = classify(d).break_exponent
    v = gen.v
    phi_prime = poly_derivative_coeffs(gen.phi, p, d.field.residue)
    dv = eval_poly(phi_prime, v)
    diff1 = v - galois_sigma(v, 1)
    product = dv * diff1
    r = ord_alpha_basis(product, m)
    d_term = ord_alpha_basis(dv, m)
    s = max(ord_alpha_basis(v - galois_sigma(v, i), m) for i in range(1, p))
    if r != d_term + s:
        raise InvariantViolation(
            f"conductor decomposition mismatch: {r} != {d_term} + {s}")
    return product, r, d_term, s


def conductor_decomposition(gen):
    """The pair (different term, conjugate gap) and their sum, the conductor."""
    _, r, d_term, s = _conductor_pieces(gen)
    return d_term, s, r


def geometric_report(d, gen=None, case_id=None):
    """Full geometric conductor computation for a reduced ferocious datum."""
    cls = classify(d)
    if cls.case != CASE_FEROCIOUS:
        raise ContractError(
            "the geometric conductor is computed in the ferocious case; "
            "ramified data flow through the ramification-killing reduction first")
    if gen is None:
        from .extension import canonical_generator
        gen = canonical_generator(d)
    product, r, d_term, s = _conductor_pieces(gen)
    # leading unit c of the product at level r, an element of E
    unit = product.scale(LaurentSeries.monomial(d.field, -r, d.field.residue.one()))
    c = residue_alpha_basis(unit, cls.break_exponent, gen)
    if c.is_zero():
        raise InvariantViolation("leading unit of phi'(v)(v - sigma v) vanishes")
    # refined class: (d ubar / du) / c must descend from E to F
    dubar = gen.ubar.derivative()
    quotient = dubar.to_root_field(gen.residue_field) / c
    if not quotient.descends():
        raise InvariantViolation(
            "refined-conductor coefficient does not descend to the residue field; "
            "generator or precision bug")
    du_coeff = quotient.to_parent()
    res = d.field.residue
    rsw = LogDifferential(r, res, (du_coeff,), res.zero())
    return GeometricReport(r, d_term, s, c, rsw, gen)


def swan_geometric(d, gen=None, case_id=None):
    """SwanReport wrapper around the geometric computation."""
    report = geometric_report(d, gen)
    return SwanReport(report.r, report.rsw, "geometric", case_id)
