"""The abelian Swan conductor and its refinement, read off the reduced datum.

For a character of the absolute Galois group cut out by a degree-p
Artin-Schreier datum in reduced form, the abelian Swan conductor is the
pole order of the reduced f (zero for integral f).  The classical theory
defines it through unit-group filtrations and Brauer-group cup products;
in the equal-characteristic rank-one setting it is computed here from the
explicit reduced form, and the library's differential-testing harness
checks the result against the independently computed geometric conductor
on every corpus case.

The refined conductor is the class of d(f) in
m_K^(-r)/m_K^(-r+1) (x) Omega^1(log): only the exponent -r term a_r of f
contributes, giving

    rsw = (da_r + a_r * (-r) dlog pi) * pi^(-r)
        = (sum_v (partial a_r / partial v) dv + ((-r) mod p) a_r dlog pi) * pi^(-r).

For reduced data the class is nonzero whenever r > 0: if p divides r the
leading coefficient is not a p-th power so some partial derivative
survives, and otherwise the dlog pi coefficient is a unit multiple of a_r.
"""

from __future__ import annotations

from dataclasses import dataclass

from .artin import classify
from .errors import ContractError
from .residue import ResidueField, RatFunc


@dataclass(frozen=True)
class LogDifferential:
    """A class in m_K^(-level)/m_K^(-level+1) (x) Omega^1(log).

    ``dvar`` holds one coefficient per residue-field variable (du, and dU
    when present); ``dlogpi`` is the coefficient of dlog pi.  Classes are
    comparable only at equal level over the same residue field.
    """

    level: int
    field: ResidueField
    dvar: tuple
    dlogpi: RatFunc

    def is_zero(self):
        return all(c.is_zero() for c in self.dvar) and self.dlogpi.is_zero()

    def coeff_du(self):
        return self.dvar[0]

    def to_record(self):
        out = {"level": self.level,
               "dlogpi": str(self.dlogpi)}
        for name, c in zip(self.field.variables, self.dvar):
            out[f"d{name}"] = str(c)
        return out

    def __str__(self):
        parts = [f"({c}) d{n}" for n, c in zip(self.field.variables, self.dvar)
                 if not c.is_zero()]
        if not self.dlogpi.is_zero():
            parts.append(f"({self.dlogpi}) dlog(pi)")
        body = " + ".join(parts) if parts else "0"
        return f"pi^(-{self.level}) * [{body}]"


@dataclass(frozen=True)
class SwanReport:
    """Conductor plus refinement, tagged with the computing method."""

    sw: int
    rsw: LogDifferential | None
    method: str
    case_id: str | None = None

    def to_record(self):
        return {"sw": self.sw,
                "rsw": None if self.rsw is None else self.rsw.to_record(),
                "method": self.method,
                "case": self.case_id}


def swan_abelian(d):
    """The abelian Swan conductor of a reduced datum."""
    c = classify(d)
    if c.case == "unramified":
        return 0
    return c.break_exponent * (d.p if c.case == "ferocious_e_1" else 1)


def refined_swan_abelian(d):
    """The refined conductor class of a reduced datum with positive conductor."""
    r = swan_abelian(d)
    if r == 0:
        raise ContractError("the refined conductor is defined only for sw > 0")
    a = d.f.coeff(-r)
    res = d.field.residue
    dvar = tuple(a.derivative(v) for v in res.variables)
    dlogpi = res.from_int(-r) * a
    return LogDifferential(r, res, dvar, dlogpi)


def abelian_report(d, case_id=None):
    sw = swan_abelian(d)
    rsw = refined_swan_abelian(d) if sw > 0 else None
    return SwanReport(sw, rsw, "abelian", case_id)
