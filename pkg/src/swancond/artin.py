"""Artin-Schreier extension data and its reduction and classification.

A degree-p Artin-Schreier extension of an equal-characteristic local field
K is L = K(alpha) with alpha^p - alpha = f; replacing f by f + (w^p - w)
for any w in K gives the same extension (a twist along the Artin-Schreier
operator w -> w^p - w).

``reduce_datum`` brings f into the normal form in which every pole term
a_n * pi^(-n) with n > 0 divisible by p has a_n not a p-th power in the
residue field: whenever a_n = b^p at such an exponent, the term is
replaced by b * pi^(-n/p), which is a twist by w = b * pi^(-n/p).  Terms
are processed from the most negative exponent upward, restarting after
each rewrite; each rewrite strictly raises the minimum exponent, so the
loop terminates.  The accumulated witness w with
f_out = f_in - (w^p - w) is returned and can be checked exactly.

``classify`` reads the ramification of L/K off the reduced form:

* f integral               -> unramified (possibly trivial), e = 1;
* -ord f = n, p does not divide n -> totally ramified, e = p, E = F;
* -ord f = m*p, leading coefficient not a p-th power -> e = 1 and the
  residue extension E = F(leading^(1/p)) is purely inseparable of degree
  p (the ferocious case); lower-order terms are immaterial.

Integral tails are retained in the datum but do not contribute to
conductors; they matter only for the residue extension in the unramified
case, which the classifier does not compute.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError, PrecisionError
from .residue import ResidueField
from .series import INF, LaurentSeries, LocalField

CASE_UNRAMIFIED = "unramified"
CASE_RAMIFIED = "ramified_e_p"
CASE_FEROCIOUS = "ferocious_e_1"


@dataclass(frozen=True)
class ASData:
    """Defining datum of L = K(alpha), alpha^p - alpha = f."""

    f: LaurentSeries
    reduced: bool = False

    @property
    def field(self):
        return self.f.field

    @property
    def p(self):
        return self.f.field.p

    def to_record(self):
        return {"f": self.f.to_record(), "reduced": self.reduced}

    @staticmethod
    def from_record(field, record):
        return ASData(LaurentSeries.from_record(field, record["f"]),
                      bool(record.get("reduced", False)))


@dataclass(frozen=True)
class ASClassification:
    """Ramification data of a degree-p Artin-Schreier extension.

    ``break_exponent`` is n (the pole order) in the ramified case and m
    (the pole order divided by p) in the ferocious case.
    """

    case: str
    e: int
    residue_ext: ResidueField
    break_exponent: int = 0


def twist(d, w):
    """The datum f + (w^p - w); same extension, reduced flag cleared."""
    if w.field != d.field:
        raise ContractError("twist element lives over a different field")
    return ASData(d.f + (w ** d.p - w), reduced=False)


def reduce_datum(d):
    """Normal form of the datum plus the exact twist witness.

    Returns ``(reduced_data, w)`` with ``reduced_data.f == d.f - (w^p - w)``.
    Stored pole terms must be exact, i.e. below the precision bound, which
    the series representation guarantees; a rewrite whose target exponent
    lies in the unknown region raises ``PrecisionError``.
    """
    p = d.p
    field = d.field
    terms = dict(d.f.terms)
    precision = d.f.precision
    witness = LaurentSeries.zero(field)
    final = set()
    while True:
        pending = [e for e in terms if e < 0 and e not in final]
        if not pending:
            break
        e = min(pending)
        n = -e
        a = terms[e]
        if n % p != 0 or not a.is_pth_power():
            final.add(e)
            continue
        target = -(n // p)
        if target >= precision:
            raise PrecisionError(
                f"rewrite of the pole at {e} lands in the unknown region")
        root = a.pth_root()
        witness = witness + LaurentSeries.monomial(field, target, root)
        del terms[e]
        merged = terms.get(target)
        merged = root if merged is None else merged + root
        if merged.is_zero():
            terms.pop(target, None)
        else:
            terms[target] = merged
    return ASData(LaurentSeries(field, terms, precision), reduced=True), witness


def classify(d):
    """Lemma-style case analysis of a reduced datum."""
    if not d.reduced:
        raise ContractError("classification requires a reduced datum")
    f = d.f
    p = d.p
    res = d.field.residue
    negatives = [e for e in f.terms if e < 0]
    if not negatives:
        if f.precision < 0:
            raise PrecisionError(
                "integrality of f is not determined at this precision")
        return ASClassification(CASE_UNRAMIFIED, 1, res, 0)
    n = -min(negatives)
    a = f.terms[-n]
    if n % p != 0:
        return ASClassification(CASE_RAMIFIED, p, res, n)
    if a.is_pth_power():
        raise ContractError("datum is flagged reduced but is not in normal form")
    ext = res.proot_field(p) if res.nvars == 1 else res
    return ASClassification(CASE_FEROCIOUS, 1, ext, n // p)
