"""Ramification killing for degree-p Artin-Schreier data (Epp reduction).

Given a reduced datum f over K = F((pi)), the goal is an explicit base
change K -> K' with e(LK'/K') = 1.  Write the pole part of f as
sum a_n pi^(-n).  Split the support: S holds the exponents whose
coefficient is a constant (equivalently lies in the largest perfect
subfield of F), T the rest; for n in T write a_n = b_n^(p^r(n)) with b_n
not a p-th power and r(n) maximal.  Reducedness forces p not dividing n
on S and r(n) = 0 whenever p divides n.

* T empty: all pole coefficients are constants, so the pole part f_S lies
  in K itself; adjoining an Artin-Schreier root of f_S gives K' over which
  the remaining datum is integral, hence unramified, e = 1.
* T nonempty: adjoin pi' = pi^(1/p^m) for the minimal m = 1 + max r(n).
  Reduction over K' rewrites the transported terms to
  b_n pi'^(-n) (n in S) and b_n pi'^(-n p^(m - r(n))) (n in T).  Let
  n_S = max(S) (or 1 when S is empty) and n_T = max(n p^(m - r(n))); the
  two are never equal since p divides n_T but not n_S.
  - n_S < n_T: the leading term is already the purely-inseparable shape,
    so e = 1 over K' (one wild root step).
  - n_S > n_T: first adjoin the root of pi as above, then an
    Artin-Schreier root of the constant-coefficient part f_S over K'; the
    residue field of that step stays F and, after transporting and
    reducing the rest, the leading term again has the purely-inseparable
    shape, so e = 1.

The dominant T-term is always unique (``unique_dominant`` checks it and
the harness additionally searches randomly for counterexamples): if two
exponents tied, the larger would be p times a power of the smaller, hence
divisible by p, forcing its depth r to vanish and contradicting the tie.

Every plan carries a machine-checked certificate: the transported datum
is reduced and classified, and the certificate is accepted only if the
final ramification index is 1; a failure raises ``InvariantViolation``
rather than returning silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .artin import (ASData, ASClassification, CASE_FEROCIOUS, CASE_RAMIFIED,
                    CASE_UNRAMIFIED, classify, reduce_datum)
from .basechange import make_base_change
from .errors import ContractError, InvariantViolation
from .series import INF, LaurentSeries, apply_base_change

BRANCH_NONE = "already_unramified"
BRANCH_AS_ROOT = "as_root_only"
BRANCH_WILD = "wild_root"
BRANCH_WILD_AS = "wild_root_then_as_root"


@dataclass(frozen=True)
class EppPlan:
    """The data of a ramification-killing base change."""

    branch: str
    perfect_support: tuple      # exponents n with constant coefficient
    moving_support: tuple       # the rest, with their p-power depths
    depth: tuple                # pairs (n, r(n)) aligned with moving_support
    m: int                      # wild-root exponent, 0 when unused
    steps: tuple                # BaseChangeDesc chain, source to target

    def depth_map(self):
        return dict(self.depth)

    def to_record(self):
        return {
            "branch": self.branch,
            "perfect_support": list(self.perfect_support),
            "moving_support": list(self.moving_support),
            "depth": [list(d) for d in self.depth],
            "m": self.m,
            "steps": [s.to_record() for s in self.steps],
        }


@dataclass(frozen=True)
class EppCertificate:
    """Machine-checkable witnesses for the plan's claims."""

    dominant_n: int | None            # the unique maximizer in T, if T is used
    post_classification: ASClassification
    transported: ASData
    residue_of_second_step: object = None   # ResidueField for the two-step branch

    def to_record(self):
        post = self.post_classification
        return {
            "dominant_n": self.dominant_n,
            "post_case": post.case,
            "post_e": post.e,
            "post_break": post.break_exponent,
            "transported_f": self.transported.f.to_record(),
        }


def split_support(d):
    """Partition the pole support into constant and moving parts.

    Returns ``(S, T, depth)`` where S and T are sorted tuples of pole
    orders, and depth maps n in T to the maximal r with a_n a p^r-th
    power.
    """
    if not d.reduced:
        raise ContractError("support splitting requires a reduced datum")
    S, T, depth = [], [], {}
    for e, a in d.f.terms.items():
        if e >= 0:
            continue
        n = -e
        if a.in_perfect_subfield():
            S.append(n)
        else:
            r = 0
            b = a
            while b.is_pth_power():
                b = b.pth_root()
                r += 1
            T.append(n)
            depth[n] = r
    return tuple(sorted(S)), tuple(sorted(T)), depth


def unique_dominant(T, depth, m, p):
    """Whether max over T of n * p^(m - r(n)) is attained exactly once."""
    scaled = [n * p ** (m - depth[n]) for n in T]
    top = max(scaled)
    return scaled.count(top) == 1, T[scaled.index(top)], top


def epp_reduce(d):
    """Build and certify a ramification-killing plan for a reduced datum.

    The certificate is computed by actually transporting f along the plan,
    reducing and classifying; e = 1 is asserted, never assumed.
    """
    if not d.reduced:
        raise ContractError("the reduction starts from a reduced datum")
    p = d.p
    cls = classify(d)
    if cls.case == CASE_UNRAMIFIED:
        plan = EppPlan(BRANCH_NONE, (), (), (), 0, ())
        return plan, EppCertificate(None, cls, d)
    S, T, depth = split_support(d)

    if not T:
        # the whole pole part has constant coefficients and sits inside K
        f_S = LaurentSeries(d.field, {-n: d.f.terms[-n] for n in S}, INF)
        step = make_base_change("adjoin_as", d.field, adjoined=f_S)
        plan = EppPlan(BRANCH_AS_ROOT, S, (), (), 0, (step,))
        remainder = d.f - f_S
        transported = apply_base_change(remainder, step)
        post_data, _ = reduce_datum(ASData(transported))
        post = classify(post_data)
        _assert_killed(post, plan)
        return plan, EppCertificate(None, post, post_data)

    m = 1 + max(depth.values())
    wild = make_base_change("wild_root", d.field, m=m)
    moved = apply_base_change(d.f, wild)
    d1, _ = reduce_datum(ASData(moved))
    unique, dom_n, n_T = unique_dominant(T, depth, m, p)
    if not unique:
        raise InvariantViolation(
            f"dominant exponent is not unique for T={T}, depth={depth}, m={m}")
    n_S = max(S) if S else 1

    if n_S < n_T:
        plan = EppPlan(BRANCH_WILD, S, T, tuple(sorted(depth.items())), m, (wild,))
        post = classify(d1)
        _assert_killed(post, plan)
        if post.case != CASE_FEROCIOUS or post.break_exponent * p != n_T:
            raise InvariantViolation(
                f"transported leading term {post} does not match n_T={n_T}")
        return plan, EppCertificate(dom_n, post, d1)

    # n_S > n_T: adjoin an Artin-Schreier root of the constant part over K'
    f_S1 = LaurentSeries(d1.field, {-n: d1.f.terms[-n] for n in S}, INF)
    side = classify(ASData(f_S1, reduced=True))
    if side.case != CASE_RAMIFIED or side.residue_ext != d.field.residue:
        raise InvariantViolation(
            "the adjoined-root step does not have e = p with residue field F")
    as_step = make_base_change("adjoin_as", d1.field, adjoined=f_S1)
    plan = EppPlan(BRANCH_WILD_AS, S, T, tuple(sorted(depth.items())), m,
                   (wild, as_step))
    remainder = d1.f - f_S1
    transported = apply_base_change(remainder, as_step)
    post_data, _ = reduce_datum(ASData(transported))
    post = classify(post_data)
    _assert_killed(post, plan)
    if post.case != CASE_FEROCIOUS or post.break_exponent != n_T:
        raise InvariantViolation(
            f"two-step transported leading term {post} does not match n_T={n_T}")
    return plan, EppCertificate(dom_n, post, post_data,
                                residue_of_second_step=d.field.residue)


def _assert_killed(post, plan):
    if post.e != 1:
        raise InvariantViolation(
            f"certificate failure: plan {plan.branch} left e = {post.e}")
