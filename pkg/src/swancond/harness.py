"""Corpus generation, differential-testing suites, and report assembly.

The harness generates stratified corpora of Artin-Schreier data (the
purely-inseparable "ferocious" strata with leading terms u*pi^(-mp) and
c*u^j*pi^(-mp), the totally ramified strata pi^(-n) and c*pi^(-n) with n
prime to p, and unramified integral data, all with random sub-leading and
integral tails), then runs verification suites over them:

* ``equality``      - the two conductor pipelines agree exactly:
                      sw_geo = sw_ab and rsw_geo = rsw_ab;
* ``twist``         - both conductors and both refined classes are
                      invariant under f -> f + (w^p - w);
* ``generator``     - the geometric side is independent of the choice of
                      monogenic generator;
* ``epp``           - the ramification-killing plan certifies e = 1 on
                      every branch and the dominant-term uniqueness never
                      fails, including a randomized counterexample search;
* ``scaling``       - conductors scale by t under tame roots with the
                      refined class transported through the Omega^1(log)
                      matrix, are fixed under unramified changes, and
                      satisfy sw' <= p*sw under wild roots with strictness
                      exactly when the transported class vanishes;
* ``oracle``        - the case classifier's ramification index equals the
                      lcm of the Newton-polygon slope denominators of
                      T^p - T - f.

All comparisons are exact; there are no tolerances.  Corpus generation
and every randomized suite are seeded, and reports contain no timings, so
a run is byte-reproducible from its configuration.  Suites must not pass
vacuously: per-stratum (or per-branch) case counts are reported and an
empty required stratum fails the run.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .abelian import refined_swan_abelian, swan_abelian
from .artin import (ASData, CASE_FEROCIOUS, CASE_RAMIFIED, CASE_UNRAMIFIED,
                    classify, reduce_datum, twist)
from .basechange import make_base_change, transport_log_class
from .epp import (BRANCH_AS_ROOT, BRANCH_WILD, BRANCH_WILD_AS, epp_reduce,
                  unique_dominant)
from .errors import ContractError, InputError, SwancondError
from .extension import canonical_generator, random_generator
from .geometry import geometric_report
from .residue import FiniteField, ResidueField
from .series import INF, LaurentSeries, LocalField, newton_polygon

REPORT_VERSION = "swancond-report v1"

STRATA = ("ferocious_u", "ferocious_power", "ramified_plain", "ramified_unit",
          "unramified")

SUITES = ("equality", "twist", "generator", "epp", "scaling", "oracle")


# ---------------------------------------------------------------------------
# Case descriptors.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseDescriptor:
    """A single corpus case; round-trips bit-exactly through JSON."""

    case_id: str
    p: int
    q: int
    variables: tuple
    f: tuple                  # pairs (exponent, coefficient string)
    precision: int | None
    seed: int | None = None
    stratum: str = ""

    def to_json(self):
        record = {
            "id": self.case_id,
            "p": self.p,
            "q": self.q,
            "variables": list(self.variables),
            "f": [[e, c] for e, c in self.f],
            "precision": self.precision,
            "seed": self.seed,
            "stratum": self.stratum,
        }
        return json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"

    @staticmethod
    def from_json(text):
        try:
            record = json.loads(text)
        except json.JSONDecodeError as err:
            raise InputError(f"not valid JSON: {err}") from err
        return CaseDescriptor.from_record(record)

    @staticmethod
    def from_record(record):
        try:
            p = int(record["p"])
            q = int(record["q"])
            f = tuple((int(e), str(c)) for e, c in record["f"])
        except (KeyError, TypeError, ValueError) as err:
            raise InputError(f"malformed case record: {err}") from err
        case = CaseDescriptor(
            case_id=str(record.get("id", "case")),
            p=p, q=q,
            variables=tuple(record.get("variables", ["u"])),
            f=f,
            precision=record.get("precision"),
            seed=record.get("seed"),
            stratum=str(record.get("stratum", "")),
        )
        case.local_field()  # validates p, q
        return case

    def local_field(self):
        if self.q == self.p:
            a = 1
        elif self.q == self.p ** 2:
            a = 2
        else:
            raise InputError(f"q = {self.q} is not p or p^2 for p = {self.p}")
        res = ResidueField(FiniteField(self.p, a), self.variables)
        return LocalField(res, "pi")

    def build(self):
        """Parse into an (unreduced) Artin-Schreier datum."""
        field = self.local_field()
        res = field.residue
        terms = {}
        for e, cstr in self.f:
            c = res.parse(cstr)
            if not c.is_zero():
                terms[e] = terms[e] + c if e in terms else c
        prec = INF if self.precision is None else self.precision
        return ASData(LaurentSeries(field, terms, prec))


@dataclass(frozen=True)
class CorpusConfig:
    p: int = 2
    q: int | None = None
    count: int = 20
    seed: int = 0
    m_max: int = 4
    max_tail_terms: int = 4
    strata: tuple = STRATA

    def validate(self):
        if self.p not in (2, 3, 5):
            raise InputError(f"p must be a prime in {{2, 3, 5}}, got {self.p}")
        q = self.q if self.q is not None else self.p
        if q not in (self.p, self.p ** 2):
            raise InputError(f"q must be p or p^2, got {q}")
        if self.count < 0:
            raise InputError("count must be nonnegative")
        if self.m_max < 1 or self.m_max > 4:
            raise InputError("m_max must lie in 1..4")
        for s in self.strata:
            if s not in STRATA:
                raise InputError(f"unknown stratum {s!r}")
        return q


def _random_poly_str(rng, res, max_deg=2, nonzero=False):
    out = res.zero()
    u = res.gen()
    for _ in range(rng.randint(0 if not nonzero else 1, 3)):
        c = rng.randrange(1, res.constants.q)
        e = rng.randint(0, max_deg)
        out = out + res.constant(c) * u ** e
    if nonzero and out.is_zero():
        out = res.one()
    return out


def _nonconstant_coeff(rng, res):
    while True:
        x = _random_poly_str(rng, res, max_deg=3, nonzero=True)
        if not x.is_pth_power():
            return x


def generate_corpus(config):
    """Deterministic stratified corpus generation."""
    q = config.validate()
    if config.count == 0:
        return []
    a = 1 if q == config.p else 2
    res = ResidueField(FiniteField(config.p, a))
    rng = random.Random(config.seed)
    p = config.p
    cases = []
    for i in range(config.count):
        stratum = config.strata[i % len(config.strata)]
        u = res.gen()
        terms = {}
        if stratum == "ferocious_u":
            m = rng.randint(1, config.m_max)
            lead = m * p
            terms[-lead] = u
        elif stratum == "ferocious_power":
            m = rng.randint(1, config.m_max)
            lead = m * p
            j = rng.choice([j for j in range(1, 2 * p + 2) if j % p])
            c = rng.randrange(1, res.constants.q)
            terms[-lead] = res.constant(c) * u ** j
        elif stratum == "ramified_plain":
            lead = rng.choice([n for n in range(1, config.m_max * p + 2) if n % p])
            terms[-lead] = res.one()
        elif stratum == "ramified_unit":
            lead = rng.choice([n for n in range(1, config.m_max * p + 2) if n % p])
            c = rng.randrange(1, res.constants.q)
            terms[-lead] = res.constant(c)
        else:
            lead = 0
        for _ in range(rng.randint(0, config.max_tail_terms)):
            if lead:
                e = rng.randint(-lead + 1, 3)
            else:
                e = rng.randint(0, 5)
            coeff = _random_poly_str(rng, res, max_deg=2)
            if coeff.is_zero() or e in terms:
                continue
            terms[e] = coeff
        precision = lead + p * lead + 16
        case_id = f"p{p}-q{q}-{stratum}-{i:04d}"
        cases.append(CaseDescriptor(
            case_id=case_id, p=p, q=q, variables=("u",),
            f=tuple((e, str(terms[e])) for e in sorted(terms)),
            precision=precision, seed=config.seed, stratum=stratum))
    return cases


# ---------------------------------------------------------------------------
# Verification records and suites.
# ---------------------------------------------------------------------------


@dataclass
class VerificationRecord:
    case_id: str
    suite: str
    passed: bool
    sw_ab: int | None = None
    sw_geo: int | None = None
    rsw_ab: str = ""
    rsw_geo: str = ""
    detail: str = ""
    elapsed: float = 0.0

    def tsv_line(self):
        verdict = "PASS" if self.passed else "FAIL"
        sw_ab = "-" if self.sw_ab is None else str(self.sw_ab)
        sw_geo = "-" if self.sw_geo is None else str(self.sw_geo)
        return "\t".join([self.suite, self.case_id, verdict, sw_ab, sw_geo,
                          self.rsw_ab or "-", self.rsw_geo or "-",
                          self.detail or "-"])

    def to_record(self):
        return {"case": self.case_id, "suite": self.suite, "passed": self.passed,
                "sw_ab": self.sw_ab, "sw_geo": self.sw_geo,
                "rsw_ab": self.rsw_ab, "rsw_geo": self.rsw_geo,
                "detail": self.detail}


def _guarded(suite, case_id):
    """Decorator turning library errors into failing records with diagnostics."""
    def wrap(fn):
        def run(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except SwancondError as err:
                return VerificationRecord(
                    case_id, suite, False,
                    detail=f"{type(err).__name__}: {err}")
        return run
    return wrap


def verify_equality(case):
    """Both conductor pipelines on one case; exact agreement required."""
    @_guarded("equality", case.case_id)
    def run():
        d, _ = reduce_datum(case.build())
        cls = classify(d)
        if cls.case == CASE_RAMIFIED:
            raise ContractError(
                "equality compares the pipelines in the ferocious case; "
                "ramified cases are routed through the epp suite")
        sw_ab = swan_abelian(d)
        if cls.case == CASE_UNRAMIFIED:
            return VerificationRecord(case.case_id, "equality",
                                      passed=(sw_ab == 0), sw_ab=sw_ab, sw_geo=0,
                                      detail="unramified: both conductors 0")
        rsw_ab = refined_swan_abelian(d)
        geo = geometric_report(d)
        ok = (sw_ab == geo.r) and (rsw_ab == geo.rsw)
        return VerificationRecord(case.case_id, "equality", ok,
                                  sw_ab=sw_ab, sw_geo=geo.r,
                                  rsw_ab=str(rsw_ab), rsw_geo=str(geo.rsw),
                                  detail="" if ok else "conductor mismatch")
    return run()


def verify_twist(case, w_seed=0):
    """Invariance of conductors and refined classes under f -> f + (w^p - w)."""
    @_guarded("twist", case.case_id)
    def run():
        d0 = case.build()
        d, _ = reduce_datum(d0)
        rng = random.Random((case.seed or 0) ^ w_seed ^ 0x5EED)
        field = d.field
        res = field.residue
        w_terms = {}
        for _ in range(rng.randint(1, 3)):
            e = rng.randint(-4, 2)
            c = _random_poly_str(rng, res, max_deg=2)
            if not c.is_zero():
                w_terms[e] = c
        w = LaurentSeries(field, w_terms, INF)
        dt, _ = reduce_datum(twist(d0, w))
        sw1, sw2 = swan_abelian(d), swan_abelian(dt)
        ok = sw1 == sw2
        detail = ""
        rsw1 = rsw2 = ""
        if ok and sw1 > 0:
            r1, r2 = refined_swan_abelian(d), refined_swan_abelian(dt)
            ok = r1 == r2
            rsw1, rsw2 = str(r1), str(r2)
            if ok and classify(d).case == CASE_FEROCIOUS:
                g1, g2 = geometric_report(d), geometric_report(dt)
                ok = g1.r == g2.r and g1.rsw == g2.rsw
                detail = "" if ok else "geometric side not twist-invariant"
        if not ok and not detail:
            detail = f"twist changed the conductor data (w = {w})"
        return VerificationRecord(case.case_id, "twist", ok, sw_ab=sw1,
                                  rsw_ab=rsw1, rsw_geo=rsw2, detail=detail)
    return run()


def verify_generator_invariance(case, n_generators=10):
    """Identical (r, rsw) for the canonical and seeded random generators."""
    @_guarded("generator", case.case_id)
    def run():
        d, _ = reduce_datum(case.build())
        cls = classify(d)
        if cls.case != CASE_FEROCIOUS:
            raise ContractError("generator invariance applies to ferocious cases")
        base = geometric_report(d)
        for k in range(n_generators):
            gen = random_generator(d, seed=(case.seed or 0) * 1009 + k)
            rep = geometric_report(d, gen)
            if rep.r != base.r or rep.rsw != base.rsw:
                return VerificationRecord(
                    case.case_id, "generator", False, sw_geo=base.r,
                    rsw_geo=str(base.rsw),
                    detail=f"generator seed {k} gave r={rep.r}, rsw={rep.rsw}")
        return VerificationRecord(case.case_id, "generator", True,
                                  sw_geo=base.r, rsw_geo=str(base.rsw),
                                  detail=f"{n_generators} generators agree")
    return run()


def verify_epp(case, expected_branch=None):
    """Certificate e = 1 plus dominant-term uniqueness on one case."""
    @_guarded("epp", case.case_id)
    def run():
        d, _ = reduce_datum(case.build())
        cls = classify(d)
        if cls.case == CASE_UNRAMIFIED:
            raise ContractError("the ramification-killing suite skips unramified cases")
        plan, cert = epp_reduce(d)
        ok = cert.post_classification.e == 1
        if ok and plan.moving_support:
            unique, _, _ = unique_dominant(plan.moving_support, plan.depth_map(),
                                           plan.m, d.p)
            ok = unique
        detail = f"branch={plan.branch}"
        if expected_branch is not None and plan.branch != expected_branch:
            ok = False
            detail = f"expected branch {expected_branch}, got {plan.branch}"
        return VerificationRecord(case.case_id, "epp", ok, detail=detail)
    return run()


def verify_scaling(case, bc_kind, param=None):
    """Conductor behavior under one base change of the given kind."""
    @_guarded("scaling", case.case_id)
    def run():
        d, _ = reduce_datum(case.build())
        sw = swan_abelian(d)
        if sw == 0:
            raise ContractError("scaling checks need a positive conductor")
        rsw = refined_swan_abelian(d)
        p = d.p
        if bc_kind == "tame_root":
            bc = make_base_change("tame_root", d.field, t=param)
        elif bc_kind == "wild_root":
            bc = make_base_change("wild_root", d.field, m=param or 1)
        elif bc_kind == "unramified":
            bc = make_base_change("unramified", d.field, constant_degree=param or 2)
        else:
            raise InputError(f"scaling does not cover kind {bc_kind!r}")
        from .series import apply_base_change
        moved, _ = reduce_datum(ASData(apply_base_change(d.f, bc)))
        sw2 = swan_abelian(moved)
        image = transport_log_class(rsw, bc)
        if bc_kind == "tame_root":
            ok = sw2 == param * sw
            rsw2 = refined_swan_abelian(moved)
            ok = ok and rsw2 == image
            detail = f"tame t={param}: {sw} -> {sw2}"
        elif bc_kind == "unramified":
            rsw2 = refined_swan_abelian(moved)
            ok = sw2 == sw and rsw2 == image
            detail = f"unramified: {sw} -> {sw2}"
        else:
            e = bc.e
            ok = sw2 <= e * sw
            strict = sw2 < e * sw
            ok = ok and (strict == image.is_zero())
            detail = (f"wild e={e}: {sw} -> {sw2}"
                      f" ({'strict' if strict else 'equality'},"
                      f" image {'zero' if image.is_zero() else 'nonzero'})")
        return VerificationRecord(case.case_id, "scaling", ok, sw_ab=sw,
                                  sw_geo=sw2, rsw_ab=str(rsw), detail=detail)
    return run()


def verify_oracle(case):
    """Classifier ramification index against the Newton-polygon oracle."""
    @_guarded("oracle", case.case_id)
    def run():
        d, _ = reduce_datum(case.build())
        cls = classify(d)
        field = d.field
        one = LaurentSeries.one(field)
        zero = LaurentSeries.zero(field)
        coeffs = [-d.f, -one] + [zero] * (d.p - 2) + [one]
        np_ = newton_polygon(coeffs)
        e_oracle = np_.slope_denominator_lcm()
        ok = e_oracle == cls.e
        return VerificationRecord(
            case.case_id, "oracle", ok,
            detail=f"classifier e={cls.e}, polygon lcm={e_oracle}, case={cls.case}")
    return run()


def search_dominant_tie(p, trials, seed):
    """Random search for a violation of dominant-term uniqueness.

    Samples valid reduced-support shapes (distinct pole orders, depth zero
    whenever p divides the order) and returns the first tie found, or None;
    the theory says None is the only possible outcome.
    """
    rng = random.Random(seed)
    for _ in range(trials):
        size = rng.randint(1, 5)
        T = rng.sample(range(1, 40), size)
        depth = {n: (0 if n % p == 0 else rng.randint(0, 3)) for n in T}
        m = 1 + max(depth.values()) + rng.randint(0, 2)
        unique, n, top = unique_dominant(tuple(T), depth, m, p)
        if not unique:
            return {"T": sorted(T), "depth": depth, "m": m, "top": top}
    return None


# ---------------------------------------------------------------------------
# Dedicated Epp-branch corpus.
# ---------------------------------------------------------------------------

EPP_BRANCH_STRATA = (BRANCH_AS_ROOT, BRANCH_WILD, BRANCH_WILD_AS)


def generate_epp_corpus(config):
    """Cases stratified by the intended ramification-killing branch.

    The Lemma-case strata do not guarantee that the two-step branch ever
    occurs, so the epp suite draws from this corpus instead: the stratum
    name of each case is the branch the plan must take.
    """
    q = config.validate()
    a = 1 if q == config.p else 2
    res = ResidueField(FiniteField(config.p, a))
    rng = random.Random(config.seed ^ 0xE99)
    p = config.p
    cases = []
    for i in range(config.count):
        branch = EPP_BRANCH_STRATA[i % len(EPP_BRANCH_STRATA)]
        terms = {}
        if branch == BRANCH_AS_ROOT:
            for _ in range(rng.randint(1, 3)):
                n = rng.choice([n for n in range(1, 8) if n % p])
                terms[-n] = res.constant(rng.randrange(1, res.constants.q))
        else:
            depth = {}
            for _ in range(rng.randint(1, 2)):
                n = rng.randint(1, 6)
                if n in depth:
                    continue
                r = 0 if n % p == 0 else rng.randint(0, 2)
                b = _nonconstant_coeff(rng, res)
                terms[-n] = b ** (p ** r)
                depth[n] = r
            m = 1 + max(depth.values())
            n_T = max(n * p ** (m - depth[n]) for n in depth)
            if branch == BRANCH_WILD_AS:
                n_S = n_T + 1 if (n_T + 1) % p else n_T + 2
                terms[-n_S] = res.constant(rng.randrange(1, res.constants.q))
        for _ in range(rng.randint(0, 2)):
            e = rng.randint(0, 3)
            coeff = _random_poly_str(rng, res, max_deg=2)
            if not coeff.is_zero() and e not in terms:
                terms[e] = coeff
        lead = -min(terms) if terms else 0
        precision = lead * (p ** 3 + 1) + 16
        case_id = f"p{p}-q{q}-{branch}-{i:04d}"
        cases.append(CaseDescriptor(
            case_id=case_id, p=p, q=q, variables=("u",),
            f=tuple((e, str(terms[e])) for e in sorted(terms)),
            precision=precision, seed=config.seed, stratum=branch))
    return cases


# ---------------------------------------------------------------------------
# Corpus runner and report.
# ---------------------------------------------------------------------------

_TAME_DEGREES = (3, 5, 7)


def required_coverage(config, suites):
    """The strata each requested suite must exercise for a non-vacuous run."""
    q = config.q if config.q is not None else config.p
    strata = config.strata
    ferocious = tuple(s for s in strata if s.startswith("ferocious"))
    nonintegral = tuple(s for s in strata if s != "unramified")
    req = {}
    if "equality" in suites:
        req["equality"] = ferocious or ("ferocious_u",)
    if "twist" in suites:
        req["twist"] = strata
    if "generator" in suites:
        req["generator"] = ferocious or ("ferocious_u",)
    if "epp" in suites:
        req["epp"] = EPP_BRANCH_STRATA
    if "scaling" in suites:
        keys = ("tame", "wild") + (("unramified",) if q == config.p else ())
        req["scaling"] = keys if nonintegral else keys + ("positive-conductor",)
    if "oracle" in suites:
        classes = set()
        for s in strata:
            if s.startswith("ferocious"):
                classes.add(CASE_FEROCIOUS)
            elif s.startswith("ramified"):
                classes.add(CASE_RAMIFIED)
            else:
                classes.add(CASE_UNRAMIFIED)
        req["oracle"] = tuple(sorted(classes)) or (CASE_FEROCIOUS,)
    return req


def run_corpus(config, suites=SUITES):
    """Generate corpora and run the requested suites over them.

    Returns ``(records, coverage, required)``: coverage counts the cases
    each suite actually exercised, keyed by stratum or branch, and
    required names the keys that must be nonzero for the run to count.
    """
    for s in suites:
        if s not in SUITES:
            raise InputError(f"unknown suite {s!r}")
    cases = generate_corpus(config)
    records = []
    coverage = {s: {} for s in suites}

    def count(suite, key):
        coverage[suite][key] = coverage[suite].get(key, 0) + 1

    for case in cases:
        stratum = case.stratum
        ferocious = stratum.startswith("ferocious")
        ramified = stratum.startswith("ramified")
        if "equality" in suites and not ramified:
            records.append(verify_equality(case))
            count("equality", stratum)
        if "twist" in suites:
            records.append(verify_twist(case))
            count("twist", stratum)
        if "generator" in suites and ferocious:
            records.append(verify_generator_invariance(case))
            count("generator", stratum)
        if "scaling" in suites and stratum != "unramified":
            for t in _TAME_DEGREES:
                if t % config.p:
                    records.append(verify_scaling(case, "tame_root", t))
                    count("scaling", "tame")
            records.append(verify_scaling(case, "wild_root", 1))
            count("scaling", "wild")
            if (config.q or config.p) == config.p:
                records.append(verify_scaling(case, "unramified", 2))
                count("scaling", "unramified")
        if "oracle" in suites:
            rec = verify_oracle(case)
            records.append(rec)
            for key in (CASE_FEROCIOUS, CASE_RAMIFIED, CASE_UNRAMIFIED):
                if f"case={key}" in rec.detail:
                    count("oracle", key)
    if "epp" in suites:
        for case in generate_epp_corpus(config):
            records.append(verify_epp(case, expected_branch=case.stratum))
            count("epp", case.stratum)
        tie = search_dominant_tie(config.p, trials=1000, seed=config.seed)
        records.append(VerificationRecord(
            f"p{config.p}-dominant-tie-search", "epp", tie is None,
            detail="1000-trial search found no uniqueness violation" if tie is None
            else f"tie found: {tie}"))
    return records, coverage, required_coverage(config, suites)


def emit_report(records, coverage, required):
    """Assemble the deterministic text report and the process exit code."""
    lines = [f"# {REPORT_VERSION}"]
    failures = sum(1 for r in records if not r.passed)
    vacuous = []
    for suite in sorted(coverage):
        seen = coverage[suite]
        for key in sorted(seen):
            lines.append(f"# coverage\t{suite}\t{key}\t{seen[key]}")
        for key in required.get(suite, ()):
            if not seen.get(key):
                vacuous.append((suite, key))
    for suite, key in vacuous:
        lines.append(f"# VACUOUS\t{suite}\t{key}\tno cases in required stratum")
    lines.append("suite\tcase\tverdict\tsw_ab\tsw_geo\trsw_ab\trsw_geo\tdetail")
    for rec in sorted(records, key=lambda r: (r.suite, r.case_id)):
        lines.append(rec.tsv_line())
    lines.append(f"# SUMMARY\tcases={len(records)}\tpassed="
                 f"{len(records) - failures}\tfailed={failures}"
                 f"\tvacuous={len(vacuous)}")
    exit_code = 0 if failures == 0 and not vacuous else 1
    return "\n".join(lines) + "\n", exit_code
