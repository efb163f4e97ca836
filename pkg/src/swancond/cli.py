"""Command-line interface.

Subcommands mirror the library layout:

* ``compute`` - one case file, both conductors (the geometric side is
  computed directly in the ferocious case and reported as null for
  totally ramified cases, which are handled by the ``epp`` reduction);
* ``epp``     - ramification-killing plan and certificate for a case file;
* ``corpus``  - generate a stratified corpus and run verification suites;
* ``kummer``  - classify a degree-p Kummer descriptor file.

Exit codes: 0 when everything passes, 1 when any verification or internal
invariant fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import refined_swan_abelian, swan_abelian
from .artin import CASE_FEROCIOUS, classify, reduce_datum
from .basechange import KummerDescriptor, classify_kummer
from .epp import epp_reduce
from .errors import InputError, InvariantViolation, SwancondError
from .geometry import geometric_report
from .harness import (SUITES, CaseDescriptor, CorpusConfig, emit_report,
                      run_corpus)


def _load_case(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}") from err
    return CaseDescriptor.from_json(text)


def _cmd_compute(args):
    case = _load_case(args.input)
    d, _ = reduce_datum(case.build())
    cls = classify(d)
    sw_ab = swan_abelian(d)
    out = {
        "case": case.case_id,
        "classification": {"case": cls.case, "e": cls.e,
                           "break": cls.break_exponent},
        "sw_ab": sw_ab,
        "rsw_ab": refined_swan_abelian(d).to_record() if sw_ab else None,
        "sw_geo": None,
        "rsw_geo": None,
    }
    if cls.case == CASE_FEROCIOUS:
        geo = geometric_report(d)
        out["sw_geo"] = geo.r
        out["rsw_geo"] = geo.rsw.to_record()
        out["geo_decomposition"] = {"d_term": geo.d_term, "s": geo.s,
                                    "leading_unit": str(geo.leading_unit)}
    elif cls.case == "unramified":
        out["sw_geo"] = 0
    else:
        out["note"] = ("totally ramified case: the geometric conductor is "
                       "reached through the epp reduction")
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def _cmd_epp(args):
    case = _load_case(args.input)
    d, _ = reduce_datum(case.build())
    plan, cert = epp_reduce(d)
    out = {"case": case.case_id, "plan": plan.to_record(),
           "certificate": cert.to_record()}
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def _cmd_corpus(args):
    suites = tuple(args.suite.split(",")) if args.suite else SUITES
    strata = tuple(args.strata.split(",")) if args.strata else None
    kwargs = dict(p=args.p, q=args.q, count=args.count, seed=args.seed,
                  m_max=args.m_max)
    if strata:
        kwargs["strata"] = strata
    config = CorpusConfig(**kwargs)
    records, coverage, required = run_corpus(config, suites)
    text, code = emit_report(records, coverage, required)
    sys.stdout.write(text)
    if args.report_file:
        with open(args.report_file, "w", encoding="utf-8") as fh:
            for rec in sorted(records, key=lambda r: (r.suite, r.case_id)):
                fh.write(json.dumps(rec.to_record(), sort_keys=True,
                                    separators=(",", ":")) + "\n")
    return code


def _cmd_kummer(args):
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            record = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise InputError(f"cannot read descriptor: {err}") from err
    try:
        kd = KummerDescriptor(
            p=int(record["p"]), e_k=int(record["e_k"]),
            contains_zeta_p=bool(record.get("contains_zeta_p", True)),
            ord_a=int(record.get("ord_a", 0)),
            shape=str(record["shape"]),
            n=record.get("n"),
            residue_is_pth_power=record.get("residue_is_pth_power"),
        )
    except (KeyError, TypeError, ValueError) as err:
        raise InputError(f"malformed descriptor: {err}") from err
    result = classify_kummer(kd)
    out = {"descriptor": kd.to_record(),
           "classification": {"case": result.case, "e": result.e,
                              "residue_extension": result.residue_extension,
                              "conclusive": result.conclusive}}
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="swancond",
        description="Exact Swan-conductor computations for degree-p "
                    "Artin-Schreier extensions with imperfect residue fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="both conductors of one case")
    p_compute.add_argument("--input", required=True, help="case JSON file")
    p_compute.set_defaults(func=_cmd_compute)

    p_epp = sub.add_parser("epp", help="ramification-killing plan and certificate")
    p_epp.add_argument("--input", required=True, help="case JSON file")
    p_epp.set_defaults(func=_cmd_epp)

    p_corpus = sub.add_parser("corpus", help="generate and verify a corpus")
    p_corpus.add_argument("--seed", type=int, default=0)
    p_corpus.add_argument("--count", type=int, default=25)
    p_corpus.add_argument("--p", type=int, default=2)
    p_corpus.add_argument("--q", type=int, default=None)
    p_corpus.add_argument("--m-max", type=int, default=4, dest="m_max")
    p_corpus.add_argument("--suite", default=None,
                          help="comma-separated subset of: " + ",".join(SUITES))
    p_corpus.add_argument("--strata", default=None,
                          help="comma-separated strata to generate")
    p_corpus.add_argument("--report-file", default=None,
                          help="write structured JSON-lines records here")
    p_corpus.set_defaults(func=_cmd_corpus)

    p_kummer = sub.add_parser("kummer", help="classify a Kummer descriptor")
    p_kummer.add_argument("--input", required=True, help="descriptor JSON file")
    p_kummer.set_defaults(func=_cmd_kummer)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except InvariantViolation as err:
        print(f"invariant violation: {err}", file=sys.stderr)
        return 1
    except SwancondError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
