"""Exact Swan-conductor computations for degree-p Artin-Schreier extensions
of equal-characteristic local fields with imperfect residue fields.

The library computes the abelian Swan conductor and its refinement from
reduced Artin-Schreier data, the geometric conductor from a monogenic
presentation in the e = 1 purely-inseparable case, the ramification-killing
base change that reduces the totally ramified case to it, and runs exact
differential tests between the two pipelines.

Everything is immutable after construction and all functions are pure, so
concurrent reads are safe; randomized pieces take explicit seeds.
"""

from .abelian import (LogDifferential, SwanReport, abelian_report,
                      refined_swan_abelian, swan_abelian)
from .artin import (ASClassification, ASData, CASE_FEROCIOUS, CASE_RAMIFIED,
                    CASE_UNRAMIFIED, classify, reduce_datum, twist)
from .basechange import (BaseChangeDesc, KummerClassification, KummerDescriptor,
                         OmegaLogMap, classify_kummer, make_base_change,
                         omega_log_map, transport_log_class)
from .epp import (EppCertificate, EppPlan, epp_reduce, split_support,
                  unique_dominant)
from .errors import (ArithmeticDomainError, ContractError, InputError,
                     InvariantViolation, PrecisionError, SwancondError)
from .extension import (ExtElement, GeneratorData, canonical_generator,
                        charpoly, galois_sigma, norm, ord_ext, random_generator,
                        residue_ext)
from .geometry import (GeometricReport, conductor_decomposition,
                       geometric_report, swan_geometric)
from .harness import (CaseDescriptor, CorpusConfig, VerificationRecord,
                      emit_report, generate_corpus, generate_epp_corpus,
                      run_corpus)
from .residue import (Differential, FiniteField, RatFunc, ResidueField,
                      differential_of, parse_ratfunc, ratfunc_str)
from .series import (INF, LaurentSeries, LocalField, NewtonPolygon,
                     apply_base_change, newton_polygon)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
