"""Exact computations on odometer groups at finite truncation.

The library realizes, level by level, the harmonic analysis of profinite
odometer groups: scales and supernatural numbers, the dual group of roots
of unity, non-archimedean length functions and their classification,
weighted Fourier norms with polynomially bounded exponentials, the
cohomological equation of the +1 shift, the free-basis calculus of integer
classes, and exact index pairings of finite graded models.
"""

from .cohomology import (Cocycle, apply_coboundary, cocycle_eval,
                         cohomology_class, skew_step, solve_coboundary)
from .dual import (IDENTITY, DualElement, enumerate_subgroup, eval_char,
                   level_of, make_root, scale_form)
from .errors import (AxiomViolation, BadFirstEntry, DivisibilityViolation,
                     DomainNotSubgroup, GammaOfZero, LevelMismatch,
                     LevelOverflow, NonIntegerValues, NonzeroMean,
                     NotAProjection, NotIncreasing, NotInGroup, NotRealValued,
                     OdolabError, OutOfRange, ScaleTooShallow,
                     SublevelNotSubgroup)
from .fredholm import (BlockLabel, FredholmModel, IndexResult, build_module,
                       commutator_tail_norm, dirac_spectrum, index_pairing,
                       pairing_operator, spectral_commutator_bound)
from .harmonic import (BINARY64, EXACT, FourierCoeffs, LevelFunction, exp_i,
                       fourier, functional_calculus, haar_integral,
                       inverse_fourier, rd_norm, split_at, sup_distance,
                       sup_norm)
from .ktheory import (basis_indicator, decompose, delta_to_e, e_to_delta,
                      indicator, is_projection, pair, recompose,
                      refine_indicator)
from .lengths import (AxiomReport, GrowthCertificate, GrowthParams, LengthSpec,
                      LengthTable, classify, count_bound_holds, d_of_r,
                      growth_certificate, lambda_eval, lambda_table, totient,
                      totient_sum_bound, verify_axioms)
from .odometer import (DigitVector, OdometerPoint, from_digits, gamma,
                       gamma_orbit, n_of, shift, to_digits)
from .rational import RationalComplex, format_rational, parse_rational
from .scales import (Scale, SupernaturalNumber, combine, divides, scale_lcm,
                     validate_scale)

__version__ = "0.1.0"
