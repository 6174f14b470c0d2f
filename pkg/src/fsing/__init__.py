"""Exact computer algebra for Frobenius-theoretic questions at desk scale.

The package decides Frobenius closure membership, F-purity, bounded
tight-closure certificates, Hilbert series and a-invariants, Veronese
and other graded subring structure, section rings of Q-divisors on the
projective line, and Frobenius actions on top local cohomology classes,
all over prime fields with exact arithmetic.  The `fsing` command line
exposes the same operations plus a bundled example corpus.
"""

from .corpus import run_corpus
from .demazure import (
    FloorDivisor,
    QDivisor,
    SectionRingProfile,
    floor_divisor,
    floor_identity_holds,
    fractional_part,
    parse_divisor,
    same_fregularity_class,
    section_dim,
    section_ring_profile,
    veronese_divisor,
)
from .errors import (
    AlgebraError,
    DomainError,
    ParseError,
    ResourceError,
    UsageError,
)
from .field import FieldElement, PrimeField, ff_inverse
from .frobenius import (
    ClosureVerdict,
    ContainmentWitness,
    FedderResult,
    TightClosureCertificate,
    fedder_fpure,
    frobenius_closure_member,
    ideal_quotient_bracket,
    tc_certificate,
)
from .groebner import (
    Ideal,
    QuotientRing,
    bracket_power,
    buchberger,
    elim_intersection,
    ideal_member,
    ideal_power,
    ideal_quotient,
    normal_form,
    quotient_member,
)
from .hilbert import (
    HilbertSeries,
    LocalCohomologyTable,
    MultiplicityResult,
    VeroneseSlice,
    a_invariant,
    hd_graded_dims,
    hilbert_series,
    monomial_numerator,
    multiplicity,
    profile_multiplicity,
    veronese_series,
)
from .linalg import Echelon
from .localcoh import (
    CechClass,
    ZeroClassVerdict,
    class_degree,
    frobenius_class,
    is_zero_class,
    shift_representative,
)
from .manifest import Manifest, load_manifest, load_manifest_text, run_checks, run_manifest
from .parser import parse_poly
from .report import CheckRecord, Report
from .ring import (
    BlockOrder,
    Monomial,
    MonomialOrder,
    Polynomial,
    WeightedGrevlexOrder,
    WeightedRing,
    weighted_degree,
)
from .subring import (
    GradedSubalgebra,
    equal_degree_generation_check,
    evaluate_in_ambient,
    graded_piece_dim,
    power_products,
    subring_hilbert_function,
    subring_ideal_member_graded,
    subring_presentation,
)

__version__ = "0.1.0"
