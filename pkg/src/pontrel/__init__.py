"""Exact computations for operator representations of matrix Nevanlinna
functions in Pontryagin spaces: linear relations, the projection onto the
range of the representing field, the symmetric restriction and its adjoint,
boundary triples and Weyl functions, each result backed by a certificate.
"""

from .certificates import Certificate, CertificateTable
from .errors import (
    DegenerateSamplePair,
    DegenerateTrace,
    DerivativeNotInvertible,
    DimensionMismatch,
    DomainNotDecomposable,
    HypothesesNotMet,
    InputError,
    NoSolution,
    NotHermitian,
    NotInResolventSet,
    ParseError,
    PontrelError,
    PreconditionError,
    SingularQ,
    ValidationError,
    WrongForm,
)
from .exact import ComplexRational, Matrix, Subspace, canonicalize, hermitian_inertia, kernel, rank, solve
from .nevanlinna import (
    NevRepresentation,
    ReferencePoint,
    SampleSet,
    eval_Q,
    gamma_field,
    minimality_check,
    negative_squares_lower_bound,
    nevanlinna_kernel,
    q_prime_infinity,
    regularity_witness,
    strictness_check,
)
from .problem import ProblemFile, load_problem, parse_problem, serialize_problem
from .relation import LinearRelation, OperatorAsRelation, adjoint, relation_matrix_blocks
from .report import Report, run_analyze, run_eval, run_verify
from .space import ParameterSpace, PontryaginSpace, indefinite_product, j_adjoint
from .weyl import (
    canonical_boundary_triple,
    projection_P,
    resolvent_defect_inclusion_check,
    run_pipeline,
    weyl_function_of_triple,
)

__version__ = "0.1.0"
