"""Exact q-binomial coefficients, the KOH recurrence and its perturbations."""

from .errors import (
    GnkError,
    NonIntegerValue,
    NonzeroRemainder,
    NotSymmetric,
    NotSymmetricUnimodal,
    OutOfCoverage,
    OutOfValidityRange,
    SingularLine,
    UnsupportedShape,
    ZeroPolynomial,
)
from .qpoly import QPoly, format_poly
from .partitions import Partition, PartitionConstraints, enumerate_partitions, partition_count
from .qbinom import gnk_pascal, gnk_product, q_bracket, q_factorial
from .koh import (
    KohConfig,
    Rho,
    characterized_contribution,
    contribution_breakdown,
    g_s,
    koh,
    koh_restricted,
    partition_contribution,
    random_theorem,
)
from .shape import atomic_decomposition, darga, gamma_vector, is_log_concave, is_sym_uni, is_unimodal
from .depth import koh_depth, koh_depth_fast
from .closed import (
    conjecture_residual,
    g1_explicit,
    g2_explicit,
    g3_explicit,
    gs_forward,
    singular_line_check,
    useful_gem_check,
)
from .limits import (
    central_binomial_convergence,
    conjectured_diagonal_check,
    gs_diagonal_sequence,
    limit_formula_check,
)

__version__ = "0.1.0"
