"""horncone -- Horn cones of U(p, q) and their recursive inequalities.

An exact, dependency-free toolkit for the Horn problem of the pseudo-unitary
group: Littlewood-Richardson arithmetic, Schubert calculus on
Grassmannians, the classical Horn(n) cone and the cones Horn(p, q) and
S(p, q) with their semigroup oracles and inequality descriptions.

Quick start::

    from horncone import generate_inequalities, horn_pq_cone

    for spec in generate_inequalities(2, 1):
        print(spec)
    horn_pq_cone([[1], [0]], [[1], [0]], [[2], [0]], 1, 1).member  # True

All arithmetic is exact (:class:`fractions.Fraction`); every listing is
deterministic.
"""

from __future__ import annotations

__version__ = "0.3.0"

from .cache import TripleCache
from .combinatorics import (
    GLWeight,
    Partition,
    Subset,
    SubsetPair,
    WeightPair,
    box_complement,
    complement_subset,
    conjugate,
    dual_weight,
    enumerate_subset_pairs,
    enumerate_subsets,
    lambda_of_subset,
    partitions_in_box,
    partitions_of,
    poincare_dual,
    subset_of_lambda,
    tilde_partition,
    tilde_subset,
    vee_subset,
)
from .config import HornConfig
from .horn_classical import (
    HornTripleTable,
    Spectrum,
    horn_n_cone,
    horn_n_inequalities,
    horn_n_semigroup,
    horn_triple_table,
)
from .horn_pq import (
    SpectrumPair,
    generate_inequalities,
    generate_s_inequalities,
    holomorphic_chamber,
    horn_hol_membership,
    horn_pq_cone,
    horn_pq_multiplicity,
    horn_pq_semigroup,
    minimal_q_shift,
    q_pq_semigroup,
    q_shift,
    ressayre_inequalities,
    s_pq_cone,
    s_pq_semigroup,
    theta,
    theta_inequality,
)
from .inequality import InequalitySpec, MembershipResult
from .lr_engine import (
    Decomposition,
    cache_info,
    clear_caches,
    gl_multiplicity,
    invariant_dim,
    lr_coefficient,
    lr_product,
    tensor_decompose,
)
from .polyhedra import (
    Constraint,
    LinearSystem,
    LPResult,
    equivalent,
    evaluate,
    filter_redundant,
    implies,
    lp_optimize,
)
from .schubert import (
    CohomologyClass,
    GrassmannianRing,
    TensorClass,
    cohomological_condition,
    cup_product,
    delta_pullback,
    euler_class,
    euler_class_vrs,
    is_point_multiple,
    phi,
    witness_mu_exists,
)

__all__ = [
    # Combinatorics
    "GLWeight",
    "Partition",
    "Subset",
    "SubsetPair",
    "WeightPair",
    "box_complement",
    "complement_subset",
    "conjugate",
    "dual_weight",
    "enumerate_subset_pairs",
    "enumerate_subsets",
    "lambda_of_subset",
    "partitions_in_box",
    "partitions_of",
    "poincare_dual",
    "subset_of_lambda",
    "tilde_partition",
    "tilde_subset",
    "vee_subset",
    # Littlewood-Richardson engine
    "Decomposition",
    "cache_info",
    "clear_caches",
    "gl_multiplicity",
    "invariant_dim",
    "lr_coefficient",
    "lr_product",
    "tensor_decompose",
    # Schubert calculus
    "CohomologyClass",
    "GrassmannianRing",
    "TensorClass",
    "cohomological_condition",
    "cup_product",
    "delta_pullback",
    "euler_class",
    "euler_class_vrs",
    "is_point_multiple",
    "phi",
    "witness_mu_exists",
    # Inequalities
    "InequalitySpec",
    "MembershipResult",
    # Horn(n)
    "HornTripleTable",
    "Spectrum",
    "horn_n_cone",
    "horn_n_inequalities",
    "horn_n_semigroup",
    "horn_triple_table",
    # Horn(p, q), S(p, q), Q(p, q)
    "SpectrumPair",
    "generate_inequalities",
    "generate_s_inequalities",
    "holomorphic_chamber",
    "horn_hol_membership",
    "horn_pq_cone",
    "horn_pq_multiplicity",
    "horn_pq_semigroup",
    "minimal_q_shift",
    "q_pq_semigroup",
    "q_shift",
    "ressayre_inequalities",
    "s_pq_cone",
    "s_pq_semigroup",
    "theta",
    "theta_inequality",
    # Polyhedra
    "Constraint",
    "LPResult",
    "LinearSystem",
    "equivalent",
    "evaluate",
    "filter_redundant",
    "implies",
    "lp_optimize",
    # Configuration and caching
    "HornConfig",
    "TripleCache",
]
