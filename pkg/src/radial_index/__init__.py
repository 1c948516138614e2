"""Exact calculator and verifier for radial indices and Euler obstructions of 1-forms."""

from radial_index.calculus import (
    LocalSingularPointDatum,
    ResolutionDatum,
    aggregate_radial_index,
    complex_from_real_index,
    complex_index_of_df,
    eu_df_full_expansion,
    eu_of_df,
    euler_obstruction_via_corollary,
    index_obstruction_gap,
    index_vector_of_df,
    radial_index_via_theorem4,
    real_index_of_df,
    resolution_obstruction,
)
from radial_index.errors import (
    DomainError,
    IntegerOverflowError,
    NonIsolatedError,
    RadialIndexError,
    StructureError,
)
from radial_index.germ import (
    FibreKind,
    IndexKind,
    IndexVector,
    MilnorData,
    StratifiedGermModel,
    germ_k_lines,
    germ_smooth,
    parity,
    validate_germ,
)
from radial_index.milnor import (
    QuasihomogeneousData,
    chi_hypersurface_fibre,
    milnor_jacobian,
    milnor_quasihomogeneous,
)
from radial_index.plmorse import (
    HeightAssignment,
    SimplicialComplex,
    euler_characteristic,
    lower_link,
    pl_radial_index,
    poincare_hopf_check,
    suspension_check,
)
from radial_index.polynomial import PolynomialGerm
from radial_index.poset import (
    IncidenceTable,
    InverseTable,
    StratumPoset,
    chain_sum_inverse,
    invert_incidence,
)

__version__ = "0.1.0"
