"""Codes from finite groups: coset-table construction and exact analysis."""

from .analysis import (
    AlmostAffineReport,
    DistanceProfile,
    EntropyProfile,
    QuasiUniformityReport,
    UniformityWitness,
    WeightEnumerator,
    distance_profile,
    entropy_profile,
    is_almost_affine,
    min_distance,
    min_distance_group,
    polynomial_string,
    verify_quasi_uniform,
    weight_enumerator_formula,
)
from .construction import (
    CoordinateAlphabet,
    CosetTable,
    QuasiUniformCode,
    build_code,
    build_coset_table,
    code_from_codewords,
    code_from_json_dict,
    code_to_json,
    code_to_json_dict,
    induced_support,
    label_coordinates,
    parse_subgroup_selection,
    reduce_code,
    subgroup_spec,
)
from .errors import (
    AnalysisError,
    CapExceededError,
    GroupParseError,
    GroupTableError,
    InvariantError,
)
from .groups import (
    DEFAULT_ENUM_CAP,
    DEFAULT_ORDER_CAP,
    AbelianInvariants,
    FiniteGroup,
    QuotientGroup,
    Subgroup,
    abelian_invariants,
    all_subgroups,
    build_named_group,
    full_subgroup,
    intersect_subgroups,
    is_nilpotent,
    is_normal,
    left_cosets,
    quotient,
    subgroup_generated,
    trivial_subgroup,
)
from .representability import (
    DEFAULT_SEARCH_CAP,
    IndexVector,
    Representation,
    RepresentationSearch,
    abelian_groups_of_order,
    check_non_nilpotent_witness,
    find_abelian_representation,
    index_vector,
    representation_search,
)

__version__ = "0.1.0"
