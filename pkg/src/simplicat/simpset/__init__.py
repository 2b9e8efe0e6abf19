"""Finite truncated simplicial sets and their invariants."""
from .constructions import (
    CoproductSSet,
    ProductSSet,
    coproduct,
    coproduct_of,
    descend,
    opposite_sset,
    pair_maps,
    pair_ref,
    power,
    power_projections,
    product,
    product_cells,
    product_map,
    projection,
    quotient,
    tuple_map,
)
from .core import (
    DegenerateRef,
    InsufficientTruncation,
    SimplicialError,
    SimplicialMap,
    TruncatedSSet,
    boundary_simplex,
    constant_map,
    discrete_sset,
    empty_sset,
    identity_map,
    map_from_vertices,
    degeneracies_of,
    standard_simplex,
    surjection,
    validate,
)
from .fundamental import GroupPresentation, pi1_presentation, tietze_trivial
from .homology import (
    AbelianGroup,
    ChainComplex,
    alexander_whitney_matrix,
    boundary_matrix,
    chain_complex,
    component_of,
    components,
    cone_complex,
    homology,
    mapping_cone,
    pi0,
    pi0_map,
    tensor_basis,
    tensor_complex,
)
from .snf import invariant_factors, smith_normal_form

__all__ = [
    "AbelianGroup",
    "ChainComplex",
    "CoproductSSet",
    "DegenerateRef",
    "GroupPresentation",
    "InsufficientTruncation",
    "ProductSSet",
    "SimplicialError",
    "SimplicialMap",
    "TruncatedSSet",
    "alexander_whitney_matrix",
    "boundary_matrix",
    "boundary_simplex",
    "chain_complex",
    "component_of",
    "components",
    "cone_complex",
    "constant_map",
    "coproduct",
    "coproduct_of",
    "degeneracies_of",
    "descend",
    "discrete_sset",
    "empty_sset",
    "homology",
    "identity_map",
    "invariant_factors",
    "map_from_vertices",
    "mapping_cone",
    "opposite_sset",
    "pair_maps",
    "pair_ref",
    "pi0",
    "pi0_map",
    "pi1_presentation",
    "power",
    "power_projections",
    "product",
    "product_cells",
    "product_map",
    "projection",
    "quotient",
    "smith_normal_form",
    "standard_simplex",
    "surjection",
    "tensor_basis",
    "tensor_complex",
    "tietze_trivial",
    "tuple_map",
    "validate",
]
