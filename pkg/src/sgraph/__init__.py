"""Signed-graph spectral toolkit.

Core objects and the most used operations are re-exported here; the
submodules hold the rest (``sgraph.spectral``, ``sgraph.extremal``,
``sgraph.search``, ``sgraph.sgio``).
"""

from .core import (
    Bipartition,
    CycleWitness,
    SignedGraph,
    SwitchCanonicalForm,
    bipartition,
    canonical_key,
    forest_normalize,
    has_negative_c4,
    is_balanced,
    negate,
    relabel,
    shortest_negative_cycle,
    switch,
    switching_class_representatives,
    switching_equivalent,
    switching_isomorphic,
    switching_isomorphism,
)
from .extremal import (
    bound_fixed_order,
    bound_fixed_sizes,
    extremal_graph,
    lower_bound_check,
    monotone_in_r,
    quotient_char_poly,
    verify_spectrum_structure,
)
from .spectral import (
    Spectrum,
    VertexPartition,
    adjacency_matrix,
    eigen_spectrum,
    graph_spectrum,
    nonnegative_switching,
    perturb_check,
    quotient_matrix,
    quotient_spectrum_contained,
    rayleigh_quotient,
    spectral_radius,
)

__all__ = [
    "Bipartition",
    "CycleWitness",
    "SignedGraph",
    "SwitchCanonicalForm",
    "Spectrum",
    "VertexPartition",
    "adjacency_matrix",
    "bipartition",
    "bound_fixed_order",
    "bound_fixed_sizes",
    "canonical_key",
    "eigen_spectrum",
    "extremal_graph",
    "forest_normalize",
    "graph_spectrum",
    "has_negative_c4",
    "is_balanced",
    "lower_bound_check",
    "monotone_in_r",
    "negate",
    "nonnegative_switching",
    "perturb_check",
    "quotient_char_poly",
    "quotient_matrix",
    "quotient_spectrum_contained",
    "rayleigh_quotient",
    "relabel",
    "shortest_negative_cycle",
    "spectral_radius",
    "switch",
    "switching_class_representatives",
    "switching_equivalent",
    "switching_isomorphic",
    "switching_isomorphism",
    "verify_spectrum_structure",
]

__version__ = "0.1.0"
