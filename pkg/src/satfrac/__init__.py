"""Saturated fractions of two-factor designs: certification, counting,
enumeration, random generation, and fiber walks over circuit moves."""

from .design import (
    CapExceeded,
    check_size,
    fraction,
    from_table,
    full_grid,
    margins,
    table_margins,
    to_table,
)
from .linalg import (
    full_model_matrix,
    integer_determinant,
    is_saturated_by_determinant,
    model_matrix,
    restrict,
)
from .cycles import (
    OAPair,
    contains_cycle,
    count_k_cycles,
    decompose_cycle,
    derangements,
    enumerate_k_cycles,
    find_cycle,
    is_orthogonal_array,
)
from .saturation import (
    MarginLemmaReport,
    check_margin_lemma,
    count_saturated,
    count_with_margins,
    enumerate_saturated,
    generate_with_margins,
    is_saturated,
    sample_uniform_saturated,
    saturation_probability,
)
from .markov import (
    Circuit,
    FiberReport,
    apply_move,
    basis_size,
    circuit_to_move,
    circuits,
    fiber_enumerate,
    markov_basis,
    metropolis_walk,
    random_walk,
    verify_connectivity,
    walk_states,
)
from .fileio import (
    ParseError,
    parse_fraction_file,
    parse_fraction_text,
    parse_margin_vector,
    render_grid,
    render_json,
    render_signed_table,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Circuit",
    "FiberReport",
    "MarginLemmaReport",
    "OAPair",
    "ParseError",
    "apply_move",
    "basis_size",
    "check_margin_lemma",
    "check_size",
    "circuit_to_move",
    "circuits",
    "contains_cycle",
    "count_k_cycles",
    "count_saturated",
    "count_with_margins",
    "decompose_cycle",
    "derangements",
    "enumerate_k_cycles",
    "enumerate_saturated",
    "fiber_enumerate",
    "find_cycle",
    "fraction",
    "from_table",
    "full_grid",
    "full_model_matrix",
    "generate_with_margins",
    "integer_determinant",
    "is_orthogonal_array",
    "is_saturated",
    "is_saturated_by_determinant",
    "margins",
    "markov_basis",
    "metropolis_walk",
    "model_matrix",
    "parse_fraction_file",
    "parse_fraction_text",
    "parse_margin_vector",
    "random_walk",
    "render_grid",
    "render_json",
    "render_signed_table",
    "restrict",
    "sample_uniform_saturated",
    "saturation_probability",
    "table_margins",
    "to_table",
    "verify_connectivity",
    "walk_states",
]
