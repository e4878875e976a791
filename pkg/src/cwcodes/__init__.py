"""Binary linear constant weight codes: support partitions, construction,
equivalence certificates and permutation automorphism groups."""

from .gf2 import (
    CapExceeded,
    CodeParams,
    Codeword,
    LinearCode,
    add,
    enumerate_codewords,
    format_code,
    is_constant_weight,
    parse_code,
    parse_rows,
    read_code,
    span_basis,
    support,
    weight,
    write_code,
)
from .supports import (
    SupportPartition,
    admissible_params,
    cell,
    check_characterization,
    intersection_of,
    mask_members,
    partition,
    relative_symmetric_difference,
    subset_mask,
    symmetric_difference,
)
from .construct import CanonicalSpec, canonical_cell_of, canonical_code, canonical_rows, extend_with_zeros
from .equivalence import (
    NotConstantWeight,
    Permutation,
    apply,
    compose,
    equivalence_permutation,
    inverse,
    parse_cycles,
    permute_code,
    render_cycles,
)
from .autgroup import (
    PAutReport,
    CountReport,
    brute_force_paut,
    census_count,
    code_count_formula,
    group_code_necessary,
    group_order,
    multiple_of_six_check,
    orbits,
    paut_order_formula,
    s3_subgroup_generators,
    structured_paut_generators,
)

__version__ = "0.1.0"
