"""Rank-k numerical ranges: support-function sweep, compressions, witnesses."""

from ._core import (
    DimensionError,
    EmptinessError,
    InputError,
    ParameterError,
    StructureError,
    compute_range,
    eig_hermitian_desc,
    find_witness,
    hermitian_part,
    intersection_trace,
    jordan_block,
    k_rank_radii,
    membership,
    paper_example,
    proposition_bounds,
    sample_family,
    spectral_norm,
    support_value,
    verify_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
