"""Exact region enumeration and Pak-Stanley labels for difference arrangements."""

from .core import (
    MINUS,
    PLUS,
    Arrangement,
    Hyperplane,
    Multigraph,
    ParkplaneError,
    canonicalize,
)
from .factory import from_multigraph, g_shi, k_shi, multigraph_of
from .feasibility import check_signs, fm_feasible_oracle, interior_witness
from .parking import (
    enumerate_g_parking,
    is_g_parking_burning,
    is_g_parking_subsets,
    is_k_parking,
    is_k_parking_diagram,
    out_multiplicity,
)
from .regions import Region, enumerate_regions, label_of, region_count, separating_set
from .verify import verify_bijectivity_kshi, verify_surjectivity
from .walk import find_region

__version__ = "0.1.0"
