"""Graph packing: degree-sum packing conditions, a swap-repair packing
solver, an exact oracle, extremal families and a small-case survey."""

from .graph import (
    Graph,
    GraphError,
    NotAForestError,
    SizeMismatchError,
    UnsupportedSizeError,
    canonical_key,
    complement,
    degeneracy,
    degree_sequence,
    excess_leaves,
    is_forest,
    leaves_and_nontrivial_components,
    new_graph,
)
from .packing import Mapping, conflicts, is_packing, links_from, swap
from .conditions import degss_holds, onlysharpness_classify, sauer_spencer_holds
from .solver import PackOutcome, PackStatus, pack_exact, pack_incremental

__version__ = "0.1.0"
