"""cubeband: exact bandwidth and antibandwidth layouts of the hypercube."""

from .core import (
    DELTA_DIM_MAX,
    ENUM_DIM_MAX,
    FORMULA_DIM_MAX,
    FULL_MATRIX_DIM_MAX,
    ORACLE_DIM_MAX,
    CubebandError,
    DimensionError,
    edges,
    format_vertex,
    neighbors,
    parse_vertex,
    weight,
)
from .formulas import (
    binomial,
    hypercube_antibandwidth,
    hypercube_bandwidth,
    radius_down_closed,
    radius_up,
)
from .hales import (
    LayerTable,
    Numbering,
    cmp_hales,
    hales_numbering,
    layer_table_recursive,
    numbering_from_table,
)
from .layout import (
    antiband_numbering,
    antibandwidth_of,
    bandwidth_of,
    read_numbering,
    write_numbering,
)
from .blocks import (
    BlockLayout,
    SparseBlock,
    block_offsets,
    delta,
    layer_adjacency,
    lower_block_recursive,
    manhattan_radius,
    matrix_bandwidth,
    upper_block_recursive,
)
from .oracle import (
    adjacency_from_definition,
    brute_force_antibandwidth,
    brute_force_bandwidth,
)

__version__ = "0.1.0"

__all__ = [
    "BlockLayout",
    "CubebandError",
    "DimensionError",
    "LayerTable",
    "Numbering",
    "SparseBlock",
    "adjacency_from_definition",
    "antiband_numbering",
    "antibandwidth_of",
    "bandwidth_of",
    "binomial",
    "block_offsets",
    "brute_force_antibandwidth",
    "brute_force_bandwidth",
    "cmp_hales",
    "delta",
    "edges",
    "format_vertex",
    "hales_numbering",
    "hypercube_antibandwidth",
    "hypercube_bandwidth",
    "layer_adjacency",
    "layer_table_recursive",
    "lower_block_recursive",
    "manhattan_radius",
    "matrix_bandwidth",
    "neighbors",
    "numbering_from_table",
    "parse_vertex",
    "radius_down_closed",
    "radius_up",
    "read_numbering",
    "upper_block_recursive",
    "weight",
    "write_numbering",
]
