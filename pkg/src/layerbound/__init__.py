"""Two-layer k-planar graphs of pathwidth k + 1: constructions and certificates."""

from .drawing import TwoLayerDrawing, canonical_wall_drawing, crossing_profile, crosses, is_k_planar
from .families import branch_sets, gen_grid, gen_k0, gen_wall
from .graph import Coord, Graph, bipartition, contract, is_connected
from .minors import labeled_isomorphic, verify_minor
from .nodesearch import grid_sweep_strategy, strategy_to_decomposition, verify_strategy, wall_sweep_strategy
from .pathwidth import UNKNOWN, Budget, PathDecomposition, decide_pathwidth_le, exact_pathwidth, verify_decomposition

__version__ = "0.1.0"
