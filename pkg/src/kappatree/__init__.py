"""Vertex-cut structure trees for finite connected graphs.

Computes the minimal separation level of a connected graph, the maximal
inseparable vertex sets at that level, the full cut system they induce, the
canonical nested subsystem, the bipartite structure tree of separators and
blocks, and the recursive decomposition into block graphs at strictly
increasing levels. Brute-force oracles for every core notion ship alongside
the fast paths so results are self-certifiable on small graphs.
"""

from .cuts import (
    AxiomReport,
    Cut,
    CutFlags,
    CutSystem,
    HatGraph,
    PreCut,
    Slice,
    classify_cut,
    enumerate_cuts,
    enumerate_tight_separators,
    find_slices,
    hat_graph,
    separates,
    verify_axioms,
)
from .decompose import (
    BlockGraph,
    DecompositionReport,
    ExceptionalWarning,
    LevelAnalysis,
    analyze_level,
    block_graph,
    decompose_recursively,
    detect_exceptional,
)
from .errors import (
    DisconnectedGraphError,
    InvariantError,
    KappatreeError,
    OracleBudgetError,
    ParseError,
)
from .graph import CornerDecomposition, Graph, corner_decomposition
from .inseparability import (
    ADJACENT,
    OmegaFamily,
    PairSeparability,
    compute_kappa,
    disjoint_path_count,
    is_k_inseparable_set,
    maximal_k_inseparable_sets,
    pair_inseparable,
)
from .nesting import (
    NestedSystem,
    NestingStats,
    are_nested,
    mu_stats,
    omega_optimal_subsystem,
    optimally_nested_subsystem,
)
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudget,
    oracle_cuts,
    oracle_inseparable,
    oracle_nested,
)
from .tree import (
    EquivClass,
    StructureTree,
    TreeReport,
    build_tree,
    check_invariance,
    equivalence_classes,
    validate_tree,
)

__version__ = "0.1.0"
