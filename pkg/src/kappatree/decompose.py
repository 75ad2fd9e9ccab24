"""Block graphs, the exceptional-case detector, and the level-by-level recursion.

Each block of the tree induces a block graph: the induced subgraph plus an
ideal edge joining every nonadjacent pair inside a separator contained in the
block. Block graphs are connected, and analyzing one restarts the whole
pipeline at a strictly higher level, so the recursion terminates. Blocks whose
own analysis is trivial are the leaves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .cuts import CutFlags, CutSystem, Slice, classify_cut, enumerate_cuts
from .errors import InvariantError
from .graph import Graph, bits
from .inseparability import OmegaFamily, compute_kappa
from .nesting import NestedSystem, NestingStats, mu_stats, omega_optimal_subsystem
from .tree import StructureTree, build_tree, trivial_tree

__all__ = [
    "BlockGraph",
    "block_graph",
    "ExceptionalWarning",
    "detect_exceptional",
    "LevelAnalysis",
    "analyze_level",
    "BlockBranch",
    "DecompositionReport",
    "decompose_recursively",
]


@dataclass(frozen=True)
class BlockGraph:
    """A block's graph: induced edges plus ideal edges inside its separators."""

    block: int
    graph: Graph
    ideal_edges: tuple[tuple[str, str], ...]


def block_graph(g: Graph, tree: StructureTree, block_index: int) -> BlockGraph:
    """Build the block graph for one block node of the tree."""
    block = tree.classes[block_index].block
    inside = set(g.labels_of(block))
    ideal: list[tuple[str, str]] = []
    for sep in tree.separators:
        if sep & ~block != 0:
            continue
        rim = list(bits(sep))
        for a in range(len(rim)):
            for b in range(a + 1, len(rim)):
                if not g.adj[rim[a]] >> rim[b] & 1:
                    ideal.append((g.labels[rim[a]], g.labels[rim[b]]))
    ideal_sorted = tuple(sorted(set(tuple(sorted(e)) for e in ideal)))
    built = g.subgraph(block, ideal_sorted)
    if inside and not built.is_connected():
        raise InvariantError(f"block graph on {sorted(inside)} is not connected")
    return BlockGraph(block=block, graph=built, ideal_edges=ideal_sorted)


@dataclass(frozen=True)
class ExceptionalWarning:
    """One cut whose closed side is a small block holding a maximal inseparable set.

    Recursion into any block containing this cut's boundary may declare sets
    inseparable that the whole graph can still part; the warning is advisory
    and never stops the recursion.
    """

    cut: int
    closed_block: int
    hosts: tuple[int, ...]


def detect_exceptional(tree: StructureTree, kappa: int, omega: OmegaFamily) -> tuple[ExceptionalWarning, ...]:
    """Flag cuts C where C plus its boundary is a block of size at most 3*kappa/2
    containing a maximal inseparable set (integer form: 2|B| <= 3*kappa)."""
    if tree.system is None:
        return ()
    blocks = {cls.block: i for i, cls in enumerate(tree.classes)}
    warnings = []
    for cut_id, cut in enumerate(tree.system.cuts):
        closed = cut.vertices | cut.boundary
        if closed not in blocks:
            continue
        if 2 * closed.bit_count() > 3 * kappa:
            continue
        if not any(m & ~closed == 0 for m in omega.members):
            continue
        hosts = tuple(
            i for i, cls in enumerate(tree.classes) if cut.boundary & ~cls.block == 0
        )
        warnings.append(ExceptionalWarning(cut=cut_id, closed_block=closed, hosts=hosts))
    return tuple(warnings)


@dataclass(frozen=True)
class LevelAnalysis:
    """Everything the pipeline derives from one graph at its minimal level."""

    graph: Graph
    kappa: int | None
    omega: OmegaFamily | None
    system: CutSystem | None
    stats: NestingStats | None
    flags: tuple[CutFlags, ...]
    nested: NestedSystem | None
    tree: StructureTree
    warnings: tuple[ExceptionalWarning, ...]

    @property
    def trivial(self) -> bool:
        return self.kappa is None

    @property
    def slices(self) -> tuple[Slice, ...]:
        return self.tree.slices


def analyze_level(g: Graph, *, tight_only: bool = False) -> LevelAnalysis:
    """Run the full single-level pipeline: kappa, cuts, nesting, tree, warnings."""
    found = compute_kappa(g)
    if found is None:
        return LevelAnalysis(
            graph=g,
            kappa=None,
            omega=None,
            system=None,
            stats=None,
            flags=(),
            nested=None,
            tree=trivial_tree(g),
            warnings=(),
        )
    kappa, omega = found
    system = enumerate_cuts(g, kappa, omega, tight_only=tight_only)
    if not len(system):
        raise InvariantError("a separated pair was found but no cut was enumerated")
    stats = mu_stats(system)
    flags = tuple(classify_cut(system, cut) for cut in system.cuts)
    nested = omega_optimal_subsystem(system, omega, stats)
    tree = build_tree(g, nested)
    warnings = detect_exceptional(tree, kappa, omega)
    return LevelAnalysis(
        graph=g,
        kappa=kappa,
        omega=omega,
        system=system,
        stats=stats,
        flags=flags,
        nested=nested,
        tree=tree,
        warnings=warnings,
    )


@dataclass(frozen=True)
class BlockBranch:
    """The recursion record for one block of one level."""

    block_index: int
    block_graph: BlockGraph
    child: "DecompositionReport | None"
    stopped: str | None  # "depth-limit" when the cap was hit, else None


@dataclass(frozen=True)
class DecompositionReport:
    """One level of the recursive decomposition plus its block children."""

    level: LevelAnalysis
    depth: int
    branches: tuple[BlockBranch, ...] = field(default=())

    def walk(self) -> Iterator["DecompositionReport"]:
        yield self
        for branch in self.branches:
            if branch.child is not None:
                yield from branch.child.walk()

    def levels(self) -> list["DecompositionReport"]:
        return list(self.walk())

    def leaves(self) -> list["DecompositionReport"]:
        return [node for node in self.walk() if node.level.trivial or not node.branches]

    def depth_limited(self) -> bool:
        return any(
            b.stopped == "depth-limit" or (b.child is not None and b.child.depth_limited())
            for node in self.walk()
            for b in node.branches
        )


def decompose_recursively(g: Graph, max_depth: int = 8, *, tight_only: bool = False) -> DecompositionReport:
    """Analyze the graph, then recurse into every nontrivial block graph.

    The level strictly increases along every chain; hitting ``max_depth`` is
    recorded on the branch rather than raised.
    """
    return _decompose(g, 0, max_depth, None, tight_only)


def _decompose(
    g: Graph, depth: int, max_depth: int, parent_kappa: int | None, tight_only: bool
) -> DecompositionReport:
    level = analyze_level(g, tight_only=tight_only)
    if level.kappa is not None and parent_kappa is not None and level.kappa <= parent_kappa:
        raise InvariantError(
            f"level failed to increase: {parent_kappa} -> {level.kappa} on {g!r}"
        )
    branches: list[BlockBranch] = []
    if not level.trivial:
        for bi in range(len(level.tree.classes)):
            bg = block_graph(g, level.tree, bi)
            if depth + 1 > max_depth:
                branches.append(BlockBranch(bi, bg, None, "depth-limit"))
                continue
            child = _decompose(bg.graph, depth + 1, max_depth, level.kappa, tight_only)
            branches.append(BlockBranch(bi, bg, child, None))
    return DecompositionReport(level=level, depth=depth, branches=tuple(branches))
