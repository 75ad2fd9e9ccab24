"""Building the bipartite structure tree from a nested thin cut system.

The tree has one white node per separator and one black node per equivalence
class of cuts; each cut is a directed edge from its separator to its class.
Classes are computed in the slice-free hat graph, where two distinct cuts are
equivalent exactly when the star-complement of one sits properly inside the
other with no cut strictly between. The block of a class is the intersection
of cut-plus-boundary over its members; blocks and separators partition the
roles of the nodes, and a separator is adjacent to a block exactly when it is
contained in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .cuts import CutSystem, Slice, hat_graph
from .errors import InvariantError
from .graph import Graph
from .nesting import NestedSystem, are_nested

__all__ = [
    "EquivClass",
    "TreeEdge",
    "StructureTree",
    "equivalence_classes",
    "block_of_class",
    "build_tree",
    "TreeCheck",
    "TreeReport",
    "validate_tree",
    "check_invariance",
]


@dataclass(frozen=True)
class EquivClass:
    """A class of equivalent cuts (by id) and the block it determines."""

    members: tuple[int, ...]
    block: int


@dataclass(frozen=True)
class TreeEdge:
    cut: int
    separator: int
    block: int


@dataclass(frozen=True)
class StructureTree:
    """Bipartite tree of separator nodes and block nodes; cuts are the edges."""

    graph: Graph
    kappa: int | None
    system: CutSystem | None
    separators: tuple[int, ...]
    classes: tuple[EquivClass, ...]
    edges: tuple[TreeEdge, ...]
    slices: tuple[Slice, ...]

    @property
    def trivial(self) -> bool:
        return not self.edges and len(self.classes) == 1

    def node_count(self) -> int:
        return len(self.separators) + len(self.classes)

    def block_labels(self) -> list[tuple[str, ...]]:
        return [self.graph.labels_of(c.block) for c in self.classes]

    def separator_labels(self) -> list[tuple[str, ...]]:
        return [self.graph.labels_of(s) for s in self.separators]

    def degrees(self) -> tuple[list[int], list[int]]:
        sep_deg = [0] * len(self.separators)
        block_deg = [0] * len(self.classes)
        for e in self.edges:
            sep_deg[e.separator] += 1
            block_deg[e.block] += 1
        return sep_deg, block_deg

    def class_of_cut(self, cut_id: int) -> int:
        for i, cls in enumerate(self.classes):
            if cut_id in cls.members:
                return i
        raise KeyError(cut_id)


def _related(sys: CutSystem, i: int, j: int) -> bool:
    """Whether cut j follows cut i: star of i properly inside j, minimally."""
    if i == j:
        return True
    star = sys[i].star
    target = sys[j].vertices
    if star == 0 or star & ~target != 0 or star == target:
        return False
    for e in range(len(sys)):
        mid = sys[e].vertices
        if mid != target and star & ~mid == 0 and star != mid and mid & ~target == 0:
            return False
    return True


def equivalence_classes(hat_sys: CutSystem) -> tuple[tuple[int, ...], ...]:
    """Partition the cuts of a slice-free nested system into tree classes.

    Faults if the computed relation is not an equivalence; on a nested
    slice-free input that cannot happen.
    """
    m = len(hat_sys)
    related = [[_related(hat_sys, i, j) for j in range(m)] for i in range(m)]
    for i in range(m):
        for j in range(m):
            if related[i][j] != related[j][i]:
                raise InvariantError(f"class relation is not symmetric on cuts {i},{j}")
            for e in range(m):
                if related[i][j] and related[j][e] and not related[i][e]:
                    raise InvariantError(
                        f"class relation is not transitive on cuts {i},{j},{e}"
                    )
    assigned: list[int | None] = [None] * m
    classes: list[list[int]] = []
    for i in range(m):
        if assigned[i] is not None:
            continue
        group = [j for j in range(m) if related[i][j]]
        for j in group:
            assigned[j] = len(classes)
        classes.append(group)
    classes.sort(key=min)
    return tuple(tuple(c) for c in classes)


def block_of_class(hat_sys: CutSystem, members: tuple[int, ...]) -> int:
    """Intersection of cut-plus-boundary over the class, in the hat graph."""
    block = hat_sys.graph.full
    for i in members:
        block &= hat_sys[i].vertices | hat_sys[i].boundary
    return block


def trivial_tree(g: Graph) -> StructureTree:
    return StructureTree(
        graph=g,
        kappa=None,
        system=None,
        separators=(),
        classes=(EquivClass((), g.full),),
        edges=(),
        slices=(),
    )


def build_tree(g: Graph, nested: NestedSystem | CutSystem) -> StructureTree:
    """Assemble and structurally validate the tree of a nested system."""
    sys = nested.system if isinstance(nested, NestedSystem) else nested
    if not len(sys):
        return trivial_tree(g)
    for i in range(len(sys)):
        for j in range(i + 1, len(sys)):
            if not are_nested(sys, sys[i], sys[j]):
                raise InvariantError("build_tree requires a pairwise nested system")

    hat = hat_graph(g, sys)
    id_classes = equivalence_classes(hat.lifted)
    classes = tuple(
        EquivClass(members, hat.to_source_mask(block_of_class(hat.lifted, members)))
        for members in id_classes
    )
    separators = sys.separators
    sep_index = {s: i for i, s in enumerate(separators)}
    class_index: dict[int, int] = {}
    for ci, cls in enumerate(classes):
        for cut_id in cls.members:
            class_index[cut_id] = ci
    edges = tuple(
        TreeEdge(cut=i, separator=sep_index[sys[i].boundary], block=class_index[i])
        for i in range(len(sys))
    )
    tree = StructureTree(
        graph=g,
        kappa=sys.kappa,
        system=sys,
        separators=separators,
        classes=classes,
        edges=edges,
        slices=hat.slices,
    )
    _assert_tree_shape(tree)
    return tree


def _assert_tree_shape(tree: StructureTree) -> None:
    nodes = tree.node_count()
    if len(tree.edges) != nodes - 1:
        raise InvariantError(
            f"not a tree: {nodes} nodes but {len(tree.edges)} edges"
        )
    seen_pairs = set()
    parent = list(range(nodes))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in tree.edges:
        u, v = e.separator, len(tree.separators) + e.block
        if (u, v) in seen_pairs:
            raise InvariantError("parallel tree edges: two equivalent cuts share a boundary")
        seen_pairs.add((u, v))
        ru, rv = find(u), find(v)
        if ru == rv:
            raise InvariantError("cycle among tree nodes")
        parent[ru] = rv
    if nodes and len({find(i) for i in range(nodes)}) != 1:
        raise InvariantError("tree nodes are not connected")


@dataclass(frozen=True)
class TreeCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class TreeReport:
    checks: tuple[TreeCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def validate_tree(tree: StructureTree, kappa: int | None = None) -> TreeReport:
    """Check tree shape, block sizes, the leaf law, and the adjacency law."""
    g = tree.graph
    checks: list[TreeCheck] = []
    try:
        _assert_tree_shape(tree)
        checks.append(TreeCheck("tree_shape", True))
    except InvariantError as exc:
        checks.append(TreeCheck("tree_shape", False, str(exc)))

    sep_count = len(tree.separators)
    bipartite_ok = all(
        0 <= e.separator < sep_count and 0 <= e.block < len(tree.classes) for e in tree.edges
    )
    checks.append(TreeCheck("bipartite", bipartite_ok))

    if kappa is not None:
        small = [
            g.labels_of(c.block) for c in tree.classes if c.block.bit_count() < kappa + 1
        ]
        checks.append(
            TreeCheck("block_size", not small, f"blocks below kappa+1: {small}" if small else "")
        )

    leaf_ok = True
    leaf_detail = ""
    sep_deg, block_deg = tree.degrees()
    if tree.edges:
        for i, d in enumerate(sep_deg):
            if d == 1:
                leaf_ok = False
                leaf_detail = f"separator node {g.labels_of(tree.separators[i])} is a leaf"
        for i, d in enumerate(block_deg):
            if d != 1:
                continue
            edge = next(e for e in tree.edges if e.block == i)
            rest = tree.classes[i].block & ~tree.separators[edge.separator]
            if tree.system is None or not tree.system.contains_mask(rest):
                leaf_ok = False
                leaf_detail = f"leaf block {g.labels_of(tree.classes[i].block)} minus its separator is not a cut"
    checks.append(TreeCheck("leaves", leaf_ok, leaf_detail))

    adjacency_ok = True
    adjacency_detail = ""
    adjacent = {(e.separator, e.block) for e in tree.edges}
    for si, sep in enumerate(tree.separators):
        for bi, cls in enumerate(tree.classes):
            contained = sep & ~cls.block == 0
            if contained != ((si, bi) in adjacent):
                adjacency_ok = False
                adjacency_detail = (
                    f"separator {g.labels_of(sep)} vs block {g.labels_of(cls.block)}:"
                    f" containment and adjacency disagree"
                )
    checks.append(TreeCheck("adjacency_law", adjacency_ok, adjacency_detail))
    return TreeReport(tuple(checks))


def check_invariance(system, perm: Mapping[str, str]) -> bool:
    """Whether a vertex permutation maps the cut set onto itself.

    ``system`` may be a cut system, a nested system, or a structure tree. The
    permutation must be an automorphism of the underlying graph; anything else
    is an error.
    """
    if isinstance(system, StructureTree):
        sys, g = system.system, system.graph
    elif isinstance(system, NestedSystem):
        sys, g = system.system, system.system.graph
    else:
        sys, g = system, system.graph
    if not g.is_automorphism(perm):
        raise ValueError("the supplied permutation is not an automorphism")
    if sys is None:
        return True
    table = g.permutation_table(perm)
    masks = {c.vertices for c in sys.cuts}
    return {g.map_mask(m, table) for m in masks} == masks
