"""Immutable simple graphs and the vertex-set algebra everything else builds on.

A vertex set is a plain ``int`` bitmask: bit ``i`` stands for the i-th label in
lexicographic order. That keeps the set operations the enumeration modules do
millions of times at word speed, and it scales past 64 vertices because Python
integers are unbounded. All public output is ordered by label, so repeated runs
are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple graph over string-labeled vertices.

    Instances never mutate after construction; every operation below is a pure
    function of the graph and its arguments, so values can be shared freely
    across workers. Self-loops are dropped and parallel edges collapse in the
    adjacency bitmasks.
    """

    __slots__ = ("labels", "adj", "full", "_index")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        edge_list = [(str(u), str(v)) for u, v in edges]
        names = {str(v) for v in vertices}
        names.update(u for e in edge_list for u in e)
        self.labels: tuple[str, ...] = tuple(sorted(names))
        self._index: dict[str, int] = {lab: i for i, lab in enumerate(self.labels)}
        adj = [0] * len(self.labels)
        for u, v in edge_list:
            if u == v:
                continue  # loops carry no information for vertex separation
            ui, vi = self._index[u], self._index[v]
            adj[ui] |= 1 << vi
            adj[vi] |= 1 << ui
        self.adj: tuple[int, ...] = tuple(adj)
        self.full: int = (1 << len(self.labels)) - 1

    # -- basics ----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        return self._index[label]

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self._index[str(lab)]
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self._index[u]] >> self._index[v] & 1)

    def edges(self) -> list[tuple[str, str]]:
        """All edges as label pairs, each sorted, the list sorted."""
        out = []
        for i in range(self.n):
            higher = self.adj[i] >> (i + 1) << (i + 1)
            for j in bits(higher):
                out.append(tuple(sorted((self.labels[i], self.labels[j]))))
        return sorted(out)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n} vertices, {self.edge_count()} edges)"

    # -- set algebra -------------------------------------------------------

    def neighbourhood(self, mask: int) -> int:
        """Union of the neighbours of every vertex in ``mask`` (may overlap mask)."""
        nb = 0
        m = mask
        while m:
            low = m & -m
            nb |= self.adj[low.bit_length() - 1]
            m ^= low
        return nb

    def boundary(self, mask: int) -> int:
        """Vertices outside ``mask`` adjacent to at least one vertex of it."""
        return self.neighbourhood(mask) & ~mask

    def star_complement(self, mask: int) -> int:
        """Everything that is neither in ``mask`` nor adjacent to it."""
        return self.full & ~mask & ~self.boundary(mask)

    def double_star_closure(self, mask: int) -> tuple[int, int]:
        """Star-complement applied twice.

        Returns ``(closure, fringe)`` where closure is the double complement and
        fringe is the part of the boundary it swallowed: the boundary vertices
        with no neighbour on the far side.
        """
        star = self.star_complement(mask)
        closure = self.full & ~star & ~self.boundary(star)
        return closure, closure & ~mask

    def components(self, mask: int) -> list[int]:
        """Maximal connected subsets of ``mask``, ordered by smallest member label."""
        out = []
        rest = mask
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                frontier = self.neighbourhood(frontier) & rest & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected_set(self, mask: int) -> bool:
        if mask == 0:
            return False
        comp = mask & -mask
        frontier = comp
        while frontier:
            frontier = self.neighbourhood(frontier) & mask & ~comp
            comp |= frontier
        return comp == mask

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.is_connected_set(self.full)

    # -- derived graphs ----------------------------------------------------

    def subgraph(self, mask: int, extra_edges: Iterable[tuple[str, str]] = ()) -> Graph:
        """Induced subgraph on ``mask`` plus any ``extra_edges`` within it."""
        keep = set(self.labels_of(mask))
        edges = [e for e in self.edges() if e[0] in keep and e[1] in keep]
        edges.extend((u, v) for u, v in extra_edges)
        return Graph(keep, edges)

    # -- automorphisms -----------------------------------------------------

    def permutation_table(self, perm: Mapping[str, str]) -> tuple[int, ...]:
        """Index table for ``perm``; labels absent from ``perm`` stay fixed.

        Raises ``ValueError`` unless the completed map is a bijection on the
        vertex labels.
        """
        table = []
        for lab in self.labels:
            image = str(perm.get(lab, lab))
            if image not in self._index:
                raise ValueError(f"permutation maps {lab!r} outside the graph: {image!r}")
            table.append(self._index[image])
        if len(set(table)) != self.n:
            raise ValueError("permutation is not a bijection on the vertex set")
        return tuple(table)

    def is_automorphism(self, perm: Mapping[str, str]) -> bool:
        """True iff ``perm`` (completed with fixed points) preserves adjacency."""
        try:
            table = self.permutation_table(perm)
        except ValueError:
            return False
        for i in range(self.n):
            image_adj = 0
            for j in bits(self.adj[i]):
                image_adj |= 1 << table[j]
            if image_adj != self.adj[table[i]]:
                return False
        return True

    def map_mask(self, mask: int, table: tuple[int, ...]) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << table[i]
        return out


@dataclass(frozen=True)
class CornerDecomposition:
    """The nine-way split of the vertex set induced by two sets C and D.

    Four corners (pairwise intersections of the sets and their star
    complements), four links (intersections of one set with the other's
    boundary), and the centre where the two boundaries meet. The parts
    partition the vertex set.
    """

    c_and_d: int
    c_and_dstar: int
    cstar_and_d: int
    cstar_and_dstar: int
    c_and_nd: int
    cstar_and_nd: int
    d_and_nc: int
    dstar_and_nc: int
    centre: int

    @property
    def corners(self) -> tuple[int, int, int, int]:
        return (self.c_and_d, self.c_and_dstar, self.cstar_and_d, self.cstar_and_dstar)

    @property
    def links(self) -> tuple[int, int, int, int]:
        return (self.c_and_nd, self.cstar_and_nd, self.d_and_nc, self.dstar_and_nc)

    @property
    def counts(self) -> tuple[int, int, int, int, int]:
        """Link and centre sizes ordered (|C∩ND|, |D*∩NC|, |C*∩ND|, |D∩NC|, |NC∩ND|)."""
        return (
            self.c_and_nd.bit_count(),
            self.dstar_and_nc.bit_count(),
            self.cstar_and_nd.bit_count(),
            self.d_and_nc.bit_count(),
            self.centre.bit_count(),
        )

    def parts(self) -> tuple[int, ...]:
        return self.corners + self.links + (self.centre,)

    def corners_with_links(self) -> tuple[tuple[int, int, int], ...]:
        """Each corner paired with its two adjacent links."""
        return (
            (self.c_and_d, self.c_and_nd, self.d_and_nc),
            (self.c_and_dstar, self.c_and_nd, self.dstar_and_nc),
            (self.cstar_and_d, self.cstar_and_nd, self.d_and_nc),
            (self.cstar_and_dstar, self.cstar_and_nd, self.dstar_and_nc),
        )

    def empty_link_count(self) -> int:
        return sum(1 for link in self.links if link == 0)


def corner_decomposition(g: Graph, c: int, d: int) -> CornerDecomposition:
    """Decompose the vertex set by the sets ``c`` and ``d`` and their boundaries."""
    nc, nd = g.boundary(c), g.boundary(d)
    cstar = g.full & ~c & ~nc
    dstar = g.full & ~d & ~nd
    return CornerDecomposition(
        c_and_d=c & d,
        c_and_dstar=c & dstar,
        cstar_and_d=cstar & d,
        cstar_and_dstar=cstar & dstar,
        c_and_nd=c & nd,
        cstar_and_nd=cstar & nd,
        d_and_nc=d & nc,
        dstar_and_nc=dstar & nc,
        centre=nc & nd,
    )
