"""Pairwise separability, maximal k-inseparable sets, and the level kappa.

A set Y is k-inseparable when it has at least k+1 vertices and no vertex set
with boundary of size at most k splits it. That reduces to a pairwise
condition: every two members must be adjacent or joined by k+1 internally
disjoint paths. The reduction is an implementation theorem and is held to the
definition-level oracle by the test suite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DisconnectedGraphError
from .graph import Graph, bits
from .separators import separates_sets, tight_separator_masks

ADJACENT = "adjacent"


def _max_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t nonadjacent).

    Unit-capacity max-flow on the split network: vertex i becomes an entry
    node 2i and an exit node 2i+1 with a capacity-one arc between them, except
    at the endpoints which are uncapacitated.
    """
    big = g.n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * g.n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap[(b, a)] = 0
        cap[(a, b)] += c

    for i in range(g.n):
        arc(2 * i, 2 * i + 1, big if i in (s, t) else 1)
        for j in bits(g.adj[i]):
            arc(2 * i + 1, 2 * j, 1)

    source, sink = 2 * s, 2 * t + 1
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def disjoint_path_count(g: Graph, u: str, v: str) -> int | str:
    """Internally disjoint u-v path count, or the marker ``"adjacent"``.

    Adjacent pairs cannot be parted by removing other vertices, so no count is
    meaningful for them.
    """
    ui, vi = g.index_of(u), g.index_of(v)
    if ui == vi:
        raise ValueError("u and v must be distinct")
    if g.adj[ui] >> vi & 1:
        return ADJACENT
    return _max_disjoint_paths(g, ui, vi)


class PairSeparability:
    """Lazily cached pair connectivity table for one graph."""

    def __init__(self, g: Graph):
        self.graph = g
        self._paths: dict[tuple[int, int], int] = {}

    def paths(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        got = self._paths.get(key)
        if got is None:
            got = _max_disjoint_paths(self.graph, *key)
            self._paths[key] = got
        return got

    def inseparable(self, i: int, j: int, k: int) -> bool:
        if self.graph.adj[i] >> j & 1:
            return True
        return self.paths(i, j) >= k + 1


def pair_inseparable(g: Graph, u: str, v: str, k: int) -> bool:
    """True iff no boundary of size <= k can part u and v."""
    ui, vi = g.index_of(u), g.index_of(v)
    if ui == vi:
        raise ValueError("u and v must be distinct")
    return PairSeparability(g).inseparable(ui, vi, k)


def is_k_inseparable_set(g: Graph, members: Iterable[str], k: int, table: PairSeparability | None = None) -> bool:
    mask = g.mask_of(members)
    return _is_inseparable_mask(g, mask, k, table or PairSeparability(g))


def _is_inseparable_mask(g: Graph, mask: int, k: int, table: PairSeparability) -> bool:
    idx = list(bits(mask))
    if len(idx) < k + 1:
        return False
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if not table.inseparable(idx[a], idx[b], k):
                return False
    return True


@dataclass(frozen=True)
class OmegaFamily:
    """The maximal k-inseparable sets of one graph, canonically ordered."""

    graph: Graph
    k: int
    members: tuple[int, ...]

    def member_labels(self) -> list[tuple[str, ...]]:
        return [self.graph.labels_of(m) for m in self.members]

    def __len__(self) -> int:
        return len(self.members)


def _maximal_cliques(neigh: list[int], vertices: int) -> list[int]:
    """Bron-Kerbosch with pivoting over a bitmask adjacency relation."""
    out: list[int] = []

    def expand(clique: int, cand: int, done: int) -> None:
        if not cand and not done:
            out.append(clique)
            return
        pool = cand | done
        pivot = max(bits(pool), key=lambda i: (cand & neigh[i]).bit_count())
        for i in list(bits(cand & ~neigh[pivot])):
            bit = 1 << i
            expand(clique | bit, cand & neigh[i], done & neigh[i])
            cand &= ~bit
            done |= bit

    if vertices:
        expand(0, vertices, 0)
    return out


def maximal_k_inseparable_sets(g: Graph, k: int, table: PairSeparability | None = None) -> OmegaFamily:
    """All maximal k-inseparable sets.

    Builds the pairwise-inseparable relation, lists its maximal cliques of at
    least k+1 vertices, then merges any two results sharing k+1 common
    vertices until nothing changes. The merge step is expected to be a no-op
    (two maximal sets cannot overlap that much) but keeps the output honest if
    the clique route ever disagrees with the set-level definition.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    table = table or PairSeparability(g)
    neigh = [0] * g.n
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if table.inseparable(i, j, k):
                neigh[i] |= 1 << j
                neigh[j] |= 1 << i
    found = [c for c in _maximal_cliques(neigh, g.full) if c.bit_count() >= k + 1]

    changed = True
    while changed:
        changed = False
        for a in range(len(found)):
            for b in range(a + 1, len(found)):
                if (found[a] & found[b]).bit_count() >= k + 1:
                    union = found[a] | found[b]
                    found = [m for i, m in enumerate(found) if i not in (a, b)]
                    found.append(union)
                    changed = True
                    break
            if changed:
                break
    found = [m for m in found if not any(m != o and m & ~o == 0 for o in found)]
    found = sorted(set(found), key=g.labels_of)
    return OmegaFamily(g, k, tuple(found))


def compute_kappa(g: Graph, table: PairSeparability | None = None) -> tuple[int, OmegaFamily] | None:
    """The least level at which two inseparable sets can actually be parted.

    Returns ``(kappa, omega)`` where omega is the family of maximal
    kappa-inseparable sets, or ``None`` when no level below |V|-1 admits a
    separated pair; then the whole analysis is trivial and the structure tree
    is a single node.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("kappa is only defined for connected graphs")
    if g.n < 2:
        raise ValueError("need at least two vertices")
    table = table or PairSeparability(g)
    for k in range(1, g.n - 1):
        omega = maximal_k_inseparable_sets(g, k, table)
        if len(omega) < 2 or _separated_pair(g, k, omega) is None:
            continue
        return k, omega
    return None


def _separated_pair(g: Graph, k: int, omega: OmegaFamily) -> tuple[int, int] | None:
    """Search for an omega pair parted by a connected set with boundary size k.

    Candidate boundaries are the tight separators of order k between
    representatives drawn from the private parts of the two sets; at the
    minimal level every qualifying boundary arises this way.
    """
    members = omega.members
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            only_a = members[a] & ~members[b]
            only_b = members[b] & ~members[a]
            for x in bits(only_a):
                for y in bits(only_b):
                    if g.adj[x] >> y & 1:
                        continue
                    for sep in tight_separator_masks(g, x, y, k):
                        side = g.full & ~sep
                        for comp in g.components(side):
                            if g.boundary(comp) != sep:
                                continue
                            if separates_sets(g, comp, sep, members[a], members[b]):
                                return a, b
    return None
