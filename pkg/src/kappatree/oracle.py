"""Definition-level brute-force references for inseparability, nesting, and cuts.

These run the raw quantifier form of each notion with no shortcuts, so they
are slow and budget-guarded, but they are the ground truth the fast paths are
held to. They ship in the product so `verify` can self-certify results on any
small graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cuts import Cut, CutSystem, make_cut
from .errors import OracleBudgetError
from .graph import Graph, corner_decomposition
from .inseparability import OmegaFamily


@dataclass(frozen=True)
class OracleBudget:
    """Hard input caps for the brute-force routines."""

    max_vertices: int = 12
    max_subset_size: int | None = None


DEFAULT_BUDGET = OracleBudget()


def _guard(g: Graph, budget: OracleBudget, subset_size: int | None = None) -> None:
    if g.n > budget.max_vertices:
        raise OracleBudgetError(
            f"graph has {g.n} vertices, oracle budget allows {budget.max_vertices}"
        )
    if (
        subset_size is not None
        and budget.max_subset_size is not None
        and subset_size > budget.max_subset_size
    ):
        raise OracleBudgetError(
            f"subset size {subset_size} above oracle budget {budget.max_subset_size}"
        )


def _masks_of_size_at_most(n: int, k: int):
    for r in range(0, k + 1):
        for sub in combinations(range(n), r):
            yield sum(1 << i for i in sub)


def oracle_inseparable(g: Graph, members, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Exhaustive check that no boundary of size at most k splits the set.

    Enumerates every subset S with |S| <= k and every component of the graph
    minus S; the set must lie inside the component plus its boundary or
    entirely avoid the open component.
    """
    _guard(g, budget, k)
    y = g.mask_of(members) if not isinstance(members, int) else members
    if y.bit_count() < k + 1:
        return False
    for s in _masks_of_size_at_most(g.n, k):
        for comp in g.components(g.full & ~s):
            bound = g.boundary(comp)
            near = comp | bound
            star = g.full & ~near
            far = star | bound
            if y & ~near != 0 and y & ~far != 0:
                return False
    return True


def oracle_nested(sys: CutSystem, c: Cut, d: Cut, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Definition-level nestedness: some corner holds no cut of the system and
    has both adjacent links empty."""
    _guard(sys.graph, budget)
    dec = corner_decomposition(sys.graph, c.vertices, d.vertices)
    for corner, link1, link2 in dec.corners_with_links():
        if link1 == 0 and link2 == 0 and not sys.has_member_within(corner):
            return True
    return False


def oracle_cuts(g: Graph, kappa: int, omega: OmegaFamily, budget: OracleBudget = DEFAULT_BUDGET) -> CutSystem:
    """Exhaustive cut enumeration straight from the definition.

    Scans every kappa-subset with no separator shortcuts and applies the
    parting definition verbatim to every pair of omega members.
    """
    _guard(g, budget, kappa)
    found = []
    for sub in combinations(range(g.n), kappa):
        s = sum(1 << i for i in sub)
        for comp in g.components(g.full & ~s):
            if g.boundary(comp) != s:
                continue
            near = comp | s
            star = g.full & ~near
            far = star | s
            parts_some_pair = False
            for a in range(len(omega.members)):
                for b in range(a + 1, len(omega.members)):
                    ya, yb = omega.members[a], omega.members[b]
                    if ya & ~s == 0 or yb & ~s == 0:
                        continue
                    if (ya & ~near == 0 and yb & ~far == 0) or (
                        yb & ~near == 0 and ya & ~far == 0
                    ):
                        parts_some_pair = True
                        break
                if parts_some_pair:
                    break
            if parts_some_pair:
                found.append(comp)
    masks = sorted(set(found), key=g.labels_of)
    return CutSystem(g, kappa, tuple(make_cut(g, m) for m in masks), omega)


def same_cut_masks(a: CutSystem, b: CutSystem) -> bool:
    return [c.vertices for c in a.cuts] == [c.vertices for c in b.cuts]
