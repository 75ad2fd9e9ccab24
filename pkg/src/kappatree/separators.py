"""Enumeration of tight pair separators.

A set S is a tight x-y separator when x and y lie in distinct components of
the graph minus S and both of those components are adjacent to every vertex of
S. Equivalently S is an inclusion-minimal x-y separator. There are finitely
many of each order, and they drive both the connectivity-level search and the
optional restricted cut enumeration.
"""

from __future__ import annotations

from .graph import Graph, bits


def _component_of(g: Graph, avail: int, seed_bit: int) -> int:
    comp = seed_bit
    frontier = seed_bit
    while frontier:
        frontier = g.neighbourhood(frontier) & avail & ~comp
        comp |= frontier
    return comp


def _pull_toward(g: Graph, sep: int, anchor_bit: int) -> int:
    """Replace ``sep`` by the boundary of the anchor-side component.

    The result still separates, is contained in ``sep``, and the anchor side
    becomes fully adjacent. If the far side was already fully adjacent it stays
    that way, because every survivor of ``sep`` keeps its far-side neighbour.
    """
    comp = _component_of(g, g.full & ~sep, anchor_bit)
    return g.boundary(comp)


def minimal_pair_separators(g: Graph, x: int, y: int) -> list[int]:
    """All tight x-y separators of any order, as masks in canonical order.

    Walks the separator space from the separator hugging ``x`` outward: from
    each known separator S and each s in S, pushing past s means removing
    S plus the neighbours of s and re-tightening around the component of
    ``y``. Every tight separator is reached this way.
    """
    xb, yb = 1 << x, 1 << y
    if g.adj[x] & yb:
        return []  # adjacent vertices admit no separator at all
    first = _pull_toward(g, _pull_toward(g, g.adj[x], yb), xb)
    seen = {first}
    queue = [first]
    while queue:
        sep = queue.pop()
        for s in bits(sep):
            blocked = sep | g.adj[s]
            if blocked & yb:
                continue
            candidate = g.boundary(_component_of(g, g.full & ~blocked, yb))
            candidate = _pull_toward(g, candidate, xb)
            if candidate not in seen:
                seen.add(candidate)
                queue.append(candidate)
    tight = [s for s in seen if _is_tight(g, s, xb, yb)]
    return sorted(tight, key=g.labels_of)


def _is_tight(g: Graph, sep: int, xb: int, yb: int) -> bool:
    if sep & (xb | yb):
        return False
    x_side = _component_of(g, g.full & ~sep, xb)
    if x_side & yb:
        return False
    y_side = _component_of(g, g.full & ~sep, yb)
    return g.boundary(x_side) == sep and g.boundary(y_side) == sep


def enumerate_tight_separators(g: Graph, x: str, y: str, k: int) -> list[list[str]]:
    """The tight x-y separators with exactly ``k`` vertices, as label lists."""
    xi, yi = g.index_of(x), g.index_of(y)
    if xi == yi:
        raise ValueError("x and y must be distinct")
    masks = tight_separator_masks(g, xi, yi, k)
    return [list(g.labels_of(m)) for m in masks]


def tight_separator_masks(g: Graph, x: int, y: int, k: int) -> list[int]:
    return [s for s in minimal_pair_separators(g, x, y) if s.bit_count() == k]


def separates_sets(g: Graph, cut: int, bound: int, a: int, b: int) -> bool:
    """True when ``cut`` puts ``a`` and ``b`` on opposite closed sides.

    One of the sets must fit inside cut plus boundary, the other inside
    star-complement plus boundary, and neither may hide entirely inside the
    boundary itself.
    """
    if a == 0 or b == 0:
        return False
    if a & ~bound == 0 or b & ~bound == 0:
        return False
    star = g.full & ~cut & ~bound
    near, far = cut | bound, star | bound
    return (a & ~near == 0 and b & ~far == 0) or (b & ~near == 0 and a & ~far == 0)
