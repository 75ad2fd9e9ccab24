"""Matplotlib rendering of structure trees to image files.

Follows the drawing convention used throughout the library's reports: white
circles for separator nodes, black discs for block nodes, one edge per cut.
Pure file output; no interactive backend is ever required.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .tree import StructureTree


def tree_layout(tree: StructureTree) -> dict[int, tuple[float, float]]:
    """Positions for global node ids (separators first, then blocks).

    Plain layered layout: root at the top, children spread below, each parent
    centered over its subtree. Structure trees are small, so tidy enough.
    """
    sep_count = len(tree.separators)
    total = tree.node_count()
    adjacency: dict[int, list[int]] = {i: [] for i in range(total)}
    for e in tree.edges:
        u, v = e.separator, sep_count + e.block
        adjacency[u].append(v)
        adjacency[v].append(u)

    root = sep_count  # first block node; present even in the trivial tree
    order = max(adjacency, key=lambda i: len(adjacency[i]), default=root)
    root = order if adjacency[order] else root

    pos: dict[int, tuple[float, float]] = {}
    next_x = [0.0]

    def place(node: int, parent: int | None, depth: int) -> float:
        children = [v for v in sorted(adjacency[node]) if v != parent]
        if not children:
            x = next_x[0]
            next_x[0] += 1.0
        else:
            xs = [place(v, node, depth + 1) for v in children]
            x = sum(xs) / len(xs)
        pos[node] = (x, -float(depth))
        return x

    place(root, None, 0)
    for i in range(total):  # disconnected nodes cannot happen, but stay total
        if i not in pos:
            pos[i] = (next_x[0], 0.0)
            next_x[0] += 1.0
    return pos


def render_tree(tree: StructureTree, path: str, title: str | None = None) -> None:
    """Draw the tree and write it to ``path`` (format from the extension)."""
    g = tree.graph
    sep_count = len(tree.separators)
    pos = tree_layout(tree)

    width = max(4.0, 1.4 * max((p[0] for p in pos.values()), default=1.0) + 2.0)
    height = max(3.0, 1.2 * (1.0 + max(-p[1] for p in pos.values())))
    fig, ax = plt.subplots(figsize=(width, height))

    for e in tree.edges:
        (x1, y1) = pos[e.separator]
        (x2, y2) = pos[sep_count + e.block]
        ax.plot([x1, x2], [y1, y2], color="0.4", linewidth=1.0, zorder=1)

    for i, sep in enumerate(tree.separators):
        x, y = pos[i]
        ax.scatter([x], [y], s=900, c="white", edgecolors="black", zorder=2)
        ax.text(x, y, ",".join(g.labels_of(sep)), ha="center", va="center", fontsize=7, zorder=3)
    for i, cls in enumerate(tree.classes):
        x, y = pos[sep_count + i]
        ax.scatter([x], [y], s=900, c="black", edgecolors="black", zorder=2)
        ax.text(
            x, y, ",".join(g.labels_of(cls.block)),
            ha="center", va="center", fontsize=7, color="white", zorder=3,
        )

    if title:
        ax.set_title(title)
    ax.axis("off")
    ax.margins(0.15)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
