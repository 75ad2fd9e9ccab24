"""Named graphs used by the test and verification suites."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def x_graph(n: int) -> Graph:
    """Path 1..n, 4-cycle a-b-c-d, and every path vertex joined to a and b."""
    if n < 3:
        raise ValueError("x_graph needs n >= 3")
    path = [str(i) for i in range(1, n + 1)]
    edges = list(zip(path, path[1:]))
    edges += [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
    edges += [(p, "a") for p in path]
    edges += [(p, "b") for p in path]
    return Graph((), edges)


def ring_graph() -> Graph:
    """4-cycle x1..x4 with a pendant triangle vertex yi on each side."""
    xs = ["x1", "x2", "x3", "x4"]
    edges = [(xs[i], xs[(i + 1) % 4]) for i in range(4)]
    for i in range(4):
        yi = f"y{i + 1}"
        edges += [(yi, xs[i]), (yi, xs[(i + 1) % 4])]
    return Graph((), edges)


def complete_graph(m: int) -> Graph:
    names = [str(i) for i in range(1, m + 1)]
    return Graph(names, combinations(names, 2))


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycle needs m >= 3")
    names = [str(i) for i in range(1, m + 1)]
    return Graph((), zip(names, names[1:] + names[:1]))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    left = [f"a{i}" for i in range(1, a + 1)]
    right = [f"b{i}" for i in range(1, b + 1)]
    return Graph((), [(u, v) for u in left for v in right])


def petersen_graph() -> Graph:
    outer = [f"o{i}" for i in range(5)]
    inner = [f"i{i}" for i in range(5)]
    edges = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    edges += [(outer[i], inner[i]) for i in range(5)]
    return Graph((), edges)


def cube_graph() -> Graph:
    """The 3-cube on binary-string labels; edges join strings one bit apart."""
    names = [format(i, "03b") for i in range(8)]
    edges = [
        (u, v)
        for u, v in combinations(names, 2)
        if sum(x != y for x, y in zip(u, v)) == 1
    ]
    return Graph((), edges)


def circulant_graph(m: int, offsets: tuple[int, ...]) -> Graph:
    names = [str(i) for i in range(m)]
    edges = []
    for i in range(m):
        for off in offsets:
            edges.append((names[i], names[(i + off) % m]))
    return Graph((), edges)
