"""Nestedness, crossing counts, and the canonical nested subsystem.

Two cuts are nested when they have an isolated corner: a corner holding no
cut whose two adjacent links are empty. For thin cuts that collapses to a
constant-time test: some link of their corner decomposition is empty. The
crossing count mu(C) is the number of system cuts not nested with C; the
canonical subsystem keeps, for every pair of inseparable sets, the cuts whose
crossing count is minimal among those parting the pair. The result is pairwise
nested, covers every separable pair, and is invariant under every automorphism
of the graph, which is what makes the structure tree canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cuts import Cut, CutSystem, separates
from .errors import InvariantError

__all__ = [
    "are_nested",
    "NestingStats",
    "mu_stats",
    "NestedSystem",
    "optimally_nested_subsystem",
    "omega_optimal_subsystem",
    "straddled_separator_diagnostic",
]


def are_nested(sys: CutSystem, a: Cut, b: Cut) -> bool:
    """Thin-pair nestedness: at least one of the four links is empty."""
    return (
        a.vertices & b.boundary == 0
        or a.star & b.boundary == 0
        or b.vertices & a.boundary == 0
        or b.star & a.boundary == 0
    )


@dataclass(frozen=True)
class NestingStats:
    """Crossing counts for every cut of one system."""

    mu: tuple[int, ...]
    crossing_pairs: tuple[tuple[int, int], ...]

    @property
    def mu_min(self) -> int | None:
        return min(self.mu) if self.mu else None


def mu_stats(sys: CutSystem) -> NestingStats:
    mu = [0] * len(sys)
    crossing = []
    for i in range(len(sys)):
        for j in range(i + 1, len(sys)):
            if not are_nested(sys, sys[i], sys[j]):
                mu[i] += 1
                mu[j] += 1
                crossing.append((i, j))
    return NestingStats(tuple(mu), tuple(crossing))


@dataclass(frozen=True)
class NestedSystem:
    """A pairwise nested subsystem together with why each cut was kept.

    ``provenance[i]`` lists the omega pairs for which subsystem cut ``i`` is
    crossing-minimal; empty for the globally-minimal variant.
    ``unseparated_pairs`` records omega pairs no parent cut parts at all.
    """

    system: CutSystem
    parent: CutSystem
    provenance: tuple[tuple[tuple[int, int], ...], ...]
    unseparated_pairs: tuple[tuple[int, int], ...] = ()

    def __len__(self) -> int:
        return len(self.system)


def _check_pairwise_nested(sub: CutSystem, parent: CutSystem) -> None:
    for i in range(len(sub)):
        for j in range(i + 1, len(sub)):
            if not are_nested(parent, sub[i], sub[j]):
                raise InvariantError(
                    f"selected cuts {i} and {j} cross; the nested-subsystem guarantee failed"
                )


def optimally_nested_subsystem(sys: CutSystem, stats: NestingStats | None = None) -> NestedSystem:
    """The cuts whose crossing count is globally minimal."""
    if not len(sys):
        raise ValueError("empty cut system has no optimally nested subsystem")
    stats = stats or mu_stats(sys)
    best = stats.mu_min
    ids = [i for i, m in enumerate(stats.mu) if m == best]
    sub = sys.subsystem(ids)
    _check_pairwise_nested(sub, sys)
    return NestedSystem(sub, sys, tuple(() for _ in range(len(sub))))


def omega_optimal_subsystem(
    sys: CutSystem, omega=None, stats: NestingStats | None = None
) -> NestedSystem:
    """Per-pair crossing-minimal cuts, unioned over all omega pairs.

    For each pair of inseparable sets, every cut parting the pair that attains
    the minimal crossing count among such cuts is kept (ties all survive).
    Pairs with no parting cut contribute nothing and are recorded.
    """
    omega = omega or sys.omega
    if omega is None:
        raise ValueError("an omega family is required")
    stats = stats or mu_stats(sys)
    g = sys.graph
    winners: dict[int, set[tuple[int, int]]] = {}
    unseparated = []
    for a in range(len(omega.members)):
        for b in range(a + 1, len(omega.members)):
            parting = [
                i
                for i, cut in enumerate(sys.cuts)
                if separates(g, cut, omega.members[a], omega.members[b])
            ]
            if not parting:
                unseparated.append((a, b))
                continue
            best = min(stats.mu[i] for i in parting)
            for i in parting:
                if stats.mu[i] == best:
                    winners.setdefault(i, set()).add((a, b))
    sub = sys.subsystem(sorted(winners))
    _check_pairwise_nested(sub, sys)
    provenance = []
    for cut in sub.cuts:
        parent_id = sys.id_of(cut.vertices)
        provenance.append(tuple(sorted(winners[parent_id])))
    return NestedSystem(sub, sys, tuple(provenance), tuple(unseparated))


def straddled_separator_diagnostic(sys: CutSystem, cut: Cut) -> int:
    """Twice the number of separators with vertices on both open sides of the cut.

    A quick estimate of the crossing count that happens to be exact on some
    graphs; reported for diagnostics only, never asserted.
    """
    straddling = sum(
        1 for sep in sys.separators if sep & cut.vertices and sep & cut.star
    )
    return 2 * straddling
