"""Cut systems: enumeration, axiom checking, classification, slices, hat graph.

A cut is a nonempty connected vertex set C, recorded with its boundary and its
star-complement, that is a full component of the graph minus its boundary and
parts two members of the inseparable-set family. The family of all such cuts
at the minimal level satisfies two axioms that the rest of the theory rides
on: when two opposite corners of a cut pair are occupied, their occupied
components are cuts themselves (corner closure), and some opposite corner pair
of every cut pair is occupied (opposite-corner occupancy).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvariantError
from .graph import Graph, bits, corner_decomposition
from .inseparability import OmegaFamily
from .separators import enumerate_tight_separators, separates_sets, tight_separator_masks
from .workers import parallel_map

__all__ = [
    "Cut",
    "PreCut",
    "CutSystem",
    "Slice",
    "HatGraph",
    "separates",
    "enumerate_cuts",
    "verify_axioms",
    "classify_cut",
    "CutFlags",
    "find_slices",
    "hat_graph",
    "enumerate_tight_separators",
    "AxiomCheck",
    "AxiomReport",
]


@dataclass(frozen=True)
class Cut:
    """A connected vertex set with its boundary and star-complement (as masks)."""

    vertices: int
    boundary: int
    star: int


@dataclass(frozen=True)
class PreCut:
    """One side of a cut: the cut itself or its star-complement.

    Star-complementation is a bijective involution on the pre-cuts of a
    system; ``complement`` realizes it.
    """

    cut: Cut
    starred: bool = False

    @property
    def vertices(self) -> int:
        return self.cut.star if self.starred else self.cut.vertices

    @property
    def boundary(self) -> int:
        return self.cut.boundary

    @property
    def star(self) -> int:
        return self.cut.vertices if self.starred else self.cut.star

    def complement(self) -> "PreCut":
        return PreCut(self.cut, not self.starred)


class CutSystem:
    """An ordered family of cuts at one level over one graph."""

    def __init__(self, graph: Graph, kappa: int, cuts: tuple[Cut, ...], omega: OmegaFamily | None = None):
        self.graph = graph
        self.kappa = kappa
        self.cuts = tuple(cuts)
        self.omega = omega
        self._ids = {c.vertices: i for i, c in enumerate(self.cuts)}

    def __len__(self) -> int:
        return len(self.cuts)

    def __iter__(self):
        return iter(self.cuts)

    def __getitem__(self, i: int) -> Cut:
        return self.cuts[i]

    def id_of(self, vertices: int) -> int | None:
        """Cut id for a vertex mask; identity of a cut is its vertex set."""
        return self._ids.get(vertices)

    def contains_mask(self, vertices: int) -> bool:
        return vertices in self._ids

    def has_member_within(self, region: int) -> bool:
        """True when some cut of the system sits inside ``region``."""
        return any(c.vertices & ~region == 0 for c in self.cuts)

    @property
    def separators(self) -> tuple[int, ...]:
        seen = sorted({c.boundary for c in self.cuts}, key=self.graph.labels_of)
        return tuple(seen)

    def pre_cuts(self) -> list[PreCut]:
        return [PreCut(c, s) for c in self.cuts for s in (False, True)]

    def subsystem(self, ids: list[int]) -> "CutSystem":
        chosen = sorted((self.cuts[i] for i in ids), key=lambda c: self.graph.labels_of(c.vertices))
        return CutSystem(self.graph, self.kappa, tuple(chosen), self.omega)

    def separator_labels(self) -> list[tuple[str, ...]]:
        return [self.graph.labels_of(s) for s in self.separators]


def make_cut(g: Graph, vertices: int) -> Cut:
    bound = g.boundary(vertices)
    return Cut(vertices, bound, g.full & ~vertices & ~bound)


def separates(g: Graph, cut: Cut, a: int, b: int) -> bool:
    """True when the cut parts the sets ``a`` and ``b`` (masks)."""
    return separates_sets(g, cut.vertices, cut.boundary, a, b)


def _candidate_separators(g: Graph, kappa: int, omega: OmegaFamily, tight_only: bool) -> list[int]:
    if not tight_only:
        return [sum(1 << i for i in sub) for sub in combinations(range(g.n), kappa)]
    found: set[int] = set()
    members = omega.members
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            for x in bits(members[a] & ~members[b]):
                for y in bits(members[b] & ~members[a]):
                    if g.adj[x] >> y & 1:
                        continue
                    found.update(tight_separator_masks(g, x, y, kappa))
    return sorted(found)


def enumerate_cuts(g: Graph, kappa: int, omega: OmegaFamily, *, tight_only: bool = False) -> CutSystem:
    """Every full component with a size-kappa boundary that parts two omega members.

    The default scans all kappa-subsets of the vertex set as candidate
    boundaries. With ``tight_only`` the scan is restricted to tight pair
    separators between representatives of distinct omega members, which is
    equivalent at the minimal level and far cheaper on larger graphs; the test
    suite pins the equivalence on small graphs.
    """

    def cuts_at(sep: int) -> list[int]:
        got = []
        for comp in g.components(g.full & ~sep):
            if g.boundary(comp) != sep:
                continue
            for a in range(len(omega.members)):
                for b in range(a + 1, len(omega.members)):
                    if separates_sets(g, comp, sep, omega.members[a], omega.members[b]):
                        got.append(comp)
                        break
                else:
                    continue
                break
        return got

    candidates = _candidate_separators(g, kappa, omega, tight_only)
    masks = sorted(
        {m for group in parallel_map(cuts_at, candidates, min_chunk=256) for m in group},
        key=g.labels_of,
    )
    cuts = tuple(make_cut(g, m) for m in masks)
    for cut in cuts:
        if g.boundary(cut.star) != cut.boundary:
            raise InvariantError(
                f"cut {g.labels_of(cut.vertices)} is not recovered from its star-complement"
            )
    return CutSystem(g, kappa, cuts, omega)


# -- axiom verification ------------------------------------------------------


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failing(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.ok]


def verify_axioms(sys: CutSystem) -> AxiomReport:
    """Check the cut-system axioms over all cut pairs.

    Reported checks: the star-complement involution recovers every cut;
    corner closure (occupied components of doubly occupied opposite corners
    are members); opposite-corner occupancy; the remainder form (both C minus
    ND and C* minus ND hold a member); and agreement of the last two, which
    the theory makes equivalent.
    """
    g = sys.graph
    checks: list[AxiomCheck] = []

    involution = AxiomCheck("involution", True)
    for i, c in enumerate(sys.cuts):
        if g.boundary(c.star) != c.boundary or not g.is_connected_set(c.vertices):
            involution = AxiomCheck(
                "involution", False, f"cut {i} {g.labels_of(c.vertices)} fails the double-complement law"
            )
            break
    checks.append(involution)

    closure = AxiomCheck("corner_components", True)
    occupancy = AxiomCheck("opposite_corners", True)
    remainders = AxiomCheck("side_remainders", True)
    occupancy_all = True
    remainders_all = True

    for i in range(len(sys.cuts)):
        for j in range(i, len(sys.cuts)):
            c, d = sys.cuts[i], sys.cuts[j]
            dec = corner_decomposition(g, c.vertices, d.vertices)
            opposite = (
                (dec.c_and_d, dec.cstar_and_dstar),
                (dec.c_and_dstar, dec.cstar_and_d),
            )
            occupied_pairs = [
                pair
                for pair in opposite
                if sys.has_member_within(pair[0]) and sys.has_member_within(pair[1])
            ]
            if not occupied_pairs:
                occupancy_all = False
                if occupancy.ok:
                    occupancy = AxiomCheck(
                        "opposite_corners",
                        False,
                        f"cuts {i},{j}: no opposite corner pair holds members",
                    )
            if closure.ok:
                for pair in occupied_pairs:
                    for corner in pair:
                        for comp in g.components(corner):
                            if sys.has_member_within(comp) and not sys.contains_mask(comp):
                                closure = AxiomCheck(
                                    "corner_components",
                                    False,
                                    f"cuts {i},{j}: corner component "
                                    f"{g.labels_of(comp)} holds a member but is not one",
                                )
                                break
                        if not closure.ok:
                            break
                    if not closure.ok:
                        break

    for i in range(len(sys.cuts)):
        for j in range(len(sys.cuts)):
            c, d = sys.cuts[i], sys.cuts[j]
            away_from_nd = g.full & ~d.boundary
            if not sys.has_member_within(c.vertices & away_from_nd) or not sys.has_member_within(
                c.star & away_from_nd
            ):
                remainders_all = False
                if remainders.ok:
                    remainders = AxiomCheck(
                        "side_remainders",
                        False,
                        f"cuts {i},{j}: a side minus the other boundary holds no member",
                    )

    checks.append(closure)
    checks.append(occupancy)
    checks.append(remainders)
    checks.append(
        AxiomCheck(
            "remainder_agreement",
            occupancy_all == remainders_all,
            "" if occupancy_all == remainders_all else "occupancy and remainder forms disagree",
        )
    )
    return AxiomReport(tuple(checks))


# -- classification, slices, hat graph ----------------------------------------


@dataclass(frozen=True)
class CutFlags:
    """Classification of one cut within its system.

    ``is_a``: nested with every cut of the system. ``is_b``: the
    star-complement has exactly one component that is itself a cut. Every thin
    cut carries at least one of the flags.
    """

    is_a: bool
    is_b: bool


def classify_cut(sys: CutSystem, cut: Cut) -> CutFlags:
    from .nesting import are_nested  # local import; nesting builds on this module

    is_a = all(are_nested(sys, cut, other) for other in sys.cuts)
    cut_components = sum(1 for comp in sys.graph.components(cut.star) if sys.contains_mask(comp))
    return CutFlags(is_a=is_a, is_b=cut_components == 1)


@dataclass(frozen=True)
class Slice:
    """A component of the graph minus a separator that is not a cut."""

    vertices: int
    separator: int


def find_slices(g: Graph, sys: CutSystem) -> tuple[Slice, ...]:
    """All slices of the system, deduplicated by vertex set."""
    seen: dict[int, Slice] = {}
    for sep in sys.separators:
        for comp in g.components(g.full & ~sep):
            if not sys.contains_mask(comp) and comp not in seen:
                seen[comp] = Slice(comp, sep)
    return tuple(sorted(seen.values(), key=lambda s: g.labels_of(s.vertices)))


@dataclass(frozen=True)
class HatGraph:
    """The slice-free quotient of a graph under a thin cut system.

    Slice vertices are removed and the boundary of every slice becomes a
    clique, which preserves every cut boundary. ``lifted`` holds the image of
    the source system with cut ids aligned to the source ids.
    """

    graph: Graph
    source: Graph
    kept: dict[str, str]
    lifted: CutSystem
    slices: tuple[Slice, ...]

    def to_hat_mask(self, source_mask: int) -> int:
        out = 0
        for i in bits(source_mask):
            lab = self.source.labels[i]
            if lab in self.kept:
                out |= 1 << self.graph.index_of(lab)
        return out

    def to_source_mask(self, hat_mask: int) -> int:
        out = 0
        for i in bits(hat_mask):
            out |= 1 << self.source.index_of(self.graph.labels[i])
        return out


def hat_graph(g: Graph, sys: CutSystem) -> HatGraph:
    """Remove slice vertices and join each slice boundary into a clique."""
    slices = find_slices(g, sys)
    dropped = 0
    extra: list[tuple[str, str]] = []
    for sl in slices:
        dropped |= sl.vertices
        rim = list(g.labels_of(g.boundary(sl.vertices)))
        extra.extend((rim[i], rim[j]) for i in range(len(rim)) for j in range(i + 1, len(rim)))
    kept_mask = g.full & ~dropped
    hat = g.subgraph(kept_mask, extra)

    lifted_cuts = []
    for cut in sys.cuts:
        hv = hat.mask_of(lab for lab in g.labels_of(cut.vertices & kept_mask))
        lifted = make_cut(hat, hv)
        if hat.labels_of(lifted.boundary) != g.labels_of(cut.boundary):
            raise InvariantError(
                f"hat graph changed the boundary of cut {g.labels_of(cut.vertices)}"
            )
        lifted_cuts.append(lifted)
    lifted_sys = CutSystem(hat, sys.kappa, tuple(lifted_cuts))  # omega masks do not transfer
    kept = {lab: lab for lab in hat.labels}
    return HatGraph(graph=hat, source=g, kept=kept, lifted=lifted_sys, slices=slices)
