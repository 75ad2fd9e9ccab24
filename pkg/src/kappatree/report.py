"""Serialization surfaces: JSON report documents, DOT trees, TSV summaries.

All arrays are sorted by canonical keys and dictionaries are built in a fixed
order, so serializing the same analysis twice yields identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .decompose import DecompositionReport, LevelAnalysis
from .graph import Graph
from .tree import StructureTree


def _label_list(g: Graph, mask: int) -> list[str]:
    return list(g.labels_of(mask))


def analyze_document(level: LevelAnalysis) -> dict[str, Any]:
    """Payload of the `analyze` command: level, families, cuts, crossing stats."""
    if level.trivial:
        return {"kappa": None, "trivial": True}
    g = level.graph
    cuts = []
    for i, cut in enumerate(level.system.cuts):
        cuts.append(
            {
                "id": i,
                "vertices": _label_list(g, cut.vertices),
                "boundary": _label_list(g, cut.boundary),
                "mu": level.stats.mu[i],
                "isA": level.flags[i].is_a,
                "isB": level.flags[i].is_b,
            }
        )
    return {
        "kappa": level.kappa,
        "trivial": False,
        "vertices": list(g.labels),
        "inseparableSets": [_label_list(g, m) for m in level.omega.members],
        "cuts": cuts,
        "separators": [_label_list(g, s) for s in level.system.separators],
        "muMin": level.stats.mu_min,
        "crossingPairs": [list(p) for p in level.stats.crossing_pairs],
    }


def tree_document(level: LevelAnalysis) -> dict[str, Any]:
    """The ReportDocument for one level (no recursion)."""
    g = level.graph
    tree = level.tree
    doc: dict[str, Any] = {
        "kappa": level.kappa,
        "trivial": level.trivial,
        "vertices": list(g.labels),
        "separators": [_label_list(g, s) for s in tree.separators],
        "blocks": [_label_list(g, c.block) for c in tree.classes],
        "slices": [_label_list(g, s.vertices) for s in tree.slices],
        "muMin": level.stats.mu_min if level.stats else None,
        "cuts": [],
        "tree": _tree_nodes(tree),
        "warnings": _warning_docs(level),
        "recursion": None,
    }
    if level.system is not None:
        selected = {
            cut.vertices: level.tree.class_of_cut(i)
            for i, cut in enumerate(tree.system.cuts)
        } if tree.system else {}
        for i, cut in enumerate(level.system.cuts):
            doc["cuts"].append(
                {
                    "id": i,
                    "vertices": _label_list(g, cut.vertices),
                    "boundary": _label_list(g, cut.boundary),
                    "mu": level.stats.mu[i],
                    "isA": level.flags[i].is_a,
                    "isB": level.flags[i].is_b,
                    "classId": selected.get(cut.vertices),
                }
            )
    return doc


def _tree_nodes(tree: StructureTree) -> dict[str, Any]:
    g = tree.graph
    nodes = [
        {"kind": "separator", "vertices": _label_list(g, s)} for s in tree.separators
    ]
    nodes += [
        {"kind": "block", "vertices": _label_list(g, c.block)} for c in tree.classes
    ]
    sep_count = len(tree.separators)
    edges = [
        {"from": e.separator, "to": sep_count + e.block, "cut": e.cut}
        for e in tree.edges
    ]
    return {"nodes": nodes, "edges": edges}


def _warning_docs(level: LevelAnalysis) -> list[dict[str, Any]]:
    g = level.graph
    out = []
    for w in level.warnings:
        out.append(
            {
                "cut": w.cut,
                "closedBlock": _label_list(g, w.closed_block),
                "hostBlocks": [
                    _label_list(g, level.tree.classes[i].block) for i in w.hosts
                ],
            }
        )
    return out


def decomposition_document(report: DecompositionReport) -> dict[str, Any]:
    """ReportDocument with nested documents per block under "recursion"."""
    doc = tree_document(report.level)
    if report.level.trivial:
        return doc
    recursion: dict[str, Any] = {}
    for branch in report.branches:
        key = ",".join(
            report.level.graph.labels_of(report.level.tree.classes[branch.block_index].block)
        )
        if branch.child is None:
            recursion[key] = {"stopped": branch.stopped}
        else:
            child = decomposition_document(branch.child)
            child["idealEdges"] = [list(e) for e in branch.block_graph.ideal_edges]
            recursion[key] = child
    doc["recursion"] = recursion
    return doc


def to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- DOT ----------------------------------------------------------------------


def _dot_label(labels: list[str]) -> str:
    return "{" + ",".join(labels) + "}"


def emit_dot(tree: StructureTree) -> str:
    """Render the tree in DOT: white circles for separators, black for blocks."""
    g = tree.graph
    lines = ["digraph structure_tree {", "  node [shape=circle, style=filled];"]
    for i, sep in enumerate(tree.separators):
        lines.append(
            f'  s{i} [label="{_dot_label(_label_list(g, sep))}", fillcolor=white];'
        )
    for i, cls in enumerate(tree.classes):
        lines.append(
            f'  b{i} [label="{_dot_label(_label_list(g, cls.block))}", '
            "fillcolor=black, fontcolor=white];"
        )
    for e in tree.edges:
        lines.append(f'  s{e.separator} -> b{e.block} [label="c{e.cut}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- TSV summary ---------------------------------------------------------------

SUMMARY_COLUMNS = [
    "path",
    "vertices",
    "kappa",
    "cuts",
    "separators",
    "blocks",
    "slices",
    "muMin",
    "warnings",
]


def summary_rows(report: DecompositionReport, path: str = "root") -> list[dict[str, Any]]:
    level = report.level
    row = {
        "path": path,
        "vertices": level.graph.n,
        "kappa": level.kappa if level.kappa is not None else "trivial",
        "cuts": len(level.system) if level.system else 0,
        "separators": len(level.tree.separators),
        "blocks": len(level.tree.classes),
        "slices": len(level.tree.slices),
        "muMin": level.stats.mu_min if level.stats else "",
        "warnings": len(level.warnings),
    }
    rows = [row]
    for branch in report.branches:
        sub = f"{path}/b{branch.block_index}"
        if branch.child is None:
            rows.append(
                {
                    "path": sub,
                    "vertices": branch.block_graph.graph.n,
                    "kappa": "depth-limit",
                    "cuts": "",
                    "separators": "",
                    "blocks": "",
                    "slices": "",
                    "muMin": "",
                    "warnings": "",
                }
            )
        else:
            rows.extend(summary_rows(branch.child, sub))
    return rows


def summary_tsv(report: DecompositionReport) -> str:
    lines = ["\t".join(SUMMARY_COLUMNS)]
    for row in summary_rows(report):
        lines.append("\t".join(str(row[c]) for c in SUMMARY_COLUMNS))
    return "\n".join(lines) + "\n"
