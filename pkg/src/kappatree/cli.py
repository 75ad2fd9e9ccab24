"""Command-line front end.

Subcommands: analyze (level, families, cuts, crossing stats), tree (structure
tree as JSON or DOT), decompose (full recursion), verify (axioms plus oracle
agreement on small graphs), report (decomposition JSON, TSV summary, and tree
figures written to a directory).

Exit codes: 0 success, 1 input error, 2 disconnected input, 3 internal
invariant violation or failed verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any

from .cuts import verify_axioms
from .decompose import analyze_level, decompose_recursively
from .errors import (
    DisconnectedGraphError,
    InvariantError,
    KappatreeError,
    OracleBudgetError,
    ParseError,
)
from .graph import Graph
from .nesting import are_nested
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudget,
    oracle_cuts,
    oracle_inseparable,
    oracle_nested,
    same_cut_masks,
)
from .report import (
    analyze_document,
    decomposition_document,
    emit_dot,
    summary_tsv,
    to_json,
    tree_document,
)
from .tree import validate_tree

USAGE_EXIT = 1
INPUT_EXIT = 1
DISCONNECTED_EXIT = 2
INVARIANT_EXIT = 3


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    """Parse a graph and require it to be connected.

    Edge-list format: one edge per line, two whitespace-separated labels,
    ``#`` starts a comment. Loops are dropped and repeated edges collapse.
    The DOT subset accepts an undirected ``graph`` block whose statements are
    bare node ids or ``a -- b`` edge chains.
    """
    if fmt == "edgelist":
        g = _parse_edgelist(text)
    elif fmt in ("dot", "dot-subset"):
        g = _parse_dot(text)
    else:
        raise ParseError(f"unknown format {fmt!r}")
    if g.n == 0:
        raise ParseError("no vertices found")
    if not g.is_connected():
        raise DisconnectedGraphError("input graph is not connected")
    return g


def _parse_edgelist(text: str) -> Graph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two labels, got {len(parts)}", lineno)
        edges.append((parts[0], parts[1]))
    return Graph((), edges)


def _parse_dot(text: str) -> Graph:
    stripped = []
    for raw in text.splitlines():
        line = raw.split("//", 1)[0].split("#", 1)[0].strip()
        if line:
            stripped.append(line)
    body = " ".join(stripped)
    if "->" in body:
        raise ParseError("directed edges are not supported")
    open_idx = body.find("{")
    close_idx = body.rfind("}")
    if open_idx < 0 or close_idx < 0 or not body[:open_idx].strip().startswith("graph"):
        raise ParseError("expected an undirected graph block")
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for statement in body[open_idx + 1 : close_idx].split(";"):
        statement = statement.strip()
        if not statement:
            continue
        if "[" in statement:
            statement = statement.split("[", 1)[0].strip()
        chain = [tok.strip().strip('"') for tok in statement.split("--")]
        chain = [tok for tok in chain if tok]
        if not chain:
            continue
        vertices.extend(chain)
        edges.extend(zip(chain, chain[1:]))
    return Graph(vertices, edges)


def _load(path: str, fmt: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text, fmt)


def _say(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _cmd_analyze(args) -> int:
    g = _load(args.input, args.format)
    level = analyze_level(g, tight_only=args.tight)
    _say(args, f"{g.n} vertices, {g.edge_count()} edges; "
               + ("trivial" if level.trivial else f"kappa={level.kappa}, {len(level.system)} cuts"))
    sys.stdout.write(to_json(analyze_document(level)))
    return 0


def _cmd_tree(args) -> int:
    g = _load(args.input, args.format)
    level = analyze_level(g, tight_only=args.tight)
    if args.dot:
        sys.stdout.write(emit_dot(level.tree))
    else:
        sys.stdout.write(to_json(tree_document(level)))
    return 0


def _cmd_decompose(args) -> int:
    g = _load(args.input, args.format)
    report = decompose_recursively(g, max_depth=args.max_depth, tight_only=args.tight)
    _say(args, f"decomposition has {len(report.levels())} levels")
    sys.stdout.write(to_json(decomposition_document(report)))
    return 0


def _cmd_report(args) -> int:
    from .figures import render_tree

    g = _load(args.input, args.format)
    report = decompose_recursively(g, max_depth=args.max_depth, tight_only=args.tight)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(to_json(decomposition_document(report)))
    (out / "summary.tsv").write_text(summary_tsv(report))
    figures = []

    def render(node, path_name: str) -> None:
        path = out / f"tree_{path_name}.png"
        render_tree(node.level.tree, str(path), title=_figure_title(node))
        figures.append(path.name)
        for branch in node.branches:
            if branch.child is not None:
                render(branch.child, f"{path_name}_b{branch.block_index}")

    render(report, "root")
    _say(args, f"wrote report.json, summary.tsv and {len(figures)} figures to {out}")
    return 0


def _figure_title(node) -> str:
    level = node.level
    if level.trivial:
        return f"depth {node.depth}: trivial"
    return f"depth {node.depth}: level {level.kappa}, {len(level.system)} cuts"


def _cmd_verify(args) -> int:
    g = _load(args.input, args.format)
    budget = OracleBudget(max_vertices=args.budget) if args.budget else DEFAULT_BUDGET
    checks: list[dict[str, Any]] = []

    def add(name: str, status: str, detail: str = "") -> None:
        checks.append({"name": name, "status": status, "detail": detail})

    level = analyze_level(g, tight_only=args.tight)
    if level.trivial:
        add("analysis", "pass", "trivial decomposition; nothing to verify")
    else:
        rep = verify_axioms(level.system)
        for c in rep.checks:
            add(f"axioms/{c.name}", "pass" if c.ok else "fail", c.detail)
        nested_rep = verify_axioms(level.nested.system)
        add(
            "axioms/nested-subsystem",
            "pass" if nested_rep.ok else "fail",
            "" if nested_rep.ok else "; ".join(c.name for c in nested_rep.failing()),
        )
        tree_rep = validate_tree(level.tree, level.kappa)
        for c in tree_rep.checks:
            add(f"tree/{c.name}", "pass" if c.ok else "fail", c.detail)

        try:
            reference = oracle_cuts(g, level.kappa, level.omega, budget)
            add(
                "oracle/cut-enumeration",
                "pass" if same_cut_masks(level.system, reference) else "fail",
            )
            nest_ok = all(
                oracle_nested(level.system, a, b, budget) == are_nested(level.system, a, b)
                for a in level.system.cuts
                for b in level.system.cuts
            )
            add("oracle/nestedness", "pass" if nest_ok else "fail")
            insep_ok = all(
                oracle_inseparable(g, m, level.kappa, budget) for m in level.omega.members
            )
            add("oracle/inseparable-members", "pass" if insep_ok else "fail")
        except OracleBudgetError as exc:
            add("oracle", "skipped", str(exc))

    ok = all(c["status"] != "fail" for c in checks)
    sys.stdout.write(to_json({"pass": ok, "checks": checks}))
    _say(args, "verification passed" if ok else "verification FAILED")
    return 0 if ok else INVARIANT_EXIT


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # return exit code 1 for bad usage, not argparse's 2
        raise ParseError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="kappatree", description="Vertex-cut structure trees for connected graphs.")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("input", help="graph file")
        p.add_argument("--format", choices=["edgelist", "dot-subset"], default="edgelist")
        p.add_argument("--quiet", action="store_true", help="suppress diagnostics on stderr")
        p.add_argument(
            "--tight",
            action="store_true",
            help="restrict cut enumeration to tight pair separators",
        )

    p = sub.add_parser("analyze", help="level, inseparable families, cut system, crossing stats")
    common(p)

    p = sub.add_parser("tree", help="structure tree as JSON or DOT")
    common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON output (default)")
    group.add_argument("--dot", action="store_true", help="DOT output")

    p = sub.add_parser("decompose", help="recursive decomposition across levels")
    common(p)
    p.add_argument("--max-depth", type=int, default=8)

    p = sub.add_parser("verify", help="axioms plus brute-force oracle agreement")
    common(p)
    p.add_argument("--budget", type=int, help="oracle vertex budget (default 12)")

    p = sub.add_parser("report", help="write JSON, TSV summary, and tree figures")
    common(p)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--max-depth", type=int, default=8)

    return parser


_COMMANDS = {
    "analyze": _cmd_analyze,
    "tree": _cmd_tree,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(argv)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return USAGE_EXIT
    if args.command is None:
        parser.print_usage(sys.stderr)
        return USAGE_EXIT
    try:
        return _COMMANDS[args.command](args)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DISCONNECTED_EXIT
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_EXIT
    except InvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return INVARIANT_EXIT
    except KappatreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
