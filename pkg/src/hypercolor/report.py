"""Deterministic renderings of results, as key: value text or JSON.

Reports are reproducible byte for byte: they carry no timestamps or
timings, sets are emitted sorted, and JSON keys are sorted.  Each report
names the tool version and the sha256 of the canonical serialization of
its input.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from typing import Optional

from .analysis import InequalityReport, Verdict
from .coloring import EdgeColoring
from .core import Hypergraph, HypergraphStats
from .hgr import digest
from .oracle import CriticalCore, CriticalityReport

TOOL_VERSION = "0.1.0"


def _fmt(value) -> str:
    if value is None:
        return "none"
    if value is True:
        return "yes"
    if value is False:
        return "no"
    return str(value)


def _header(h: Hypergraph) -> list[str]:
    return [f"tool: hypercolor {TOOL_VERSION}", f"input-sha256: {digest(h)}"]


def _stats_lines(st: HypergraphStats) -> list[str]:
    return [
        f"n: {st.n}",
        f"m: {st.m}",
        f"rank: {_fmt(st.rank)}",
        f"antirank: {_fmt(st.antirank)}",
        f"max-degree: {st.max_degree}",
        f"min-degree: {st.min_degree}",
        f"loopless: {_fmt(st.loopless)}",
        f"linear: {_fmt(st.linear)}",
        f"uniform-k: {_fmt(st.uniform_k)}",
        f"regular-d: {_fmt(st.regular_d)}",
        f"connected: {_fmt(st.connected)}",
        f"two-section-max-degree: {st.two_section_max_degree}",
    ]


def _witness_line(coloring: Optional[EdgeColoring]) -> str:
    if coloring is None:
        return "witness: none"
    parts = [str(coloring.colors[i]) for i in sorted(coloring.colors)]
    return "witness: " + (" ".join(parts) if parts else "empty")


def render_stats(h: Hypergraph) -> str:
    return "\n".join(_header(h) + _stats_lines(h.stats())) + "\n"


def stats_json(h: Hypergraph) -> str:
    payload = {
        "tool": f"hypercolor {TOOL_VERSION}",
        "input_sha256": digest(h),
        "stats": asdict(h.stats()),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_coloring(h: Hypergraph, coloring: EdgeColoring, method: str) -> str:
    lines = _header(h) + [
        f"method: {method}",
        f"colors-used: {coloring.q_used}",
        _witness_line(coloring),
    ]
    return "\n".join(lines) + "\n"


def coloring_json(h: Hypergraph, coloring: EdgeColoring, method: str) -> str:
    payload = {
        "tool": f"hypercolor {TOOL_VERSION}",
        "input_sha256": digest(h),
        "method": method,
        "colors_used": coloring.q_used,
        "colors": [coloring.colors[i] for i in sorted(coloring.colors)],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _verdict_lines(v: Verdict) -> list[str]:
    bounds = v.bounds
    lines = _stats_lines(v.stats)
    lines += [
        f"bound-two-section: {bounds.two_section}",
        f"bound-greedy: {_fmt(bounds.greedy)}",
        f"bound-rank-degree: {_fmt(bounds.rank_degree)}",
        f"bound-edge-degree: {_fmt(bounds.edge_degree)}",
        "conditions: "
        + (" ".join(sorted(v.conditions)) if v.conditions else "none"),
        f"q-lower: {v.q_lower}",
        f"q-upper: {v.q_upper}",
        f"q-exact: {_fmt(v.q_exact)}",
        f"status: {v.status}",
        f"efl-within-vertex-count: {_fmt(v.efl_ok)}",
        f"oracle-nodes: {v.oracle_nodes}",
        _witness_line(v.witness),
    ]
    return lines


def render_verdict(h: Hypergraph, v: Verdict) -> str:
    return "\n".join(_header(h) + _verdict_lines(v)) + "\n"


def verdict_dict(v: Verdict) -> dict:
    """JSON-ready payload for one verdict (no header)."""
    return {
        "stats": asdict(v.stats),
        "bounds": {
            "two_section": v.bounds.two_section,
            "greedy": v.bounds.greedy,
            "rank_degree": v.bounds.rank_degree,
            "edge_degree": v.bounds.edge_degree,
        },
        "conditions": sorted(v.conditions),
        "q_lower": v.q_lower,
        "q_upper": v.q_upper,
        "q_exact": v.q_exact,
        "status": v.status,
        "efl_within_vertex_count": v.efl_ok,
        "oracle_nodes": v.oracle_nodes,
        "witness": [v.witness.colors[i] for i in sorted(v.witness.colors)]
        if v.witness is not None
        else None,
    }


def verdict_json(h: Hypergraph, v: Verdict) -> str:
    payload = {
        "tool": f"hypercolor {TOOL_VERSION}",
        "input_sha256": digest(h),
    }
    payload.update(verdict_dict(v))
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_inequalities(rep: InequalityReport) -> list[str]:
    lines = []
    for check in rep.checks:
        scope = "checked" if check.applicable else "skipped"
        lines.append(
            f"check {check.name}: {scope} "
            f"{'ok' if check.ok else 'FAILED'} ({check.detail})"
        )
    return lines


def render_criticality(
    h: Hypergraph, rep: CriticalityReport, core: Optional[CriticalCore]
) -> str:
    lines = _header(h) + [f"q-exact: {_fmt(rep.q)}", f"complete: {_fmt(rep.complete)}"]
    for entry in rep.entries:
        lines.append(
            f"hyperedge {entry.position}: degree {entry.degree} "
            f"q-without {_fmt(entry.q_without)} critical {_fmt(entry.critical)}"
        )
    lines.append(f"degree-dominates-q-minus-one: {_fmt(rep.lemma_ok)}")
    if core is not None:
        lines.append(f"core-complete: {_fmt(core.complete)}")
        lines.append(f"core-q: {_fmt(core.q)}")
        lines.append(
            "core-removed-positions: "
            + (" ".join(map(str, core.removed)) if core.removed else "none")
        )
        lines.append(f"core-m: {core.hypergraph.m}")
        for edge in core.hypergraph.edges:
            lines.append("core-edge: " + " ".join(str(v) for v in edge))
    return "\n".join(lines) + "\n"


def criticality_json(
    h: Hypergraph, rep: CriticalityReport, core: Optional[CriticalCore]
) -> str:
    payload = {
        "tool": f"hypercolor {TOOL_VERSION}",
        "input_sha256": digest(h),
        "q_exact": rep.q,
        "complete": rep.complete,
        "entries": [asdict(e) for e in rep.entries],
        "degree_dominates_q_minus_one": rep.lemma_ok,
    }
    if core is not None:
        payload["core"] = {
            "complete": core.complete,
            "q": core.q,
            "removed_positions": list(core.removed),
            "n": core.hypergraph.n,
            "edges": [list(e) for e in core.hypergraph.edges],
        }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
