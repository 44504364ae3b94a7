"""Plain-text hypergraph files.

The format is DIMACS-like: lines whose first non-blank character is 'c'
are comments, one problem line ``p hgr <n> <m>`` precedes the data, and
each hyperedge is a line ``e v1 v2 ... vk`` with 1-based vertex ids.
Blank lines are ignored.  serialize_hgr emits a canonical form (no
comments, vertices ascending) so that parse(serialize(h)) == h and equal
hypergraphs produce byte-identical files.
"""

from __future__ import annotations

import hashlib
from typing import Optional

from .core import Hypergraph


class HgrParseError(ValueError):
    """A malformed hypergraph file; carries the offending line number."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)


def parse_hgr(text: str) -> Hypergraph:
    """Parse file contents into a Hypergraph.

    Raises HgrParseError, with a line number, on any deviation from the
    format: missing or repeated problem line, unknown line type, vertex
    ids outside 1..n, repeated vertices inside an edge, or an edge count
    that disagrees with the problem line.
    """
    n: Optional[int] = None
    m: Optional[int] = None
    edges: list[tuple[int, ...]] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line:
            continue
        if line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise HgrParseError("second problem line", line_no)
            if len(tokens) != 4 or tokens[1] != "hgr":
                raise HgrParseError(
                    "problem line must be 'p hgr <n> <m>'", line_no
                )
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise HgrParseError("n and m must be integers", line_no)
            if n < 0 or m < 0:
                raise HgrParseError("n and m must be non-negative", line_no)
        elif tokens[0] == "e":
            if n is None:
                raise HgrParseError("edge before problem line", line_no)
            if len(tokens) == 1:
                raise HgrParseError("empty hyperedge", line_no)
            vs = []
            for tok in tokens[1:]:
                try:
                    v = int(tok)
                except ValueError:
                    raise HgrParseError(f"bad vertex id {tok!r}", line_no)
                if not 1 <= v <= n:
                    raise HgrParseError(
                        f"vertex id {v} outside 1..{n}", line_no
                    )
                vs.append(v - 1)
            if len(set(vs)) != len(vs):
                raise HgrParseError("repeated vertex in hyperedge", line_no)
            edges.append(tuple(vs))
            if len(edges) > m:
                raise HgrParseError(
                    f"more than the declared {m} hyperedges", line_no
                )
        else:
            raise HgrParseError(f"unknown line type {tokens[0]!r}", line_no)
    if n is None:
        raise HgrParseError("missing problem line", None)
    if len(edges) != m:
        raise HgrParseError(
            f"declared {m} hyperedges but found {len(edges)}",
            last_line if last_line else None,
        )
    return Hypergraph(n, edges)


def serialize_hgr(h: Hypergraph) -> str:
    """Canonical file contents for h."""
    lines = [f"p hgr {h.n} {h.m}"]
    for edge in h.edges:
        lines.append("e " + " ".join(str(v + 1) for v in edge))
    return "\n".join(lines) + "\n"


def load(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hgr(fh.read())


def dump(h: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_hgr(h))


def digest(h: Hypergraph) -> str:
    """sha256 hex digest of the canonical serialization."""
    return hashlib.sha256(serialize_hgr(h).encode("utf-8")).hexdigest()
