"""Exact chromatic numbers under an explicit search budget.

The solver is a saturation-guided branch and bound.  It either proves an
exact value or, when the budget runs out, returns an honest bracket
[lower, upper] together with a proper coloring achieving the upper end;
it never reports a wrong exact value.  The search is deterministic, so
an exact answer never changes when the budget is enlarged, and node
counts are reproducible (wall-clock cutoffs aside).
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Optional

from .core import Hypergraph
from .transforms import SimpleGraph, line_graph


@dataclass(frozen=True)
class Budget:
    """Per-call search allowance: branch nodes and wall-clock seconds.

    time_limit=None disables the clock; node limits alone keep results
    machine-independent.
    """

    max_nodes: int = 10_000_000
    time_limit: Optional[float] = 30.0


class _BudgetExhausted(Exception):
    pass


class _SearchState:
    def __init__(self, budget: Budget):
        self.nodes = 0
        self._max_nodes = budget.max_nodes
        self._deadline = (
            time.monotonic() + budget.time_limit
            if budget.time_limit is not None
            else None
        )

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self._max_nodes:
            raise _BudgetExhausted
        if (
            self._deadline is not None
            and (self.nodes & 1023) == 0
            and time.monotonic() > self._deadline
        ):
            raise _BudgetExhausted


@dataclass(frozen=True)
class OracleResult:
    """Outcome of an exact-coloring search.

    lower <= chi <= upper always holds; witness is a proper coloring with
    exactly `upper` colors (keyed by vertex for chromatic_number, by
    hyperedge position for chromatic_index).  exact is the value when the
    bracket is tight, None when the budget ran out first.
    """

    lower: int
    upper: int
    witness: dict[int, int]
    nodes: int

    @property
    def exact(self) -> Optional[int]:
        return self.upper if self.lower == self.upper else None

    @property
    def complete(self) -> bool:
        return self.lower == self.upper


def _dsatur_greedy(g: SimpleGraph) -> list[int]:
    """Greedy coloring picking the most saturated vertex first."""
    n = g.n
    colors = [0] * n
    for _ in range(n):
        pick, pick_key = -1, (-1, -1, 0)
        for v in range(n):
            if colors[v]:
                continue
            sat = len({colors[w] for w in g.adj[v] if colors[w]})
            key = (sat, len(g.adj[v]), -v)
            if key > pick_key:
                pick, pick_key = v, key
        used = {colors[w] for w in g.adj[pick]}
        c = 1
        while c in used:
            c += 1
        colors[pick] = c
    return colors


def greedy_clique(g: SimpleGraph) -> list[int]:
    """A maximal clique grown by highest degree into the candidate set.

    Its size is a certified lower bound on the chromatic number; the
    search below starts from it, and bracket reports reuse it.
    """
    adj_sets = [set(nb) for nb in g.adj]
    cand = set(range(g.n))
    clique: list[int] = []
    while cand:
        pick = max(cand, key=lambda v: (len(adj_sets[v] & cand), -v))
        clique.append(pick)
        cand &= adj_sets[pick]
    return clique


def _component_chromatic(
    g: SimpleGraph, state: _SearchState
) -> tuple[int, int, list[int]]:
    """(lower, upper, coloring achieving upper) for a connected graph."""
    n = g.n
    greedy = _dsatur_greedy(g)
    best_count = max(greedy)
    best = list(greedy)
    clique = greedy_clique(g)
    lb = len(clique)
    if lb == best_count:
        return lb, best_count, best

    colors = [0] * n
    for idx, v in enumerate(clique):
        colors[v] = idx + 1
    adj = g.adj
    uncolored = n - len(clique)

    def descend(used: int) -> None:
        nonlocal best_count, best, uncolored
        state.tick()
        if uncolored == 0:
            if used < best_count:
                best_count = used
                best = colors.copy()
            return
        pick, pick_key = -1, (-1, -1, 0)
        for v in range(n):
            if colors[v] == 0:
                sat = len({colors[w] for w in adj[v] if colors[w]})
                key = (sat, len(adj[v]), -v)
                if key > pick_key:
                    pick, pick_key = v, key
        v = pick
        forbidden = {colors[w] for w in adj[v]}
        # Colors beyond used+1 are interchangeable, so trying one of them
        # suffices; anything at or above the incumbent cannot improve it.
        limit = min(used + 1, best_count - 1)
        for c in range(1, limit + 1):
            if c in forbidden:
                continue
            colors[v] = c
            uncolored -= 1
            descend(max(used, c))
            uncolored += 1
            colors[v] = 0
            if best_count == lb:
                return

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 1000))
    try:
        descend(len(clique))
    except _BudgetExhausted:
        return lb, best_count, best
    finally:
        sys.setrecursionlimit(old_limit)
    return best_count, best_count, best


def chromatic_number(
    g: SimpleGraph, budget: Budget = Budget(), lower_hint: int = 0
) -> OracleResult:
    """Chromatic number of a simple graph, componentwise.

    lower_hint must be a valid lower bound for the whole graph (for
    example a known clique size); it can only tighten the reported
    bracket, never change an exact answer.
    """
    state = _SearchState(budget)
    lower = max(lower_hint, 1 if g.n else 0)
    upper = 0
    witness: dict[int, int] = {}
    exhausted = False
    for comp in g.connected_components():
        sub = g.induced(comp)
        if exhausted:
            local = _dsatur_greedy(sub)
            lo, hi = 1, max(local)
        else:
            try:
                lo, hi, local = _component_chromatic(sub, state)
            except _BudgetExhausted:
                local = _dsatur_greedy(sub)
                lo, hi = 1, max(local)
            if lo != hi:
                exhausted = True
        for i, v in enumerate(comp):
            witness[v] = local[i]
        lower = max(lower, lo)
        upper = max(upper, hi)
    if not exhausted:
        lower = max(lower, upper)
    return OracleResult(lower, upper, witness, state.nodes)


def chromatic_index(h: Hypergraph, budget: Budget = Budget()) -> OracleResult:
    """Minimum colors for the hyperedges so intersecting ones differ.

    Computed as the chromatic number of the line graph; the witness is
    keyed by hyperedge position.  The hyperedges through any one vertex
    are pairwise intersecting, so the maximum vertex degree seeds the
    lower bound.
    """
    if h.m == 0:
        return OracleResult(0, 0, {}, 0)
    hint = max(h.degrees(), default=0)
    return chromatic_number(line_graph(h), budget, lower_hint=hint)


def is_critical(h: Hypergraph, i: int, budget: Budget = Budget()) -> Optional[bool]:
    """Does removing hyperedge position i lower the chromatic index?

    None when either exact value did not fit in the budget.
    """
    base = chromatic_index(h, budget)
    if base.exact is None:
        return None
    sub = chromatic_index(h.remove_hyperedge(i), budget)
    if sub.exact is None:
        return None
    return sub.exact == base.exact - 1


@dataclass(frozen=True)
class EdgeCriticality:
    """One row of a criticality table."""

    position: int
    degree: int
    q_without: Optional[int]
    critical: Optional[bool]


@dataclass(frozen=True)
class CriticalityReport:
    """Per-hyperedge criticality, plus the key inequality's verdict.

    lemma_ok reports whether q - 1 <= hyperedge degree held for every
    hyperedge whose criticality was decided positively; a False here on a
    loopless instance indicates an implementation bug, not a discovery.
    complete is True when q and every row were decided within budget.
    """

    q: Optional[int]
    entries: tuple[EdgeCriticality, ...]
    complete: bool
    lemma_ok: bool


def criticality_report(h: Hypergraph, budget: Budget = Budget()) -> CriticalityReport:
    """Tabulate criticality and check q - 1 <= d(e) for critical e."""
    base = chromatic_index(h, budget)
    if base.exact is None:
        return CriticalityReport(None, (), False, True)
    q = base.exact
    entries = []
    complete = True
    lemma_ok = True
    for i in range(h.m):
        deg = h.hyperedge_degree(i)
        sub = chromatic_index(h.remove_hyperedge(i), budget)
        if sub.exact is None:
            entries.append(EdgeCriticality(i, deg, None, None))
            complete = False
            continue
        crit = sub.exact == q - 1
        entries.append(EdgeCriticality(i, deg, sub.exact, crit))
        if crit and not q - 1 <= deg:
            lemma_ok = False
    return CriticalityReport(q, tuple(entries), complete, lemma_ok)


@dataclass(frozen=True)
class CriticalCore:
    """A subhypergraph with the same chromatic index, every edge critical.

    removed lists the original positions deleted, in deletion order.
    complete=False flags a budget interruption: the hypergraph returned is
    then merely an intermediate stage.
    """

    hypergraph: Hypergraph
    q: Optional[int]
    complete: bool
    removed: tuple[int, ...]


def extract_critical(h: Hypergraph, budget: Budget = Budget()) -> CriticalCore:
    """Greedily delete hyperedges whose removal keeps q, until none does.

    Scans positions in ascending order, deletes the first removable one,
    and rescans from the start, so the result is deterministic.  Every
    hyperedge of the result is critical: removing it would lower q.
    """
    base = chromatic_index(h, budget)
    if base.exact is None:
        return CriticalCore(h, None, False, ())
    q = base.exact
    cur = h
    original = list(range(h.m))
    removed: list[int] = []
    while True:
        progressed = False
        for i in range(cur.m):
            candidate = cur.remove_hyperedge(i)
            sub = chromatic_index(candidate, budget)
            if sub.exact is None:
                return CriticalCore(cur, q, False, tuple(removed))
            if sub.exact == q:
                removed.append(original.pop(i))
                cur = candidate
                progressed = True
                break
        if not progressed:
            return CriticalCore(cur, q, True, tuple(removed))
