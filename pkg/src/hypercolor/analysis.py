"""Degree bounds on the chromatic index and the bound-verdict engine.

The central comparison throughout is q(H) against the two-section degree
bound max_degree([H]_2) + 1.  Condition tags name the shapes for which
that bound is established:

  THM1   loopless and antirank^2 >= Delta_2 + 1
  THM2   linear, k-uniform and (k+1)-regular with k >= 2
  THM3   loopless and (max_degree - 1)^2 <= Delta_2 + 1
  RK61   loopless and antirank^2 > Delta_2 + 1 (strict greedy regime)
  RK62   rank * (max_degree - 1) <= Delta_2
  U65_1..U65_4, OPEN   the classification of uniform linear instances

where Delta_2 abbreviates the maximum two-section degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import EdgeColoring, brooks_edge_color, greedy_color, is_proper
from .core import Hypergraph, HypergraphStats, UnsupportedInputError
from .oracle import Budget, chromatic_index, greedy_clique
from .transforms import line_graph, max_degree_two_section

HOLDS = "HOLDS"
VIOLATED = "VIOLATED"
UNRESOLVED = "UNRESOLVED"


def two_section_bound(h: Hypergraph) -> int:
    """The conjectured ceiling: max two-section degree plus one."""
    return max_degree_two_section(h) + 1


def greedy_bound(h: Hypergraph) -> int:
    """Upper bound on q from first-fit coloring, loopless instances only.

    max over k in antirank..rank of k * (floor(Delta_2 / (k-1)) - 1) + 1.
    Raises UnsupportedInputError when m = 0 or a loop is present, since
    the first-fit analysis needs every hyperedge size to be at least 2.
    """
    if h.m == 0 or not h.loopless:
        raise UnsupportedInputError("greedy bound needs m >= 1 and no loops")
    d2 = max_degree_two_section(h)
    best = 0
    for k in range(h.antirank, h.rank + 1):
        best = max(best, k * (d2 // (k - 1) - 1) + 1)
    return best


def rank_degree_bound(h: Hypergraph) -> int:
    """Unconditional bound rank * (max_degree - 1) + 1.

    A hyperedge of size at most rank meets at most rank * (max_degree - 1)
    others, so first-fit through the line graph never needs more colors.
    Holds for every hypergraph with at least one hyperedge.
    """
    if h.m == 0:
        raise UnsupportedInputError("rank-degree bound needs m >= 1")
    return h.rank * (max(h.degrees(), default=1) - 1) + 1


def edge_degree_bound(h: Hypergraph) -> int:
    """Sharper line-graph greedy bound: max hyperedge degree plus one."""
    if h.m == 0:
        raise UnsupportedInputError("edge degree bound needs m >= 1")
    return max(h.hyperedge_degree(i) for i in range(h.m)) + 1


def antirank_condition(h: Hypergraph) -> bool:
    """Loopless and antirank^2 >= Delta_2 + 1 (integer arithmetic only)."""
    if h.m == 0 or not h.loopless:
        return False
    ar = h.antirank
    return ar * ar >= max_degree_two_section(h) + 1


def uniform_regular_condition(h: Hypergraph) -> bool:
    """Linear, k-uniform and (k+1)-regular for some k >= 2."""
    st = h.stats()
    return (
        st.m >= 1
        and st.linear
        and st.uniform_k is not None
        and st.uniform_k >= 2
        and st.regular_d is not None
        and st.regular_d == st.uniform_k + 1
    )


def max_degree_condition(h: Hypergraph) -> bool:
    """Loopless and max_degree <= sqrt(Delta_2 + 1) + 1.

    Evaluated in integers as: max_degree <= 1, or
    (max_degree - 1)^2 <= Delta_2 + 1.
    """
    if not h.loopless:
        return False
    dmax = max(h.degrees(), default=0)
    if dmax <= 1:
        return True
    return (dmax - 1) * (dmax - 1) <= max_degree_two_section(h) + 1


def rank_product_condition(h: Hypergraph) -> bool:
    """rank * (max_degree - 1) <= Delta_2.

    When this holds, q <= rank * (max_degree - 1) + 1 <= Delta_2 + 1
    follows from the line-graph greedy bound, with no further hypotheses.
    """
    if h.m == 0:
        return False
    dmax = max(h.degrees(), default=0)
    return h.rank * (dmax - 1) <= max_degree_two_section(h)


def classify_uniform(h: Hypergraph) -> frozenset[str]:
    """Which established conditions cover a uniform linear instance.

    Requires a linear, k-uniform hypergraph with k >= 2.  Tags:
    U65_1 (k = 2), U65_2 (k^2 >= Delta_2 + 1), U65_3 (Delta_2 = k^2),
    U65_4 (k >= 3 and k * (max_degree - 1) <= Delta_2).  When none
    applies the result is {"OPEN"}: the instance sits in the regime the
    two-section bound has not been settled for.
    """
    st = h.stats()
    if st.m == 0 or not st.linear or st.uniform_k is None or st.uniform_k < 2:
        raise UnsupportedInputError(
            "classification needs a linear k-uniform hypergraph with k >= 2"
        )
    k = st.uniform_k
    d2 = st.two_section_max_degree
    tags = set()
    if k == 2:
        tags.add("U65_1")
    if k * k >= d2 + 1:
        tags.add("U65_2")
    if d2 == k * k:
        tags.add("U65_3")
    if k >= 3 and k * (st.max_degree - 1) <= d2:
        tags.add("U65_4")
    return frozenset(tags) if tags else frozenset({"OPEN"})


@dataclass(frozen=True)
class InequalityCheck:
    """One structural identity or inequality, with its scope and outcome."""

    name: str
    applicable: bool
    ok: bool
    detail: str


@dataclass(frozen=True)
class InequalityReport:
    checks: tuple[InequalityCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks if c.applicable)


def inequality_suite(h: Hypergraph) -> InequalityReport:
    """Structural sanity checks; a failed applicable check means a bug.

    two-section-degree-floor: Delta_2 >= (antirank - 1) * max_degree on
    loopless instances.  edge-degree-incidence-sum: every hyperedge degree
    is at most sum(deg(x) - 1 over its vertices), with equality on linear
    instances.  uniform-regular-count: on linear k-uniform (k+1)-regular
    instances, k*m = (k+1)*n, Delta_2 = k^2 - 1 and every hyperedge degree
    is k^2.
    """
    st = h.stats()
    checks = []

    floor_applicable = st.m >= 1 and st.loopless
    if floor_applicable:
        ok = st.two_section_max_degree >= (st.antirank - 1) * st.max_degree
        detail = (
            f"{st.two_section_max_degree} >= "
            f"({st.antirank} - 1) * {st.max_degree}"
        )
    else:
        ok, detail = True, "needs m >= 1 and no loops"
    checks.append(InequalityCheck("two-section-degree-floor", floor_applicable, ok, detail))

    sum_applicable = st.m >= 1
    if sum_applicable:
        ok = True
        worst = ""
        for i in range(h.m):
            d = h.hyperedge_degree(i)
            bound = sum(h.vertex_degree(x) - 1 for x in h.edges[i])
            if d > bound or (st.linear and d != bound):
                ok = False
                worst = f"; position {i}: degree {d} vs sum {bound}"
                break
        detail = (
            f"checked {h.m} positions, equality required: "
            f"{'yes' if st.linear else 'no'}{worst}"
        )
    else:
        ok, detail = True, "needs m >= 1"
    checks.append(InequalityCheck("edge-degree-incidence-sum", sum_applicable, ok, detail))

    urc_applicable = uniform_regular_condition(h)
    if urc_applicable:
        k = st.uniform_k
        count_ok = k * st.m == (k + 1) * st.n
        d2_ok = st.two_section_max_degree == k * k - 1
        deg_ok = all(h.hyperedge_degree(i) == k * k for i in range(h.m))
        ok = count_ok and d2_ok and deg_ok
        detail = (
            f"k*m={k * st.m} vs (k+1)*n={(k + 1) * st.n}, "
            f"Delta_2={st.two_section_max_degree} vs k^2-1={k * k - 1}, "
            f"hyperedge degrees all k^2={k * k}: {'yes' if deg_ok else 'no'}"
        )
    else:
        ok, detail = True, "needs linear k-uniform (k+1)-regular"
    checks.append(InequalityCheck("uniform-regular-count", urc_applicable, ok, detail))

    return InequalityReport(tuple(checks))


@dataclass(frozen=True)
class BoundSet:
    """The computed upper-bound values for one instance.

    two_section (the conjectured ceiling) is always present.  The rest
    are None when their preconditions fail: rank_degree and edge_degree
    need at least one hyperedge, greedy additionally refuses loops.
    """

    two_section: int
    greedy: Optional[int]
    rank_degree: Optional[int]
    edge_degree: Optional[int]


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking q <= Delta_2 + 1 on one instance.

    status is HOLDS only with proof in hand: an exact q within the bound,
    or a verified proper coloring using at most the bound.  VIOLATED
    likewise needs proof that q exceeds the bound: an exact value, or a
    certified lower bound, above it.  Anything undecided (budget ran
    out, or only a too-large constructive coloring is known) stays
    UNRESOLVED.  conditions lists the tags whose hypotheses the instance
    satisfies; efl_ok compares q against the vertex count on linear
    instances (None when not linear or undecided).
    """

    stats: HypergraphStats
    bounds: BoundSet
    conditions: frozenset[str]
    q_lower: int
    q_upper: int
    q_exact: Optional[int]
    status: str
    efl_ok: Optional[bool]
    witness: Optional[EdgeColoring]
    oracle_nodes: int


def verify_conjecture(
    h: Hypergraph, budget: Budget = Budget(), use_exact: bool = True
) -> Verdict:
    """Check q(H) <= max two-section degree + 1 on one instance.

    With use_exact=False the oracle is skipped: q is bracketed from below
    by a clique in the intersection graph of the hyperedges and from
    above by the best constructive coloring, which can still settle the
    status whenever the bracket clears the bound on either side.
    """
    st = h.stats()
    bf = st.two_section_max_degree + 1
    bounds = BoundSet(
        two_section=bf,
        greedy=greedy_bound(h) if st.m >= 1 and st.loopless else None,
        rank_degree=rank_degree_bound(h) if st.m >= 1 else None,
        edge_degree=edge_degree_bound(h) if st.m >= 1 else None,
    )

    conditions = set()
    if antirank_condition(h):
        conditions.add("THM1")
    if uniform_regular_condition(h):
        conditions.add("THM2")
    if max_degree_condition(h):
        conditions.add("THM3")
    if (
        st.m >= 1
        and st.loopless
        and st.antirank * st.antirank > st.two_section_max_degree + 1
    ):
        conditions.add("RK61")
    if rank_product_condition(h):
        conditions.add("RK62")
    if st.m >= 1 and st.linear and st.uniform_k is not None and st.uniform_k >= 2:
        conditions |= classify_uniform(h)

    nodes = 0
    if st.m == 0:
        witness = EdgeColoring({}, 0)
        q_lower = q_upper = 0
    elif use_exact:
        res = chromatic_index(h, budget)
        nodes = res.nodes
        q_lower, q_upper = res.lower, res.upper
        witness = EdgeColoring(dict(res.witness), res.upper)
    else:
        candidates = [greedy_color(h), brooks_edge_color(h)]
        witness = min(candidates, key=lambda c: c.q_used)
        q_upper = witness.q_used
        clique = greedy_clique(line_graph(h))
        q_lower = max(len(clique), max(h.degrees(), default=0))
    if not is_proper(h, witness):
        raise RuntimeError("internal error: emitted coloring is not proper")
    if witness.q_used != q_upper:
        raise RuntimeError("internal error: witness does not match q_upper")
    q_exact = q_upper if q_lower == q_upper else None

    if q_lower > bf:
        # A violation verdict is an alarm, so cross-examine it: any proper
        # coloring within the bound would prove the lower bound wrong.
        for alt in (greedy_color(h), brooks_edge_color(h)):
            if alt.q_used <= bf and is_proper(h, alt):
                raise RuntimeError(
                    "internal error: lower bound exceeds a constructive coloring"
                )
        status = VIOLATED
    elif q_exact is not None:
        status = HOLDS
    elif q_upper <= bf:
        status = HOLDS
    else:
        status = UNRESOLVED

    if not st.linear:
        efl_ok = None
    elif q_upper <= st.n:
        efl_ok = True
    elif q_lower > st.n:
        efl_ok = False
    else:
        efl_ok = None

    return Verdict(
        stats=st,
        bounds=bounds,
        conditions=frozenset(conditions),
        q_lower=q_lower,
        q_upper=q_upper,
        q_exact=q_exact,
        status=status,
        efl_ok=efl_ok,
        witness=witness,
        oracle_nodes=nodes,
    )
