"""Hypergraphs with multiset hyperedge lists on vertices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


class UnsupportedInputError(ValueError):
    """Raised when an operation does not apply to the given instance shape."""


@dataclass(frozen=True)
class HypergraphStats:
    """Scalar invariants of a hypergraph, as computed by Hypergraph.stats().

    rank/antirank are None when there are no hyperedges.  uniform_k is the
    common hyperedge size when all sizes agree (None otherwise), regular_d
    the common vertex degree when all degrees agree.  two_section_max_degree
    is the maximum degree of the two-section multigraph, i.e. the largest
    value of sum(len(e) - 1 for e containing x) over vertices x.
    """

    n: int
    m: int
    rank: Optional[int]
    antirank: Optional[int]
    max_degree: int
    min_degree: int
    loopless: bool
    linear: bool
    uniform_k: Optional[int]
    regular_d: Optional[int]
    connected: bool
    two_section_max_degree: int


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph: n vertices and an ordered multiset of hyperedges.

    Hyperedges live at positions 0..m-1 of a sequence; two positions may
    hold equal vertex sets, and every position counts separately for
    degrees, the two-section and the line graph.  Vertices are the integers
    0..n-1.  Loops (size-one hyperedges) are allowed; empty hyperedges are
    rejected.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = []
        for pos, edge in enumerate(edges):
            vs = tuple(sorted(edge))
            if not vs:
                raise ValueError(f"hyperedge {pos} is empty")
            for i, v in enumerate(vs):
                if not 0 <= v < n:
                    raise ValueError(
                        f"hyperedge {pos} contains vertex {v}, not in 0..{n - 1}"
                    )
                if i and vs[i - 1] == v:
                    raise ValueError(f"hyperedge {pos} repeats vertex {v}")
            normalized.append(vs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for pos, edge in enumerate(self.edges):
            for v in edge:
                inc[v].append(pos)
        return tuple(tuple(positions) for positions in inc)

    def incident(self, x: int) -> tuple[int, ...]:
        """Positions of the hyperedges containing vertex x, ascending."""
        self._check_vertex(x)
        return self._incidence[x]

    def vertex_degree(self, x: int) -> int:
        """Number of hyperedge positions containing x."""
        self._check_vertex(x)
        return len(self._incidence[x])

    def hyperedge_degree(self, i: int) -> int:
        """Number of other positions whose hyperedge meets hyperedge i.

        Duplicate hyperedges count once per position, so a pair of equal
        edges contributes 1 to each other's degree.
        """
        self._check_position(i)
        met = set()
        for v in self.edges[i]:
            met.update(self._incidence[v])
        met.discard(i)
        return len(met)

    def degrees(self) -> tuple[int, ...]:
        """Vertex degrees indexed by vertex."""
        return tuple(len(positions) for positions in self._incidence)

    @property
    def rank(self) -> Optional[int]:
        """Largest hyperedge size, None when m = 0."""
        return max((len(e) for e in self.edges), default=None)

    @property
    def antirank(self) -> Optional[int]:
        """Smallest hyperedge size, None when m = 0."""
        return min((len(e) for e in self.edges), default=None)

    @property
    def loopless(self) -> bool:
        """True when every hyperedge has at least two vertices."""
        return all(len(e) >= 2 for e in self.edges)

    def is_linear(self) -> bool:
        """True when every two positions share at most one vertex.

        A duplicated hyperedge of size >= 2 therefore makes the hypergraph
        non-linear, while duplicated loops do not.
        """
        sets = [set(e) for e in self.edges]
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if len(sets[i] & sets[j]) > 1:
                    return False
        return True

    def connected_components(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Components as (vertices, hyperedge positions), both ascending.

        Isolated vertices form singleton components with no hyperedges.
        Components are listed by their smallest vertex.
        """
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for edge in self.edges:
            r = find(edge[0])
            for v in edge[1:]:
                parent[find(v)] = r
        verts: dict[int, list[int]] = {}
        for v in range(self.n):
            verts.setdefault(find(v), []).append(v)
        eds: dict[int, list[int]] = {}
        for pos, edge in enumerate(self.edges):
            eds.setdefault(find(edge[0]), []).append(pos)
        return [
            (tuple(vs), tuple(eds.get(root, ())))
            for root, vs in sorted(verts.items(), key=lambda kv: kv[1][0])
        ]

    def remove_hyperedge(self, i: int) -> "Hypergraph":
        """The hypergraph on the same vertices with position i deleted."""
        self._check_position(i)
        return Hypergraph(self.n, self.edges[:i] + self.edges[i + 1 :])

    def stats(self) -> HypergraphStats:
        # Deferred import: transforms builds on this module, and the
        # two-section degree formula lives there with the multigraph.
        from .transforms import max_degree_two_section

        degs = self.degrees()
        max_deg = max(degs, default=0)
        min_deg = min(degs, default=0)
        sizes = [len(e) for e in self.edges]
        return HypergraphStats(
            n=self.n,
            m=self.m,
            rank=self.rank,
            antirank=self.antirank,
            max_degree=max_deg,
            min_degree=min_deg,
            loopless=self.loopless,
            linear=self.is_linear(),
            uniform_k=sizes[0] if sizes and len(set(sizes)) == 1 else None,
            regular_d=max_deg if max_deg == min_deg else None,
            connected=len(self.connected_components()) <= 1,
            two_section_max_degree=max_degree_two_section(self),
        )

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise IndexError(f"vertex {x} not in 0..{self.n - 1}")

    def _check_position(self, i: int) -> None:
        if not 0 <= i < self.m:
            raise IndexError(f"hyperedge position {i} not in 0..{self.m - 1}")
