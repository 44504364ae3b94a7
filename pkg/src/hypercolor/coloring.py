"""Constructive colorers: greedy on hyperedges, Brooks-style vertex
coloring of graphs, and Vizing-style edge coloring of simple graphs.

All colorers are deterministic for a fixed input (and order strategy /
seed where one applies), and all emit palettes that are exactly
1..q_used with every color in between used at least once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Hypergraph, UnsupportedInputError
from .instances import Rng
from .transforms import SimpleGraph, line_graph


def _check_palette(colors: dict, q_used: int) -> None:
    used = set(colors.values())
    if q_used < 0:
        raise ValueError("q_used must be non-negative")
    if used != set(range(1, q_used + 1)):
        raise ValueError(
            f"colors must be exactly 1..{q_used}, got {sorted(used)}"
        )


@dataclass(frozen=True)
class EdgeColoring:
    """Assignment of colors to hyperedge positions; palette is 1..q_used."""

    colors: dict[int, int]
    q_used: int

    def __post_init__(self):
        _check_palette(self.colors, self.q_used)


@dataclass(frozen=True)
class VertexColoring:
    """Assignment of colors to graph vertices; palette is 1..q_used."""

    colors: dict[int, int]
    q_used: int

    def __post_init__(self):
        _check_palette(self.colors, self.q_used)


def is_proper(h: Hypergraph, coloring: EdgeColoring) -> bool:
    """True iff intersecting hyperedge positions always differ in color.

    The coloring must assign every position of h; a partial or
    mis-keyed coloring raises ValueError.
    """
    if set(coloring.colors) != set(range(h.m)):
        raise ValueError("coloring must assign exactly the positions 0..m-1")
    for v in range(h.n):
        seen = set()
        for pos in h.incident(v):
            c = coloring.colors[pos]
            if c in seen:
                return False
            seen.add(c)
    return True


def is_proper_vertex_coloring(g: SimpleGraph, coloring: VertexColoring) -> bool:
    """True iff adjacent vertices always differ in color (total colorings only)."""
    if set(coloring.colors) != set(range(g.n)):
        raise ValueError("coloring must assign exactly the vertices 0..n-1")
    return all(
        coloring.colors[u] != coloring.colors[w]
        for u in range(g.n)
        for w in g.adj[u]
        if u < w
    )


def greedy_color(
    h: Hypergraph, order: str = "desc-degree", seed: Optional[int] = None
) -> EdgeColoring:
    """First-fit coloring of the hyperedges in a chosen order.

    Orders: "index" (positions as given), "desc-degree" (by decreasing
    hyperedge degree, ties by position), "random" (a seeded shuffle;
    seed defaults to 0).  Uses at most max hyperedge degree + 1 colors.
    """
    positions = list(range(h.m))
    if order == "index":
        pass
    elif order == "desc-degree":
        degs = [h.hyperedge_degree(i) for i in positions]
        positions.sort(key=lambda i: (-degs[i], i))
    elif order == "random":
        Rng(seed if seed is not None else 0).shuffle(positions)
    else:
        raise ValueError(f"unknown order {order!r}")
    at_vertex: list[set[int]] = [set() for _ in range(h.n)]
    colors: dict[int, int] = {}
    q_used = 0
    for pos in positions:
        forbidden: set[int] = set()
        for v in h.edges[pos]:
            forbidden |= at_vertex[v]
        c = 1
        while c in forbidden:
            c += 1
        colors[pos] = c
        q_used = max(q_used, c)
        for v in h.edges[pos]:
            at_vertex[v].add(c)
    return EdgeColoring(colors, q_used)


# ---------------------------------------------------------------------------
# Brooks-style vertex coloring.
#
# Per connected component C the colorer uses at most max_degree(C) colors
# unless C is a complete graph or an odd cycle, which need one more.  The
# strategy follows the constructive proof: color non-regular components
# greedily in reverse breadth-first order from a vertex of non-maximum
# degree; for regular two-connected components find two non-adjacent
# vertices u, w with a common neighbor v whose removal keeps the graph
# connected, give u and w the same color, and finish greedily in reverse
# breadth-first order from v; for regular components with a cut vertex,
# color the biconnected blocks independently and align them at their
# shared vertices by swapping two color classes inside a block.
# ---------------------------------------------------------------------------


def brooks_color(g: SimpleGraph) -> VertexColoring:
    """Vertex coloring meeting the classical degree bound per component."""
    colors: dict[int, int] = {}
    q_used = 0
    for comp in g.connected_components():
        sub = g.induced(comp)
        local = _brooks_component(sub)
        for i, v in enumerate(comp):
            colors[v] = local[i]
        q_used = max(q_used, max(local, default=0))
    return VertexColoring(colors, q_used)


def brooks_edge_color(h: Hypergraph) -> EdgeColoring:
    """Color hyperedges by running brooks_color on the line graph.

    Uses at most max hyperedge degree + 1 colors, and at most the max
    hyperedge degree when no line-graph component is complete or an odd
    cycle.
    """
    if h.m == 0:
        return EdgeColoring({}, 0)
    vc = brooks_color(line_graph(h))
    return EdgeColoring(dict(vc.colors), vc.q_used)


def _brooks_component(g: SimpleGraph) -> list[int]:
    """Color a connected graph with colors 1..k, k within the degree bound."""
    n = g.n
    if n == 1:
        return [1]
    degs = [g.degree(v) for v in range(n)]
    delta = max(degs)
    if all(d == n - 1 for d in degs):
        return [v + 1 for v in range(n)]
    if delta <= 2:
        return _color_path_or_cycle(g, degs)
    low_vertices = [v for v in range(n) if degs[v] < delta]
    if low_vertices:
        return _greedy_reverse_bfs(g, low_vertices[0], {})
    blocks = _biconnected_blocks(g)
    if len(blocks) == 1:
        u, v, w = _connected_split_pair(g)
        return _greedy_reverse_bfs(g, v, {u: 1, w: 1})
    return _recombine_blocks(g, blocks)


def _color_path_or_cycle(g: SimpleGraph, degs: list[int]) -> list[int]:
    n = g.n
    ends = [v for v in range(n) if degs[v] == 1]
    if ends:
        start = ends[0]
    else:
        start = 0
    walk = [start]
    prev = -1
    cur = start
    while len(walk) < n:
        nxt = next(w for w in g.adj[cur] if w != prev)
        walk.append(nxt)
        prev, cur = cur, nxt
    colors = [0] * n
    for i, v in enumerate(walk):
        colors[v] = 1 + (i % 2)
    if not ends and n % 2 == 1:
        colors[walk[-1]] = 3
    return colors


def _greedy_reverse_bfs(
    g: SimpleGraph, root: int, precolored: dict[int, int]
) -> list[int]:
    """Color greedily so every vertex but the root keeps an uncolored
    neighbor (its search parent) at assignment time.  The traversal skips
    precolored vertices, so it must reach all others from the root."""
    order = [root]
    seen = set(precolored)
    seen.add(root)
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                order.append(w)
    if len(seen) != g.n:
        raise RuntimeError("traversal failed to reach the whole component")
    colors = dict(precolored)
    for v in reversed(order):
        used = {colors[w] for w in g.adj[v] if w in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return [colors[v] for v in range(g.n)]


def _connected_split_pair(g: SimpleGraph) -> tuple[int, int, int]:
    """Non-adjacent u, w with common neighbor v, g minus {u, w} connected.

    Exists in every two-connected regular non-complete graph of degree at
    least 3, which is the only shape this is called on.
    """
    n = g.n
    for v in range(n):
        nb = g.adj[v]
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                u, w = nb[a], nb[b]
                if g.has_edge(u, w):
                    continue
                if _connected_without(g, u, w):
                    return u, v, w
    raise RuntimeError("no split pair found; input was not as assumed")


def _connected_without(g: SimpleGraph, u: int, w: int) -> bool:
    skip = {u, w}
    start = next(v for v in range(g.n) if v not in skip)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for x in g.adj[v]:
            if x not in skip and x not in seen:
                seen.add(x)
                stack.append(x)
    return len(seen) == g.n - 2


def _biconnected_blocks(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the biconnected blocks of a connected graph."""
    n = g.n
    num = [0] * n
    low = [0] * n
    parent = [-1] * n
    counter = 1
    edge_stack: list[tuple[int, int]] = []
    blocks: list[tuple[int, ...]] = []
    num[0] = low[0] = counter
    counter += 1
    dfs = [(0, iter(g.adj[0]))]
    while dfs:
        v, it = dfs[-1]
        advanced = False
        for w in it:
            if w == parent[v]:
                continue
            if num[w]:
                if num[w] < num[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], num[w])
            else:
                edge_stack.append((v, w))
                parent[w] = v
                num[w] = low[w] = counter
                counter += 1
                dfs.append((w, iter(g.adj[w])))
                advanced = True
                break
        if not advanced:
            dfs.pop()
            if dfs:
                u = dfs[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= num[u]:
                    members = set()
                    while True:
                        e = edge_stack.pop()
                        members.update(e)
                        if e == (u, v):
                            break
                    blocks.append(tuple(sorted(members)))
    return blocks


def _recombine_blocks(
    g: SimpleGraph, blocks: list[tuple[int, ...]]
) -> list[int]:
    """Color each block on its own, then align shared cut vertices.

    Blocks form a tree through their shared vertices, so when a block is
    processed (in breadth-first order over that tree) exactly one of its
    vertices is already colored.  Swapping two color classes inside the
    block's own coloring makes it agree there without touching anything
    else.  In a regular component of degree d >= 3 every block needs at
    most d colors: a complete block K_t with a vertex attached elsewhere
    has t <= d, and any other block obeys its own degree bound."""
    by_vertex: dict[int, list[int]] = {}
    for bi, verts in enumerate(blocks):
        for v in verts:
            by_vertex.setdefault(v, []).append(bi)
    order = [0]
    placed = {0}
    head = 0
    while head < len(order):
        bi = order[head]
        head += 1
        for v in blocks[bi]:
            for bj in by_vertex[v]:
                if bj not in placed:
                    placed.add(bj)
                    order.append(bj)
    colors: dict[int, int] = {}
    for bi in order:
        verts = blocks[bi]
        local = _brooks_component(g.induced(verts))
        shared = [i for i, v in enumerate(verts) if v in colors]
        if len(shared) > 1:
            raise RuntimeError("blocks do not form a tree; invariant broken")
        if shared:
            i = shared[0]
            want = colors[verts[i]]
            have = local[i]
            if want != have:
                local = [
                    want if c == have else have if c == want else c
                    for c in local
                ]
        for i, v in enumerate(verts):
            colors[v] = local[i]
    return [colors[v] for v in range(g.n)]


# ---------------------------------------------------------------------------
# Vizing-style edge coloring of simple graphs via fan rotation.
#
# Each uncolored edge (u, v) is handled by building a maximal fan at u
# starting with v: a sequence of distinct neighbors where the color of
# each later spoke is missing at the spoke before it.  With c missing at
# u and d missing at the fan's last spoke, the maximal alternating path
# of colors d, c, d, ... out of u is reversed, which makes d missing at
# u as well; some prefix of the fan is then still a fan whose end also
# misses d, so shifting each spoke's color one step down the prefix and
# painting the last prefix edge with d extends the coloring.  The palette
# never exceeds max degree + 1.
# ---------------------------------------------------------------------------


def vizing_edge_color(g: SimpleGraph) -> EdgeColoring:
    """Proper edge coloring of a simple graph with at most Delta+1 colors.

    Colors are keyed by the index of the edge in g.edges().
    """
    edges = g.edges()
    if not edges:
        return EdgeColoring({}, 0)
    palette = g.max_degree() + 1
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]
    col: dict[tuple[int, int], int] = {}

    def assign(a: int, b: int, c: int) -> None:
        if c in at[a] or c in at[b]:
            raise RuntimeError("color collision during fan rotation")
        col[(min(a, b), max(a, b))] = c
        at[a][c] = b
        at[b][c] = a

    def unassign(a: int, b: int) -> int:
        c = col.pop((min(a, b), max(a, b)))
        del at[a][c]
        del at[b][c]
        return c

    def free_color(v: int) -> int:
        for c in range(1, palette + 1):
            if c not in at[v]:
                return c
        raise RuntimeError("no free color; palette invariant broken")

    def invert_path(u: int, c: int, d: int) -> None:
        # Walk the unique maximal path from u alternating d, c, d, ...
        # and swap the two colors along it.  u has no c-edge, so the
        # component of u in the cd-subgraph is a path starting with d.
        path: list[tuple[int, int, int]] = []
        x, want = u, d
        while want in at[x]:
            y = at[x][want]
            path.append((x, y, want))
            x, want = y, (c if want == d else d)
        for a, b, _ in path:
            unassign(a, b)
        for a, b, old in path:
            assign(a, b, c if old == d else d)

    for u, v in edges:
        fan = [v]
        fanset = {v}
        while True:
            last = fan[-1]
            ext = None
            for x in g.adj[u]:
                if x in fanset:
                    continue
                cx = col.get((min(u, x), max(u, x)))
                if cx is not None and cx not in at[last]:
                    ext = x
                    break
            if ext is None:
                break
            fan.append(ext)
            fanset.add(ext)
        c = free_color(u)
        d = free_color(fan[-1])
        if d in at[u]:
            invert_path(u, c, d)
        w = None
        for i, x in enumerate(fan):
            if d in at[x]:
                continue
            prefix_ok = True
            for j in range(1, i + 1):
                cj = col.get((min(u, fan[j]), max(u, fan[j])))
                if cj is None or cj in at[fan[j - 1]]:
                    prefix_ok = False
                    break
            if prefix_ok:
                w = i
                break
        if w is None:
            raise RuntimeError("no rotatable fan prefix; invariant broken")
        for j in range(w):
            shifted = unassign(u, fan[j + 1])
            assign(u, fan[j], shifted)
        assign(u, fan[w], d)

    used = sorted(set(col.values()))
    remap = {c: i + 1 for i, c in enumerate(used)}
    by_index = {
        i: remap[col[(u, v)]] for i, (u, v) in enumerate(edges)
    }
    return EdgeColoring(by_index, len(used))


def vizing_edge_color_hypergraph(h: Hypergraph) -> EdgeColoring:
    """vizing_edge_color for hypergraphs that are really simple graphs.

    Requires every hyperedge to have exactly two vertices and no pair to
    repeat; anything else raises UnsupportedInputError.
    """
    if any(len(e) != 2 for e in h.edges):
        raise UnsupportedInputError(
            "this colorer needs every hyperedge to have exactly 2 vertices"
        )
    if len(set(h.edges)) != h.m:
        raise UnsupportedInputError(
            "this colorer needs all hyperedges distinct (no multi-edges)"
        )
    g = SimpleGraph(h.n, [(e[0], e[1]) for e in h.edges])
    ec = vizing_edge_color(g)
    position = {e: i for i, e in enumerate(h.edges)}
    colors = {position[pair]: ec.colors[i] for i, pair in enumerate(g.edges())}
    return EdgeColoring(colors, ec.q_used)
