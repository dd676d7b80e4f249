"""Exact primitives for small simple graphs.

Vertices are 0-based indices and adjacency is one fixed-width bitmask per
vertex, which caps graphs at 64 vertices.  All values are immutable, all
searches are sequential and break ties toward the lowest vertex index, so
every result and witness is reproducible run to run.

Chromatic number is computed exactly: a maximum-clique lower bound, a
saturation-greedy upper bound, then saturation-guided backtracking for each
candidate palette size in between.  Both branch-and-bound searches charge
nodes against a shared budget and abort with partial bounds instead of
returning a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExceededError, ParseError, ValidationError

MAX_VERTICES = 64
DEFAULT_NODE_BUDGET = 10**8


class NodeBudget:
    """Countdown of branch nodes shared by the exact searches."""

    __slots__ = ("limit", "spent")

    def __init__(self, limit: int | None = None):
        self.limit = DEFAULT_NODE_BUDGET if limit is None else limit
        self.spent = 0

    def tick(self) -> None:
        if self.spent >= self.limit:
            raise BudgetExceededError("node budget exhausted", nodes=self.spent)
        self.spent += 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1, adjacency as bitmasks."""

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            while rest:
                low = rest & -rest
                out.append((u, u + 1 + low.bit_length() - 1))
                rest ^= low
        return out

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a graph from an edge list.

    Raises ValidationError with code OUT_OF_RANGE for a bad vertex count or
    index, SELF_LOOP for u == u edges, DUPLICATE_EDGE for repeats.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise ValidationError("OUT_OF_RANGE", f"vertex count {n} not in 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError("OUT_OF_RANGE", f"edge ({u}, {v}) off a {n}-vertex graph")
        if u == v:
            raise ValidationError("SELF_LOOP", f"self-loop at vertex {u}")
        if (adj[u] >> v) & 1:
            raise ValidationError("DUPLICATE_EDGE", f"edge ({u}, {v}) given twice")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError("OUT_OF_RANGE", "cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with the given number of leaves, centered at vertex 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def matching_graph(size: int) -> Graph:
    return build_graph(2 * size, [(2 * i, 2 * i + 1) for i in range(size)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple((full ^ a) & ~(1 << v) for v, a in enumerate(g.adj)))


def union_graphs(graphs: Sequence[Graph]) -> Graph:
    """Edge union of graphs sharing a vertex set."""
    if not graphs:
        raise ValidationError("OUT_OF_RANGE", "union of zero graphs")
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValidationError("OUT_OF_RANGE", "union over mismatched vertex counts")
    adj = [0] * n
    for g in graphs:
        for v in range(n):
            adj[v] |= g.adj[v]
    return Graph(n, tuple(adj))


def restrict(g: Graph, vertex_mask: int) -> Graph:
    """Same vertex set, keeping only edges inside vertex_mask."""
    return Graph(g.n, tuple((g.adj[v] & vertex_mask) if (vertex_mask >> v) & 1 else 0
                            for v in range(g.n)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex permutation v -> perm[v]."""
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return build_graph(g.n, edges)


def connected_components(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, by lowest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


# -- text format ------------------------------------------------------------
#
# Line 1: "n m", then m lines "u v".  The parser is strict so certificates
# round-trip byte for byte.


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"bad header line {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"non-integer header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer edge line {ln!r}") from None
    return build_graph(n, edges)


# -- vertex colorings ---------------------------------------------------------


@dataclass(frozen=True)
class VertexColoring:
    """Total map vertex -> color in 0..palette-1."""

    colors: tuple[int, ...]
    palette: int


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n:
        return False
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return False
    return True


def _greedy_saturation_coloring(g: Graph) -> list[int]:
    """Greedy coloring in saturation order; gives the search's upper bound."""
    n = g.n
    colors = [-1] * n
    ncolor_mask = [0] * n
    uncolored_deg = [g.degree(v) for v in range(n)]
    for _ in range(n):
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                key = (ncolor_mask[v].bit_count(), uncolored_deg[v])
                if key > best_key:
                    best_key, best_v = key, v
        c = 0
        while (ncolor_mask[best_v] >> c) & 1:
            c += 1
        colors[best_v] = c
        for u in _bits(g.adj[best_v]):
            ncolor_mask[u] |= 1 << c
            uncolored_deg[u] -= 1
    return colors


def _exact_k_coloring(g: Graph, k: int, budget: NodeBudget) -> list[int] | None:
    """Proper k-coloring via saturation-guided backtracking, or None.

    Color symmetry is broken canonically: a vertex may open color c only if
    colors 0..c-1 are already in use.  Vertex ties go to the lowest index.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    ncolor_mask = [0] * n
    uncolored_deg = [g.degree(v) for v in range(n)]
    adj = g.adj

    def pick() -> int:
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                key = (ncolor_mask[v].bit_count(), uncolored_deg[v])
                if key > best_key:
                    best_key, best_v = key, v
        return best_v

    def down(count: int, used: int) -> bool:
        if count == n:
            return True
        v = pick()
        cap = min(k, used + 1)
        avail = ~ncolor_mask[v] & ((1 << cap) - 1)
        while avail:
            low = avail & -avail
            avail ^= low
            c = low.bit_length() - 1
            budget.tick()
            colors[v] = c
            touched = []
            nb = adj[v]
            while nb:
                lowu = nb & -nb
                nb ^= lowu
                u = lowu.bit_length() - 1
                touched.append((u, ncolor_mask[u]))
                ncolor_mask[u] |= 1 << c
                uncolored_deg[u] -= 1
            if down(count + 1, max(used, c + 1)):
                return True
            for u, old in touched:
                ncolor_mask[u] = old
                uncolored_deg[u] += 1
            colors[v] = -1
        return False

    if down(0, 0):
        return colors
    return None


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    witness: VertexColoring


def chromatic_number(g: Graph, budget: int | None = None) -> ChromaticResult:
    """Exact chromatic number with a proper coloring as witness.

    On budget exhaustion raises BudgetExceededError whose ``partial`` maps
    carry the proven interval (lower, upper) and the best coloring found.
    """
    if g.n == 0:
        return ChromaticResult(0, VertexColoring((), 0))
    bud = NodeBudget(budget)
    greedy = _greedy_saturation_coloring(g)
    upper = max(greedy) + 1
    lower = 1 if g.m == 0 else 2
    try:
        lower = max(lower, _max_clique_search(g, bud)[0])
        if lower == upper:
            return ChromaticResult(upper, VertexColoring(tuple(greedy), upper))
        for k in range(lower, upper):
            witness = _exact_k_coloring(g, k, bud)
            if witness is not None:
                return ChromaticResult(k, VertexColoring(tuple(witness), k))
            lower = k + 1
        return ChromaticResult(upper, VertexColoring(tuple(greedy), upper))
    except BudgetExceededError:
        raise BudgetExceededError(
            "chromatic number undecided within node budget",
            lower=lower, upper=upper, nodes=bud.spent,
            witness=VertexColoring(tuple(greedy), upper),
        ) from None


def _max_clique_search(g: Graph, budget: NodeBudget,
                       stop_at: int | None = None) -> tuple[int, int]:
    """Maximum clique (size, vertex mask) by coloring-bounded branch and bound.

    If stop_at is given the search may stop early once a clique that large
    is found; the reported size is then only a lower bound >= stop_at.
    """
    n = g.n
    if n == 0:
        return 0, 0
    adj = g.adj
    best = 1
    best_mask = 1
    done = False

    def expand(rmask: int, rsize: int, cand: int) -> None:
        nonlocal best, best_mask, done
        budget.tick()
        if cand == 0:
            if rsize > best:
                best, best_mask = rsize, rmask
                if stop_at is not None and best >= stop_at:
                    done = True
            return
        # Greedy-color the candidates; color index bounds the clique growth.
        order: list[int] = []
        bounds: list[int] = []
        rest = cand
        color = 0
        while rest:
            color += 1
            layer = rest
            while layer:
                low = layer & -layer
                v = low.bit_length() - 1
                order.append(v)
                bounds.append(color)
                rest ^= low
                layer = layer & ~low & ~adj[v]
        for i in range(len(order) - 1, -1, -1):
            if done:
                return
            if rsize + bounds[i] <= best:
                return
            v = order[i]
            vb = 1 << v
            expand(rmask | vb, rsize + 1, cand & adj[v])
            cand &= ~vb

    expand(0, 0, g.full_mask)
    return best, best_mask


def max_clique(g: Graph, budget: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Maximum clique size together with one realizing vertex tuple."""
    if g.n == 0:
        return 0, ()
    size, mask = _max_clique_search(g, NodeBudget(budget))
    return size, tuple(_bits(mask))


def clique_number(g: Graph, budget: int | None = None) -> int:
    return max_clique(g, budget)[0]


def contains_clique(g: Graph, s: int, budget: int | None = None) -> bool:
    """Whether g has a clique on s vertices."""
    if s <= 0:
        return True
    if s == 1:
        return g.n >= 1
    if s > g.n:
        return False
    size, _ = _max_clique_search(g, NodeBudget(budget), stop_at=s)
    return size >= s


# -- cores and coloring extension --------------------------------------------


@dataclass(frozen=True)
class KCoreResult:
    """Maximal subgraph of minimum degree >= d, plus the peeling order."""

    vertices: tuple[int, ...]
    graph: Graph
    elimination_order: tuple[int, ...]


def k_core(g: Graph, d: int) -> KCoreResult:
    """Peel vertices of degree < d (lowest index first) until none remain."""
    alive = g.full_mask
    deg = [g.degree(v) for v in range(g.n)]
    order = []
    while True:
        victim = -1
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if deg[v] < d:
                victim = v
                break
            rest ^= low
        if victim < 0:
            break
        alive ^= 1 << victim
        order.append(victim)
        for u in _bits(g.adj[victim] & alive):
            deg[u] -= 1
    return KCoreResult(tuple(_bits(alive)), restrict(g, alive), tuple(order))


def extend_coloring_from_core(g: Graph, d: int,
                              core_coloring: Mapping[int, int]) -> VertexColoring:
    """Grow a proper d-coloring of the d-core into one of the whole graph.

    Re-inserting the peeled vertices in reverse order works because each had
    fewer than d colored neighbors at its removal time.  Raises
    ValidationError INVALID_CORE_COLORING if the given coloring does not
    exactly cover the core, uses a color outside 0..d-1, or is improper.
    """
    core = k_core(g, d)
    if set(core_coloring) != set(core.vertices):
        raise ValidationError("INVALID_CORE_COLORING",
                              "coloring domain is not the d-core vertex set")
    if any(not 0 <= c < d for c in core_coloring.values()):
        raise ValidationError("INVALID_CORE_COLORING",
                              f"color outside 0..{d - 1}")
    for u, v in core.graph.edges():
        if core_coloring[u] == core_coloring[v]:
            raise ValidationError("INVALID_CORE_COLORING",
                                  f"edge ({u}, {v}) is monochromatic in the core")
    colors = [-1] * g.n
    for v, c in core_coloring.items():
        colors[v] = c
    for v in reversed(core.elimination_order):
        used = 0
        for u in _bits(g.adj[v]):
            if colors[u] >= 0:
                used |= 1 << colors[u]
        c = 0
        while (used >> c) & 1:
            c += 1
        if c >= d:
            raise ValidationError("INVALID_CORE_COLORING",
                                  f"no free color for vertex {v}; core was not maximal")
        colors[v] = c
    return VertexColoring(tuple(colors), d)
