"""Coverings and decompositions of complete graphs by triangle factors.

A generalized factor is a spanning subgraph whose components are each
contained in a triangle: triangles, 2-edge paths, single edges, isolated
vertices.  A proper factor has triangle components only.  This module
classifies factors, searches for covers/decompositions of K_n by r of them,
maximizes coverable edges, and builds the three explicit constructions used
as chromatic lower bounds: Hamilton-cycle splits of K_{2k+1}, galaxy splits
of K_{2k}, and a six-factor covering of K_11.

Cover searches restrict to edge-maximal factors (any factor extends to a
maximal one on the same vertices without losing coverage), fix the first
factor up to isomorphism, and order the middle factors, so exhaustion is a
certified nonexistence.  The search scheme identifier recorded in results
names exactly this reduction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ValidationError, VerificationError
from .graph_core import (
    Graph,
    NodeBudget,
    _bits,
    build_graph,
    complete_graph,
    connected_components,
    restrict,
    union_graphs,
)
from .ramsey_search import (
    A0_EXCEPTIONS,
    DEFAULT_DELTA0,
    P4,
    TRIANGLE,
    has_copy,
)

PROPER = "PROPER"
GENERALIZED = "GENERALIZED"
NOT_A_FACTOR = "NOT_A_FACTOR"
COVER = "COVER"
DECOMPOSITION = "DECOMPOSITION"

COVER_SCHEME = "maximal-factors/first-factor-up-to-iso/sorted-middle-factors"
DECOMP_SCHEME = "first-factor-up-to-iso/descending-middle-masks/forced-last"


def classify_factor(g: Graph) -> str:
    """PROPER, GENERALIZED, or NOT_A_FACTOR for a candidate spanning subgraph."""
    all_triangles = True
    for comp in connected_components(g):
        size = comp.bit_count()
        if size > 3:
            return NOT_A_FACTOR
        if size == 3:
            if restrict(g, comp).m == 2:
                all_triangles = False
        else:
            all_triangles = False
    return PROPER if all_triangles else GENERALIZED


@dataclass(frozen=True)
class FactorCover:
    """A list of factors of K_n with declared mode and properness."""

    n: int
    factors: tuple[Graph, ...]
    mode: str = COVER
    properness: str = GENERALIZED


def make_factor_cover(n: int, factors: Sequence[Graph], mode: str = COVER,
                      properness: str = GENERALIZED) -> FactorCover:
    """Validated constructor: factors live on n vertices and classify as
    declared; DECOMPOSITION additionally requires pairwise edge-disjointness."""
    if mode not in (COVER, DECOMPOSITION):
        raise ValidationError("OUT_OF_RANGE", f"unknown mode {mode!r}")
    if properness not in (PROPER, GENERALIZED):
        raise ValidationError("OUT_OF_RANGE", f"unknown properness {properness!r}")
    for f in factors:
        if f.n != n:
            raise ValidationError("OUT_OF_RANGE",
                                  f"factor on {f.n} vertices in a cover of K_{n}")
        cls = classify_factor(f)
        if properness == PROPER and cls != PROPER:
            raise ValidationError("NOT_PROPER", "factor has a non-triangle component")
        if cls == NOT_A_FACTOR:
            raise ValidationError("NOT_A_FACTOR",
                                  "component larger than a triangle")
    if mode == DECOMPOSITION:
        seen = 0
        for f in factors:
            mask = _edge_mask(f)
            if mask & seen:
                raise ValidationError("DUPLICATE_EDGE",
                                      "factors of a decomposition share an edge")
            seen |= mask
    return FactorCover(n, tuple(factors), mode, properness)


def union_factors(fc: FactorCover | Sequence[Graph]) -> Graph:
    """Edge union of a cover's factors (or of a plain factor list)."""
    factors = fc.factors if isinstance(fc, FactorCover) else tuple(fc)
    return union_graphs(factors)


# -- edge-mask plumbing -------------------------------------------------------


def _edge_bit(u: int, v: int, n: int) -> int:
    if u > v:
        u, v = v, u
    return 1 << (u * (2 * n - u - 1) // 2 + (v - u - 1))


def _edge_mask(g: Graph) -> int:
    mask = 0
    for u, v in g.edges():
        mask |= _edge_bit(u, v, g.n)
    return mask


def _mask_to_graph(mask: int, n: int) -> Graph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if mask & _edge_bit(u, v, n):
                edges.append((u, v))
    return build_graph(n, edges)


def _full_edge_mask(n: int) -> int:
    return (1 << (n * (n - 1) // 2)) - 1


# -- factor enumeration -------------------------------------------------------


def _enumerate_maximal_factors(n: int) -> list[int]:
    """Edge masks of all edge-maximal generalized factors on n vertices.

    A generalized factor is maximal iff its components are triangles plus
    edges plus at most one isolated vertex, with no edge component coexisting
    with the isolated vertex (two such components always accept another edge
    without outgrowing a triangle).
    """
    out: list[int] = []

    def rec(unassigned: int, mask: int, has_single: bool, has_edge: bool) -> None:
        if unassigned == 0:
            out.append(mask)
            return
        low = unassigned & -unassigned
        v = low.bit_length() - 1
        rest = unassigned ^ low
        others = _bits(rest)
        for i, u in enumerate(others):
            for w in others[i + 1:]:
                rec(rest ^ (1 << u) ^ (1 << w),
                    mask | _edge_bit(v, u, n) | _edge_bit(v, w, n) | _edge_bit(u, w, n),
                    has_single, has_edge)
        if not has_single:
            for u in others:
                rec(rest ^ (1 << u), mask | _edge_bit(v, u, n), has_single, True)
            if not has_edge:
                rec(rest, mask, True, has_edge)

    rec((1 << n) - 1, 0, False, False)
    return sorted(set(out))


def _enumerate_proper_factors(n: int) -> list[int]:
    """Edge masks of all spanning triangle partitions of n vertices."""
    if n % 3 != 0:
        return []
    out: list[int] = []

    def rec(unassigned: int, mask: int) -> None:
        if unassigned == 0:
            out.append(mask)
            return
        low = unassigned & -unassigned
        v = low.bit_length() - 1
        rest = unassigned ^ low
        others = _bits(rest)
        for i, u in enumerate(others):
            for w in others[i + 1:]:
                rec(rest ^ (1 << u) ^ (1 << w),
                    mask | _edge_bit(v, u, n) | _edge_bit(v, w, n) | _edge_bit(u, w, n))

    rec((1 << n) - 1, 0)
    return sorted(out)


def _maximal_shape_reps(n: int, proper: bool) -> list[int]:
    """One canonical representative per isomorphism class of maximal factor."""
    reps: list[int] = []
    if proper:
        if n % 3 == 0:
            reps.append(_shape_rep(n, n // 3, 0, 0, 0))
        return reps
    if n % 3 == 1:
        reps.append(_shape_rep(n, (n - 1) // 3, 0, 0, 1))
    for t in range(n // 3 + 1):
        rem = n - 3 * t
        if rem % 2 == 0:
            reps.append(_shape_rep(n, t, 0, rem // 2, 0))
    return reps


def _shape_rep(n: int, triangles: int, paths: int, edges: int, singles: int) -> int:
    """Canonical factor mask: triangles on the lowest vertices, then 2-edge
    paths (centered at the middle vertex), then edges, then isolated ones."""
    assert 3 * (triangles + paths) + 2 * edges + singles == n
    mask = 0
    v = 0
    for _ in range(triangles):
        mask |= (_edge_bit(v, v + 1, n) | _edge_bit(v, v + 2, n)
                 | _edge_bit(v + 1, v + 2, n))
        v += 3
    for _ in range(paths):
        mask |= _edge_bit(v, v + 1, n) | _edge_bit(v + 1, v + 2, n)
        v += 3
    for _ in range(edges):
        mask |= _edge_bit(v, v + 1, n)
        v += 2
    return mask


def _all_factor_shapes(n: int) -> list[tuple[int, int, int, int]]:
    """(triangles, paths, edges, singles) over all generalized factor shapes."""
    shapes = []
    for t in range(n // 3 + 1):
        for p in range((n - 3 * t) // 3 + 1):
            rem = n - 3 * (t + p)
            for e in range(rem // 2 + 1):
                shapes.append((t, p, e, rem - 2 * e))
    return shapes


def _iter_factor_masks_within(n: int, allowed_adj: Sequence[int], proper: bool,
                              limit_mask: int | None = None) -> Iterator[int]:
    """All factor edge-masks drawn from the allowed adjacency, lowest vertex
    first.  Masks only grow along a branch, so any partial mask exceeding
    limit_mask is pruned."""

    def rec(unassigned: int, mask: int) -> Iterator[int]:
        if limit_mask is not None and mask > limit_mask:
            return
        if unassigned == 0:
            yield mask
            return
        low = unassigned & -unassigned
        v = low.bit_length() - 1
        rest = unassigned ^ low
        nbrs_v = allowed_adj[v] & rest
        nb_list = _bits(nbrs_v)
        # triangle v,u,w
        for i, u in enumerate(nb_list):
            for w in nb_list[i + 1:]:
                if (allowed_adj[u] >> w) & 1:
                    yield from rec(rest ^ (1 << u) ^ (1 << w),
                                   mask | _edge_bit(v, u, n) | _edge_bit(v, w, n)
                                   | _edge_bit(u, w, n))
        # 2-edge path centered at v
        for i, u in enumerate(nb_list):
            for w in nb_list[i + 1:]:
                yield from rec(rest ^ (1 << u) ^ (1 << w),
                               mask | _edge_bit(v, u, n) | _edge_bit(v, w, n))
        # 2-edge path v-u-w
        for u in nb_list:
            for w in _bits(allowed_adj[u] & rest & ~(1 << u)):
                if w != v:
                    yield from rec(rest ^ (1 << u) ^ (1 << w),
                                   mask | _edge_bit(v, u, n) | _edge_bit(u, w, n))
        if not proper:
            # single edge
            for u in nb_list:
                yield from rec(rest ^ (1 << u), mask | _edge_bit(v, u, n))
            # isolated vertex
            yield from rec(rest, mask)

    yield from rec((1 << n) - 1, 0)


def _adj_of_mask(mask: int, n: int) -> list[int]:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if mask & _edge_bit(u, v, n):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


# -- cover and decomposition search -------------------------------------------


@dataclass(frozen=True)
class CoverSearchResult:
    """cover is None iff the exhaustive symmetry-broken search refuted
    existence; nodes counts examined branch points."""

    cover: FactorCover | None
    nodes: int
    scheme: str


def cover_search(n: int, r: int, properness: str = GENERALIZED,
                 mode: str = COVER, budget: int | None = None) -> CoverSearchResult:
    """Search for r factors of K_n whose union covers (or exactly partitions)
    its edges.  Exhaustion without a hit is a certified nonexistence."""
    if n < 1 or n > 16:
        raise ValidationError("BAD_N", f"cover search supports 1 <= n <= 16, got {n}")
    if r < 1:
        raise ValidationError("OUT_OF_RANGE", f"need r >= 1, got {r}")
    if properness not in (PROPER, GENERALIZED):
        raise ValidationError("OUT_OF_RANGE", f"unknown properness {properness!r}")
    if mode not in (COVER, DECOMPOSITION):
        raise ValidationError("OUT_OF_RANGE", f"unknown mode {mode!r}")
    bud = NodeBudget(budget)
    proper = properness == PROPER
    if mode == COVER:
        factors = _cover_mode_search(n, r, proper, bud)
        scheme = COVER_SCHEME
    else:
        factors = _decomp_mode_search(n, r, proper, bud)
        scheme = DECOMP_SCHEME
    if factors is None:
        return CoverSearchResult(None, bud.spent, scheme)
    fc = make_factor_cover(n, factors, mode, properness)
    if _edge_mask(union_factors(fc)) != _full_edge_mask(n):
        raise VerificationError("cover-union", "search returned a non-covering witness")
    return CoverSearchResult(fc, bud.spent, scheme)


def _cover_mode_search(n: int, r: int, proper: bool,
                       bud: NodeBudget) -> list[Graph] | None:
    full = _full_edge_mask(n)
    if r == 1:
        last = _last_cover_factor(n, full, proper)
        return [last] if last is not None else None
    pool = _enumerate_proper_factors(n) if proper else _enumerate_maximal_factors(n)
    if not pool:
        return None
    reps = _maximal_shape_reps(n, proper)
    maxf = max(m.bit_count() for m in pool)
    chosen: list[int] = []

    def rec(level: int, covered: int, start_idx: int) -> list[Graph] | None:
        bud.tick()
        missing = (full & ~covered).bit_count()
        if missing > (r - level + 1) * maxf:
            return None
        if level == r:
            last = _last_cover_factor(n, full & ~covered, proper)
            if last is None:
                return None
            return [_mask_to_graph(m, n) for m in chosen] + [last]
        candidates = reps if level == 1 else pool[start_idx:]
        base_idx = 0 if level == 1 else start_idx
        for off, mask in enumerate(candidates):
            chosen.append(mask)
            got = rec(level + 1, covered | mask, 0 if level == 1 else base_idx + off)
            if got is not None:
                return got
            chosen.pop()
        return None

    return rec(1, 0, 0)


def _last_cover_factor(n: int, missing_mask: int, proper: bool) -> Graph | None:
    """A single factor containing all still-missing edges, if one exists.

    For generalized factors the missing graph must itself classify; for
    proper factors its components must pack into disjoint triangles, which a
    counting argument settles: close up 3-vertex components, pair each edge
    component with a spare vertex, group leftover vertices in threes.
    """
    g = _mask_to_graph(missing_mask, n)
    if not proper:
        return g if classify_factor(g) != NOT_A_FACTOR else None
    if n % 3 != 0:
        return None
    blocks: list[list[int]] = []
    twos: list[list[int]] = []
    ones: list[int] = []
    for comp in connected_components(g):
        size = comp.bit_count()
        if size > 3:
            return None
        members = _bits(comp)
        if size == 3:
            blocks.append(members)
        elif size == 2:
            twos.append(members)
        else:
            ones.append(members[0])
    if len(twos) > len(ones) or (len(ones) - len(twos)) % 3 != 0:
        return None
    for pair, extra in zip(twos, ones):
        blocks.append(pair + [extra])
    rest = ones[len(twos):]
    for i in range(0, len(rest), 3):
        blocks.append(rest[i:i + 3])
    edges = []
    for a, b, c in blocks:
        edges.extend([(a, b), (a, c), (b, c)])
    return build_graph(n, edges)


def _decomp_mode_search(n: int, r: int, proper: bool,
                        bud: NodeBudget) -> list[Graph] | None:
    full = _full_edge_mask(n)
    full_adj = complete_graph(n).adj
    maxf = n if n % 3 == 0 else n - 1
    if proper and n % 3 != 0:
        return None

    def last_ok(mask: int) -> bool:
        cls = classify_factor(_mask_to_graph(mask, n))
        return cls == PROPER if proper else cls != NOT_A_FACTOR

    if r == 1:
        return [_mask_to_graph(full, n)] if last_ok(full) else None

    if proper:
        reps = [_shape_rep(n, n // 3, 0, 0, 0)]
    else:
        reps = sorted({_shape_rep(n, *shape) for shape in _all_factor_shapes(n)},
                      reverse=True)
    chosen: list[int] = []

    def rec(level: int, remaining: int, prev_mask: int) -> list[Graph] | None:
        bud.tick()
        if remaining.bit_count() > (r - level + 1) * maxf:
            return None
        if level == r:
            if last_ok(remaining):
                return [_mask_to_graph(m, n) for m in chosen] + [_mask_to_graph(remaining, n)]
            return None
        if level == 1:
            candidates: Iterator[int] = iter(reps)
        else:
            candidates = _iter_factor_masks_within(
                n, _adj_of_mask(remaining, n), proper, limit_mask=prev_mask)
        for mask in candidates:
            chosen.append(mask)
            # the first factor is fixed only up to isomorphism, so it does not
            # bound the first middle factor's mask
            got = rec(level + 1, remaining & ~mask, full if level == 1 else mask)
            if got is not None:
                return got
            chosen.pop()
        return None

    return rec(1, full, full)


# -- maximum coverable edges ---------------------------------------------------


@dataclass(frozen=True)
class MaxCoverResult:
    value: int
    cover: FactorCover
    nodes: int


def max_coverable_edges(n: int, r: int, budget: int | None = None) -> MaxCoverResult:
    """Exact maximum number of K_n edges coverable by r generalized factors.

    Same symmetry reduction as cover_search; the final factor is chosen by a
    subset-memoized packing that maximizes edges taken from the uncovered
    graph, so the result is an exact maximum, not a heuristic.
    """
    if n < 1 or n > 12:
        raise ValidationError("BAD_N", f"max cover search supports 1 <= n <= 12, got {n}")
    if r < 1:
        raise ValidationError("OUT_OF_RANGE", f"need r >= 1, got {r}")
    bud = NodeBudget(budget)
    full = _full_edge_mask(n)
    pool = _enumerate_maximal_factors(n)
    reps = _maximal_shape_reps(n, proper=False)
    maxf = max(m.bit_count() for m in pool)
    best = -1
    best_masks: list[int] = []
    chosen: list[int] = []

    def rec(level: int, covered: int, start_idx: int) -> None:
        nonlocal best, best_masks
        bud.tick()
        cov = covered.bit_count()
        if cov + (r - level + 1) * maxf <= best:
            return
        if level == r:
            gain, gmask = _max_partial_factor(n, full & ~covered)
            if cov + gain > best:
                best = cov + gain
                best_masks = chosen + [gmask]
            return
        candidates = reps if level == 1 else pool[start_idx:]
        base_idx = 0 if level == 1 else start_idx
        for off, mask in enumerate(candidates):
            chosen.append(mask)
            rec(level + 1, covered | mask, 0 if level == 1 else base_idx + off)
            chosen.pop()

    rec(1, 0, 0)
    factors = [_mask_to_graph(m, n) for m in best_masks]
    return MaxCoverResult(best, make_factor_cover(n, factors, COVER, GENERALIZED),
                          bud.spent)


def _max_partial_factor(n: int, allowed_mask: int) -> tuple[int, int]:
    """Maximum-edge subgraph of the allowed graph that is a generalized
    factor, by subset-memoized recursion on the lowest undecided vertex."""
    adj = _adj_of_mask(allowed_mask, n)
    memo: dict[int, tuple[int, int]] = {}

    def rec(unassigned: int) -> tuple[int, int]:
        if unassigned == 0:
            return 0, 0
        hit = memo.get(unassigned)
        if hit is not None:
            return hit
        low = unassigned & -unassigned
        v = low.bit_length() - 1
        rest = unassigned ^ low
        best, best_mask = rec(rest)  # v isolated
        nb_list = _bits(adj[v] & rest)
        for u in nb_list:
            ub = 1 << u
            e_vu = _edge_bit(v, u, n)
            sub, sub_mask = rec(rest ^ ub)
            if sub + 1 > best:
                best, best_mask = sub + 1, sub_mask | e_vu
            for w in _bits(adj[u] & rest & ~ub):
                sub, sub_mask = rec(rest ^ ub ^ (1 << w))
                cand = sub_mask | e_vu | _edge_bit(u, w, n)
                if sub + 2 > best:
                    best, best_mask = sub + 2, cand
        for i, u in enumerate(nb_list):
            for w in nb_list[i + 1:]:
                sub, sub_mask = rec(rest ^ (1 << u) ^ (1 << w))
                path_mask = _edge_bit(v, u, n) | _edge_bit(v, w, n)
                if (adj[u] >> w) & 1:
                    tri = path_mask | _edge_bit(u, w, n)
                    if sub + 3 > best:
                        best, best_mask = sub + 3, sub_mask | tri
                if sub + 2 > best:
                    best, best_mask = sub + 2, sub_mask | path_mask
        memo[unassigned] = (best, best_mask)
        return best, best_mask

    return rec((1 << n) - 1)


# -- explicit constructions -----------------------------------------------------


def walecki_decomposition(k: int) -> tuple[Graph, ...]:
    """K_{2k+1} as k edge-disjoint Hamilton cycles.

    Each cycle is a rotation of a zigzag path on 2k vertices with both ends
    joined to a hub vertex (index 2k).  The result is verified before being
    returned: k cycles, 2-regular and connected, edge-disjoint, union K_{2k+1}.
    """
    if k < 1:
        raise ValidationError("BAD_K", f"need k >= 1, got {k}")
    n = 2 * k + 1
    hub = 2 * k
    base = []
    for idx in range(2 * k):
        j = (idx + 1) // 2
        base.append(j if idx % 2 == 1 else (2 * k - j) % (2 * k))
    cycles = []
    for i in range(k):
        path = [(x + i) % (2 * k) for x in base]
        edges = [(hub, path[0]), (hub, path[-1])]
        edges.extend((path[t], path[t + 1]) for t in range(len(path) - 1))
        cycles.append(build_graph(n, edges))
    _verify_cycle_decomposition(cycles, n)
    return tuple(cycles)


def _verify_cycle_decomposition(cycles: Sequence[Graph], n: int) -> None:
    seen = 0
    for g in cycles:
        if g.m != n or any(g.degree(v) != 2 for v in range(n)):
            raise VerificationError("hamilton-cycle", "class is not a 2-regular spanning cycle")
        if len(connected_components(g)) != 1:
            raise VerificationError("hamilton-cycle", "class is disconnected")
        mask = _edge_mask(g)
        if mask & seen:
            raise VerificationError("edge-disjoint", "cycles share an edge")
        seen |= mask
    if seen != _full_edge_mask(n):
        raise VerificationError("union-complete", "cycles do not cover K_n")


def galaxy_cover(k: int) -> tuple[Graph, ...]:
    """K_{2k} as k double-star classes plus one perfect matching.

    Galaxy i (0-based) is the star at vertex i toward the next k-1 vertices
    plus the star at vertex i+k toward the k-1 after it, indices mod 2k; the
    final class matches j with j+k.  Each class is a star forest, so it
    contains no triangle and no 4-vertex path.  Verified before returning.
    """
    if k < 2:
        raise ValidationError("BAD_K", f"need k >= 2, got {k}")
    n = 2 * k
    classes = []
    for i in range(k):
        edges = []
        for t in range(1, k):
            edges.append((i, (i + t) % n))
            edges.append(((i + k) % n, (i + k + t) % n))
        classes.append(build_graph(n, edges))
    classes.append(build_graph(n, [(j, j + k) for j in range(k)]))
    seen = 0
    for g in classes:
        if has_copy(g, TRIANGLE) or has_copy(g, P4):
            raise VerificationError("star-forest", "galaxy class is not a star forest")
        mask = _edge_mask(g)
        if mask & seen:
            raise VerificationError("edge-disjoint", "galaxy classes share an edge")
        seen |= mask
    if seen != _full_edge_mask(n):
        raise VerificationError("union-complete", "galaxies do not cover K_{2k}")
    return tuple(classes)


# Six generalized factors covering all 55 edges of K_11 (1-based vertex
# labels; hand-checked transcription, re-verified structurally on import by
# k11_cover itself).
_K11_FACTORS_1BASED: tuple[tuple[tuple[int, int], ...], ...] = (
    ((1, 4), (1, 7), (4, 7), (2, 5), (2, 8), (5, 8), (3, 6), (3, 9), (6, 9), (10, 11)),
    ((2, 6), (2, 10), (6, 10), (3, 4), (3, 11), (4, 11), (7, 8), (7, 9), (8, 9), (1, 5)),
    ((1, 9), (1, 11), (9, 11), (3, 8), (3, 10), (8, 10), (4, 5), (4, 6), (5, 6), (2, 7)),
    ((5, 9), (5, 10), (9, 10), (6, 7), (6, 11), (7, 11), (1, 2), (1, 3), (2, 3), (4, 8)),
    ((1, 6), (1, 8), (6, 8), (2, 4), (2, 9), (4, 9), (3, 5), (5, 11), (7, 10)),
    ((1, 10), (4, 10), (2, 11), (8, 11), (3, 7), (5, 7)),
)


def k11_cover() -> FactorCover:
    """Six generalized factors whose union is exactly K_11.

    Four rows are three triangles plus an edge, one is two triangles, a
    2-edge path and an edge, one is three 2-edge paths.  This certifies that
    eleven pairwise-adjacent vertices survive a union of six factors, the
    lower bound matching chi_r_report(6).
    """
    factors = [build_graph(11, [(u - 1, v - 1) for u, v in fac])
               for fac in _K11_FACTORS_1BASED]
    for g in factors:
        if classify_factor(g) == NOT_A_FACTOR:
            raise VerificationError("factor-shape", "K_11 table row is not a factor")
    union = union_graphs(factors)
    if union.m != 55 or _edge_mask(union) != _full_edge_mask(11):
        raise VerificationError("union-complete", "K_11 table does not cover all 55 edges")
    return FactorCover(11, tuple(factors), COVER, GENERALIZED)


# -- chi_r reporting ------------------------------------------------------------


@dataclass(frozen=True)
class ChiReport:
    """Best known bounds on the maximum chromatic number of a union of r
    generalized triangle factors."""

    r: int
    lower: int
    upper: int
    status: str  # EXACT | INTERVAL | CONDITIONAL
    delta0: int
    note: str = ""


def chi_r_report(r: int, delta0: int = DEFAULT_DELTA0) -> ChiReport:
    """Exact value or interval for the extremal chromatic number at r factors.

    r = 1 (mod 3): exactly 2r+1.  r = 0 (mod 3): exactly 2r except for the
    eleven exceptional r where only [2r-1, 2r] is known and the question is
    open.  r = 2 (mod 3): 3 at r=2; for r at or above the delta0 threshold
    the value 2r-1 holds conditionally on that threshold; in between, the
    interval [2r-1, 2r].
    """
    if r < 1:
        raise ValidationError("OUT_OF_RANGE", f"need r >= 1, got {r}")
    if delta0 < 1:
        raise ValidationError("OUT_OF_RANGE", "delta0 must be positive")
    if r % 3 == 1:
        return ChiReport(r, 2 * r + 1, 2 * r + 1, "EXACT", delta0)
    if r % 3 == 0:
        if r in A0_EXCEPTIONS:
            return ChiReport(r, 2 * r - 1, 2 * r, "INTERVAL", delta0,
                             note="open exceptional case")
        return ChiReport(r, 2 * r, 2 * r, "EXACT", delta0)
    if r == 2:
        return ChiReport(r, 3, 3, "EXACT", delta0)
    if r >= delta0:
        return ChiReport(r, 2 * r - 1, 2 * r - 1, "CONDITIONAL", delta0,
                         note="assumes the delta0 degree threshold")
    return ChiReport(r, 2 * r - 1, 2 * r, "INTERVAL", delta0,
                     note=f"exact value known only from r >= delta0 = {delta0}")


def random_factor(n: int, properness: str = GENERALIZED, seed: int = 0) -> Graph:
    """Seed-deterministic random factor on n vertices."""
    rng = random.Random(seed)
    if properness == PROPER:
        if n % 3 != 0:
            raise ValidationError("BAD_N", f"proper factors need 3 | n, got {n}")
        perm = list(range(n))
        rng.shuffle(perm)
        edges = []
        for i in range(0, n, 3):
            a, b, c = perm[i:i + 3]
            edges.extend([(a, b), (a, c), (b, c)])
        return build_graph(n, edges)
    if properness != GENERALIZED:
        raise ValidationError("OUT_OF_RANGE", f"unknown properness {properness!r}")
    perm = list(range(n))
    rng.shuffle(perm)
    edges = []
    i = 0
    while i < n:
        size = rng.choice([s for s in (1, 2, 3) if s <= n - i])
        block = perm[i:i + size]
        if size == 2:
            edges.append((block[0], block[1]))
        elif size == 3:
            if rng.random() < 0.5:
                a, b, c = block
                edges.extend([(a, b), (a, c), (b, c)])
            else:
                center = rng.randrange(3)
                others = [block[t] for t in range(3) if t != center]
                edges.extend([(block[center], others[0]), (block[center], others[1])])
        i += size
    return build_graph(n, edges)
