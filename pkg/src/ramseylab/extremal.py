"""Hypergraphs witnessing that regular multipartite matchings can be small.

Three generator families, each self-verifying before returning:

* a 3-partite d-regular hypergraph on parts of size floor(3d/2) whose edges
  fall into d pairwise-intersecting label classes, capping its matching at d
  and refuting the ceil((d-1)n/d) matching bound;
* projective planes of prime order and their truncation at a point, giving
  (p+1)-partite p-regular hypergraphs whose edges pairwise intersect;
* stacked truncated planes with an extra joining part, whose maximum
  matching is exactly the number of stacked copies and so covers only a 1/p
  fraction of the vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence

from .errors import ValidationError, VerificationError
from .hypergraph_lab import PartiteHypergraph, make_hypergraph, regularity


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


# -- the matching-bound counterexample ------------------------------------------


@dataclass(frozen=True)
class AchLabeling:
    """Edge labels into A = {0..d-1}; edges sharing a label intersect."""

    d: int
    m: int
    labels: tuple[int, ...]


def ach_counterexample(d: int) -> tuple[PartiteHypergraph, AchLabeling]:
    """3-partite d-regular simple hypergraph with parts of size m = floor(3d/2)
    whose maximum matching is at most d.

    With A the first d indices and B the rest, every i in A and j in B
    contribute the edges (i,i,j), (i,j,i), (j,i,i); odd d adds the diagonals
    (i,i,i).  Each edge meets the diagonal triple {x_i, y_i, z_i} of exactly
    one i in A in at least two vertices; that label partitions the edges into
    d classes, each pairwise intersecting, so a matching takes at most one
    edge per class.
    """
    if d < 2:
        raise ValidationError("BAD_D", f"need d >= 2, got {d}")
    m = 3 * d // 2
    edges: list[tuple[int, int, int]] = []
    for i in range(d):
        for j in range(d, m):
            edges.extend([(i, i, j), (i, j, i), (j, i, i)])
        if d % 2 == 1:
            edges.append((i, i, i))
    h = make_hypergraph([m, m, m], edges, allow_multi=False)
    labels = tuple(_ach_label(e, d) for e in h.edges)
    _verify_ach(h, labels, d, m)
    return h, AchLabeling(d, m, labels)


def _ach_label(e: Sequence[int], d: int) -> int:
    hits = [i for i in range(d) if sum(1 for x in e if x == i) >= 2]
    if len(hits) != 1:
        raise VerificationError("label-unique",
                                f"edge {tuple(e)} has {len(hits)} candidate labels")
    return hits[0]


def _verify_ach(h: PartiteHypergraph, labels: Sequence[int], d: int, m: int) -> None:
    if regularity(h) != d:
        raise VerificationError("regular", f"construction is not {d}-regular")
    if len(set(h.edges)) != h.m:
        raise VerificationError("simple", "repeated edge")
    by_label: dict[int, list[tuple[int, ...]]] = {}
    for e, lab in zip(h.edges, labels):
        by_label.setdefault(lab, []).append(e)
    if set(by_label) != set(range(d)):
        raise VerificationError("label-range", "labels do not cover A")
    for lab, group in by_label.items():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                if all(group[a][i] != group[b][i] for i in range(3)):
                    raise VerificationError(
                        "label-intersect",
                        f"disjoint edges {group[a]} and {group[b]} share label {lab}")


def ach_bound(d: int, n: int) -> int:
    """ceil((d-1) n / d): the conjectured matching size the counterexample beats."""
    if d < 1 or n < 0:
        raise ValidationError("OUT_OF_RANGE", f"need d >= 1 and n >= 0, got {d}, {n}")
    return ceil((d - 1) * n / d) if n else 0


def greedy_matching_bound(n: int, d: int, r: int) -> Fraction:
    """Vertices coverable greedily in any d-regular r-partite hypergraph with
    n-vertex parts: nd / (1 + (d-1) r), exact."""
    if n < 1 or d < 1 or r < 1:
        raise ValidationError("OUT_OF_RANGE", "need n, d, r >= 1")
    return Fraction(n * d, 1 + (d - 1) * r)


# -- projective planes -----------------------------------------------------------


@dataclass(frozen=True)
class ProjectivePlane:
    """Order-p plane: points 0..p^2+p, lines as sorted point tuples."""

    p: int
    lines: tuple[tuple[int, ...], ...]

    @property
    def num_points(self) -> int:
        return self.p * self.p + self.p + 1


def projective_plane(p: int) -> ProjectivePlane:
    """The classical plane over the p-element field, axiom-checked.

    Points are normalized homogeneous triples over Z_p (first nonzero
    coordinate 1), numbered in lexicographic order; a line is the set of
    points orthogonal to one normalized triple.
    """
    if not _is_prime(p):
        raise ValidationError("NOT_PRIME", f"{p} is not prime (prime powers unsupported)")
    triples = ([(1, a, b) for a in range(p) for b in range(p)]
               + [(0, 1, a) for a in range(p)]
               + [(0, 0, 1)])
    index = {t: i for i, t in enumerate(triples)}
    lines = []
    for c in triples:
        pts = tuple(sorted(index[x] for x in triples
                           if (c[0] * x[0] + c[1] * x[1] + c[2] * x[2]) % p == 0))
        lines.append(pts)
    plane = ProjectivePlane(p, tuple(sorted(lines)))
    _verify_plane(plane)
    return plane


def _verify_plane(plane: ProjectivePlane) -> None:
    p = plane.p
    n_pts = plane.num_points
    if len(plane.lines) != n_pts:
        raise VerificationError("line-count", f"expected {n_pts} lines")
    on_lines = [0] * n_pts
    for ln in plane.lines:
        if len(ln) != p + 1 or len(set(ln)) != p + 1:
            raise VerificationError("line-size", f"line {ln} does not have {p + 1} points")
        for x in ln:
            on_lines[x] += 1
    if any(c != p + 1 for c in on_lines):
        raise VerificationError("point-degree", "some point is not on exactly p+1 lines")
    for a in range(n_pts):
        for b in range(a + 1, n_pts):
            through = sum(1 for ln in plane.lines if a in ln and b in ln)
            if through != 1:
                raise VerificationError("two-points",
                                        f"points {a},{b} lie on {through} common lines")
    for i in range(len(plane.lines)):
        for j in range(i + 1, len(plane.lines)):
            meet = set(plane.lines[i]) & set(plane.lines[j])
            if len(meet) != 1:
                raise VerificationError("two-lines",
                                        f"lines {i},{j} meet in {len(meet)} points")


def truncated_plane(p: int) -> PartiteHypergraph:
    """Delete point 0 from the order-p plane.  The p+1 lines through it,
    minus the point, become the parts; the p^2 remaining lines become edges,
    each meeting every part exactly once.  Verified: p-regular, simple,
    pairwise-intersecting edges."""
    plane = projective_plane(p)
    deleted = 0
    through = [ln for ln in plane.lines if deleted in ln]
    others = [ln for ln in plane.lines if deleted not in ln]
    parts = [tuple(x for x in ln if x != deleted) for ln in through]
    coord = {}
    for i, part in enumerate(parts):
        for idx, x in enumerate(part):
            coord[x] = (i, idx)
    edges = []
    for ln in others:
        slot = [-1] * len(parts)
        for x in ln:
            i, idx = coord[x]
            if slot[i] != -1:
                raise VerificationError("transversal", "line meets a part twice")
            slot[i] = idx
        if any(s == -1 for s in slot):
            raise VerificationError("transversal", "line misses a part")
        edges.append(tuple(slot))
    h = make_hypergraph([p] * (p + 1), edges, allow_multi=False)
    if h.m != p * p or regularity(h) != p:
        raise VerificationError("truncated-shape", "wrong edge count or regularity")
    for a in range(h.m):
        for b in range(a + 1, h.m):
            if all(h.edges[a][i] != h.edges[b][i] for i in range(h.r)):
                raise VerificationError("pairwise-intersect",
                                        f"edges {a} and {b} are disjoint")
    return h


# -- stacked planes with a joining part ------------------------------------------


def claim51_hypergraph(p: int, m: int, uniformity: int | None = None) -> PartiteHypergraph:
    """m vertex-disjoint truncated order-p planes stacked part by part, plus a
    fresh joining part of size pm; every stacked line is extended by every
    joining vertex.  The result is (p+2)-partite and p^2 m-regular, and its
    maximum matching is exactly m, covering a 1/p fraction of the vertices.

    A matching takes at most one extended line per stacked copy (lines of one
    copy pairwise intersect), and m disjoint lines from distinct copies with
    distinct joining vertices exist, which the verifier re-checks exactly.

    uniformity, when given, must be at least p+2; the last part is then
    repeated uniformity-(p+2)+1 times, raising the edge size without changing
    which edge sets are matchings.
    """
    if not _is_prime(p):
        raise ValidationError("NOT_PRIME", f"{p} is not prime (prime powers unsupported)")
    if m < 1:
        raise ValidationError("BAD_M", f"need m >= 1, got {m}")
    base = truncated_plane(p)
    r0 = base.r
    join = p * m
    sizes = [p * m] * r0 + [join]
    edges = []
    for c in range(m):
        for e in base.edges:
            shifted = tuple(x + c * p for x in e)
            for v in range(join):
                edges.append(shifted + (v,))
    h = make_hypergraph(sizes, edges, allow_multi=False)
    if regularity(h) != p * p * m:
        raise VerificationError("regular", "stacked construction is not p^2 m-regular")
    _verify_claim51_matching(h, base, p, m)
    if uniformity is not None:
        h = _duplicate_last_part(h, uniformity - (r0 + 1) + 1)
    return h


def _verify_claim51_matching(h: PartiteHypergraph, base: PartiteHypergraph,
                             p: int, m: int) -> None:
    # upper bound: within one copy all extended lines pairwise intersect in
    # the first r0 coordinates (inherited from the truncated plane), so a
    # matching holds at most one edge per copy
    per_copy = base.m * p * m
    for c in range(m):
        lo = c * per_copy
        for a in range(base.m):
            for b in range(a + 1, base.m):
                ea = h.edges[lo + a * p * m]
                eb = h.edges[lo + b * p * m]
                if all(ea[i] != eb[i] for i in range(base.r)):
                    raise VerificationError("copy-intersect",
                                            f"copy {c} holds disjoint lines {a},{b}")
    # attainment: copy c's first line, joined to vertex c
    witness = [c * per_copy + c for c in range(m)]
    used: set[tuple[int, int]] = set()
    for j in witness:
        for i, x in enumerate(h.edges[j]):
            if (i, x) in used:
                raise VerificationError("witness-disjoint", "matching witness collides")
            used.add((i, x))


def _duplicate_last_part(h: PartiteHypergraph, copies: int) -> PartiteHypergraph:
    if copies < 1:
        raise ValidationError("OUT_OF_RANGE",
                              f"uniformity below the construction's {h.r} parts")
    sizes = list(h.part_sizes) + [h.part_sizes[-1]] * (copies - 1)
    edges = [e + (e[-1],) * (copies - 1) for e in h.edges]
    return make_hypergraph(sizes, edges, allow_multi=h.allow_multi)
