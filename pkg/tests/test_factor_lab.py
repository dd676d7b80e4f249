"""Factors of complete graphs: covers, decompositions, extremal unions."""

from __future__ import annotations

import random

import pytest

from ramseylab.errors import ValidationError
from ramseylab.factor_lab import (
    COVER,
    COVER_SCHEME,
    DECOMP_SCHEME,
    DECOMPOSITION,
    GENERALIZED,
    NOT_A_FACTOR,
    PROPER,
    _enumerate_maximal_factors,
    _enumerate_proper_factors,
    chi_r_report,
    classify_factor,
    cover_search,
    galaxy_cover,
    k11_cover,
    make_factor_cover,
    max_coverable_edges,
    random_factor,
    union_factors,
    walecki_decomposition,
)
from ramseylab.graph_core import (
    build_graph,
    chromatic_number,
    empty_graph,
    union_graphs,
)
from ramseylab.ramsey_search import (
    FAMILY_PRESETS,
    coloring_from_classes,
    verify_mono_free,
)


def _triangle_blocks(n: int, *blocks: tuple[int, int, int]):
    edges = []
    for a, b, c in blocks:
        edges.extend([(a, b), (a, c), (b, c)])
    return build_graph(n, edges)


# -- classification and construction ----------------------------------------------


def test_classify_factor():
    assert classify_factor(_triangle_blocks(6, (0, 1, 2), (3, 4, 5))) == PROPER
    assert classify_factor(empty_graph(4)) == GENERALIZED
    assert classify_factor(build_graph(4, [(0, 1), (2, 3)])) == GENERALIZED
    assert classify_factor(build_graph(3, [(0, 1), (1, 2)])) == GENERALIZED
    assert classify_factor(build_graph(4, [(0, 1), (1, 2), (2, 3)])) == NOT_A_FACTOR
    assert classify_factor(build_graph(4, [(0, 1), (0, 2), (0, 3)])) == NOT_A_FACTOR


def test_make_factor_cover_validation():
    tri = _triangle_blocks(6, (0, 1, 2), (3, 4, 5))
    path = build_graph(6, [(0, 1), (1, 2)])
    fc = make_factor_cover(6, [tri, path])
    assert fc.mode == COVER and fc.properness == GENERALIZED
    with pytest.raises(ValidationError) as exc:
        make_factor_cover(6, [path], properness=PROPER)
    assert exc.value.code == "NOT_PROPER"
    with pytest.raises(ValidationError) as exc:
        make_factor_cover(6, [build_graph(6, [(0, 1), (1, 2), (2, 3)])])
    assert exc.value.code == "NOT_A_FACTOR"
    with pytest.raises(ValidationError) as exc:
        make_factor_cover(5, [tri])
    assert exc.value.code == "OUT_OF_RANGE"
    with pytest.raises(ValidationError) as exc:
        make_factor_cover(6, [tri, tri], mode=DECOMPOSITION)
    assert exc.value.code == "DUPLICATE_EDGE"
    with pytest.raises(ValidationError):
        make_factor_cover(6, [tri], mode="NEITHER")


def test_union_factors():
    tri = _triangle_blocks(6, (0, 1, 2), (3, 4, 5))
    other = _triangle_blocks(6, (0, 3, 4))
    u = union_factors([tri, other])
    assert u.m == 8  # edge (3, 4) sits in both factors
    fc = make_factor_cover(6, [tri, other])
    assert union_factors(fc) == u


# -- factor enumeration --------------------------------------------------------------


def _is_maximal_factor(g) -> bool:
    """True maximality: no single edge of K_n can be added and keep a factor."""
    if classify_factor(g) == NOT_A_FACTOR:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                bigger = build_graph(g.n, g.edges() + [(u, v)])
                if classify_factor(bigger) != NOT_A_FACTOR:
                    return False
    return True


def test_enumerate_maximal_factors_counts():
    # n = 6: 10 ways to split into two triangles, 15 perfect matchings
    masks6 = _enumerate_maximal_factors(6)
    assert len(masks6) == 25
    # n = 7: 70 two-triangle-plus-spare, 105 triangle plus two disjoint edges
    assert len(_enumerate_maximal_factors(7)) == 175


def test_enumerate_maximal_factors_are_maximal():
    from ramseylab.factor_lab import _mask_to_graph

    for n in (5, 6, 7):
        masks = _enumerate_maximal_factors(n)
        assert len(set(masks)) == len(masks)
        for mask in masks:
            g = _mask_to_graph(mask, n)
            assert classify_factor(g) != NOT_A_FACTOR
            assert _is_maximal_factor(g)


def test_enumerate_proper_factors_counts():
    # (3k)! / (6^k k!) triangle partitions: 10 at n = 6, 280 at n = 9
    assert len(_enumerate_proper_factors(6)) == 10
    assert len(_enumerate_proper_factors(9)) == 280


# -- cover and decomposition search ---------------------------------------------------


def test_cover_search_small_positive():
    res = cover_search(5, 3)
    assert res.cover is not None and res.scheme == COVER_SCHEME
    assert union_factors(res.cover).m == 10


def test_cover_search_refutes_six_three():
    res = cover_search(6, 3)
    assert res.cover is None
    assert res.nodes > 0 and res.scheme == COVER_SCHEME


def test_cover_search_six_four():
    res = cover_search(6, 4)
    assert res.cover is not None
    assert union_factors(res.cover).m == 15


def test_proper_decomposition_of_k9():
    # the classic resolvable triple system on nine points
    res = cover_search(9, 4, properness=PROPER, mode=DECOMPOSITION)
    assert res.cover is not None and res.scheme == DECOMP_SCHEME
    assert res.cover.mode == DECOMPOSITION
    total = sum(f.m for f in res.cover.factors)
    assert total == 36 and union_factors(res.cover).m == 36


def test_decomposition_requires_exact_divisibility():
    # K_6 has 15 edges, factors carry at most 6: three generalized factors
    # can cover at most 18 but cannot partition 15 into factor shapes of K_6
    res = cover_search(6, 3, mode=DECOMPOSITION)
    assert res.cover is None


def test_cover_search_validation():
    with pytest.raises(ValidationError) as exc:
        cover_search(0, 2)
    assert exc.value.code == "BAD_N"
    with pytest.raises(ValidationError) as exc:
        cover_search(17, 2)
    assert exc.value.code == "BAD_N"
    with pytest.raises(ValidationError):
        cover_search(5, 0)
    with pytest.raises(ValidationError):
        cover_search(5, 2, properness="ODD")


# -- exact maximum coverage ------------------------------------------------------------


def test_max_coverable_edges_small():
    assert max_coverable_edges(3, 1).value == 3
    assert max_coverable_edges(4, 2).value == 5
    assert max_coverable_edges(5, 3).value == 10


def test_max_coverable_edges_frozen_values():
    res = max_coverable_edges(6, 3)
    assert res.value == 13  # brute-force oracle over all 556 factor subgraphs
    assert res.value <= 14
    res = max_coverable_edges(7, 3)
    assert res.value == 16
    assert res.value <= 17
    res = max_coverable_edges(6, 4)
    assert res.value == 15  # K_6 is fully coverable with a fourth factor


def test_max_coverable_witness_consistency():
    for n, r in ((5, 2), (6, 3), (7, 3)):
        res = max_coverable_edges(n, r)
        assert len(res.cover.factors) == r
        assert union_factors(res.cover).m == res.value


def test_max_coverable_validation():
    with pytest.raises(ValidationError) as exc:
        max_coverable_edges(13, 2)
    assert exc.value.code == "BAD_N"
    with pytest.raises(ValidationError):
        max_coverable_edges(6, 0)


# -- named constructions ----------------------------------------------------------------


def test_walecki_decompositions():
    for k in range(1, 11):
        cycles = walecki_decomposition(k)
        n = 2 * k + 1
        assert len(cycles) == k
        assert all(c.m == n for c in cycles)
        assert union_graphs(list(cycles)).m == n * (n - 1) // 2
    with pytest.raises(ValidationError) as exc:
        walecki_decomposition(0)
    assert exc.value.code == "BAD_K"


def test_galaxy_covers():
    for k in range(2, 11):
        classes = galaxy_cover(k)
        assert len(classes) == k + 1
        assert union_graphs(list(classes)).m == k * (2 * k - 1)
    with pytest.raises(ValidationError) as exc:
        galaxy_cover(1)
    assert exc.value.code == "BAD_K"


def test_galaxy_classes_avoid_triangle_and_p4():
    # galaxies witness c_k(triangle, 4-path) >= 2k - 2 after dropping colors
    classes = galaxy_cover(5)
    coloring = coloring_from_classes(10, list(classes))
    assert verify_mono_free(coloring, FAMILY_PRESETS["F4"]).ok


def test_k11_cover():
    fc = k11_cover()
    assert fc.n == 11 and len(fc.factors) == 6
    union = union_factors(fc)
    assert union.m == 55
    assert chromatic_number(union).value == 11


# -- extremal chromatic number reports ----------------------------------------------------


def test_chi_r_exact_residues():
    assert chi_r_report(1).status == "EXACT" and chi_r_report(1).upper == 3
    assert chi_r_report(4) == chi_r_report(4)
    r4 = chi_r_report(4)
    assert (r4.lower, r4.upper, r4.status) == (9, 9, "EXACT")
    r9 = chi_r_report(9)
    assert (r9.lower, r9.upper, r9.status) == (18, 18, "EXACT")
    r2 = chi_r_report(2)
    assert (r2.lower, r2.upper, r2.status) == (3, 3, "EXACT")


def test_chi_r_open_exceptional_cases():
    for r in (3, 6, 18, 21, 24, 30, 33, 39, 42, 51, 66):
        rep = chi_r_report(r)
        assert (rep.lower, rep.upper, rep.status) == (2 * r - 1, 2 * r, "INTERVAL")
    # nearby multiples of three stay exact
    for r in (9, 12, 15, 27, 36, 45, 48, 54, 57, 60, 63, 69):
        assert chi_r_report(r).status == "EXACT"


def test_chi_r_threshold_behavior():
    below = chi_r_report(8)
    assert (below.lower, below.upper, below.status) == (15, 16, "INTERVAL")
    at = chi_r_report(8, delta0=8)
    assert (at.lower, at.upper, at.status) == (15, 15, "CONDITIONAL")
    big = chi_r_report(5 * 10**13)  # = default delta0, and 2 mod 3
    assert big.status == "CONDITIONAL" and big.lower == 10**14 - 1
    assert chi_r_report(5 * 10**13 - 3).status == "INTERVAL"
    with pytest.raises(ValidationError):
        chi_r_report(0)
    with pytest.raises(ValidationError):
        chi_r_report(5, delta0=0)


def test_chi_r_consistent_with_small_searches():
    # unions of r factors on few vertices never beat the reported upper bound
    rng = random.Random(23)
    for _ in range(40):
        r = rng.randint(1, 4)
        n = rng.choice([6, 9, 12])
        factors = [random_factor(n, GENERALIZED, seed=rng.randint(0, 10**9))
                   for _ in range(r)]
        chi = chromatic_number(union_graphs(factors)).value
        assert chi <= chi_r_report(r).upper


# -- random factors ------------------------------------------------------------------------


def test_random_factor_shapes():
    for seed in range(30):
        g = random_factor(10, GENERALIZED, seed=seed)
        assert classify_factor(g) != NOT_A_FACTOR
        p = random_factor(9, PROPER, seed=seed)
        assert classify_factor(p) == PROPER
    assert random_factor(8, seed=5) == random_factor(8, seed=5)
    assert random_factor(8, seed=5) != random_factor(8, seed=6)
    with pytest.raises(ValidationError) as exc:
        random_factor(8, PROPER, seed=1)
    assert exc.value.code == "BAD_N"
