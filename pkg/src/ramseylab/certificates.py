"""Certificate documents: one JSON object per command run, re-checkable later.

A certificate records the command, its parameter map, the outcome (EXISTS,
NOT_EXISTS, VALUE, UNKNOWN), a witness payload in the text formats, search
statistics, the tool version, and the delta0 threshold in force.  The verify
entry point re-checks a certificate strictly from its payload: witnesses are
re-validated, deterministic formulas are recomputed, but searches are never
re-run, so refutation certificates are vouched for by their exhaustion
statistics and symmetry-scheme identifier rather than re-execution.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Mapping, Sequence

from .errors import ParseError, ValidationError, VerificationError
from .graph_core import (
    Graph,
    graph_from_text,
    graph_to_text,
    is_proper_coloring,
    union_graphs,
)
from .ramsey_search import (
    DEFAULT_DELTA0,
    EdgeColoring,
    P4,
    TRIANGLE,
    closed_form_c_k,
    has_copy,
    parse_family,
    verify_mono_free,
)
from .factor_lab import (
    COVER,
    DECOMPOSITION,
    GENERALIZED,
    NOT_A_FACTOR,
    PROPER,
    _edge_mask,
    _full_edge_mask,
    _verify_cycle_decomposition,
    chi_r_report,
    classify_factor,
)
from .hypergraph_lab import (
    PartiteHypergraph,
    factors_to_hypergraph,
    hypergraph_from_text,
    line_graph,
    regularity,
)
from .extremal import ProjectivePlane, _verify_ach, _verify_plane, ach_bound

SCHEMA = 1
TOOL = "ramseylab"
VERSION = "0.1.0"
OUTCOMES = ("EXISTS", "NOT_EXISTS", "VALUE", "UNKNOWN")


def make_certificate(command: str, parameters: Mapping[str, Any], outcome: str, *,
                     value: int | None = None, witness: Mapping[str, Any] | None = None,
                     stats: Mapping[str, Any] | None = None,
                     delta0: int = DEFAULT_DELTA0) -> dict:
    if outcome not in OUTCOMES:
        raise ValidationError("OUT_OF_RANGE", f"unknown outcome {outcome!r}")
    return {
        "schema": SCHEMA,
        "tool": TOOL,
        "version": VERSION,
        "command": command,
        "parameters": dict(parameters),
        "outcome": outcome,
        "value": value,
        "witness": dict(witness) if witness is not None else None,
        "stats": dict(stats) if stats is not None else {},
        "delta0": delta0,
        "verified": False,
    }


def certificate_to_json(cert: Mapping[str, Any]) -> str:
    return json.dumps(cert, sort_keys=True, indent=2) + "\n"


_REQUIRED_KEYS = ("schema", "tool", "version", "command", "parameters",
                  "outcome", "stats", "delta0")


def parse_certificate(text: str) -> dict:
    try:
        cert = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(cert, dict):
        raise ParseError("certificate must be a JSON object")
    for key in _REQUIRED_KEYS:
        if key not in cert:
            raise ParseError(f"missing certificate field {key!r}")
    if cert["schema"] != SCHEMA:
        raise ParseError(f"unsupported schema {cert['schema']!r}")
    if cert["outcome"] not in OUTCOMES:
        raise ParseError(f"unknown outcome {cert['outcome']!r}")
    if not isinstance(cert["parameters"], dict) or not isinstance(cert["stats"], dict):
        raise ParseError("parameters and stats must be objects")
    return cert


def verify_certificate(cert: Mapping[str, Any]) -> bool:
    """Re-check a parsed certificate from its payload alone.

    Returns True; raises VerificationError naming the first violated check,
    or ParseError for structurally unusable payloads.
    """
    command = cert["command"]
    vf = _VERIFIERS.get(command)
    if vf is None:
        raise ParseError(f"unknown command {command!r}")
    outcome = cert["outcome"]
    witness = cert.get("witness")
    if outcome in ("EXISTS", "VALUE") and witness is None:
        raise VerificationError("witness-present",
                                f"{outcome} certificate lacks a witness")
    vf(cert["parameters"], cert.get("value"), witness, cert["stats"], outcome)
    return True


# -- payload plumbing -----------------------------------------------------------


def _need(payload: Mapping[str, Any] | None, key: str):
    if payload is None or key not in payload:
        raise ParseError(f"witness payload lacks {key!r}")
    return payload[key]


def _graph_payload(payload: Mapping[str, Any] | None, key: str = "graph") -> Graph:
    return graph_from_text(_need(payload, key))


def _graphs_payload(payload: Mapping[str, Any] | None, key: str) -> list[Graph]:
    texts = _need(payload, key)
    if not isinstance(texts, list):
        raise ParseError(f"{key!r} must be a list of graph texts")
    return [graph_from_text(t) for t in texts]


def _hypergraph_payload(payload: Mapping[str, Any] | None,
                        key: str = "hypergraph") -> PartiteHypergraph:
    return hypergraph_from_text(_need(payload, key))


def _int_list(payload: Mapping[str, Any] | None, key: str) -> list[int]:
    val = _need(payload, key)
    if not isinstance(val, list) or not all(isinstance(x, int) for x in val):
        raise ParseError(f"{key!r} must be a list of integers")
    return val


def _check_matching(h: PartiteHypergraph, picked: Sequence[int], check: str) -> None:
    used: set[tuple[int, int]] = set()
    for j in picked:
        if not 0 <= j < h.m:
            raise VerificationError(check, f"matching index {j} out of range")
        for i, x in enumerate(h.edges[j]):
            if (i, x) in used:
                raise VerificationError(check, "matching reuses a vertex")
            used.add((i, x))


# -- per-command verifiers --------------------------------------------------------


def _vf_chi(params, value, witness, stats, outcome):
    if outcome != "VALUE":
        return
    g = _graph_payload(witness)
    colors = _int_list(witness, "colors")
    if not is_proper_coloring(g, colors):
        raise VerificationError("proper-coloring", "witness coloring is not proper")
    if len(set(colors)) != value:
        raise VerificationError("color-count",
                                f"witness uses {len(set(colors))} colors, claimed {value}")


def _vf_clique(params, value, witness, stats, outcome):
    if outcome != "VALUE":
        return
    g = _graph_payload(witness)
    verts = _int_list(witness, "vertices")
    if len(verts) != value or len(set(verts)) != value:
        raise VerificationError("clique-size", "witness vertex count differs from value")
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if not g.has_edge(u, v):
                raise VerificationError("clique-edges", f"{u} and {v} are not adjacent")


def _vf_core(params, value, witness, stats, outcome):
    if outcome not in ("VALUE", "EXISTS", "NOT_EXISTS"):
        return
    g = _graph_payload(witness)
    d = int(params["d"])
    core = _int_list(witness, "vertices")
    order = _int_list(witness, "elimination_order")
    if sorted(core + order) != list(range(g.n)):
        raise VerificationError("core-partition",
                                "core plus elimination order must partition the vertices")
    core_mask = 0
    for v in core:
        core_mask |= 1 << v
    for v in core:
        if (g.adj[v] & core_mask).bit_count() < d:
            raise VerificationError("core-degree", f"vertex {v} has core degree < {d}")
    alive = g.full_mask
    for v in order:
        if (g.adj[v] & alive).bit_count() >= d:
            raise VerificationError("elimination-order",
                                    f"vertex {v} still had degree >= {d} when peeled")
        alive &= ~(1 << v)
    if value is not None and value != len(core):
        raise VerificationError("core-size", "value differs from core size")


def _vf_ramsey(params, value, witness, stats, outcome):
    fam = parse_family(params["family"])
    k = int(params["colors"])
    if outcome == "UNKNOWN":
        return
    n = int(_need(witness, "n"))
    if value != n:
        raise VerificationError("value-witness", "claimed value differs from witness size")
    assignment = _int_list(witness, "assignment")
    from .graph_core import complete_graph
    base = complete_graph(n)
    if len(assignment) != base.m:
        raise VerificationError("assignment-length",
                                f"expected {base.m} edge colors, got {len(assignment)}")
    if any(not 0 <= c < k for c in assignment):
        raise VerificationError("color-range", "edge color outside the palette")
    coloring = EdgeColoring(base, k, tuple(assignment))
    report = verify_mono_free(coloring, fam)
    if not report.ok:
        raise VerificationError("mono-free",
                                f"color {report.color} contains {report.pattern.token()}")


def _vf_closed_form(params, value, witness, stats, outcome):
    fam = parse_family(params["family"])
    k = int(params["colors"])
    delta0 = int(params.get("delta0", DEFAULT_DELTA0))
    form = closed_form_c_k(fam, k, delta0=delta0)
    if outcome == "UNKNOWN":
        if form is not None:
            raise VerificationError("formula-none",
                                    "a closed form exists but the certificate says none")
        return
    if form is None:
        raise VerificationError("formula-missing", "no closed form for these parameters")
    if (value != form.value
            or bool(_need(witness, "asymptotic")) != form.asymptotic
            or bool(_need(witness, "conditional")) != form.conditional):
        raise VerificationError("formula-value", "closed form fields do not match")


def _verify_cover_payload(n: int, r: int, properness: str, mode: str,
                          factors: list[Graph], require_cover: bool) -> None:
    if len(factors) != r:
        raise VerificationError("factor-count", f"expected {r} factors, got {len(factors)}")
    seen = 0
    for g in factors:
        if g.n != n:
            raise VerificationError("factor-order", "factor on wrong vertex count")
        cls = classify_factor(g)
        if cls == NOT_A_FACTOR:
            raise VerificationError("factor-shape", "component larger than a triangle")
        if properness == PROPER and cls != PROPER:
            raise VerificationError("factor-proper", "non-triangle component in proper mode")
        mask = _edge_mask(g)
        if mode == DECOMPOSITION and mask & seen:
            raise VerificationError("edge-disjoint", "decomposition factors share an edge")
        seen |= mask
    if require_cover and seen != _full_edge_mask(n):
        raise VerificationError("union-complete", "factors do not cover the complete graph")


def _vf_cover(params, value, witness, stats, outcome):
    n, r = int(params["n"]), int(params["r"])
    properness = params.get("properness", GENERALIZED)
    mode = params.get("mode", COVER)
    if outcome == "EXISTS":
        factors = _graphs_payload(witness, "factors")
        _verify_cover_payload(n, r, properness, mode, factors, require_cover=True)
    elif outcome == "NOT_EXISTS":
        if not stats.get("scheme"):
            raise VerificationError("scheme-recorded",
                                    "refutation lacks its symmetry-scheme identifier")
        if "nodes" not in stats:
            raise VerificationError("exhaustion-stats", "refutation lacks node statistics")


def _vf_max_cover(params, value, witness, stats, outcome):
    if outcome != "VALUE":
        return
    n, r = int(params["n"]), int(params["r"])
    factors = _graphs_payload(witness, "factors")
    _verify_cover_payload(n, r, GENERALIZED, COVER, factors, require_cover=False)
    covered = 0
    for g in factors:
        covered |= _edge_mask(g)
    if covered.bit_count() != value:
        raise VerificationError("covered-count",
                                f"witness covers {covered.bit_count()} edges, claimed {value}")


def _vf_walecki(params, value, witness, stats, outcome):
    k = int(params["k"])
    cycles = _graphs_payload(witness, "cycles")
    if len(cycles) != k:
        raise VerificationError("cycle-count", f"expected {k} cycles")
    _verify_cycle_decomposition(cycles, 2 * k + 1)


def _vf_galaxy(params, value, witness, stats, outcome):
    k = int(params["k"])
    classes = _graphs_payload(witness, "classes")
    if len(classes) != k + 1:
        raise VerificationError("class-count", f"expected {k + 1} classes")
    n = 2 * k
    seen = 0
    for g in classes:
        if g.n != n:
            raise VerificationError("class-order", "class on wrong vertex count")
        if has_copy(g, TRIANGLE) or has_copy(g, P4):
            raise VerificationError("star-forest", "class is not a star forest")
        mask = _edge_mask(g)
        if mask & seen:
            raise VerificationError("edge-disjoint", "classes share an edge")
        seen |= mask
    if seen != _full_edge_mask(n):
        raise VerificationError("union-complete", "classes do not cover the complete graph")


def _vf_k11(params, value, witness, stats, outcome):
    factors = _graphs_payload(witness, "factors")
    _verify_cover_payload(11, 6, GENERALIZED, COVER, factors, require_cover=True)
    if union_graphs(factors).m != 55:
        raise VerificationError("edge-count", "union is not all 55 edges")


def _vf_chi_r(params, value, witness, stats, outcome):
    r = int(params["r"])
    delta0 = int(params.get("delta0", DEFAULT_DELTA0))
    rep = chi_r_report(r, delta0=delta0)
    claimed = _need(witness, "report")
    fields = {"r": rep.r, "lower": rep.lower, "upper": rep.upper,
              "status": rep.status, "delta0": rep.delta0, "note": rep.note}
    if dict(claimed) != fields:
        raise VerificationError("report-fields", "recomputed report differs")
    if outcome == "VALUE" and (rep.status != "EXACT" or value != rep.lower):
        raise VerificationError("report-exact", "VALUE outcome requires an exact report")


def _vf_bijection(params, value, witness, stats, outcome):
    h = _hypergraph_payload(witness)
    factors = _graphs_payload(witness, "factors")
    for g in factors:
        if classify_factor(g) != PROPER:
            raise VerificationError("factor-proper", "bijection factor is not proper")
    h2 = factors_to_hypergraph(factors)
    if h2.part_sizes != h.part_sizes or h2.edges != h.edges:
        raise VerificationError("bijection-roundtrip",
                                "factors do not map back to the hypergraph")
    if line_graph(h) != union_graphs(factors):
        raise VerificationError("line-graph-identity",
                                "line graph differs from the factor union")


def _vf_match(params, value, witness, stats, outcome):
    if outcome == "UNKNOWN":
        return
    h = _hypergraph_payload(witness)
    picked = _int_list(witness, "matching")
    if len(picked) != value:
        raise VerificationError("matching-size", "witness size differs from value")
    _check_matching(h, picked, "matching-disjoint")


def _vf_chromatic_index(params, value, witness, stats, outcome):
    if outcome != "VALUE":
        return
    h = _hypergraph_payload(witness)
    colors = _int_list(witness, "colors")
    if len(colors) != h.m:
        raise VerificationError("color-length", "one color per hyperedge required")
    lg = line_graph(h)
    for a, b in lg.edges():
        if colors[a] == colors[b]:
            raise VerificationError("proper-index",
                                    f"intersecting edges {a},{b} share a color")
    if h.m and len(set(colors)) != value:
        raise VerificationError("color-count", "distinct colors differ from value")


def _vf_ach(params, value, witness, stats, outcome):
    d = int(params["d"])
    h = _hypergraph_payload(witness)
    labels = _int_list(witness, "labels")
    m = 3 * d // 2
    if h.part_sizes != (m, m, m):
        raise VerificationError("parts", f"expected three parts of size {m}")
    if len(labels) != h.m:
        raise VerificationError("label-length", "one label per edge required")
    _verify_ach(h, labels, d, m)
    picked = _int_list(witness, "matching")
    _check_matching(h, picked, "matching-disjoint")
    # labels cap any matching at d; a disjoint witness of size d proves equality
    if len(picked) != d or value != d:
        raise VerificationError("matching-exact", "matching witness must have size d")
    if int(_need(witness, "bound")) != ach_bound(d, m) or not value < ach_bound(d, m):
        raise VerificationError("bound-refuted", "claimed bound is wrong or not beaten")


def _vf_plane(params, value, witness, stats, outcome):
    p = int(params["p"])
    lines = _need(witness, "lines")
    plane = ProjectivePlane(p, tuple(tuple(ln) for ln in lines))
    _verify_plane(plane)


def _vf_truncated_plane(params, value, witness, stats, outcome):
    p = int(params["p"])
    h = _hypergraph_payload(witness)
    if h.part_sizes != (p,) * (p + 1):
        raise VerificationError("parts", f"expected {p + 1} parts of size {p}")
    if h.m != p * p:
        raise VerificationError("edge-count", f"expected {p * p} edges")
    if regularity(h) != p:
        raise VerificationError("regular", f"expected {p}-regularity")
    if len(set(h.edges)) != h.m:
        raise VerificationError("simple", "repeated edge")
    for a in range(h.m):
        for b in range(a + 1, h.m):
            if all(h.edges[a][i] != h.edges[b][i] for i in range(h.r)):
                raise VerificationError("pairwise-intersect",
                                        f"edges {a} and {b} are disjoint")


def _vf_claim51(params, value, witness, stats, outcome):
    p, m = int(params["p"]), int(params["m"])
    h = _hypergraph_payload(witness)
    join = p * m
    base_r = p + 1
    expected = (join,) * base_r + (join,) + (join,) * (h.r - base_r - 1)
    if h.part_sizes != expected:
        raise VerificationError("parts", "part sizes do not match the construction")
    if regularity(h) != p * p * m:
        raise VerificationError("regular", "expected p^2 m regularity")
    if len(set(h.edges)) != h.m:
        raise VerificationError("simple", "repeated edge")
    per_copy = p * p * join
    if h.m != m * per_copy:
        raise VerificationError("edge-count", "edge count differs from p^3 m^2")
    for c in range(m):
        lo = c * per_copy
        for a in range(p * p):
            for b in range(a + 1, p * p):
                ea, eb = h.edges[lo + a * join], h.edges[lo + b * join]
                if all(ea[i] != eb[i] for i in range(base_r)):
                    raise VerificationError("copy-intersect",
                                            f"copy {c} holds disjoint lines {a},{b}")
    picked = _int_list(witness, "matching")
    _check_matching(h, picked, "matching-disjoint")
    if len(picked) != m or value != m:
        raise VerificationError("matching-exact",
                                "matching witness must have one edge per copy")


_VERIFIERS: dict[str, Callable] = {
    "chi": _vf_chi,
    "clique": _vf_clique,
    "core": _vf_core,
    "ramsey": _vf_ramsey,
    "closed-form": _vf_closed_form,
    "cover": _vf_cover,
    "max-cover": _vf_max_cover,
    "walecki": _vf_walecki,
    "galaxy": _vf_galaxy,
    "k11": _vf_k11,
    "chi-r": _vf_chi_r,
    "bijection": _vf_bijection,
    "match": _vf_match,
    "chromatic-index": _vf_chromatic_index,
    "ach": _vf_ach,
    "plane": _vf_plane,
    "truncated-plane": _vf_truncated_plane,
    "claim51": _vf_claim51,
}
