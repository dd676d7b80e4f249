"""End-to-end command line runs, in process, certificate round-trips included."""

from __future__ import annotations

import json

import pytest

from ramseylab.cli import run
from ramseylab.factor_lab import PROPER, random_factor
from ramseylab.graph_core import graph_to_text, path_graph
from ramseylab.hypergraph_lab import factors_to_hypergraph, hypergraph_to_text


def _invoke(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _invoke_cert(capsys, argv):
    code, out, err = _invoke(capsys, argv)
    assert code == 0, f"{argv} failed: {err}"
    return json.loads(out)


def _hypergraph_file(tmp_path, r: int = 2, n: int = 9, name: str = "h.txt"):
    factors = [random_factor(n, PROPER, seed=7 * r + i) for i in range(r)]
    h = factors_to_hypergraph(factors)
    path = tmp_path / name
    path.write_text(hypergraph_to_text(h))
    return str(path)


# -- certified round trips across every subcommand -----------------------------------


def test_certificate_round_trips(tmp_path, capsys):
    gpath = tmp_path / "g.txt"
    gpath.write_text(graph_to_text(path_graph(6)))
    hpath = _hypergraph_file(tmp_path)
    batteries = [
        ["chi", "--complete", "5"],
        ["chi", "--graph", str(gpath)],
        ["clique", "--cycle", "7"],
        ["core", "--complete", "6", "--d", "3"],
        ["ramsey", "--family", "F5", "--colors", "2", "--cap", "8"],
        ["closed-form", "--family", "F3", "--colors", "6"],
        ["cover", "--n", "5", "--r", "3"],
        ["cover", "--n", "9", "--r", "4", "--proper", "--decomposition"],
        ["max-cover", "--n", "6", "--r", "3"],
        ["walecki", "--k", "4"],
        ["galaxy", "--k", "3"],
        ["k11"],
        ["chi-r", "--r", "4"],
        ["bijection", "--random", "2", "3", "--seed", "11"],
        ["bijection", "--hypergraph", hpath],
        ["match", "--hypergraph", hpath],
        ["chromatic-index", "--hypergraph", hpath],
        ["ach", "--d", "4"],
        ["plane", "--p", "3"],
        ["truncated-plane", "--p", "2"],
        ["claim51", "--p", "2", "--m", "2"],
        ["claim51", "--p", "2", "--m", "1", "--uniformity", "5"],
    ]
    for i, argv in enumerate(batteries):
        cert = _invoke_cert(capsys, argv)
        assert cert["verified"] is True
        assert cert["command"] == argv[0]
        assert cert["outcome"] in ("EXISTS", "NOT_EXISTS", "VALUE")
        saved = tmp_path / f"cert{i}.json"
        saved.write_text(json.dumps(cert, sort_keys=True, indent=2) + "\n")
        code, out, err = _invoke(capsys, ["verify", str(saved)])
        assert code == 0 and out.strip() == "true", f"{argv}: {err}"


def test_ramsey_family_example(capsys):
    cert = _invoke_cert(capsys, ["ramsey", "--family", "F4", "--colors", "3",
                                 "--cap", "8"])
    assert cert["outcome"] == "VALUE" and cert["value"] == 4
    assert cert["parameters"]["family"] == "F4"
    assert cert["stats"]["refutation_nodes"] > 0


def test_cover_refutation_records_scheme(capsys):
    cert = _invoke_cert(capsys, ["cover", "--n", "6", "--r", "3"])
    assert cert["outcome"] == "NOT_EXISTS" and cert["witness"] is None
    assert cert["stats"]["nodes"] > 0
    assert "maximal-factors" in cert["stats"]["scheme"]


def test_max_cover_value(capsys):
    cert = _invoke_cert(capsys, ["max-cover", "--n", "6", "--r", "3"])
    assert cert["value"] == 13


# -- UNKNOWN outcomes exit 2 -----------------------------------------------------------


def test_chi_r_interval_is_unknown(capsys):
    code, out, _ = _invoke(capsys, ["chi-r", "--r", "6"])
    assert code == 2
    cert = json.loads(out)
    assert cert["outcome"] == "UNKNOWN"
    report = cert["witness"]["report"]
    assert (report["lower"], report["upper"]) == (11, 12)


def test_closed_form_unknown(capsys):
    code, out, _ = _invoke(capsys, ["closed-form", "--family", "F6", "--colors", "3"])
    assert code == 2
    assert json.loads(out)["outcome"] == "UNKNOWN"


def test_ramsey_cap_is_unknown(capsys):
    code, out, _ = _invoke(capsys, ["ramsey", "--family", "F3", "--colors", "2",
                                    "--cap", "4"])
    assert code == 2
    cert = json.loads(out)
    assert cert["outcome"] == "UNKNOWN"
    assert cert["stats"]["lower"] == 4 and cert["stats"]["cap"] == 4


def test_match_budget_exhaustion_is_unknown(tmp_path, capsys):
    hpath = _hypergraph_file(tmp_path, r=3, n=12)
    code, out, _ = _invoke(capsys, ["match", "--hypergraph", hpath, "--budget", "1"])
    assert code == 2
    cert = json.loads(out)
    assert cert["outcome"] == "UNKNOWN"
    assert cert["stats"]["exact"] is False and cert["stats"]["lower"] >= 0


def test_search_budget_exhaustion_is_unknown(capsys):
    code, out, _ = _invoke(capsys, ["chi", "--complete", "13", "--budget", "5"])
    assert code == 2
    cert = json.loads(out)
    assert cert["outcome"] == "UNKNOWN" and cert["verified"] is False
    assert cert["stats"]["lower"] <= cert["stats"]["upper"]


# -- validation and usage failures exit 1 ------------------------------------------------


def test_validation_errors(capsys):
    for argv, code_text in ((["plane", "--p", "4"], "NOT_PRIME"),
                            (["walecki", "--k", "0"], "BAD_K"),
                            (["cover", "--n", "40", "--r", "2"], "BAD_N"),
                            (["ramsey", "--family", "QUUX", "--colors", "2"],
                             "OUT_OF_RANGE")):
        code, out, err = _invoke(capsys, argv)
        assert code == 1 and out == ""
        assert code_text in err


def test_usage_errors(capsys):
    assert _invoke(capsys, [])[0] == 1
    assert _invoke(capsys, ["no-such-command"])[0] == 1
    assert _invoke(capsys, ["chi"])[0] == 1  # a graph source is required
    assert _invoke(capsys, ["--help"])[0] == 0


def test_verify_rejects_tampered_certificate(tmp_path, capsys):
    cert = _invoke_cert(capsys, ["chi", "--complete", "5"])
    cert["value"] = 4
    bad = tmp_path / "tampered.json"
    bad.write_text(json.dumps(cert, sort_keys=True, indent=2) + "\n")
    code, out, err = _invoke(capsys, ["verify", str(bad)])
    assert code == 1 and "VERIFY_FAILED" in err


def test_verify_rejects_truncated_certificate(tmp_path, capsys):
    cert = _invoke_cert(capsys, ["plane", "--p", "2"])
    text = json.dumps(cert, sort_keys=True, indent=2)
    broken = tmp_path / "broken.json"
    broken.write_text(text[: len(text) // 2])
    code, _, err = _invoke(capsys, ["verify", str(broken)])
    assert code == 1 and "PARSE_ERROR" in err


def test_verify_missing_file(capsys):
    code, _, err = _invoke(capsys, ["verify", "/nonexistent/cert.json"])
    assert code == 1 and "PARSE_ERROR" in err


# -- determinism ---------------------------------------------------------------------------


def test_deterministic_output_is_byte_stable(capsys):
    first = _invoke(capsys, ["ach", "--d", "4", "--deterministic"])
    second = _invoke(capsys, ["ach", "--d", "4", "--deterministic"])
    assert first == second
    cert = json.loads(first[1])
    assert cert["stats"]["elapsed_ms"] == 0
    assert cert["witness"]["matching"] == sorted(cert["witness"]["matching"])


def test_deterministic_bijection_seeded(capsys):
    a = _invoke(capsys, ["bijection", "--random", "2", "2", "--seed", "3",
                         "--deterministic"])
    b = _invoke(capsys, ["bijection", "--random", "2", "2", "--seed", "3",
                         "--deterministic"])
    c = _invoke(capsys, ["bijection", "--random", "2", "2", "--seed", "4",
                         "--deterministic"])
    assert a == b
    assert a[1] != c[1]
