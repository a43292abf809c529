"""Smoke tests for the python module and the CLI binary."""

import json
import os
import subprocess
import sys

import pytest

MODULE_DIR = os.environ.get("GRAPHCAT_MODULE_DIR")
if MODULE_DIR:
    sys.path.insert(0, MODULE_DIR)

graphcat = pytest.importorskip("_core")


def test_standard_objects():
    p1 = graphcat.make_quiver("path1")
    assert p1.num_vertices == 2
    assert p1.num_edges == 1

    terminal = graphcat.make_hypergraph("terminal")
    assert terminal.num_vertices == 1
    assert terminal.num_edges == 2

    istar = graphcat.make_incidence("i_star", ["p", "q"])
    assert (istar.num_vertices, istar.num_edges, istar.num_incidences) == (1, 1, 2)


def test_products_and_exponentials():
    p1 = graphcat.make_quiver("path1")
    prod = graphcat.quiver_product(p1, p1)
    assert (prod.num_vertices, prod.num_edges) == (4, 1)

    power = graphcat.quiver_exponential(p1, p1)
    assert (power.num_vertices, power.num_edges) == (4, 4)
    classical = graphcat.classical_digraph_exponential(p1, p1)
    assert graphcat.quiver_iso(classical, power)

    h_p1 = graphcat.make_hypergraph("k_edge", ["v", "w"])
    h_prod = graphcat.hyper_product(h_p1, h_p1)
    assert h_prod.num_edges == 7
    assert graphcat.deletion(h_prod).num_edges == 2


def test_upsilon_functors():
    p1 = graphcat.make_quiver("path1")
    up = graphcat.upsilon(p1)
    assert (up.num_vertices, up.num_edges, up.num_incidences) == (2, 2, 1)

    star = graphcat.upsilon_star(up)
    assert (star.num_vertices, star.num_edges) == (4, 4)

    power = graphcat.inc_exponential(up, up)
    assert power.num_incidences == 4
    assert graphcat.incidence_hom_count(up, up) == 4


def test_counterexamples_and_adjunctions():
    for name in graphcat.counterexample_names():
        report = graphcat.run_counterexample(name)
        assert report.verdict == "witness_found", name
    for name in graphcat.adjunction_names():
        report = graphcat.check_adjunction(name)
        assert report.verdict == "holds", name


def test_frobenius():
    assert graphcat.frobenius("phi_V").verdict == "holds"
    assert graphcat.frobenius("phi_I").verdict == "witness_found"


def test_json_round_trip():
    p1 = graphcat.make_quiver("path1")
    text = p1.to_json()
    again = graphcat.Quiver.from_json(text)
    assert again == p1
    assert again.to_json() == text
    doc = json.loads(text)
    assert doc["kind"] == "quiver"


def test_errors_are_typed():
    with pytest.raises(graphcat.ParseError):
        graphcat.Quiver.from_json("{not json")
    with pytest.raises(graphcat.ParseError):
        graphcat.make_quiver("no_such_kind")


CLI = os.environ.get("GRAPHCAT_CLI")


@pytest.mark.skipif(not CLI, reason="GRAPHCAT_CLI not set")
def test_cli_round_trip(tmp_path):
    fixture = tmp_path / "p1.json"
    made = subprocess.run([CLI, "make", "path1", "-c", "Q"], capture_output=True, text=True)
    assert made.returncode == 0
    fixture.write_text(made.stdout)

    exp = subprocess.run([CLI, "exponential", "-c", "Q", str(fixture), str(fixture)],
                         capture_output=True, text=True)
    assert exp.returncode == 0
    doc = json.loads(exp.stdout)
    assert len(doc["vertices"]) == 4
    assert len(doc["edges"]) == 4

    check = subprocess.run([CLI, "check", "counterexample", "topos_fail"],
                           capture_output=True, text=True)
    assert check.returncode == 0
    assert json.loads(check.stdout)["verdict"] == "witness_found"

    # byte-identical reruns
    again = subprocess.run([CLI, "exponential", "-c", "Q", str(fixture), str(fixture)],
                           capture_output=True, text=True)
    assert again.stdout == exp.stdout
