import json
import os
from pathlib import Path

import pytest

import raagcc

DATA = Path(os.environ.get("RAAGCC_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_diamond_ranks():
    for d in range(2, 7):
        assert raagcc.rank(f"diamonds:{d}") == d


def test_rank_of_file_graph():
    graph = json.loads((DATA / "diamonds3.json").read_text())
    assert raagcc.rank(graph) == 3
    spec = json.loads((DATA / "relative_spec.json").read_text())
    assert raagcc.rank(spec) >= 0


def test_parabolics_are_single_vertices():
    ps = raagcc.maximal_parabolics("diamonds:3")
    assert len(ps) == 3
    assert all(len(p["delta"]) == 1 and p["rank"] == 2 for p in ps)


def test_decompose_audit():
    out = raagcc.decompose("diamonds:2")
    assert out["audit"]["ok"]
    assert out["audit"]["rank"] == 2
    assert out["base_cases"]
    assert out["text"].strip()


def test_rose_homology():
    rose = {"vertices": ["o"], "edges": [["o", "o", f"e{i}"] for i in range(1, 5)]}
    rep = raagcc.subgraph_homology(rose)
    assert rep["x_size"] == 14
    assert rep["x_homology"]["2"]["betti"] == 1
    assert rep["spherical"]


def test_complex_homology():
    octa = json.loads((DATA / "octahedron.json").read_text())
    rep = raagcc.complex_homology(octa)
    assert rep["f_vector"] == [6, 12, 8]
    assert rep["homology"]["2"]["betti"] == 1


def test_s3_over_a3():
    group = json.loads((DATA / "s3.json").read_text())
    family = json.loads((DATA / "s3_a3_family.json").read_text())
    rep = raagcc.coset_complex(group, family)
    assert rep["f_vector"] == [5, 6]
    assert rep["strongly_divided"] and not rep["divided"]
    assert rep["ses"]["ok"]
    assert rep["ses"]["left"]["1"]["betti"] == 2


def test_errors_raise():
    with pytest.raises(raagcc.RaagccError):
        raagcc.rank("nosuch:3")
    with pytest.raises(ValueError):
        raagcc.rank("{not json")


def test_one_criterion_and_cli():
    res = raagcc.run_criterion(1)
    assert res["pass"]
    code, out, _ = raagcc.cli("rank", "--example", "complete:4")
    assert code == 0
    assert json.loads(out)["rank"] == 3
    code, _, err = raagcc.cli("rank")
    assert code == 2 and err
