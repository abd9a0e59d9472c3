"""Command-line interface: exit codes, output formats, and file round trips."""

import json

import pytest

from imsetpoly.cli import main
from imsetpoly.constraint import load_ray_file, y_of_class
from imsetpoly.setfam import Antichain, GroundSet

G3 = GroundSet.of_size(3)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def write_json(path, obj):
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


CYCLIC_GRAPH = {"labels": ["a", "b", "c"], "edges": [["a", "b"], ["b", "a"], ["c", "b"]]}
DAG_GRAPH = {"labels": ["a", "b", "c"], "edges": [["a", "b"], ["c", "b"]]}


# ---------------------------------------------------------------------------
# experiment drivers


def test_census_command(capsys):
    code, data, err = run_json(capsys, "census", "--n", "3")
    assert code == 0
    assert data["counts"] == {"dags": 25, "classes": 11}
    assert "elapsed" in err


def test_scan_command(capsys):
    code, data, _ = run_json(
        capsys, "scan", "--n", "3", "--framework", "u", "--box", "01",
        "--families", "equality,specific,nonspecific",
    )
    assert code == 0
    assert data["counts"]["satisfying"] == 11


def test_scan_default_families_c(capsys):
    code, data, _ = run_json(capsys, "scan", "--n", "3", "--framework", "c")
    assert code == 0
    assert data["parameters"]["families"] == ["kappa-specific", "cluster-c"]


def test_scan_weak_families_exit_one(capsys):
    code, data, _ = run_json(
        capsys, "scan", "--n", "3", "--framework", "c", "--families", "cluster-c"
    )
    assert code == 1
    assert data["passed"] is False and data["witnesses"]


def test_scan_unknown_family_exit_two(capsys):
    code, out, err = run(
        capsys, "scan", "--n", "3", "--framework", "u", "--families", "bogus"
    )
    assert code == 2 and out == "" and "error:" in err


def test_scan_with_ray_file(capsys, tmp_path):
    path = str(tmp_path / "rays.json")
    code, out, _ = run(capsys, "rays", "--n", "3", "--method", "builtin", "--out", path)
    assert code == 0 and "5 rays" in out
    assert len(load_ray_file(G3, path)) == 5
    code, data, _ = run_json(
        capsys, "scan", "--n", "3", "--framework", "u", "--box", "01",
        "--families", "equality,specific,nonspecific", "--rays", path,
    )
    assert code == 0 and data["parameters"]["rays"] == 5


def test_compare_relaxations_command(capsys):
    code, data, _ = run_json(capsys, "compare-relaxations", "--n", "3")
    assert code == 0 and data["counts"]["leaked"] == 0


def test_example_command(capsys):
    for example_id in range(1, 9):
        code, data, _ = run_json(capsys, "example", "--id", str(example_id))
        assert code == 0 and data["passed"] is True


def test_example_rejects_out_of_range_id(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["example", "--id", "9"])
    assert exc.value.code == 2


def test_out_file_round_trip(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "census", "--n", "3", "--out", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["counts"]["classes"] == 11


# ---------------------------------------------------------------------------
# encoders


def test_encode_eta_of_cyclic_graph(capsys, tmp_path):
    graph = write_json(tmp_path / "g.json", CYCLIC_GRAPH)
    code, data, _ = run_json(capsys, "encode", "--graph", graph, "--as", "eta")
    assert code == 0
    assert data["acyclic"] is False
    assert data["entries"] == {"a|b": 1, "b|a,c": 1, "c|∅": 1}


def test_encode_standard_rejects_cyclic_graph(capsys, tmp_path):
    graph = write_json(tmp_path / "g.json", CYCLIC_GRAPH)
    code, out, err = run(capsys, "encode", "--graph", graph, "--as", "standard")
    assert code == 2 and "error:" in err


def test_encode_characteristic(capsys, tmp_path):
    graph = write_json(tmp_path / "g.json", DAG_GRAPH)
    code, data, _ = run_json(capsys, "encode", "--graph", graph, "--as", "characteristic")
    assert code == 0 and data["acyclic"] is True
    assert data["entries"] == {"a,b": 1, "b,c": 1, "a,b,c": 1}


def test_encode_missing_file(capsys, tmp_path):
    code, out, err = run(
        capsys, "encode", "--graph", str(tmp_path / "absent.json"), "--as", "eta"
    )
    assert code == 2 and "error:" in err


def test_transform_chain(capsys, tmp_path):
    graph = write_json(tmp_path / "g.json", DAG_GRAPH)
    eta_path = str(tmp_path / "eta.json")
    code, _, _ = run(capsys, "encode", "--graph", graph, "--as", "eta", "--out", eta_path)
    assert code == 0
    code, data, _ = run_json(
        capsys, "transform", "--from", "eta", "--to", "c", "--in", eta_path
    )
    assert code == 0 and data["kind"] == "characteristic"
    assert data["entries"] == {"a,b": 1, "b,c": 1, "a,b,c": 1}
    code, data, _ = run_json(capsys, "transform", "--to", "u", "--in", eta_path)
    assert code == 0 and data["kind"] == "standard"


def test_transform_kind_mismatch(capsys, tmp_path):
    graph = write_json(tmp_path / "g.json", DAG_GRAPH)
    u_path = str(tmp_path / "u.json")
    code, _, _ = run(
        capsys, "encode", "--graph", graph, "--as", "standard", "--out", u_path
    )
    assert code == 0
    code, out, err = run(
        capsys, "transform", "--from", "eta", "--to", "c", "--in", u_path
    )
    assert code == 2 and "error:" in err
    code, out, err = run(capsys, "transform", "--to", "eta", "--in", u_path)
    assert code == 2 and "does not determine" in err


# ---------------------------------------------------------------------------
# constraint and matrix catalogs


def test_constraints_json(capsys):
    code, data, _ = run_json(capsys, "constraints", "--n", "3", "--framework", "c")
    assert code == 0
    assert len(data["rows"]) == 22


def test_constraints_lp(capsys):
    code, out, _ = run(
        capsys, "constraints", "--n", "3", "--framework", "eta", "--format", "lp"
    )
    assert code == 0
    assert "Subject To" in out and "cluster_abc:" in out


def test_matrix_json_and_csv(capsys):
    code, data, _ = run_json(capsys, "matrix", "--which", "D", "--n", "3")
    assert code == 0
    assert len(data["entries"]) == 7 and data["row_labels"][0] == "a"
    code, out, _ = run(capsys, "matrix", "--which", "D", "--n", "3", "--csv")
    assert code == 0
    assert out.splitlines()[0].startswith(',"a"')


def test_matrix_checks(capsys):
    code, data, _ = run_json(
        capsys, "matrix", "--which", "A", "--n", "3", "--check", "hnf"
    )
    assert code == 0 and data["detail"]["identity_then_zero_columns"] is True
    code, data, _ = run_json(
        capsys, "matrix", "--which", "A", "--n", "3", "--check", "unimodular"
    )
    assert code == 0 and data["detail"]["minors_checked"] == 792
    code, data, _ = run_json(
        capsys, "matrix", "--which", "A", "--n", "3", "--check", "tu"
    )
    assert code == 1 and abs(data["detail"]["witness_det"]) >= 2
    code, data, _ = run_json(
        capsys, "matrix", "--which", "C", "--n", "3", "--check", "products"
    )
    assert code == 0
    assert data["detail"] == {
        "B_equals_C_times_A": True,
        "C_times_D_is_identity": True,
    }
    code, data, _ = run_json(
        capsys, "matrix", "--which", "E", "--n", "3", "--check", "products"
    )
    assert code == 0
    assert data["detail"] == {"columns_have_one_plus_and_one_minus": True}


# ---------------------------------------------------------------------------
# dual-cone decomposition


def test_decompose_in_cone(capsys, tmp_path):
    y = y_of_class(Antichain(G3, (3, 5)))
    path = write_json(tmp_path / "y.json", y.to_json_dict())
    code, data, _ = run_json(capsys, "decompose", "--y", path)
    assert code == 0
    assert data["in_cone"] is True and data["reconstruction_exact"] is True
    assert data["terms"] == [{"class": "ab,ac", "weight": "1"}]


def test_decompose_outside_cone(capsys, tmp_path):
    path = write_json(
        tmp_path / "y.json",
        {"labels": ["a", "b", "c"], "entries": {"a": "-1"}},
    )
    code, data, _ = run_json(capsys, "decompose", "--y", path)
    assert code == 1 and data == {"in_cone": False, "terms": []}
