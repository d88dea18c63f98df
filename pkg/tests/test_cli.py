import json

import pytest

from ansular.cli import main
from ansular.corpus import dataset_names, load, raw
from ansular.graph_core import to_json
from ansular.gv_data import as_fusion, canonical_json

from conftest import build_graph


@pytest.fixture
def dataset(tmp_path):
    def write(name, obj=None):
        path = tmp_path / f"{name}.json"
        path.write_text(raw(name) if obj is None else json.dumps(obj))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", dataset_names())
def test_dims_genus_one_prints_rank(capsys, dataset, name):
    code, out, _ = run(capsys, "dims", "--dataset", dataset(name), "-g", "1", "--json")
    assert code == 0
    assert json.loads(out)["dimension"] == as_fusion(load(name)).rank


def test_dims_text_table(capsys, dataset):
    code, out, _ = run(capsys, "dims", "--dataset", dataset("rep_s3"), "-g", "2")
    assert code == 0
    assert "coend   11" in out and out.endswith("status: pass\n")


def test_dims_with_graph(capsys, dataset, tmp_path):
    g = tmp_path / "theta.json"
    g.write_text(json.dumps(to_json(build_graph(2, [(0, 1)] * 3, []))))
    code, out, _ = run(capsys, "dims", "--dataset", dataset("rep_s3"), "--graph", str(g), "--json")
    assert code == 0
    rows = json.loads(out)["records"]
    assert {r["method"]: r["dimension"] for r in rows} == {"coend": 11, "sum": 11, "graph": 11}


def test_oracle_compare(capsys):
    code, out, _ = run(capsys, "oracle", "compare", "--group", "s3", "--max-genus", "2")
    assert code == 0
    assert out.splitlines()[4].split() == ["2", "11", "11", "pass"]


def test_validate_corrupted(capsys, dataset):
    obj = json.loads(raw("rep_s3"))
    obj["N"][2][2][0] = 2
    code, out, _ = run(capsys, "validate", "--dataset", dataset("bad", obj))
    assert code == 1
    assert "gv_duality" in out and "FAIL" not in out.splitlines()[0]


def test_validate_whole_corpus(capsys):
    code, out, _ = run(capsys, "validate", "--json")
    assert code == 0
    names = {r["dataset"] for r in json.loads(out)["records"]}
    assert names == set(dataset_names())


def test_torus_rep_check(capsys, dataset):
    code, out, _ = run(capsys, "torus-rep", "--dataset", dataset("z2_semion"), "--check", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["T"] == [[[0, 1], None], [None, [1, 4]]]
    assert data["checks"] == []


def test_torus_rep_needs_pointed_data(capsys, dataset):
    code, _, err = run(capsys, "torus-rep", "--dataset", dataset("rep_s3"))
    assert code == 2 and "pointed" in err


def test_graphs(capsys, dataset):
    code, out, _ = run(capsys, "graphs", "-g", "1", "--max-n", "3", "--json")
    assert code == 0 and json.loads(out)["count"] == 3
    code, out, _ = run(capsys, "graphs", "-g", "2", "--legs", "1", "--max-n", "3",
                       "--dataset", dataset("rep_s3"), "--labels", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert {r["dimension"] for r in data["records"]} == {data["handlebody_dimension"]}


def test_dihedral_check(capsys):
    code, out, _ = run(capsys, "dihedral", "check", "d1:2 t1", "[1]->[2]:0,2 r", "--max-n", "3")
    assert code == 0
    assert "[1]->[2]:2,3 = d1:2 t1" in out
    assert "d1:2 r1" in out


@pytest.mark.parametrize("argv,code", [
    (["dims", "--dataset", "/no/such/file", "-g", "1"], 2),
    (["dihedral", "check", "q7"], 2),
    (["dims", "-g", "1"], 2),
    (["oracle", "compare", "--group", "a5"], 2),
])
def test_input_errors(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dims", "--frobnicate"])
    assert exc.value.code == 2


def test_bad_labels_and_budget(capsys, dataset):
    path = dataset("rep_s3")
    assert run(capsys, "dims", "--dataset", path, "-g", "1", "--labels", "1,x")[0] == 2
    assert run(capsys, "dims", "--dataset", path, "-g", "1", "--labels", "5")[0] == 2
    assert run(capsys, "dims", "--dataset", path, "-g", "15")[0] == 3
    assert run(capsys, "dims", "--dataset", path, "-g", "4", "--budget", "80")[0] == 3
    assert run(capsys, "dims", "--dataset", path, "-g", "4", "--budget", "81")[0] == 0


def test_output_is_deterministic(capsys, dataset):
    argv = [["validate"], ["oracle", "compare", "--group", "d4"],
            ["torus-rep", "--dataset", dataset("z4_twisted"), "--check"],
            ["graphs", "-g", "2", "--max-n", "3"]]
    for a in argv:
        first = run(capsys, *a)
        assert run(capsys, *a) == first
        second = run(capsys, *a, "--json")
        assert second[1] == canonical_json(json.loads(second[1]))
