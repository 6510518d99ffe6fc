import io
import json

import pytest

from lusztig_tableaux.cli import main
from lusztig_tableaux.lusztig import LusztigDatum

S_ROWS = [[1, 1, 1, 2, 2, 3], [2, 3, 3, 5, 6], [4, 4, 4], [5, 5, 6], [6, 6]]


def run(monkeypatch, capsys, argv, payload=None):
    if payload is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_embed_one_direction(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["embed", "--quiver", "6,1"], S_ROWS)
    assert code == 0
    c = LusztigDatum.from_json(json.loads(out))
    assert c.as_dict() == {(1, 2): 2, (1, 3): 1, (2, 3): 2, (2, 5): 1, (2, 6): 1, (3, 4): 3,
                           (4, 5): 2, (4, 6): 1, (5, 6): 2}


def test_embed_sink_three(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["embed", "--quiver", "6,3", "--d", "6"], S_ROWS)
    assert code == 0
    data = json.loads(out)
    assert data["sink"] == 3
    assert sorted(map(tuple, data["c"])) == [(1, 3, 1), (1, 4, 2), (2, 3, 1), (2, 4, 1), (3, 5, 1),
                                              (3, 6, 1), (4, 5, 2), (4, 6, 1), (5, 6, 2)]


def test_transition_identity(monkeypatch, capsys):
    datum = {"n": 4, "sink": 2, "c": [[1, 3, 2], [2, 4, 1], [3, 4, 1]]}
    code, out, _ = run(monkeypatch, capsys, ["transition", "--from", "4,2", "--to", "4,2"], datum)
    assert code == 0
    assert LusztigDatum.from_json(json.loads(out)) == LusztigDatum.from_json(datum)


def test_lusztig_op(monkeypatch, capsys):
    zero = {"n": 3, "sink": 1, "c": []}
    code, out, _ = run(monkeypatch, capsys, ["lusztig-op", "--i", "1", "--dir", "raise"], zero)
    assert code == 0 and json.loads(out) is None
    code, out, _ = run(monkeypatch, capsys, ["lusztig-op", "--i", "2", "--dir", "lower", "--route", "tensor"], zero)
    assert json.loads(out) == {"n": 3, "sink": 1, "c": [[2, 3, 1]]}


def test_rsk_round_trip(monkeypatch, capsys):
    T = {"alphabet": {"kind": "barred", "n": 3}, "rotated": True, "rows": [[-3], [-2, -2, -1]]}
    M = {"rows": {"kind": "barred", "n": 3}, "cols": {"kind": "unbarred", "n": 6},
         "entries": [[-3, 5, 1], [-3, 6, 1], [-2, 4, 1], [-1, 4, 2]]}
    code, out, _ = run(monkeypatch, capsys, ["rsk"], {"T": T, "M": M})
    assert code == 0
    pq = json.loads(out)
    assert pq["Q"]["rows"] == [[5, 6], [4, 4, 4]]
    code, out, _ = run(monkeypatch, capsys, ["rsk", "--inverse"], pq)
    back = json.loads(out)
    assert back["T"]["rows"] == T["rows"]
    assert sorted(map(tuple, back["M"]["entries"])) == sorted(map(tuple, M["entries"]))


def test_graph_formats(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["graph", "--lambda", "1", "--n", "3"])
    assert code == 0 and json.loads(out)["edges"] == [[0, 1, 1], [1, 2, 2]]
    code, out, _ = run(monkeypatch, capsys, ["graph", "--quiver", "3,1", "--depth", "2", "--format", "dot"])
    assert out.startswith("digraph") and out.count("[label=") >= 10


def test_verify_suite(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["verify", "--suite", "embedding"])
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(monkeypatch, capsys, ["verify", "--suite", "thm54"])
    assert code == 0 and "embedding" in out


@pytest.mark.parametrize("argv,payload", [
    (["embed", "--quiver", "6,3", "--d", "3"], S_ROWS),
    (["embed", "--quiver", "3,1"], [[2, 1]]),
    (["transition", "--from", "4,2", "--to", "5,2"], {"n": 4, "sink": 2, "c": []}),
    (["transition", "--from", "4,1", "--to", "4,2"], {"n": 4, "sink": 2, "c": []}),
    (["lusztig-op", "--i", "7", "--dir", "lower"], {"n": 3, "sink": 1, "c": []}),
    (["rsk"], {"T": {}}),
    (["graph", "--lambda", "1,1,1", "--n", "2"], None),
])
def test_errors_are_reported(monkeypatch, capsys, argv, payload):
    code, out, err = run(monkeypatch, capsys, argv, payload)
    assert code != 0
    assert "error" in json.loads(err)


def test_malformed_json(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("{not json"))
    assert main(["lusztig-op", "--i", "1", "--dir", "lower"]) == 2
    assert "malformed" in json.loads(capsys.readouterr().err)["error"]


def test_bad_arguments_are_json(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["embed", "--quiver", "6"])
    assert exc.value.code == 2
    assert "error" in json.loads(capsys.readouterr().err)


@pytest.mark.parametrize("datum", [
    {"n": 5, "sink": 2, "c": [[1, 3, 2], [2, 5, 1], [4, 5, 3]]},
    {"n": 3, "sink": 1, "c": [[1, 2, 1]]},
])
def test_output_reparses(monkeypatch, capsys, datum):
    code, out, _ = run(monkeypatch, capsys, ["transition", "--from", f"{datum['n']},{datum['sink']}",
                                             "--to", f"{datum['n']},1"], datum)
    parsed = LusztigDatum.from_json(json.loads(out))
    assert LusztigDatum.from_json(parsed.to_json()) == parsed
