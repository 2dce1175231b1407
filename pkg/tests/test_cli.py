import json

import pytest

from acyclic_multipartite.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "spec, quantity, expected",
    [("2,2", "A", "6"), ("2,2", "labelled", "14"), ("2,2,1", "B", "15"), ("2,2", "C", "2"),
     ("2,3", "poly-bernoulli", "46"), ("2,2,1", "smirnov", "12"), ("0,1,2", "A", "3")],
)
def test_count(capsys, spec, quantity, expected):
    code, out, _ = run(capsys, "count", "--spec", spec, quantity)
    assert code == 0 and out.strip() == expected


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--spec", "2,2", "labelled", "--json")
    assert json.loads(out) == {"spec": [2, 2], "quantity": "labelled", "count": "14"}


def test_count_errors(capsys):
    assert run(capsys, "count", "--spec", "2,2,2", "poly-bernoulli")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--spec", "2,x", "A"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--spec", "2,2", "Z"])
    assert exc.value.code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--spec", "2,2", "canonical")
    assert code == 0 and out.split() == ["0011", "0101", "0110"]
    assert run(capsys, "enumerate", "--spec", "1,1", "all")[1].split() == ["01", "10"]
    assert len(run(capsys, "enumerate", "--spec", "2,3", "unique-source")[1].split()) == 6


def test_enumerate_options(capsys):
    out = run(capsys, "enumerate", "--spec", "2,2", "--resume-from", "0.1.0.1", "--limit", "2")[1]
    assert out.split() == ["0110", "1001"]
    out = run(capsys, "enumerate", "--spec", "1,1", "--format", "json")[1]
    assert [json.loads(line) for line in out.splitlines()] == [
        {"spec": [1, 1], "code": "01"}, {"spec": [1, 1], "code": "10"}]
    out = run(capsys, "enumerate", "--spec", "1,1", "--format", "dot")[1]
    assert out.count("digraph") == 2
    out = run(capsys, "enumerate", "--spec", "1,1", "--dotted")[1]
    assert out.split() == ["0.1", "1.0"]


def test_decode_encode_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "decode", "--spec", "2,3", "01011")
    assert code == 0
    assert out.splitlines()[0] == "parts: 2,3"
    assert set(out.splitlines()[1:]) == {
        "a0 -> b0", "a0 -> b1", "a0 -> b2", "b0 -> a1", "a1 -> b1", "a1 -> b2"}
    path = tmp_path / "k23.txt"
    path.write_text(out)
    code, out, _ = run(capsys, "encode", str(path))
    assert code == 0 and out.strip() == "01011"


def test_decode_formats(capsys):
    out = run(capsys, "decode", "--spec", "1,1", "0.1", "--format", "json")[1]
    assert json.loads(out) == {"spec": [1, 1], "code": "01", "arcs": [["a0", "b0"]]}
    assert run(capsys, "decode", "--spec", "1,1", "01", "--format", "dot")[1].startswith("digraph")
    assert run(capsys, "decode", "--spec", "2,2", "0001")[0] == 2


def test_encode_stdin_cycle(capsys, monkeypatch):
    import io
    text = "parts: 2,2\na0 -> b0\nb0 -> a1\na1 -> b1\nb1 -> a0\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, _, err = run(capsys, "encode")
    assert code == 3 and "cyclic" in err


def test_encode_malformed(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("a0 -> b0\n"))
    assert run(capsys, "encode")[0] == 2
    monkeypatch.setattr("sys.stdin", io.StringIO("parts: 1,1\na0 => b0\n"))
    assert run(capsys, "encode")[0] == 2


@pytest.mark.parametrize("args", [("decode", "--spec", "2,2", "0101"), ("decode", "--spec", "2,3,1", "201011")])
def test_decode_then_encode_identity(capsys, tmp_path, args):
    out = run(capsys, *args)[1]
    path = tmp_path / "o.txt"
    path.write_text(out)
    assert run(capsys, "encode", str(path))[1].strip() == args[-1]


def test_sample(capsys):
    out = run(capsys, "sample", "--spec", "2,2", "--seed", "5", "--count", "3")[1].split()
    assert len(out) == 3 and all(sorted(c) == ["0", "0", "1", "1"] for c in out)
    assert out == run(capsys, "sample", "--spec", "2,2", "--seed", "5", "--count", "3")[1].split()


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--max-p", "2")
    assert code == 0
    assert "K_{2,2} census: 0011:1, 0101:4, 0110:2, 1001:2, 1010:4, 1100:1" in out
    assert out.strip().endswith("PASS")
    assert run(capsys, "verify", "--max-n", "0")[0] == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "5", "--max-p", "3", "--json")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert {c["name"] for c in report["checks"]} >= {"count-A", "smirnov", "stanley", "codes"}


def test_verify_reports_mismatch(capsys, monkeypatch):
    from acyclic_multipartite import counting
    monkeypatch.setattr(counting, "count_labelled", lambda spec: 0)
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--max-p", "2")
    assert code == 1
    assert "counterexample: K_{1}" in out
