import os

import pytest

from mimlab.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_grid(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, _ = run(["gen", "grid", "3", "3", "--out", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert text.startswith("graph 9 12\n")
    assert text.count("\n") == 13


def test_gen_cubic_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(["gen", "cubic", "10", "--seed", "7", "--out", str(a)], capsys)[0] == 0
    assert run(["gen", "cubic", "10", "--seed", "7", "--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_cubic_parity_exit_code(capsys):
    code, _, err = run(["gen", "cubic", "7"], capsys)
    assert code == 4
    assert "error" in err


def test_recognize_output(tmp_path, capsys):
    f = tmp_path / "c6.txt"
    run(["gen", "cycle", "6", "--out", str(f)], capsys)
    code, out, _ = run(["recognize", "chordal-bipartite", str(f)], capsys)
    assert code == 0
    assert out.splitlines()[0] == "false"


def test_mimw_exact(tmp_path, capsys):
    f = tmp_path / "c6.txt"
    run(["gen", "cycle", "6", "--out", str(f)], capsys)
    code, out, _ = run(["mimw", "--exact", str(f)], capsys)
    assert code == 0
    assert out.startswith('{"value": 2, "mode": "exact"')


def test_mimw_limit_exit_code(tmp_path, capsys):
    f = tmp_path / "big.txt"
    run(["gen", "path", "12", "--out", str(f)], capsys)
    code, _, _ = run(["mimw", "--exact", str(f)], capsys)
    assert code == 3
    code, out, _ = run(["mimw", "--exact", "--exact-limit", "12", str(f)], capsys)
    assert code == 0


def test_env_limits_flags_win(tmp_path, capsys, monkeypatch):
    f = tmp_path / "p.txt"
    run(["gen", "path", "10", "--out", str(f)], capsys)
    monkeypatch.setenv("MIMLAB_LIMITS", "exact=10")
    assert run(["mimw", "--exact", str(f)], capsys)[0] == 0
    # flag overrides env back down
    assert run(["mimw", "--exact", "--exact-limit", "9", str(f)], capsys)[0] == 3


def test_mimw_lower(tmp_path, capsys):
    f = tmp_path / "k5.txt"
    run(["gen", "complete", "5", "--out", str(f)], capsys)
    code, out, _ = run(["mimw", "--lower", str(f)], capsys)
    assert code == 0
    assert out.startswith("lower 4/15 integer 1 tw 4 degeneracy 4")


def test_tw(tmp_path, capsys):
    f = tmp_path / "k4.txt"
    run(["gen", "complete", "4", "--out", str(f)], capsys)
    code, out, _ = run(["tw", str(f)], capsys)
    assert code == 0
    assert out.splitlines()[0] == "tw 3"


def test_construct_and_embed_pipeline(tmp_path, capsys):
    f = tmp_path / "sub.txt"
    code, _, _ = run(
        ["construct", "circle", "6", "--seed", "2", "--out", str(f)], capsys
    )
    assert code == 0
    code, out, _ = run(["embed", str(f)], capsys)
    assert code == 0
    word = out.split()
    assert len(word) == 2 * 15  # n + 3n/2 chords, two endpoints each


def test_construct_split(tmp_path, capsys):
    f = tmp_path / "p4.txt"
    run(["gen", "path", "4", "--out", str(f)], capsys)
    code, out, _ = run(["construct", "split", str(f)], capsys)
    assert code == 0
    assert out.startswith("graph 4 ")


def test_verify_lemma31_small(capsys):
    code, out, _ = run(
        ["verify", "lemma31", "--trials", "5", "--n-max", "6", "--seed", "1"], capsys
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("family,parameter,")
    assert len(lines) == 6


def test_verify_constructions_json(capsys):
    code, out, _ = run(
        ["verify", "constructions", "--format", "json"], capsys
    )
    assert code == 0
    assert '"violations": []' in out


def test_sweep_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--family", "circle-cubic", "--sizes", "4,6", "--seed", "3"]
    assert run(args + ["--out", str(a)], capsys)[0] == 0
    assert run(args + ["--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().splitlines()[0].endswith("runtime_ms")


def test_bad_file_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("not a graph\n")
    assert run(["recognize", "split", str(f)], capsys)[0] == 4
    assert run(["mimw", str(tmp_path / "missing.txt")], capsys)[0] == 4
