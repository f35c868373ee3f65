import numpy as np
import pytest

from monsterrep import mm_cli, mm_rep


def test_parse_word_atoms():
    atoms = mm_cli.parse_word("x1a3*y0*z1fff*d155*t1*l2")
    assert [a.tag for a in atoms] == ["x", "y", "z", "d", "t", "l"]
    assert atoms[0].payload == 0x1a3
    assert atoms[2].payload == 0x1fff
    assert atoms[4].payload == 1 and atoms[5].payload == 2
    assert mm_cli.parse_word("") == []


def test_parse_word_permutation():
    ident = ",".join(str(i) for i in range(24))
    atoms = mm_cli.parse_word(f"p[{ident}]")
    assert atoms[0].tag == "p"
    assert atoms[0].payload.perm.is_identity()


def test_parse_word_errors():
    with pytest.raises(ValueError, match="position"):
        mm_cli.parse_word("x1a3*q7")
    with pytest.raises(ValueError, match="preserve the Golay code"):
        images = list(range(24))
        images[0], images[1] = 1, 0
        mm_cli.parse_word("p[" + ",".join(map(str, images)) + "]")
    with pytest.raises(ValueError):
        mm_cli.parse_word("t5")
    with pytest.raises(ValueError):
        mm_cli.parse_word("x1a3**y1")


def test_wordspec():
    ws = mm_cli.WordSpec("t1*t2")
    assert len(ws.atoms) == 2


def test_apply_command(tmp_path):
    v = mm_rep.rand(3, 11)
    src = tmp_path / "a.mmv"
    dst = tmp_path / "b.mmv"
    mm_rep.write_vector(v, src)
    rc = mm_cli.main(["apply", "--in", str(src), "--word", "", "--out", str(dst)])
    assert rc == 0
    assert src.read_bytes() == dst.read_bytes()
    rc = mm_cli.main(["apply", "--in", str(src), "--word", "t1*t2", "--out", str(dst)])
    assert rc == 0
    assert src.read_bytes() == dst.read_bytes()
    rc = mm_cli.main(["apply", "--in", str(src), "--word", "l1*l1*l1", "--out", str(dst)])
    assert rc == 0
    assert src.read_bytes() == dst.read_bytes()
    rc = mm_cli.main(["apply", "--in", str(src), "--word", "zzz", "--out", str(dst)])
    assert rc == 2


def test_apply_matches_library(tmp_path):
    v = mm_rep.rand(7, 12)
    src, dst = tmp_path / "a.mmv", tmp_path / "b.mmv"
    mm_rep.write_vector(v, src)
    assert mm_cli.main(["apply", "--in", str(src), "--word", "x1a3*t1*l2",
                        "--out", str(dst)]) == 0
    got = mm_rep.read_vector(dst)
    want = mm_rep.apply_word(v, mm_cli.parse_word("x1a3*t1*l2"))
    assert got == want


def test_info_topics(capsys):
    for topic in ("basis", "cocycle", "short-counts", "layout"):
        assert mm_cli.main(["info", topic]) == 0
    out = capsys.readouterr().out
    assert "98280" in out
    assert "196884" in out
    assert mm_cli.main(["info"][:1] + ["layout"]) == 0


def test_verify_exit_codes(capsys):
    assert mm_cli.main(["verify", "golay"]) == 0
    out = capsys.readouterr().out
    assert "ALL SUITES PASSED" in out
    assert "0^1 8^759" in out or "weight distribution" in out


def test_verify_exhaustive_only(capsys):
    assert mm_cli.main(["verify", "loop", "--samples", "0"]) == 0
    assert mm_cli.main(["verify", "qx", "--samples", "0"]) == 0


def test_verify_deterministic(capsys):
    mm_cli.main(["verify", "loop", "--samples", "1000", "--seed", "5"])
    first = capsys.readouterr().out
    mm_cli.main(["verify", "loop", "--samples", "1000", "--seed", "5"])
    second = capsys.readouterr().out
    strip = lambda s: [l.split("(")[0] for l in s.splitlines() if l.startswith("  [")]
    assert strip(first) == strip(second)


def test_bench_smoke(capsys):
    from monsterrep import mm_cli
    assert mm_cli.main(["bench", "--p", "3", "--reps", "1",
                        "--word-class", "tau"]) == 0
    out = capsys.readouterr().out
    assert "0.73" in out and "1.35" in out
    assert "packed vs scalar" in out
