import io
import json

import pytest

from reebrp2.cli import main
from reebrp2.formats import format_edgelist


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_count_rooted():
    code, out, _ = run("count", "--max-saddles", "3", "--rooted")
    assert code == 0
    assert out.splitlines() == ["0\t1", "1\t2", "2\t6", "3\t25"]


def test_count_full():
    code, out, _ = run("count", "--max-saddles", "1", "--full")
    assert (code, out) == (0, "1\t1\n")


def test_count_full_erratum():
    code, out, err = run("count", "--max-saddles", "10", "--full")
    assert code == 0
    assert out.splitlines()[-1] == "10\t1595244"
    assert "2178244" in err


def test_count_json():
    code, out, _ = run("count", "--max-saddles", "10", "--full", "--json")
    doc = json.loads(out)
    assert doc["kind"] == "full"
    assert doc["values"][9] == {
        "k": 10,
        "value": 1595244,
        "erratum": doc["values"][9]["erratum"],
    }
    assert "2178244" in doc["values"][9]["erratum"]
    assert "erratum" not in doc["values"][8]


@pytest.mark.parametrize(
    "argv",
    [["count"], ["count", "--max-saddles", "-1"], ["count", "--max-saddles", "2", "--rooted", "--full"], ["bogus"]],
)
def test_bad_flags(argv, capsys):
    assert run(*argv)[0] == 2


def test_enumerate_stdout():
    code, out, _ = run("enumerate", "--saddles", "1", "--rooted", "--format", "canon")
    assert code == 0
    assert out.splitlines() == ["(*^*^)", "(*^*v)"]


def test_enumerate_manifest(tmp_path):
    code, _, _ = run("enumerate", "--saddles", "2", "--full", "--format", "canon", "--out-dir", str(tmp_path))
    assert code == 0
    manifest = (tmp_path / "manifest.txt").read_text().splitlines()
    assert len(manifest) == 4
    files = sorted(p.name for p in tmp_path.iterdir() if p.name != "manifest.txt")
    assert len(files) == 4
    assert files[0].startswith("0_")
    assert (tmp_path / files[0]).read_text().strip() == manifest[0]


def test_enumerate_dot(tmp_path):
    code, _, _ = run("enumerate", "--saddles", "4", "--full", "--format", "dot", "--out-dir", str(tmp_path))
    assert code == 0
    dots = sorted(tmp_path.glob("*.dot"))
    assert len(dots) == 74
    assert dots[0].name.startswith("00_")
    first = dots[0].read_text()
    run("enumerate", "--saddles", "4", "--full", "--format", "dot", "--out-dir", str(tmp_path / "again"))
    assert (tmp_path / "again" / dots[0].name).read_text() == first


def test_enumerate_edgelist_round_trip(tmp_path):
    code, _, _ = run("enumerate", "--saddles", "3", "--full", "--format", "edgelist", "--out-dir", str(tmp_path))
    assert code == 0
    files = sorted(tmp_path.glob("*.reeb"))
    manifest = (tmp_path / "manifest.txt").read_text().splitlines()
    for path, canon in zip(files, manifest):
        code, out, _ = run("check", str(path))
        assert code == 0
        assert out.splitlines()[-1] == f"canon {canon}"


def test_enumerate_cap():
    assert run("enumerate", "--saddles", "6", "--cap", "10")[0] == 3


def test_enumerate_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert run("enumerate", "--saddles", "1", "--out-dir", str(blocker / "sub"))[0] == 4


def test_verify_small():
    code, out, _ = run("verify", "--max-saddles", "5")
    assert code == 0
    assert "MISMATCH" not in out
    assert out.splitlines()[-1] == "all match"


def test_verify_zero():
    code, out, _ = run("verify", "--max-saddles", "0")
    assert code == 0
    assert out.splitlines()[1] == "rooted\t0\t1\t1\tmatch"
    assert len(out.splitlines()) == 3


def test_verify_fault_injection():
    code, out, _ = run("verify", "--max-saddles", "2", "--inject-fault")
    assert code == 1
    assert "MISMATCH" in out


def test_verify_over_limit():
    assert run("verify", "--max-saddles", "12")[0] == 3


def _write(path, text):
    path.write_text(text)
    return str(path)


def test_check_valid(tmp_path):
    f = _write(tmp_path / "g.reeb", "reeb v1\nvertices 3\nedge 0 1\nedge 1 2\n")
    code, out, _ = run("check", f)
    assert code == 0
    assert out.splitlines()[0] == "valid yes"
    assert out.splitlines()[-1] == "canon [*|*]"
    code, out, _ = run("check", f, "--json")
    assert json.loads(out)["canon"] == "[*|*]"


def test_check_cycle(tmp_path):
    f = _write(tmp_path / "c.reeb", "reeb v1\nvertices 3\nedge 0 1\nedge 1 2\nedge 2 0\n")
    code, out, _ = run("check", f)
    assert code == 1
    assert "ACYCLIC_TREE\tFAIL" in out


def test_check_parse_error(tmp_path):
    f = _write(tmp_path / "bad.reeb", "reeb v1\nvertices 3\nedge 0 9\n")
    code, _, err = run("check", f)
    assert code == 2
    assert ":3:8:" in err


def test_check_missing_file(tmp_path):
    assert run("check", str(tmp_path / "nope.reeb"))[0] == 4


def test_iso(tmp_path):
    from reebrp2 import ExplicitGraph, enum_full, to_explicit

    g = to_explicit(list(enum_full(3))[5])
    perm = list(reversed(range(g.vertex_count)))
    a = _write(tmp_path / "a.reeb", format_edgelist(g))
    b = _write(tmp_path / "b.reeb", format_edgelist(g.relabel(perm)))
    c = _write(tmp_path / "c.reeb", format_edgelist(to_explicit(list(enum_full(3))[6])))
    assert run("iso", a, b) == (0, "isomorphic\n", "")
    assert run("iso", a, c)[:2] == (1, "not-isomorphic\n")
    bad = _write(tmp_path / "d.reeb", format_edgelist(ExplicitGraph(3, ((0, 1), (1, 2), (2, 0)))))
    code, _, err = run("iso", a, bad)
    assert code == 1
    assert "ACYCLIC_TREE" in err
