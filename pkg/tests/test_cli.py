import io as stdio

import pytest

from novikov import io
from novikov.cli import main
from novikov.modules import NovikovAlgebra1D
from novikov.verify import fixture_text


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name in ("odd_square.alg", "antisymmetric_pairing.alg", "t8_a2.mod"):
        paths[name] = tmp_path / name
        paths[name].write_text(fixture_text(name))
    paths["ee_e.alg"] = tmp_path / "ee_e.alg"
    paths["ee_e.alg"].write_text(io.emit(NovikovAlgebra1D(1).algebra()))
    paths["bad.alg"] = tmp_path / "bad.alg"
    paths["bad.alg"].write_text("field rational\ndims 2 0\np 0 0 1 1\np 1 0 0 1\n")
    return {k: str(v) for k, v in paths.items()}


def run(*argv):
    out = stdio.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_check_and_type(files):
    assert run("check", files["odd_square.alg"])[0] == 0
    code, out = run("type", files["antisymmetric_pairing.alg"])
    assert code == 0 and out.strip() == "type N"
    code, out = run("type", files["antisymmetric_pairing.alg"], "--machine")
    assert out.strip() == "record=type type=N"


def test_check_failure(files):
    code, out = run("check", files["bad.alg"])
    assert code == 1 and "FAIL" in out
    code, out = run("check", files["bad.alg"], "--machine")
    assert code == 1 and "record=violation" in out
    assert run("type", files["bad.alg"])[0] == 1


def test_brackets(files):
    code, out = run("slie", files["odd_square.alg"], "--machine")
    assert code == 0 and "record=bracket i=1 j=1 k=0 value=2" in out
    code, out = run("slie", files["antisymmetric_pairing.alg"], "--ungraded", "--machine")
    assert "i=1 j=2 k=0 value=2" in out and "i=2 j=1 k=0 value=-2" in out
    assert run("gd", files["odd_square.alg"])[0] == 0
    assert run("gd", files["antisymmetric_pairing.alg"], "--ungraded")[0] == 0


def test_module_check(files):
    assert run("module-check", files["ee_e.alg"], files["t8_a2.mod"])[0] == 0
    assert run("module-check", files["odd_square.alg"], files["t8_a2.mod"])[0] == 2


def test_catalog(files, tmp_path):
    code, out = run("catalog", "list")
    assert code == 0 and len(out.splitlines()) == 12
    code, out = run("catalog", "emit", "T8", "--param", "a=2")
    assert code == 0
    mod = tmp_path / "emitted.mod"
    mod.write_text(out)
    assert run("module-check", files["ee_e.alg"], str(mod))[0] == 0
    code, out = run("catalog", "emit", "T6", "--param", "a=1")
    mod.write_text(out)
    base = tmp_path / "ee0.alg"
    base.write_text(io.emit(NovikovAlgebra1D(0).algebra()))
    assert run("module-check", str(base), str(mod))[0] == 1
    assert run("catalog", "emit", "T12", "--param", "b=0")[0] == 2
    assert run("catalog", "emit", "T5", "--field", "gf:3", "--param", "a=4")[0] == 0
    assert run("catalog", "emit")[0] == 2


def test_search_command():
    code, out = run("search", "--d0", "1", "--d1", "1", "--field", "gf:2", "--no-prune", "--machine")
    assert code == 0
    assert "candidates=16" in out and "type_S=0" in out
    code, out = run("search", "--d0", "1", "--d1", "2", "--field", "gf:2")
    assert code == 0 and "not a proof" in out
    code, _ = run("search", "--d0", "2", "--d1", "2", "--field", "gf:3", "--random", "200", "--seed", "1")
    assert code == 0
    assert run("search", "--d0", "1", "--d1", "2", "--field", "gf:5")[0] == 2
    assert run("search", "--d0", "1", "--d1", "2", "--field", "gf:4")[0] == 2


def test_usage_errors(files):
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("check", "/nonexistent/file.alg")[0] == 2
    bad = files["bad.alg"] + ".odd"
    with open(bad, "w") as fh:
        fh.write("field rational\ndims 1 1\np 0 0 1 1\n")
    assert run("check", bad)[0] == 2


def test_verify_subset():
    code, out = run("verify", "paper", "--skip", "gf3", "--skip", "search", "--skip", "gd",
                    "--skip", "invariants", "--skip", "completeness", "--skip", "pairings", "--skip", "catalog")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
