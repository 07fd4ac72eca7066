import json
import time

import pytest

from waldcat.cli import main
from waldcat.serialize import parse_dot_edges


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exit_codes(capsys):
    assert run(capsys, "run", "wald-axioms", "--size", "2")[0] == 0
    assert run(capsys, "check-exact", "--functor", "projection", "--size", "2")[0] == 1
    assert run(capsys, "run", "no-such-suite")[0] == 2
    assert run(capsys, "run")[0] == 2
    assert run(capsys, "export", "cube", "--size", "2", "--n", "1", "--index", "9999")[0] == 2
    code, _, err = run(capsys, "run", "cubes", "--size", "99")
    assert code == 3 and "size cap" in err


def test_version(capsys):
    assert run(capsys, "--version")[0] == 0


def test_check_exact_witness_replays(tmp_path, capsys):
    path = tmp_path / "w.json"
    code, out, _ = run(capsys, "check-exact", "--functor", "projection", "--size", "3", "--out", str(path))
    assert code == 1 and "kE1" in out
    doc = json.loads(path.read_text())
    assert doc["verdict"] == "fail" and doc["witnesses"]
    code, out, _ = run(capsys, "replay", str(path))
    assert code == 0 and "reproduced" in out


def test_tampered_witness_is_not_reproduced(tmp_path, capsys):
    path = tmp_path / "w.json"
    run(capsys, "check-exact", "--functor", "projection", "--size", "2", "--out", str(path))
    doc = json.loads(path.read_text())
    doc["witnesses"] = doc["witnesses"][1:]
    path.write_text(json.dumps(doc))
    assert run(capsys, "replay", str(path))[0] == 1
    doc["version"] = "0.0.0-other"
    path.write_text(json.dumps(doc))
    assert run(capsys, "replay", str(path))[0] == 2


def test_run_witness_round_trip(tmp_path, capsys):
    path = tmp_path / "run.json"
    assert run(capsys, "run", "sdot", "--size", "2", "--witness", str(path))[0] == 0
    assert json.loads(path.read_text())["verdict"] == "pass"
    assert run(capsys, "replay", str(path))[0] == 0


def test_run_all_small_is_quick(capsys):
    start = time.perf_counter()
    code, out, _ = run(capsys, "run", "all", "--size", "1")
    assert code == 0 and out.strip().endswith("PASS all")
    assert time.perf_counter() - start < 5


def test_json_report_is_deterministic(capsys):
    def report():
        code, out, _ = run(capsys, "run", "wald-axioms", "--size", "2", "--format", "json")
        doc = json.loads(out)
        doc.pop("timing", None)
        return doc

    first = report()
    assert first["ok"] and first == report()


@pytest.mark.parametrize("what", ["interval", "cube-index", "ordinal", "arrow-ordinal", "cube", "k0",
                                  "category", "functor", "s-object"])
def test_export_json(what, capsys):
    code, out, _ = run(capsys, "export", what, "--size", "2", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "cube", "--size", "3", "--n", "2", "--format", "dot")
    assert code == 0 and len(parse_dot_edges(out)) == 4
    assert run(capsys, "export", "k0", "--format", "dot")[0] == 2


def test_functor_file_input(tmp_path, capsys):
    path = tmp_path / "smash.json"
    assert run(capsys, "export", "functor", "--functor", "smash", "--size", "2", "--format", "json",
               "--out", str(path))[0] == 0
    assert run(capsys, "check-exact", "--file", str(path), "--size", "2")[0] == 0
    assert run(capsys, "check-exact", "--file", str(tmp_path / "missing.json"))[0] == 2


def test_other_verbs(capsys):
    assert run(capsys, "compose", "--functor", "smash", "--inner", "identity,double", "--size", "2")[0] == 0
    assert run(capsys, "compose", "--functor", "smash", "--inner", "identity", "--size", "2")[0] == 2
    assert run(capsys, "box", "--functor", "smash", "--size", "3")[0] == 0
    assert run(capsys, "curry", "--functor", "smash", "--size", "2")[0] == 0
    assert run(capsys, "build-hom", "--size", "3", "--arity", "1")[0] == 0
    assert run(capsys, "check-closed", "--size", "3")[0] == 0
    code, out, _ = run(capsys, "enumerate-s", "--size", "3", "--n", "3")
    assert code == 0 and "30 objects" in out
    code, out, _ = run(capsys, "k0", "--size", "3")
    assert code == 0 and "K0 = Z" in out
    assert run(capsys, "check-p", "--size", "3", "--n", "2")[0] == 0
    assert run(capsys, "check-pairing", "--size", "2", "--n", "2")[0] == 0
    assert run(capsys, "k0", "--builtin", "vect_fp", "--size", "2")[0] == 0
