import hashlib
import json
import subprocess
import sys

from zzgraph import parse_barcode, parse_filtration
from zzgraph.cli import RunReport, main

from conftest import DATA, FIG3_BARCODE, FIG5_BARCODE


def reports(text):
    return [json.loads(line) for line in text.splitlines() if line.startswith("{")]


def test_compute_fig3_text(capsys):
    assert main(["compute", "--dim", "0", "--input", str(DATA / "fig3.zz")]) == 0
    out, err = capsys.readouterr()
    assert out == "0 1 10\n0 2 2\n0 4 4\n0 6 8\n0 7 10\n0 8 9\n"
    (rep,) = reports(err)
    assert rep["command"] == "compute" and rep["verdict"] == "ok"
    assert all(v >= 0 for v in rep["phases"].values())


def test_compute_fig5_json_to_file(tmp_path, capsys):
    dst = tmp_path / "bc.json"
    code = main(["compute", "--dim", "1", "--input", str(DATA / "fig5.zz"), "--format", "json",
                 "--output", str(dst)])
    assert code == 0
    assert parse_barcode(dst.read_text(), "json").pairs() == sorted(FIG5_BARCODE)
    (rep,) = reports(capsys.readouterr().out)
    assert rep["output"] == str(dst)


def test_compute_empty_file(tmp_path, capsys):
    src = tmp_path / "empty.zz"
    src.write_text("")
    assert main(["compute", "--dim", "0", "--input", str(src), "--quiet"]) == 0
    assert capsys.readouterr().out == ""


def test_compute_bad_input_exits_1(tmp_path, capsys):
    src = tmp_path / "bad.zz"
    src.write_text("+ e 0 1\n")
    assert main(["compute", "--dim", "0", "--input", str(src)]) == 1
    assert "dangling face at arrow 1" in capsys.readouterr().err
    assert main(["compute", "--dim", "0", "--input", str(tmp_path / "missing.zz")]) == 1


def test_compute_triangles_need_codim1(tmp_path, capsys):
    src = tmp_path / "tri.zz"
    src.write_text("dim 2\ncoord 0 0 0\ncoord 1 4 0\ncoord 2 0 4\n"
                   "+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n+t 0 1 2\n")
    assert main(["compute", "--dim", "1", "--input", str(src), "--quiet"]) == 1
    capsys.readouterr()
    assert main(["compute", "--dim", "codim1", "--input", str(src), "--quiet"]) == 0
    assert capsys.readouterr().out == "1 6 6\n"


def test_compute_codim1_with_dual_file(tmp_path, capsys):
    src = tmp_path / "f.zz"
    src.write_text("+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n-e 0 2\n")
    dual = tmp_path / "d.txt"
    dual.write_text("component 2\nvoids 2\nduale 0 1 0 1\nduale 0 1 1 2\nduale 0 1 0 2\n")
    assert main(["compute", "--dim", "codim1", "--input", str(src), "--dual", str(dual),
                 "--quiet"]) == 0
    assert capsys.readouterr().out == "1 6 6\n"


def test_compute_internal_failure_exits_2(tmp_path, capsys):
    src = tmp_path / "f.zz"
    src.write_text("dim 2\n+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n+t 0 1 2\n")
    dual = tmp_path / "d.txt"
    dual.write_text("component 2\nvoids 0\ndualv 0 0 1 2\n"
                    "duale 0 0 0 1\nduale 0 0 1 2\nduale 0 0 0 2\n")
    assert main(["compute", "--dim", "codim1", "--input", str(src), "--dual", str(dual)]) == 2
    assert "internal invariant failure" in capsys.readouterr().err


def test_verify_small_passes(tmp_path, capsys):
    code = main(["verify", "--trials", "1", "--seed", "1", "--max-n", "6", "--max-m", "12",
                 "--reproducers", str(tmp_path)])
    assert code == 0
    (rep,) = reports(capsys.readouterr().out)
    assert rep["verdict"] == "pass" and rep["extra"]["checked"] == 3


def test_verify_fault_writes_shrunk_reproducers(tmp_path, capsys):
    code = main(["verify", "--dim", "0", "--trials", "3", "--seed", "2",
                 "--reproducers", str(tmp_path), "--inject-fault"])
    assert code == 1
    (rep,) = reports(capsys.readouterr().out)
    assert rep["verdict"] == "fail"
    files = sorted(tmp_path.glob("repro-dim0-seed*.zz"))
    assert files and len(files) == rep["extra"]["failed"]
    for f in files:
        filt = parse_filtration(f.read_text())
        assert filt.m >= 1


def test_verify_worker_pool(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ZZ_THREADS", "2")
    code = main(["verify", "--dim", "1", "--trials", "20", "--seed", "5",
                 "--reproducers", str(tmp_path)])
    assert code == 0
    (rep,) = reports(capsys.readouterr().out)
    assert rep["params"]["workers"] == 2 and rep["extra"]["checked"] == 20


def test_verify_rejects_bad_parameters(capsys):
    assert main(["verify", "--models", "nope"]) == 1
    assert main(["verify", "--max-n", "0"]) == 1


def test_bench_single_size_has_no_ratio(capsys):
    assert main(["bench", "--dim", "0", "--sizes", "2000"]) == 0
    (rep,) = reports(capsys.readouterr().out)
    assert "ratio" not in rep["extra"]
    assert rep["params"]["m"] == 2000 and rep["phases"]["wall"] > 0


def test_bench_two_sizes_report_ratio(capsys):
    assert main(["bench", "--dim", "1", "--sizes", "1e3,2e3"]) == 0
    reps = reports(capsys.readouterr().out)
    assert [r["params"]["m"] for r in reps] == [1000, 2000]
    assert reps[1]["extra"]["ratio"] > 0


def test_bench_rejects_bad_sizes(capsys):
    assert main(["bench", "--dim", "0", "--sizes", "ten"]) == 1
    assert main(["bench", "--dim", "0", "--sizes", "0"]) == 1


def _gen(tmp_path, name, *extra):
    dst = tmp_path / name
    assert main(["gen", "--n", "10", "--m", "200", "--output", str(dst), *extra]) == 0
    return hashlib.sha256(dst.read_bytes()).hexdigest()


def test_gen_deterministic_and_seed_sensitive(tmp_path, capsys):
    a = _gen(tmp_path, "a.zz", "--seed", "3")
    b = _gen(tmp_path, "b.zz", "--seed", "3")
    c = _gen(tmp_path, "c.zz", "--seed", "4")
    assert a == b != c
    p1 = _gen(tmp_path, "p1.zz", "--seed", "3", "--planar")
    p2 = _gen(tmp_path, "p2.zz", "--seed", "3", "--planar")
    assert p1 == p2
    parse_filtration((tmp_path / "p1.zz").read_text())


def test_gen_invalid_parameters(capsys):
    assert main(["gen", "--n", "0", "--m", "5"]) == 1
    assert main(["gen", "--n", "3", "--m", "-1"]) == 1
    assert main(["gen", "--n", "3", "--m", "5", "--model", "bogus"]) == 1


def test_run_report_json():
    doc = json.loads(RunReport("x", {"a": 1}, phases={"t": 0.5}).to_json())
    assert doc == {"command": "x", "params": {"a": 1}, "phases": {"t": 0.5}}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zzgraph", "compute", "--dim", "0", "--input",
                           str(DATA / "fig3.zz"), "--quiet"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert parse_barcode(proc.stdout).pairs() == sorted(FIG3_BARCODE)
