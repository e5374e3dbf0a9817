import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from clifford_kit import constructions as cons
from clifford_kit.cli import main
from clifford_kit.metrics import format_oracle, table_oracle, write_metric, random_rational_metric
from clifford_kit.catalog import base
from clifford_kit.semigroup import write_table


def run(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["--no-timing", *argv])
    return code, buf.getvalue()


def report(*argv):
    code, out = run(*argv)
    return code, json.loads(out)


@pytest.fixture
def files(tmp_path):
    write_table(cons.two(), tmp_path / "two.tbl")
    write_table(cons.zero_extension(cons.cyclic_group(2)).S, tmp_path / "gdot_z2.tbl")
    write_table(base("s3"), tmp_path / "s3.tbl")
    write_metric(random_rational_metric(base("s3"), seed=1), tmp_path / "s3.metric")
    return tmp_path


def test_analyze_file(files):
    code, r = report("analyze", str(files / "two.tbl"))
    assert code == 0 and r["report"]["is_semilattice"] is True


def test_embed1_file(files):
    code, r = report("embed1", str(files / "gdot_z2.tbl"))
    assert code == 0 and r["report"]["injective"] is True
    assert r["report"]["target_size"] == 6 and "h_A" in r["report"]["map"]


def test_refute64_euclid():
    code, r = report("refute64", "--oracle", "euclid", "--epsilon", "1/100")
    assert code == 0 and r["report"]["witness_n"] == 50


def test_refute64_file_and_inconclusive(tmp_path):
    from fractions import Fraction as F
    pts = [F(0)] + [F(1, k) for k in range(1, 8)]
    rows = [[F(int(x != y)) for y in pts] for x in pts]
    (tmp_path / "d.oracle").write_text(format_oracle(table_oracle(rows)))
    code, r = report("refute64", "--oracle", str(tmp_path / "d.oracle"), "--epsilon", "1/2")
    assert code == 1 and r["report"]["verdict"] == "inconclusive"
    rows[0][3] = rows[3][0] = F(3, 2)
    (tmp_path / "bad.oracle").write_text(format_oracle(table_oracle(rows)))
    code, r = report("refute64", "--oracle", str(tmp_path / "bad.oracle"), "--epsilon", "1/2")
    assert code == 0 and r["report"]["violation_n"] == 1


def test_metric_commands(files):
    code, r = report("metric-check", str(files / "s3.tbl"), str(files / "s3.metric"))
    assert code == 1 and r["report"]["subinvariant"] is False and r["report"]["witnesses"]
    code, r = report("metric-closure", str(files / "s3.tbl"), str(files / "s3.metric"))
    assert code == 0 and r["report"]["flags"]["subinvariant"] is True
    code, r = report("metric-check", "z3", "word")
    assert code == 0


def test_constructions_and_homs():
    code, r = report("product", "two", "z2")
    assert code == 0 and r["report"]["size"] == 4
    code, r = report("reduced", "chain2", "{0}", "z2")
    assert code == 0 and r["report"]["size"] == 5 and r["report"]["is_clifford"]
    code, r = report("cone", "z2", "--levels", "2")
    assert r["report"]["size"] == 5
    code, r = report("homs", "chain2", "two")
    assert r["report"]["count"] == 4
    code, r = report("embed2", "gdot(s3)", "--levels", "4")
    assert code == 0 and r["report"]["image_in_zero_extensions"] is True
    code, r = report("classify", "chain2")
    assert code == 0 and r["report"]["two_embeddable"] is True
    code, r = report("cone-metric", "z3", "word", "--points", "0,1:e,1:g,1:g^2")
    assert code == 0 and r["report"]["passed"] is True


def test_input_errors_exit_2(tmp_path, monkeypatch):
    (tmp_path / "bad.tbl").write_text("2\n0 0\n0 9\n")
    code, r = report("analyze", str(tmp_path / "bad.tbl"))
    assert code == 2 and r["error"] == "ParseError" and ":3:3:" in r["message"]
    code, r = report("reduced", "chain2", "{1}", "z2")
    assert code == 2 and r["error"] == "NotAnIdeal"
    code, r = report("cone-metric", "z3", "word", "--points", "1:g")
    assert code == 2 and r["error"] == "SampleNotClosed"
    code, r = report("embed1", "gdot(z2)", "--A", "0")
    assert code == 2 and r["error"] == "NotUDense"
    monkeypatch.setenv("CK_MAX_ELEMENTS", "10")
    code, r = report("product", "s3", "z3")
    assert code == 2 and "CK_MAX_ELEMENTS=10" in r["message"]


def test_non_dense_forced_is_a_false_verdict():
    with pytest.warns(UserWarning):
        code, r = report("embed1", "gdot(z2)", "--A", "0", "--force")
    assert code == 1 and r["report"]["collisions"] == [[1, 2]]


def test_timing_field():
    buf = io.StringIO()
    with redirect_stdout(buf):
        main(["analyze", "two"])
    assert "elapsed_seconds" in json.loads(buf.getvalue())
    assert "elapsed_seconds" not in report("analyze", "two")[1]


def test_deterministic_output():
    for argv in (("analyze", "gdot(s3)"), ("embed1", "prod(diamond,z3)"),
                 ("metric-closure", "s3", "random:4")):
        assert run(*argv) == run(*argv)


def test_dump_round_trips(tmp_path):
    code, out = run("dump", "cone(z3,2)")
    (tmp_path / "c.tbl").write_text(out)
    assert run("analyze", str(tmp_path / "c.tbl"))[1].replace(str(tmp_path / "c.tbl"), "X") == \
        run("analyze", "cone(z3,2)")[1].replace("cone(z3,2)", "X")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "clifford_kit", "--no-timing", "analyze", "two"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["report"]["is_semilattice"]
