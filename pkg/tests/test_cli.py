"""CLI surface: commands, formats, exit codes, output determinism."""

import csv
import io
import json

import pytest

from hbe import catalog, cli
from hbe.catalog import IdentityDescriptor
from hbe.exact import SymValue


def run_cli(argv, regs=None):
    buf = io.StringIO()
    parser = cli.build_parser()
    args = parser.parse_args(argv)
    code = cli.run(cli.config_from_args(args), regs=regs, out=buf)
    return code, buf.getvalue()


def test_list_text_and_json():
    code, out = run_cli(["list"])
    assert code == 0
    assert "I-cb0" in out and "I-parker" in out
    code, out = run_cli(["list", "--format", "json"])
    recs = json.loads(out)
    assert len(recs) == 23
    assert {"id", "title", "source", "requires_m", "m_domain", "n_min",
            "ring"} <= set(recs[0])


def test_verify_json_contract():
    code, out = run_cli(["verify", "--identity", "I-cb0", "--n-max", "50",
                         "--format", "json"])
    assert code == 0
    recs = json.loads(out)
    assert len(recs) == 51
    assert all(r["equal"] for r in recs)
    assert recs[2]["lhs"] == "17/3"


def test_verify_csv_columns():
    code, out = run_cli(["verify", "--identity", "I-riordan", "--n-max", "5",
                         "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == list(cli.REPORT_COLUMNS)
    assert rows[0]["lhs"] == "-1"
    assert rows[0]["m"] == ""


def test_verify_m_filter():
    code, out = run_cli(["verify", "--identity", "I-thm21", "--n-max", "4",
                         "--m", "0,1/2", "--format", "json"])
    assert code == 0
    recs = json.loads(out)
    assert len(recs) == 10
    assert {r["m"] for r in recs} == {"0/2", "1/2"}


def test_verify_rejects_out_of_domain_m():
    code, out = run_cli(["verify", "--identity", "I-chujin", "--m", "1/2",
                         "--n-max", "4"])
    assert code == 2


def test_eval_commands():
    code, out = run_cli(["eval", "--sum", "U", "--d", "1", "--n", "2"])
    assert code == 0 and out.strip() == "22/3"
    code, out = run_cli(["eval", "--sum", "V", "--d", "2", "--n", "1"])
    assert code == 0 and out.strip() == "2"
    code, out = run_cli(["eval", "--identity", "I-har", "--side", "rhs",
                         "--n", "1"])
    assert code == 0 and out.strip() == "2"
    code, out = run_cli(["eval", "--identity", "I-thm21", "--side", "lhs",
                         "--m", "1/2", "--n", "0"])
    assert code == 0 and out.strip() == "2 - 2*ln2"


def test_eval_usage_error_exit_2():
    code, out = run_cli(["eval", "--identity", "I-har", "--side", "lhs"])
    assert code == 2
    code, out = run_cli(["eval", "--identity", "I-chujin", "--side", "lhs",
                         "--m", "1/2", "--n", "3"])
    assert code == 2


def test_argparse_usage_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--format", "yaml"])
    assert exc.value.code == 2


def test_fit_output():
    code, out = run_cli(["fit", "--d", "1"])
    assert code == 0
    assert "P = [1, 3]" in out
    assert "Q = [-1, 9]" in out
    assert "C = 2" in out and "N = 15" in out
    code, out = run_cli(["fit", "--d", "2"])
    assert code == 0
    assert "15n^2+12n-1" in out                # the oracle-resolved variant
    code, out = run_cli(["fit", "--d", "2", "--sum", "U", "--format", "json"])
    rec = json.loads(out)
    assert rec["P"] == ["-1", "12", "15"] and rec["kind"] == "u"


def test_numeric_command():
    code, out = run_cli(["numeric", "--seed", "3", "--trials", "5"])
    assert code == 0
    assert "20/20 passed" in out
    assert "derivative" in out
    code, out = run_cli(["numeric", "--seed", "3", "--trials", "5",
                         "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 20
    assert all(r["equal"] == "True" for r in rows)


def test_bench_csv():
    code, out = run_cli(["bench", "--identity", "I-cb0", "--n-max", "64",
                         "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == list(cli.BENCH_COLUMNS)
    assert rows[-1]["n"] == "64"
    assert float(rows[-1]["speedup_closed"]) > 0


def test_bench_sum_table():
    code, out = run_cli(["bench", "--sum", "V", "--d", "2", "--n-max", "32"])
    assert code == 0
    assert "V_2" in out


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_output_determinism_with_no_timing(fmt):
    argv = ["verify", "--identity", "I-thm21", "--n-max", "6", "--m",
            "0,1/2,3", "--format", fmt, "--no-timing"]
    _, out1 = run_cli(argv)
    _, out2 = run_cli(argv)
    assert out1 == out2


def test_numeric_determinism():
    argv = ["numeric", "--seed", "11", "--trials", "8", "--format", "json"]
    _, out1 = run_cli(argv)
    _, out2 = run_cli(argv)
    assert out1 == out2


def _corrupted_registry():
    base = catalog.lookup("I-cb0")
    broken = IdentityDescriptor(
        id="I-cb0", title=base.title, source=base.source,
        requires_m=False, n_min=0, ring="rational",
        m_domain=None, m_domain_desc="",
        lhs_fn=base.lhs_fn,
        rhs_fn=lambda m, n: base.rhs_fn(m, n) + SymValue(1),
        terms_fn=base.terms_fn)
    return [broken]


def test_corrupted_registry_exit_1_and_mismatch_detail():
    code, out = run_cli(["verify", "--identity", "I-cb0", "--n-max", "3"],
                        regs=_corrupted_registry())
    assert code == 1
    assert "MISMATCH" in out
    assert "lhs = 17/3" in out and "rhs = 20/3" in out


def test_parallel_sweep_matches_serial(monkeypatch):
    argv = ["verify", "--identity", "I-cb-gen,I-har", "--n-max", "8",
            "--format", "json", "--no-timing"]
    monkeypatch.delenv("HBE_THREADS", raising=False)
    _, serial = run_cli(argv)
    monkeypatch.setenv("HBE_THREADS", "2")
    code, parallel = run_cli(argv)
    assert code == 0
    assert serial == parallel


def test_main_entry_point(capsys):
    assert cli.main(["eval", "--sum", "U", "--d", "0", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "2"
