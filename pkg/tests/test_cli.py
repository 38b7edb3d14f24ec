"""Command-line interface: happy paths and exit codes."""

import json

from crsphere import cli, files


def run(args):
    return cli.main([str(a) for a in args])


def test_construct_and_invariants(tmp_path):
    curve_path = tmp_path / "conf.json"
    report_path = tmp_path / "inv.json"
    assert run(["construct", "--kind", "second", "--r", "-5/7", "--rho", "0.7",
                "--out", curve_path]) == 0
    assert run(["invariants", "--in", curve_path, "--report", report_path]) == 0
    report = json.loads(report_path.read_text())
    assert report["maslov_numeric"] == 7
    assert report["spin"] == "1/3"
    assert abs(report["total_strain"] - 6.013234) < 1e-4
    assert (tmp_path / "inv_curve.png").exists()
    assert (tmp_path / "inv_profile.png").exists()


def test_construct_domain_violation_exits_2(tmp_path):
    assert run(["construct", "--kind", "second", "--r", "-1/3", "--rho", "0.5",
                "--out", tmp_path / "x.json"]) == 2


def test_link_both_pushoffs(tmp_path):
    curve_path = tmp_path / "conf.json"
    run(["construct", "--kind", "second", "--r", "-5/7", "--rho", "0.7", "--out", curve_path])
    contact = tmp_path / "beta.json"
    crnormal = tmp_path / "sl.json"
    assert run(["link", "--in", curve_path, "--pushoff", "contact", "--report", contact]) == 0
    assert run(["link", "--in", curve_path, "--pushoff", "crnormal", "--report", crnormal]) == 0
    assert json.loads(contact.read_text())["bennequin"] == 5
    assert json.loads(crnormal.read_text())["self_linking"] == 12


def test_critical_subcommand(tmp_path):
    report_path = tmp_path / "crit.json"
    assert run(["critical", "--p", "3", "--q", "4", "--report", report_path]) == 0
    report = json.loads(report_path.read_text())
    assert report["r"] == "-5/7"
    assert abs(report["residual"]) < 1e-9


def test_scan_writes_csv_and_figure(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run(["scan", "--kind", "second", "--r-list", "-5/7,-4/7",
                "--rho-grid", "0.4:0.8:3", "--out", out]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(files.SWEEP_HEADER)
    assert len(lines) == 7
    assert (tmp_path / "sweep.png").exists()


def test_reconstruct_subcommand(tmp_path):
    out = tmp_path / "rec.json"
    assert run(["reconstruct", "--kappa", "0.5", "--tau", "0.75",
                "--length", "3.0", "--step", "0.01", "--out", out]) == 0
    curve = files.read_curve(out)
    assert curve.model == "lift"
    assert curve.n == 301


def test_chain_and_inflection_exit_code(tmp_path):
    chain_path = tmp_path / "chain.json"
    assert run(["chain", "--normal", "0.9,0.7071+0.7071i,-1i", "--out", chain_path]) == 0
    # chains consist entirely of CR inflection points
    assert run(["invariants", "--in", chain_path, "--report", tmp_path / "r.json"]) == 5


def test_chain_through_point(tmp_path):
    out = tmp_path / "chain2.json"
    assert run(["chain", "--through", "0.2,0.3,0.1", "--dir", "1,0,0", "--out", out]) == 0
    curve = files.read_curve(out)
    assert curve.model == "heisenberg"
    assert curve.periodic
