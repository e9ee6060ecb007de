import json

from dscode.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_no_arguments(capsys):
    code, _, err = run(capsys)
    assert code == 2 and "usage" in err


def test_bad_usage(capsys):
    assert main(["lp", "--n", "7"]) == 2
    assert main(["bogus"]) == 2


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "--spec", "golay_r9.code")
    assert code == 0 and out.strip() == "d=7"
    code, out, _ = run(capsys, "distance", "--spec", "steane_rep2.code")
    assert out.split() == ["d=3", "degenerate=no"]


def test_domain_error(capsys):
    code, _, err = run(capsys, "distance", "--spec", "missing.code")
    assert code == 1 and "missing.code" in err


def test_lp_and_manifest(capsys, tmp_path):
    code, out, _ = run(capsys, "lp", "--n", "7", "--k", "1", "--d", "3", "--r", "6")
    assert code == 0 and out.strip() == "feasible"
    target = tmp_path / "cert.csv"
    code, out, _ = run(capsys, "lp", "--n", "5", "--k", "2", "--d", "3", "--r", "0", "--out", str(target))
    assert out.strip() == "infeasible"
    assert target.read_text().startswith("constraint,multiplier")
    manifest = json.loads((tmp_path / "cert.csv.manifest.json").read_text())
    assert manifest["subcommand"] == "lp" and manifest["parameters"]["n"] == 5
    code, out, _ = run(capsys, "lp", "--n", "7", "--k", "7", "--r", "0", "--scan-d")
    assert out.strip() == "d_max=1"


def test_enumerate_and_construct(capsys):
    code, out, _ = run(capsys, "enumerate", "--spec", "steane.code")
    assert code == 0 and out.startswith("n,m,r,side\n7,6,0,code\n")
    code, out, _ = run(capsys, "construct", "--spec", "steane_rep2.code")
    assert code == 0 and "dual_generators" in out and "hds" in out


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--kind", "singleton", "--n", "7", "--d", "3")
    assert out.splitlines()[1].startswith("7,3,3,")
    code, _, _ = run(capsys, "bound", "--kind", "hybrid", "--n", "7")
    assert code == 2


def test_ensemble_records_seed(capsys, tmp_path):
    target = tmp_path / "e.csv"
    code, _, _ = run(capsys, "ensemble", "--n", "3", "--k", "1", "--r", "1", "--samples", "3", "--out", str(target))
    assert code == 0
    manifest = json.loads((tmp_path / "e.csv.manifest.json").read_text())
    assert isinstance(manifest["seed"], int)
    code, _, _ = run(capsys, "ensemble", "--n", "3", "--k", "1", "--r", "1", "--samples", "3", "--seed", "4",
                     "--out", str(target))
    first = target.read_text()
    run(capsys, "ensemble", "--n", "3", "--k", "1", "--r", "1", "--samples", "3", "--seed", "4", "--out", str(target))
    assert target.read_text() == first


def test_simulate(capsys):
    code, out, _ = run(capsys, "simulate", "--sm", "rep5", "--sm", "builtin-15-3", "--weights", "4",
                       "--pm-grid", "0.01:0.02:0.01")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3 and lines[0].startswith("p_m,")
    code, out, _ = run(capsys, "simulate", "--sm", "rep5", "--weights", "4", "--pm-grid", "bad")
    assert code == 2


def test_asymptotic_and_verify(capsys):
    code, out, _ = run(capsys, "asymptotic", "--curve", "singleton", "--grid", "3")
    assert code == 0 and len(out.strip().splitlines()) == 4
    code, out, _ = run(capsys, "verify", "oracles")
    assert code == 0 and "FAIL" not in out
