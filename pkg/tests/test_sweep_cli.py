import json
import math

import pytest

from thetasweep.cli import main
from thetasweep.sweep import (
    SweepConfig,
    compute_unit,
    cumulative_series,
    nearest_prime,
    run_sweep,
    sample_primes,
    work_units,
)


def read_csv(path):
    lines = path.read_text().splitlines()
    return lines[0], lines[1:]


def test_sample_primes_all():
    assert sample_primes(3, 20, "all", 24) == [3, 5, 7, 11, 13, 17, 19]


def test_nearest_prime():
    assert nearest_prime(10) == 11
    assert nearest_prime(13) == 13
    assert nearest_prime(4) == 3


def test_geometric_sampling_is_sparse():
    ps = sample_primes(1000, 10**5, "geometric", 8)
    assert ps == sorted(set(ps))
    assert len(ps) < 80
    assert ps[0] >= 997


def test_work_units_garaev_doubling():
    cfg = SweepConfig(kind="garaev", x_min=16, x_max=70)
    assert work_units(cfg) == ["16", "32", "64"]


def test_work_units_divisor():
    cfg = SweepConfig(kind="divisor", x_min=4, x_max=8, k_list=(1, 2))
    assert work_units(cfg) == ["1:4", "2:4", "1:8", "2:8"]


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(kind="bogus", x_min=3, x_max=10)
    with pytest.raises(ValueError):
        SweepConfig(kind="moments", x_min=10, x_max=3)
    with pytest.raises(ValueError):
        SweepConfig(kind="moments", x_min=3, x_max=10, jobs=0)


def test_content_key_ignores_jobs_and_out_dir(tmp_path):
    a = SweepConfig(kind="moments", x_min=3, x_max=10, jobs=1, out_dir="x")
    b = SweepConfig(kind="moments", x_min=3, x_max=10, jobs=8, out_dir="y")
    assert a.content_key() == b.content_key()
    c = SweepConfig(kind="moments", x_min=3, x_max=11)
    assert a.content_key() != c.content_key()


def test_moments_sweep_rows(tmp_path):
    cfg = SweepConfig(kind="moments", x_min=3, x_max=101, k_list=(1, 2),
                      out_dir=str(tmp_path))
    path = run_sweep(cfg)
    header, rows = read_csv(path)
    assert header.startswith("p,k,class,")
    n_primes = len(sample_primes(3, 101, "all", 24))
    assert len(rows) == n_primes * 2 * 3  # 2 k values, 3 classes each
    # p=3 has no nonprincipal even character: moment is exactly 0
    first = rows[0].split(",")
    assert first[0] == "3" and first[2] == "even_nontrivial"
    assert float(first[3]) == 0.0
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["config"] == cfg.content_key()
    assert manifest["completed"][-1] == "101"


def test_parallel_output_is_byte_identical(tmp_path):
    a_dir, b_dir = tmp_path / "a", tmp_path / "b"
    ca = SweepConfig(kind="nonvanishing", x_min=3, x_max=200, jobs=1,
                     out_dir=str(a_dir))
    cb = SweepConfig(kind="nonvanishing", x_min=3, x_max=200, jobs=2,
                     out_dir=str(b_dir))
    pa = run_sweep(ca)
    pb = run_sweep(cb)
    assert pa.read_bytes() == pb.read_bytes()


def test_resume_after_truncation(tmp_path):
    cfg = SweepConfig(kind="moments", x_min=3, x_max=60, out_dir=str(tmp_path))
    path = run_sweep(cfg)
    full = path.read_bytes()
    manifest_path = tmp_path / "manifest.json"
    manifest = json.loads(manifest_path.read_text())

    # simulate an interrupt: keep only the first 5 completed units
    keep = manifest["completed"][:5]
    header, rows = read_csv(path)
    kept_rows = [r for r in rows if r.split(",")[0] in set(keep)]
    path.write_text(header + "\n" + "\n".join(kept_rows) + "\n")
    manifest["completed"] = keep
    manifest_path.write_text(json.dumps(manifest))

    calls = []
    import thetasweep.sweep as sweep_mod

    orig = sweep_mod.compute_unit

    def spy(config, unit):
        calls.append(unit)
        return orig(config, unit)

    sweep_mod.compute_unit = spy
    try:
        path2 = run_sweep(cfg)
    finally:
        sweep_mod.compute_unit = orig
    assert path2.read_bytes() == full
    assert set(calls).isdisjoint(keep)  # cached units were not recomputed


def test_stale_manifest_forces_recompute(tmp_path):
    cfg = SweepConfig(kind="divisor", x_min=4, x_max=16, k_list=(2,),
                      out_dir=str(tmp_path))
    run_sweep(cfg)
    cfg2 = SweepConfig(kind="divisor", x_min=4, x_max=32, k_list=(2,),
                       out_dir=str(tmp_path))
    path = run_sweep(cfg2)
    _, rows = read_csv(path)
    assert len(rows) == 4  # T = 4, 8, 16, 32


def test_garaev_sweep_and_cumulative(tmp_path):
    cfg = SweepConfig(kind="garaev", x_min=16, x_max=32, out_dir=str(tmp_path))
    path = run_sweep(cfg)
    import csv

    with open(path, newline="") as fh:
        records = list(csv.DictReader(fh))
    assert [r["X"] for r in records] == ["16", "32"]
    series = cumulative_series(records, ["sum_max8_charsum"])
    assert series[0]["X_end"] == 32
    assert series[1]["sum_max8_charsum"] == pytest.approx(
        float(records[0]["sum_max8_charsum"]) + float(records[1]["sum_max8_charsum"])
    )
    with pytest.raises(ValueError):
        cumulative_series(records[::-1], ["sum_max8_charsum"])


def test_cumulative_single_record():
    out = cumulative_series([{"X": 16, "v": "2.0"}], ["v"])
    assert out == [{"X": 16, "X_end": 32, "v": 2.0}]


def test_mollifier_unit_row():
    cfg = SweepConfig(kind="mollifier", x_min=101, x_max=101, k_list=(2,))
    rows = compute_unit(cfg, "101")
    fields = rows[0].split(",")
    assert fields[0] == "101" and fields[1] == "2"
    sigma2, frak_s, holder, t2k = (float(fields[i]) for i in (7, 8, 9, 10))
    assert holder == pytest.approx(frak_s**2 / sigma2, rel=1e-12)
    assert holder <= t2k * (1 + 1e-9)


# ---------------------------------------------------------------- CLI


def test_cli_ctx(capsys):
    assert main(["ctx", "7"]) == 0
    out = capsys.readouterr().out
    assert "p=7 g=3 order=6" in out


def test_cli_ctx_nonprime():
    assert main(["ctx", "8"]) == 2


def test_cli_theta_single(capsys):
    assert main(["theta", "--p", "5", "--eta", "0", "--char", "0"]) == 0
    out = capsys.readouterr().out
    assert "0.6180341750274745" in out


def test_cli_theta_all(capsys):
    assert main(["theta", "--p", "11", "--eta", "1", "--all"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("# p=11")
    assert len(out) == 11  # header + 10 characters


def test_cli_moments_csv_roundtrip(tmp_path, capsys):
    csv_path = tmp_path / "m.csv"
    assert main(["moments", "--p", "101", "--k", "1,2", "--csv", str(csv_path)]) == 0
    header, rows = read_csv(csv_path)
    assert header.startswith("p,k,class,")
    assert len(rows) == 6


def test_cli_moments_io_error(tmp_path):
    bad = tmp_path / "nodir" / "m.csv"
    assert main(["moments", "--p", "11", "--k", "1", "--csv", str(bad)]) == 3


def test_cli_sweep_requires_kind_and_out(capsys):
    assert main(["sweep", "--kind", "moments"]) == 2
    assert main(["sweep", "--out", "/tmp/x"]) == 2


def test_cli_sweep_with_config_file(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "kind = divisor  # box counts\n"
        "min = 4\n"
        "max = 8\n"
        "k = 2\n"
        f"out = {tmp_path / 'run'}\n"
    )
    assert main(["sweep", "--config", str(cfg)]) == 0
    header, rows = read_csv(tmp_path / "run" / "divisor.csv")
    assert len(rows) == 2
    # CLI flags override the file
    assert main(["sweep", "--config", str(cfg), "--max", "16"]) == 0
    _, rows = read_csv(tmp_path / "run" / "divisor.csv")
    assert len(rows) == 3


def test_cli_sweep_bad_config_line(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("kind divisor\n")
    assert main(["sweep", "--config", str(cfg)]) == 2


def test_cli_divisor_count(capsys):
    assert main(["divisor-count", "--k", "2", "--T", "2", "--gamma", "1,1"]) == 0
    assert "count=6" in capsys.readouterr().out


def test_cli_fit_moments_schema(tmp_path, capsys):
    rows = ["p,k,class,value,normalizer,ratio,eta,N_trunc,tool_version"]
    for p in (101, 499, 1009, 4999):
        rows.append(f"{p},1,odd,{7.0 * p**2.5!r},1.0,0.0,1,10,0.1.0")
    path = tmp_path / "m.csv"
    path.write_text("\n".join(rows) + "\n")
    assert main(["fit", "--input", str(path)]) == 0
    out = capsys.readouterr().out
    assert "k=1 class=odd" in out
    assert "alpha=2.5" in out


def test_cli_fit_fixed_power(tmp_path, capsys):
    rows = ["k,T,gamma,count,tool_version"]
    for T in (100, 200, 400, 800):
        rows.append(f"2,{T},1.0;1.0,{3.0 * T * math.log(T)!r},0.1.0")
    path = tmp_path / "d.csv"
    path.write_text("\n".join(rows) + "\n")
    assert main(["fit", "--input", str(path), "--fix-a", "1.0"]) == 0
    out = capsys.readouterr().out
    assert "k=2:" in out and "alpha=1.0" in out


def test_cli_fit_bad_schema(tmp_path):
    path = tmp_path / "x.csv"
    path.write_text("a,b\n1,2\n")
    assert main(["fit", "--input", str(path)]) == 2
    assert main(["fit", "--input", str(tmp_path / "missing.csv")]) == 3


def test_cli_verify_pass(capsys):
    assert main(["verify", "--suite", "orthogonality"]) == 0
    out = capsys.readouterr().out
    assert "suite orthogonality: PASS" in out


def test_cli_usage_errors():
    assert main([]) == 2
    assert main(["sweep", "--kind", "bogus", "--out", "/tmp/x"]) == 2
