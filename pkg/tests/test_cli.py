import json
import math

import numpy as np
import pytest

from spheresample.cli import main
from spheresample.serialize import load_sample_vector, load_spin_state


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_is_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["gen", "--two-s", "4", "--seed", "7", "-o", str(a)]) == 0
    assert main(["gen", "--two-s", "4", "--seed", "7", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_unit_norm_and_dimensions(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert main(["gen", "--two-s", "4", "--seed", "3", "-o", str(out)]) == 0
    state = load_spin_state(out.read_text())
    assert state.norm() == pytest.approx(1.0, abs=1e-12)
    out2 = tmp_path / "m.json"
    assert main(["gen", "--J", "3", "--seed", "1", "-o", str(out2)]) == 0
    obj = json.loads(out2.read_text())
    assert len(obj["coeffs"]) == 16


def test_gen_without_spin_is_usage_error(capsys):
    code, _, err = run(capsys, "gen")
    assert code == 2
    assert "two-s" in err or "--J" in err


def test_pipeline_gen_sample_coeffs(tmp_path, capsys):
    state_file = tmp_path / "state.json"
    samples_file = tmp_path / "samples.json"
    coeffs_file = tmp_path / "coeffs.json"
    assert main(["gen", "--two-s", "5", "--seed", "11", "-o", str(state_file)]) == 0
    assert main(["sample", str(state_file), "-n", "9", "-o", str(samples_file)]) == 0
    assert main(["coeffs", str(samples_file), "-o", str(coeffs_file)]) == 0
    original = load_spin_state(state_file.read_text())
    recovered = load_spin_state(coeffs_file.read_text())
    np.testing.assert_allclose(recovered.coeffs, original.coeffs, atol=1e-11)


def test_stdout_when_no_output_file(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "--two-s", "2", "--seed", "0")
    assert code == 0
    state = load_spin_state(out)
    assert state.two_s == 2


def test_missing_input_file_is_exit_2(capsys):
    code, _, err = run(capsys, "coeffs", "/nonexistent/file.json")
    assert code == 2
    assert err


def test_malformed_input_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"two_s": 2}')
    code, _, err = run(capsys, "coeffs", str(bad))
    assert code == 2


def test_reconstruct_csv_columns(tmp_path, capsys):
    state_file = tmp_path / "state.json"
    samples_file = tmp_path / "samples.json"
    main(["gen", "--two-s", "3", "--seed", "5", "-o", str(state_file)])
    main(["sample", str(state_file), "-n", "6", "-o", str(samples_file)])
    code, out, _ = run(
        capsys,
        "reconstruct", str(samples_file), "--grid", "6", "--radius", "1.2",
        "--reference", str(state_file),
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "z_re,z_im,psi_re,psi_im,abs_err"
    rows = [list(map(float, l.split(","))) for l in lines[1:]]
    assert rows
    for row in rows:
        assert row[0] ** 2 + row[1] ** 2 <= 1.2**2 + 1e-12
        assert row[4] < 1e-10


def test_reconstruct_undersampled_reports_regime(tmp_path, capsys):
    state_file = tmp_path / "state.json"
    samples_file = tmp_path / "samples.json"
    main(["gen", "--two-s", "6", "--seed", "2", "-o", str(state_file)])
    main(["sample", str(state_file), "-n", "4", "-o", str(samples_file)])
    code, out, err = run(capsys, "reconstruct", str(samples_file), "--grid", "4")
    assert code == 0
    assert "regime=undersampled" in err
    residual = float(err.split("alias_residual=")[1].split()[0])
    assert residual < 1e-10


def test_convert_round_trip(tmp_path, capsys):
    state_file = tmp_path / "state.json"
    samples_file = tmp_path / "samples.json"
    euler_file = tmp_path / "euler.json"
    back_file = tmp_path / "back.json"
    main(["gen", "--two-s", "4", "--seed", "9", "-o", str(state_file)])
    main(["sample", str(state_file), "-n", "5", "-o", str(samples_file)])
    assert main(
        ["convert", str(samples_file), "--theta0", "0.9", "-o", str(euler_file)]
    ) == 0
    assert main(["convert", str(euler_file), "-o", str(back_file)]) == 0
    a = load_sample_vector(samples_file.read_text())
    b = load_sample_vector(back_file.read_text())
    np.testing.assert_allclose(b.values, a.values, atol=1e-9)


def test_convert_equator_is_exit_3_naming_modes(tmp_path, capsys):
    state_file = tmp_path / "state.json"
    samples_file = tmp_path / "samples.json"
    main(["gen", "--two-s", "4", "--seed", "9", "-o", str(state_file)])
    main(["sample", str(state_file), "-n", "5", "-o", str(samples_file)])
    code, _, err = run(
        capsys, "convert", str(samples_file), "--theta0", "1.5707963"
    )
    assert code == 3
    assert "[1, 3]" in err


def test_convert_noncritical_is_exit_2(tmp_path, capsys):
    state_file = tmp_path / "state.json"
    samples_file = tmp_path / "samples.json"
    main(["gen", "--two-s", "4", "--seed", "9", "-o", str(state_file)])
    main(["sample", str(state_file), "-n", "7", "-o", str(samples_file)])
    code, _, _ = run(capsys, "convert", str(samples_file), "--theta0", "0.9")
    assert code == 2


def test_filter_zero_mode(tmp_path, capsys):
    code, out, _ = run(capsys, "filter", "--two-s", "4", "-n", "5")
    assert code == 0
    values = load_sample_vector(out).values
    closed = 5 / 5**1.5 * sum(2.0**m / (m + 1) for m in range(5))
    assert values[0] == pytest.approx(closed, rel=1e-12)


def test_bench_single_spin_formula_column(capsys):
    code, out, _ = run(capsys, "bench", "--two-s", "2", "-n", "3:8")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("n,smallest_eig,largest_eig,condition")
    for line in lines[1:]:
        row = list(map(float, line.split(",")))
        n = int(row[0])
        # oversampled largest eigenvalue: (N/4) C(2, 1) = N/2
        if n > 3:
            assert row[2] == pytest.approx(n / 2.0, rel=1e-12)


def test_bench_band_limit_sweep_monotone(capsys):
    code, out, _ = run(capsys, "bench", "--J", "1:6")
    assert code == 0
    rows = [l.split(",") for l in out.strip().split("\n")[1:]]
    smallest = [float(r[1]) for r in rows]
    assert all(b <= a + 1e-12 for a, b in zip(smallest, smallest[1:]))


def test_bench_empty_sweep_is_header_only(capsys):
    code, out, _ = run(capsys, "bench", "--J", "5:4")
    assert code == 0
    assert out == "J,smallest_eig,largest_eig,condition,assembly_s,solve_s\n"


def test_reconstruct_plot_writes_figure(tmp_path, capsys):
    state_file = tmp_path / "state.json"
    samples_file = tmp_path / "samples.json"
    out_csv = tmp_path / "rec.csv"
    main(["gen", "--two-s", "2", "--seed", "1", "-o", str(state_file)])
    main(["sample", str(state_file), "-n", "4", "-o", str(samples_file)])
    code = main(
        ["reconstruct", str(samples_file), "--grid", "5", "-o", str(out_csv), "--plot"]
    )
    assert code == 0
    assert (tmp_path / "rec.png").exists()
