"""Command-line surface: gen / sample / coeffs / reconstruct / filter /
convert / bench.

Conventions: JSON for state and sample exchange, CSV for tables; stdout
carries data only when no -o is given, diagnostics go to stderr.  Exit
codes: 0 success, 2 input/schema error, 3 numerical failure (singular
kernel, dead conversion modes, ill-conditioned grid).  All commands are
deterministic for fixed inputs and seed.
"""

import argparse
import math
import sys
import time

import numpy as np

from .circulant import SingularKernelError
from .coherent import SpinState, majorana_eval
from .euler import DeadModesError, euler_to_holo, holo_to_euler, omega_eigens
from .multispin import (
    BandLimitedState,
    ReconstructionError,
    kernel_spectrum,
    make_grid,
    multi_dual_data,
    multi_overlap,
    multi_overlap_kernel,
    multi_sample,
)
from .serialize import (
    SchemaError,
    csv_text,
    dump_band_limited,
    dump_euler_samples,
    dump_multi_samples,
    dump_sample_vector,
    dump_spin_state,
    load_band_limited,
    load_euler_samples,
    load_multi_samples,
    load_sample_vector,
    load_spin_state,
)
from .singlespin import (
    UNDERSAMPLED,
    FrameSpec,
    RegimeError,
    SampleVector,
    coefficients_from_samples,
    dual_data,
    dual_filter,
    overlap_eigenvalues,
    overlap_kernel,
    reconstruct,
    sample_state,
)

DEFAULT_TOL = 1e-10


def _read(path):
    with open(path, "r") as handle:
        return handle.read()


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as handle:
            handle.write(text)


def _diag(message):
    sys.stderr.write(message + "\n")


def _plot_path(out, fallback):
    if out is None:
        return fallback
    stem = out.rsplit(".", 1)[0] if "." in out.rsplit("/", 1)[-1] else out
    return stem + ".png"


def _detect(text, source):
    """Classify an input file by its top-level keys."""
    import json

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("%s: not valid JSON (%s)" % (source, exc)) from exc
    if not isinstance(obj, dict):
        raise SchemaError("%s: expected a JSON object" % source)
    keys = set(obj)
    if "theta0" in keys:
        return "euler"
    if "radii" in keys and "values" in keys:
        return "multi_samples"
    if "J" in keys:
        return "band_limited"
    if "n" in keys:
        return "sample_vector"
    if "two_s" in keys:
        return "spin_state"
    raise SchemaError("%s: unrecognized schema" % source)


def cmd_gen(args):
    rng = np.random.default_rng(args.seed)
    if args.J is not None:
        dim = (args.J + 1) ** 2
    elif args.two_s is not None:
        dim = args.two_s + 1
    else:
        raise SchemaError("gen: need --two-s or --J")
    coeffs = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    coeffs /= np.linalg.norm(coeffs)
    if args.J is not None:
        text = dump_band_limited(BandLimitedState(args.J, coeffs))
    else:
        text = dump_spin_state(SpinState(args.two_s, coeffs))
    _emit(text, args.out)
    return 0


def cmd_sample(args):
    text = _read(args.input)
    kind = _detect(text, args.input)
    if kind == "band_limited":
        state = load_band_limited(text, args.input)
        grid = make_grid(state.J)
        values = multi_sample(state, grid)
        _emit(dump_multi_samples(grid, values), args.out)
        return 0
    if kind != "spin_state":
        raise SchemaError("%s: sample expects a state file" % args.input)
    state = load_spin_state(text, args.input)
    if args.samples is None:
        raise SchemaError("sample: need -n/--samples for single-spin input")
    n = _parse_int(args.samples, "-n")
    samples = sample_state(state, n)
    _emit(dump_sample_vector(samples), args.out)
    return 0


def cmd_coeffs(args):
    samples = load_sample_vector(_read(args.input), args.input)
    state = coefficients_from_samples(samples, args.tol)
    if samples.spec.regime == UNDERSAMPLED:
        _diag("regime=undersampled: coefficients are the minimal-norm alias")
    _emit(dump_spin_state(state), args.out)
    return 0


def cmd_reconstruct(args):
    text = _read(args.input)
    kind = _detect(text, args.input)
    reference = None
    if args.reference is not None:
        ref_text = _read(args.reference)
        ref_kind = _detect(ref_text, args.reference)
        if ref_kind == "spin_state":
            reference = load_spin_state(ref_text, args.reference)
        elif ref_kind == "band_limited":
            reference = load_band_limited(ref_text, args.reference)
        else:
            raise SchemaError("%s: reference must be a state file" % args.reference)

    n = args.grid
    radius = args.radius
    axis = np.linspace(-radius, radius, n)
    # Row-major sweep; only points inside the closed disk are evaluated.
    points = []
    for im in axis:
        for re in axis:
            if re * re + im * im <= radius * radius:
                points.append(complex(re, im))
    points = np.array(points, dtype=complex)

    if kind == "sample_vector":
        samples = load_sample_vector(text, args.input)
        if samples.spec.regime == UNDERSAMPLED:
            recon_at_nodes = reconstruct(samples, samples.spec.sample_points(), args.tol)
            residual = float(np.linalg.norm(samples.values - recon_at_nodes))
            _diag("regime=undersampled alias_residual=%.17g" % residual)
        values = reconstruct(samples, points, args.tol)
        if reference is not None:
            if reference.two_s != samples.spec.two_s:
                raise SchemaError("reference spin does not match the samples")
            errors = np.abs(values - majorana_eval(reference, points))
    elif kind == "multi_samples":
        grid, data = load_multi_samples(text, args.input)
        gamma, condition = multi_dual_data(data, grid, args.tol)
        _diag("condition=%.17g" % condition)
        grid_points = grid.points()
        values = np.zeros(points.shape, dtype=complex)
        for g, p in zip(gamma, grid_points):
            values += g * np.array(
                [multi_overlap(grid.J, z, p) for z in points]
            )
        if reference is not None:
            if not isinstance(reference, BandLimitedState) or reference.J != grid.J:
                raise SchemaError("reference band limit does not match the samples")
            from .multispin import multi_eval

            errors = np.abs(
                values - np.array([multi_eval(reference, z) for z in points])
            )
    else:
        raise SchemaError("%s: reconstruct expects a samples file" % args.input)

    header = ["z_re", "z_im", "psi_re", "psi_im"]
    rows = [[z.real, z.imag, v.real, v.imag] for z, v in zip(points, values)]
    if reference is not None:
        header.append("abs_err")
        for row, err in zip(rows, errors):
            row.append(err)
    _emit(csv_text(header, rows), args.out)
    if args.plot:
        _render_reconstruction_plot(args, n, axis, radius, points, values,
                                    errors if reference is not None else None)
    return 0


def _render_reconstruction_plot(args, n, axis, radius, points, values, errors):
    from .plotting import render_reconstruction

    full = np.full(n * n, np.nan + 0j)
    err_full = np.full(n * n, np.nan) if errors is not None else None
    idx = 0
    for i, im in enumerate(axis):
        for j, re in enumerate(axis):
            if re * re + im * im <= radius * radius:
                full[i * n + j] = values[idx]
                if err_full is not None:
                    err_full[i * n + j] = errors[idx]
                idx += 1
    path = _plot_path(args.out, "reconstruction.png")
    render_reconstruction(path, n, radius, full, err_full)
    _diag("figure written to %s" % path)


def cmd_filter(args):
    if args.input is not None:
        samples = load_sample_vector(_read(args.input), args.input)
        gamma = dual_data(samples, args.tol)
        _emit(dump_sample_vector(SampleVector(samples.spec, gamma)), args.out)
        return 0
    if args.two_s is None or args.samples is None:
        raise SchemaError("filter: need an input file or --two-s and -n")
    spec = FrameSpec(args.two_s, _parse_int(args.samples, "-n"))
    delta = dual_filter(spec)
    _emit(dump_sample_vector(SampleVector(spec, delta)), args.out)
    return 0


def cmd_convert(args):
    text = _read(args.input)
    kind = _detect(text, args.input)
    if kind == "euler":
        phi_samples = load_euler_samples(text, args.input)
        samples = euler_to_holo(phi_samples)
        _emit(dump_sample_vector(samples), args.out)
        return 0
    if kind != "sample_vector":
        raise SchemaError("%s: convert expects a samples file" % args.input)
    samples = load_sample_vector(text, args.input)
    theta0 = args.theta0
    if samples.spec.two_s % 2 != 0:
        raise SchemaError("convert: integer spin required (two_s even)")
    j = samples.spec.two_s // 2
    if samples.spec.n_samples != 2 * j + 1:
        raise SchemaError("convert: critical sampling n = 2j+1 required")
    omega = np.abs(omega_eigens(j, theta0, samples.spec.n_samples))
    # Looser than the library cutoff: near-equator parallels make the
    # conversion catastrophically ill-conditioned well before the odd
    # modes underflow, so refuse early.
    dead = np.flatnonzero(omega <= 1e-6 * omega.max())
    if dead.size:
        raise DeadModesError(
            "theta0=%g kills conversion modes %s; this parallel does not "
            "determine the signal" % (theta0, dead.tolist()),
            dead,
        )
    _emit(dump_euler_samples(holo_to_euler(samples, theta0)), args.out)
    return 0


def cmd_bench(args):
    rng = np.random.default_rng(args.seed)
    if args.J is not None:
        header = ["J", "smallest_eig", "largest_eig", "condition",
                  "assembly_s", "solve_s"]
        rows = []
        for J in _parse_range(args.J, "--J"):
            grid = make_grid(J)
            t0 = time.perf_counter()
            kernel = multi_overlap_kernel(grid)
            t1 = time.perf_counter()
            rhs = rng.standard_normal(grid.n_points) + 1j * rng.standard_normal(
                grid.n_points
            )
            np.linalg.solve(kernel, rhs)
            t2 = time.perf_counter()
            spectrum = kernel_spectrum(grid)
            rows.append(
                [J, spectrum[0], spectrum[-1], spectrum[-1] / spectrum[0],
                 t1 - t0, t2 - t1]
            )
    elif args.two_s is not None:
        header = ["n", "smallest_eig", "largest_eig", "condition",
                  "assembly_s", "solve_s"]
        rows = []
        for n in _parse_range(args.samples, "-n"):
            spec = FrameSpec(args.two_s, n)
            t0 = time.perf_counter()
            kernel = overlap_kernel(spec)
            t1 = time.perf_counter()
            rhs = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            from .circulant import circ_pinv_apply

            circ_pinv_apply(kernel, rhs, args.tol)
            t2 = time.perf_counter()
            lam = overlap_eigenvalues(spec)
            nonzero = lam[lam > 0]
            rows.append(
                [n, lam.min(), lam.max(), lam.max() / nonzero.min(),
                 t1 - t0, t2 - t1]
            )
    else:
        raise SchemaError("bench: need --two-s with -n range, or --J range")
    _emit(csv_text(header, rows), args.out)
    if args.plot:
        from .plotting import render_bench

        path = _plot_path(args.out, "bench.png")
        render_bench(path, rows, header)
        _diag("figure written to %s" % path)
    return 0


def _parse_int(text, flag):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise SchemaError("%s: expected an integer, got %r" % (flag, text))


def _parse_range(text, flag):
    """Either a single integer or an inclusive a:b sweep (possibly empty)."""
    if text is None:
        raise SchemaError("bench: missing %s sweep" % flag)
    if ":" in str(text):
        lo, hi = str(text).split(":", 1)
        return range(_parse_int(lo, flag), _parse_int(hi, flag) + 1)
    value = _parse_int(text, flag)
    return [value]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spheresample",
        description="Sample and reconstruct spin signals on the sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tol=True):
        p.add_argument("-o", "--out", help="output file (default: stdout)")
        if tol:
            p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                           help="relative singularity tolerance")

    p = sub.add_parser("gen", help="generate a random unit-norm state")
    p.add_argument("--two-s", type=int, dest="two_s")
    p.add_argument("--J", type=int, dest="J")
    p.add_argument("--seed", type=int, default=0)
    common(p, tol=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sample", help="sample a state at roots of unity / a grid")
    p.add_argument("input")
    p.add_argument("-n", "--samples", dest="samples")
    common(p, tol=False)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("coeffs", help="recover coefficients from samples")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("reconstruct", help="evaluate the reconstruction on a grid")
    p.add_argument("input")
    p.add_argument("--grid", type=int, default=32, help="grid is n x n")
    p.add_argument("--radius", type=float, default=1.0, help="disk radius")
    p.add_argument("--reference", help="state file for the abs_err column")
    p.add_argument("--plot", action="store_true", help="also render a figure")
    common(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("filter", help="dual filter, or dual data of samples")
    p.add_argument("input", nargs="?")
    p.add_argument("--two-s", type=int, dest="two_s")
    p.add_argument("-n", "--samples", dest="samples")
    common(p)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("convert", help="convert between pictures")
    p.add_argument("input")
    p.add_argument("--theta0", type=float, default=math.pi / 4)
    common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("bench", help="conditioning/timing table over a sweep")
    p.add_argument("--two-s", type=int, dest="two_s")
    p.add_argument("-n", "--samples", dest="samples", help="N or N_lo:N_hi")
    p.add_argument("--J", dest="J", help="J or J_lo:J_hi")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", action="store_true", help="also render a figure")
    common(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        _diag("error: %s" % exc)
        return 2
    except OSError as exc:
        _diag("error: %s" % exc)
        return 2
    except DeadModesError as exc:
        _diag("numerical failure: %s" % exc)
        return 3
    except (SingularKernelError, ReconstructionError) as exc:
        _diag("numerical failure: %s" % exc)
        return 3
    except RegimeError as exc:
        _diag("error: %s" % exc)
        return 2
    except ValueError as exc:
        _diag("error: %s" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
