"""JSON/CSV serialization for states, samples and grids.

Complex numbers serialize as two-element arrays [re, im]; every float is
written with 17 significant digits so that save/load round trips are exact
and fixed inputs give byte-identical files.  The JSON emitters are manual
for exactly that reason: the layout (key order, separators, float format)
is part of the contract.
"""

import json

import numpy as np

from .coherent import SpinState
from .euler import EulerSamples
from .multispin import BandLimitedState, ParallelsGrid
from .singlespin import FrameSpec, SampleVector


class SchemaError(ValueError):
    """Input file does not match the expected schema."""


def format_float(x):
    """17-significant-digit decimal form, enough to round-trip a double."""
    return "%.17g" % float(x)


def _pair(z):
    z = complex(z)
    return "[%s, %s]" % (format_float(z.real), format_float(z.imag))


def _pair_list(values):
    return "[" + ", ".join(_pair(z) for z in np.asarray(values)) + "]"


def _real_list(values):
    return "[" + ", ".join(format_float(x) for x in np.asarray(values)) + "]"


def dump_spin_state(state):
    return '{"two_s": %d, "coeffs": %s}\n' % (state.two_s, _pair_list(state.coeffs))


def dump_sample_vector(samples):
    return '{"two_s": %d, "n": %d, "values": %s}\n' % (
        samples.spec.two_s,
        samples.spec.n_samples,
        _pair_list(samples.values),
    )


def dump_band_limited(state):
    return '{"J": %d, "coeffs": %s}\n' % (state.J, _pair_list(state.coeffs))


def dump_grid(grid):
    return '{"J": %d, "radii": %s}\n' % (grid.J, _real_list(grid.radii))


def dump_multi_samples(grid, values):
    """Band-limited samples bundled with their grid (one value per point)."""
    values = np.asarray(values, dtype=complex)
    if values.shape != (grid.n_points,):
        raise ValueError("need one value per grid point")
    return '{"J": %d, "radii": %s, "values": %s}\n' % (
        grid.J,
        _real_list(grid.radii),
        _pair_list(values),
    )


def dump_euler_samples(samples):
    return '{"j": %d, "theta0": %s, "values": %s}\n' % (
        samples.j,
        format_float(samples.theta0),
        _pair_list(samples.values),
    )


def _parse(text, source="input"):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("%s: not valid JSON (%s)" % (source, exc)) from exc
    if not isinstance(obj, dict):
        raise SchemaError("%s: expected a JSON object" % source)
    return obj


def _get(obj, key, source):
    if key not in obj:
        raise SchemaError("%s: missing key %r" % (source, key))
    return obj[key]


def _get_int(obj, key, source):
    value = _get(obj, key, source)
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError("%s: %r must be an integer" % (source, key))
    return value


def _complex_array(raw, key, source):
    if not isinstance(raw, list):
        raise SchemaError("%s: %r must be a list of [re, im] pairs" % (source, key))
    out = np.empty(len(raw), dtype=complex)
    for i, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) for x in pair)
        ):
            raise SchemaError(
                "%s: %s[%d] must be a [re, im] pair of numbers" % (source, key, i)
            )
        out[i] = complex(pair[0], pair[1])
    return out


def _wrap(builder, *args, source="input"):
    try:
        return builder(*args)
    except ValueError as exc:
        raise SchemaError("%s: %s" % (source, exc)) from exc


def load_spin_state(text, source="input"):
    obj = _parse(text, source)
    two_s = _get_int(obj, "two_s", source)
    coeffs = _complex_array(_get(obj, "coeffs", source), "coeffs", source)
    return _wrap(SpinState, two_s, coeffs, source=source)


def load_sample_vector(text, source="input"):
    obj = _parse(text, source)
    two_s = _get_int(obj, "two_s", source)
    n = _get_int(obj, "n", source)
    values = _complex_array(_get(obj, "values", source), "values", source)
    if len(values) != n:
        raise SchemaError("%s: declared n=%d but %d values" % (source, n, len(values)))
    spec = _wrap(FrameSpec, two_s, n, source=source)
    return _wrap(SampleVector, spec, values, source=source)


def load_band_limited(text, source="input"):
    obj = _parse(text, source)
    J = _get_int(obj, "J", source)
    coeffs = _complex_array(_get(obj, "coeffs", source), "coeffs", source)
    return _wrap(BandLimitedState, J, coeffs, source=source)


def load_grid(text, source="input"):
    obj = _parse(text, source)
    J = _get_int(obj, "J", source)
    radii = _get(obj, "radii", source)
    if not isinstance(radii, list) or not all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in radii
    ):
        raise SchemaError("%s: radii must be a list of numbers" % source)
    return _wrap(ParallelsGrid, J, np.asarray(radii, dtype=float), source=source)


def load_multi_samples(text, source="input"):
    """Returns (grid, values)."""
    obj = _parse(text, source)
    grid = load_grid(text, source)
    values = _complex_array(_get(obj, "values", source), "values", source)
    if len(values) != grid.n_points:
        raise SchemaError(
            "%s: expected %d values, got %d" % (source, grid.n_points, len(values))
        )
    return grid, values


def load_euler_samples(text, source="input"):
    obj = _parse(text, source)
    j = _get_int(obj, "j", source)
    theta0 = _get(obj, "theta0", source)
    if not isinstance(theta0, (int, float)) or isinstance(theta0, bool):
        raise SchemaError("%s: theta0 must be a number" % source)
    values = _complex_array(_get(obj, "values", source), "values", source)
    return _wrap(EulerSamples, j, float(theta0), values, source=source)


def csv_text(header, rows):
    """Render a CSV table; floats at 17 significant digits, fixed row order."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_float(x) for x in row))
    return "\n".join(lines) + "\n"
