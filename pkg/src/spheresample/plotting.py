"""Optional figure rendering for the CLI (--plot).

Figures go to files next to the delimited output; nothing here is needed by
the numerical library and importing matplotlib stays confined to this
module.  The Agg backend is forced so rendering works headless.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def render_reconstruction(path, grid_n, radius, values, errors=None):
    """Heatmap of |reconstruction| over the evaluation grid (NaN outside the
    disk); adds an error panel when a reference was supplied."""
    mags = np.abs(np.asarray(values, dtype=complex)).reshape(grid_n, grid_n)
    panels = 1 if errors is None else 2
    fig, axes = plt.subplots(1, panels, figsize=(5 * panels, 4), squeeze=False)
    extent = [-radius, radius, -radius, radius]
    im = axes[0][0].imshow(mags, origin="lower", extent=extent)
    axes[0][0].set_title("|reconstruction|")
    axes[0][0].set_xlabel("Re z")
    axes[0][0].set_ylabel("Im z")
    fig.colorbar(im, ax=axes[0][0])
    if errors is not None:
        errs = np.asarray(errors, dtype=float).reshape(grid_n, grid_n)
        with np.errstate(divide="ignore"):
            logerr = np.log10(np.where(errs > 0, errs, np.nan))
        im2 = axes[0][1].imshow(logerr, origin="lower", extent=extent)
        axes[0][1].set_title("log10 abs_err")
        axes[0][1].set_xlabel("Re z")
        fig.colorbar(im2, ax=axes[0][1])
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_bench(path, rows, header):
    """Conditioning curves from a bench table: smallest/largest eigenvalue
    and condition number against the sweep column."""
    rows = [list(map(float, r)) for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    if rows:
        x = [r[0] for r in rows]
        cols = {name: i for i, name in enumerate(header)}
        ax1.semilogy(x, [r[cols["smallest_eig"]] for r in rows], "o-", label="smallest")
        ax1.semilogy(x, [r[cols["largest_eig"]] for r in rows], "s-", label="largest")
        ax2.semilogy(x, [r[cols["condition"]] for r in rows], "o-")
    ax1.set_xlabel(header[0])
    ax1.set_ylabel("kernel eigenvalue")
    ax1.legend()
    ax2.set_xlabel(header[0])
    ax2.set_ylabel("condition number")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
