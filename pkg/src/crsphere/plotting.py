"""Figure rendering for reports and sweeps (file output only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import curves  # noqa: E402


def curve_figure(curve, path, title=None):
    """3D rendering of the Heisenberg trajectory of a curve."""
    heis = curves.project_curve(curve)
    x, y, z = heis.values.T
    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(projection="3d")
    if curve.periodic:
        x = np.append(x, x[0])
        y = np.append(y, y[0])
        z = np.append(z, z[0])
    ax.plot(x, y, z, lw=0.8)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("z")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def profile_figure(s, kappa, tau, path, title=None):
    """Bending and twist profiles along the parameter."""
    fig, axes = plt.subplots(2, 1, figsize=(7, 5), sharex=True)
    axes[0].plot(s, kappa, lw=1.0)
    axes[0].set_ylabel("bending")
    axes[1].plot(s, tau, lw=1.0, color="tab:orange")
    axes[1].set_ylabel("twist")
    axes[1].set_xlabel("s")
    if title:
        axes[0].set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def sweep_figure(rows, path, title=None):
    """Total strain against the Clifford parameter, one line per ratio."""
    fig, ax = plt.subplots(figsize=(7, 5))
    series = {}
    for row in rows:
        strain = row.get("strain")
        if not isinstance(strain, float) or not np.isfinite(strain):
            continue
        key = "%s r=%s" % (row["kind"], row["r"])
        series.setdefault(key, ([], []))
        series[key][0].append(row["rho"])
        series[key][1].append(strain)
    for key, (rho, strain) in sorted(series.items()):
        ax.plot(rho, strain, marker="o", ms=3, lw=1.0, label=key)
    ax.set_xlabel("Clifford parameter")
    ax.set_ylabel("total strain")
    if series:
        ax.legend(fontsize=8)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
