"""Render a plane curve to an image file.

Uses the Agg backend so it works headless; the curve is drawn as the zero
contour of the defining polynomial in the affine chart x = 1.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .poly import MultiPoly


def plot_plane_curve(poly: MultiPoly, path: str, points=None, window: float = 6.0,
                     resolution: int = 600) -> str:
    if poly.n_vars != 3:
        raise ValueError("plotting needs a ternary form")
    grid = np.linspace(-window, window, resolution)
    u, v = np.meshgrid(grid, grid)
    z = np.zeros_like(u)
    for exps, coef in poly.sorted_terms():
        z = z + float(coef) * (u ** exps[1]) * (v ** exps[2])

    fig, ax = plt.subplots(figsize=(6, 6))
    ax.contour(u, v, z, levels=[0.0], colors="tab:blue")
    if points:
        us, vs = [], []
        for p in points:
            if p.coords[0] != 0:
                us.append(float(p.coords[1] / p.coords[0]))
                vs.append(float(p.coords[2] / p.coords[0]))
        if us:
            ax.plot(us, vs, "o", color="tab:red", markersize=4)
    ax.set_xlabel("y/x")
    ax.set_ylabel("z/x")
    ax.set_title(poly.render())
    ax.grid(True, alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
