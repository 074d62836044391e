"""Matplotlib figures for the ``plot`` subcommand."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import reference  # noqa: E402
from .blaschke import BlaschkeProduct, PseudoDisk, pseudo_to_euclid  # noqa: E402
from .crouzeix import certificate_scan  # noqa: E402
from .disks import check_criterion, criterion_threshold  # noqa: E402
from .errors import InputError  # noqa: E402
from .levelset import level_set_boundary  # noqa: E402
from .modelspace import MatrixFamilySpec, build_model_matrix  # noqa: E402
from .numrange import boundary, kms_curve  # noqa: E402

FIGURES = ("fig-lscc", "fig-phd", "fig-n27", "fig-newcurve", "fig-xtplot")


def _disk_axes(ax):
    s = np.linspace(0, 2 * np.pi, 400)
    ax.plot(np.cos(s), np.sin(s), color="0.6", lw=0.8)
    ax.set_aspect("equal")
    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.05)


def _closed(z):
    z = np.asarray(z)
    return np.append(z, z[:1])


def fig_lscc(samples: int = 720):
    fig, axes = plt.subplots(1, 3, figsize=(12, 4))
    for ax, (key, (tz, bz)) in zip(axes, sorted(reference.LSC_CASES.items())):
        _disk_axes(ax)
        w = _closed(boundary(build_model_matrix(tz), samples).points)
        ax.plot(w.real, w.imag, color="C0", label="W(M)")
        for k, line in enumerate(level_set_boundary(BlaschkeProduct(bz), 0.5)):
            ax.plot(line.real, line.imag, color="C3", label="|B| = 1/2" if k == 0 else None)
        ax.set_title(f"({key})")
        ax.legend(loc="lower left", fontsize=8)
    return fig


def fig_phd(t: float = 0.5, n: int = 5, samples: int = 720):
    fig, ax = plt.subplots(figsize=(5, 5))
    _disk_axes(ax)
    spec = MatrixFamilySpec("kms", n, t)
    w = _closed(boundary(build_model_matrix([t] * n), samples).points)
    ax.plot(w.real, w.imag, color="C0", label="W(M)")
    C = kms_curve(n, t).affine(t, 1 - t * t)
    s = np.linspace(0, 2 * np.pi, 600)
    f = C(s)
    ax.plot(f.real, f.imag, color="C1", ls="--", label="shifted curve")
    rep = check_criterion(spec)
    thr = criterion_threshold(n)
    d = pseudo_to_euclid(PseudoDisk(rep.pseudo.center, thr))
    ax.plot(*_xy(d.boundary(400)), color="C2", label="pseudo disk")
    ax.legend(loc="lower left", fontsize=8)
    ax.set_title(f"n={n}, t={t:g}")
    return fig


def _xy(z):
    z = _closed(z)
    return z.real, z.imag


def _r_curve(m, ts, path):
    out = []
    for t in ts:
        out.append(check_criterion(MatrixFamilySpec("phi", t=float(t), m=m), path).pseudo.radius)
    return np.array(out)


def fig_n27(step: float = 0.01):
    fig, ax = plt.subplots(figsize=(6, 4))
    ts = np.arange(0.0, 0.99 + 1e-12, step)
    for m in range(2, 8):
        ax.plot(ts, _r_curve(m, ts, None), label=f"m={m}")
    ax.axhline(1 / math.sqrt(2), color="k", lw=0.8, ls=":")
    ax.set_xlabel("t")
    ax.set_ylabel("r(t)")
    ax.legend(fontsize=8)
    return fig


def fig_newcurve(step: float = 0.01):
    fig, ax = plt.subplots(figsize=(6, 4))
    ts = np.arange(0.0, 0.99 + 1e-12, step)
    for m in range(2, 8):
        ax.plot(ts, _r_curve(m, ts, reference.phi_path(m)), label=f"m={m}")
    ax.axhline(1 / math.sqrt(2), color="k", lw=0.8, ls=":")
    ax.set_xlabel("t")
    ax.set_ylabel("r(t)")
    ax.legend(fontsize=8)
    return fig


def fig_xtplot(step: float = 0.005):
    fig, ax = plt.subplots(figsize=(6, 4))
    ts = np.arange(0.0, 0.995 + 1e-12, step)
    for n in (6, 7, 8):
        certs = certificate_scan(MatrixFamilySpec("kms", n, 0.0), ts)
        ax.plot(ts, [c.product for c in certs], label=f"n={n}")
    ax.axhline(2.0, color="k", lw=0.8, ls=":")
    ax.set_xlabel("t")
    ax.set_ylabel("||X|| ||X^-1||")
    ax.legend(fontsize=8)
    return fig


def render(name: str, path: str) -> None:
    builders = {"fig-lscc": fig_lscc, "fig-phd": fig_phd, "fig-n27": fig_n27,
                "fig-newcurve": fig_newcurve, "fig-xtplot": fig_xtplot}
    if name not in builders:
        raise InputError(f"unknown figure {name!r}; expected one of {FIGURES}")
    fig = builders[name]()
    try:
        fig.savefig(path, dpi=120, bbox_inches="tight")
    finally:
        plt.close(fig)
