"""Global invariants of closed transversal curves: Maslov winding,
lift monodromy, push-offs and Gaussian linking integrals."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from . import curves
from .errors import (
    ChiVanishes,
    CurvesIntersect,
    NonIntegerWinding,
    NotCubeRoot,
    SelfIntersecting,
    Unstable,
)
from .sampling import HEISENBERG, SampledCurve, fd_derivative

CUBE_ROOTS = np.exp(2j * np.pi * np.arange(3) / 3.0)


def _closed_phase_turns(z):
    """Total phase advance of a projectively closed sample loop, in turns."""
    phase = np.unwrap(np.angle(z))
    wrap = np.angle(z[0] / z[-1])
    return (phase[-1] + wrap - phase[0]) / (2 * np.pi)


def maslov_numeric(lift, tol=1e-9):
    """Maslov index (i/2 pi) closed-integral of d chi / chi, chi = G1 - i G3.

    The integral equals minus the winding number of chi around the
    origin, accumulated through unwrapped phase increments.
    """
    lift = curves.lift_curve(lift)
    chi = lift.values[:, 0] - 1j * lift.values[:, 2]
    if np.min(np.abs(chi)) < tol * max(np.max(np.abs(chi)), 1e-300):
        raise ChiVanishes("chi = Gamma1 - i Gamma3 vanishes along the curve")
    turns = _closed_phase_turns(chi)
    winding = int(np.round(turns))
    if abs(turns - winding) > 0.01:
        raise NonIntegerWinding("winding closure defect %.4f turns" % abs(turns - winding))
    return -winding


def monodromy(lift, curve_period, tol=1e-7):
    """CR spin and phase anomaly from the lift monodromy over one curve period.

    epsilon = Gamma(T)/Gamma(0) componentwise; it must be a scalar cube
    root of unity.
    """
    lift = curves.lift_curve(lift)
    s = np.append(lift.s, lift.period)
    ext = np.vstack([lift.values, lift.values[:1] * complex(lift.meta.get("lift_monodromy", 1.0))])
    gamma_T = np.array([CubicSpline(s, ext[:, k])(curve_period) for k in range(3)])
    ratios = gamma_T / lift.values[0]
    if np.max(np.abs(ratios - ratios[0])) > tol * max(1.0, np.max(np.abs(ratios))):
        raise NotCubeRoot("monodromy is not a scalar: spread %.3g" % np.max(np.abs(ratios - ratios[0])))
    eps = complex(np.mean(ratios))
    if abs(eps**3 - 1.0) > tol:
        raise NotCubeRoot("monodromy defect |eps^3 - 1| = %.3g" % abs(eps**3 - 1.0))
    eps = CUBE_ROOTS[int(np.argmin(np.abs(CUBE_ROOTS - eps)))]
    spin = "1/3" if abs(eps - 1.0) > 0.5 else "1"
    anomaly = float(np.angle(eps) % (2 * np.pi))
    return spin, anomaly


def _min_separation(a_values, b_values):
    diff = a_values[:, None, :] - b_values[None, :, :]
    return float(np.sqrt(np.min(np.sum(diff * diff, axis=2))))


def contact_pushoff(curve, epsilon):
    """Push the curve by epsilon along the unit field (1, 0, y)/sqrt(1+y^2)."""
    curve = curves.project_curve(curve)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    y = curve.values[:, 1]
    norm = np.sqrt(1.0 + y * y)
    shifted = curve.values + epsilon * np.stack([1.0 / norm, np.zeros_like(y), y / norm], axis=1)
    if _min_separation(shifted, curve.values) < 1e-6:
        raise SelfIntersecting("contact push-off touches the base curve")
    return curve.with_values(shifted, meta={**curve.meta, "pushoff": "contact", "epsilon": epsilon})


def cr_pushoff(data, epsilon):
    """Push the curve by epsilon along its Euclidean-normalized CR normal."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    base = curves.project_curve(data.curve)
    normals = np.array([curves.cr_trihedron(data, k).normal for k in range(base.n)])
    normals = normals / np.linalg.norm(normals, axis=1)[:, None]
    shifted = base.values + epsilon * normals
    if _min_separation(shifted, base.values) < 1e-6:
        raise SelfIntersecting("CR push-off touches the base curve")
    return base.with_values(shifted, meta={**base.meta, "pushoff": "crnormal", "epsilon": epsilon})


@dataclass(frozen=True)
class LinkingResult:
    """Gaussian linking integral with honesty metadata."""

    raw_integral: float
    rounded: int
    residual: float
    quadrature_points: int
    epsilon: float = float("nan")


def _resample(curve, n):
    curve = curves.project_curve(curve)
    if curve.n == n:
        return curve
    t = np.append(curve.s, curve.period)
    ext = np.vstack([curve.values, curve.values[:1]])
    spline = CubicSpline(t, ext, bc_type="periodic")
    s = curve.period * np.arange(n) / n
    return SampledCurve(
        s=s, values=spline(s), model=HEISENBERG, periodic=True,
        period=curve.period, meta=dict(curve.meta),
    )


def _worker_count():
    raw = os.environ.get("CR3_WORKERS", "1")
    try:
        count = int(raw)
    except ValueError:
        count = 1
    return max(1, count)


def gauss_linking(curve_a, curve_b, quadrature=1024):
    """Gaussian linking integral of two disjoint closed space curves.

    (1/4 pi) times the double periodic-trapezoid sum of
    det(a - b, a', b') / |a - b|^3; the 1/4 pi normalization makes the
    rounded value an integer linking number.  The outer loop is split
    into fixed blocks reduced in index order, so serial and parallel
    runs agree bitwise.
    """
    A = _resample(curve_a, quadrature)
    B = _resample(curve_b, quadrature)
    if _min_separation(A.values, B.values) < 1e-6:
        raise CurvesIntersect("curves touch within tolerance")
    pa = A.values
    pb = B.values
    da = fd_derivative(pa, A.step, order=1, periodic=True)
    db = fd_derivative(pb, B.step, order=1, periodic=True)
    block = 64
    starts = list(range(0, quadrature, block))

    def block_sum(start):
        stop = min(start + block, quadrature)
        diff = pa[start:stop, None, :] - pb[None, :, :]
        cross = np.cross(da[start:stop, None, :], db[None, :, :])
        numer = np.einsum("ijk,ijk->ij", diff, cross)
        dist3 = np.sum(diff * diff, axis=2) ** 1.5
        return float(np.sum(numer / dist3))

    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(block_sum, starts))
    else:
        partials = [block_sum(start) for start in starts]
    total = math.fsum(partials)
    raw = total * A.step * B.step / (4 * np.pi)
    rounded = int(np.round(raw))
    return LinkingResult(
        raw_integral=raw,
        rounded=rounded,
        residual=abs(raw - rounded),
        quadrature_points=quadrature,
    )


def _diameter(values):
    lo = np.min(values, axis=0)
    hi = np.max(values, axis=0)
    return float(np.linalg.norm(hi - lo))


def _stable_linking(base, make_pushoff, epsilon, quadrature):
    first = gauss_linking(base, make_pushoff(epsilon), quadrature)
    second = gauss_linking(base, make_pushoff(epsilon / 2), quadrature)
    if first.rounded != second.rounded:
        raise Unstable(
            "push-off rounds to %d at eps and %d at eps/2" % (first.rounded, second.rounded)
        )
    return LinkingResult(
        raw_integral=first.raw_integral,
        rounded=first.rounded,
        residual=first.residual,
        quadrature_points=first.quadrature_points,
        epsilon=epsilon,
    )


def bennequin_estimate(curve, epsilon=None, quadrature=1024):
    """Linking of a transversal curve with its contact push-off."""
    base = curves.project_curve(curve)
    eps = epsilon or 0.05 * _diameter(base.values)
    return _stable_linking(base, lambda e: contact_pushoff(base, e), eps, quadrature)


def self_linking_estimate(data, epsilon=None, quadrature=1024):
    """Linking of a transversal curve with its CR-normal push-off."""
    base = curves.project_curve(data.curve)
    eps = epsilon or 0.05 * _diameter(base.values)
    return _stable_linking(base, lambda e: cr_pushoff(data, e), eps, quadrature)
