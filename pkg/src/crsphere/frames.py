"""Frame reconstruction from prescribed bending and twist, and the
congruence test between closed curves."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from . import core, curves
from .errors import AlgebraViolation, NotClosed, NotNatural, StepRejected
from .sampling import LIFT, SampledCurve


class InvariantProfile:
    """Bending and twist prescribed along an interval."""

    def __init__(self, kappa, tau):
        self._kappa = kappa if callable(kappa) else (lambda s, v=float(kappa): v + 0.0 * np.asarray(s))
        self._tau = tau if callable(tau) else (lambda s, v=float(tau): v + 0.0 * np.asarray(s))

    @classmethod
    def from_samples(cls, s, kappa, tau, periodic=False):
        bc = "periodic" if periodic else "not-a-knot"
        if periodic:
            s = np.append(s, s[0] + (s[-1] - s[0]) * len(s) / (len(s) - 1))
            kappa = np.append(kappa, kappa[0])
            tau = np.append(tau, tau[0])
        return cls(CubicSpline(s, kappa, bc_type=bc), CubicSpline(s, tau, bc_type=bc))

    def __call__(self, s):
        return float(self._kappa(s)), float(self._tau(s))


@dataclass(frozen=True)
class ReconstructedFrames:
    """Frames, curve and drift diagnostics of a reconstruction run."""

    s: np.ndarray
    frames: np.ndarray
    curve: SampledCurve
    max_defect: float
    max_local_error: float
    meta: dict = field(default_factory=dict)


def _rk4_step(F, s, h, profile):
    def rhs(Fv, sv):
        k, t = profile(sv)
        return Fv @ core.structure_matrix(k, t)

    k1 = rhs(F, s)
    k2 = rhs(F + 0.5 * h * k1, s + 0.5 * h)
    k3 = rhs(F + 0.5 * h * k2, s + 0.5 * h)
    k4 = rhs(F + h * k3, s + h)
    return F + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def reconstruct(profile, s_range, step, F0=None, error_budget=1e-5):
    """Integrate F' = F K along the profile with group projection.

    Classical fixed-step RK4; each step is taken once at full size and
    twice at half size, the difference serving as a local error
    estimate, and the half-step result is projected back onto the
    group.  The initial frame defaults to the identity.
    """
    if F0 is None:
        F0 = np.eye(3, dtype=complex)
    F0 = np.asarray(F0, dtype=complex)
    if not core.is_group_element(F0, tol=1e-10):
        raise AlgebraViolation("initial frame is not a group element")
    if step <= 0:
        raise ValueError("step must be positive")
    s0, s1 = float(s_range[0]), float(s_range[1])
    n_steps = int(round((s1 - s0) / step))
    if n_steps < 1 or abs(n_steps * step - (s1 - s0)) > 1e-9 * max(1.0, abs(s1 - s0)):
        raise ValueError("range must be an integer number of steps")
    s = s0 + step * np.arange(n_steps + 1)
    frames = np.empty((n_steps + 1, 3, 3), dtype=complex)
    frames[0] = F0
    F = F0
    max_defect = 0.0
    max_err = 0.0
    for k in range(n_steps):
        full = _rk4_step(F, s[k], step, profile)
        half = _rk4_step(F, s[k], 0.5 * step, profile)
        half = _rk4_step(half, s[k] + 0.5 * step, 0.5 * step, profile)
        err = np.max(np.abs(full - half)) / 15.0
        max_err = max(max_err, err)
        if err > error_budget:
            raise StepRejected(
                "local error %.3g exceeds budget %.3g at s = %.6g" % (err, error_budget, s[k])
            )
        F = core.group_project(half)
        frames[k + 1] = F
        defect = np.max(np.abs(np.conj(F.T) @ core.H_FORM @ F - core.H_FORM))
        max_defect = max(max_defect, defect)
    curve = SampledCurve(
        s=s - s0,
        values=frames[:, :, 0],
        model=LIFT,
        periodic=False,
        meta={"s_offset": s0},
    )
    return ReconstructedFrames(
        s=s,
        frames=frames,
        curve=curve,
        max_defect=max_defect,
        max_local_error=max_err,
        meta={"step": step},
    )


def _natural_gate(curve):
    a = curves.strain_density(curve)
    if np.max(np.abs(a - 1.0)) > 1e-5:
        raise NotNatural("curve is not naturally parametrized")


def _resample_periodic(values, n):
    m = values.shape[0]
    if m == n:
        return values
    t = np.arange(m + 1) / m
    ext = np.vstack([values, values[:1]])
    spline = CubicSpline(t, ext, bc_type="periodic")
    return spline(np.arange(n) / n)


def congruence_test(curve_a, curve_b, tol=1e-6):
    """Decide whether two closed natural curves differ by a group motion.

    The bending/twist profiles are aligned by a parameter-shift search;
    on success the aligning group element is assembled from the frames
    at matched parameters and verified directly on the lifts, up to the
    central cube roots of unity.
    """
    for c in (curve_a, curve_b):
        if not c.periodic:
            raise NotClosed("congruence test needs closed curves")
    if abs(curve_a.period - curve_b.period) > tol * max(curve_a.period, 1.0):
        return False, None
    for c in (curve_a, curve_b):
        _natural_gate(c)
    data_a = curves.compute_wilczynski(curve_a)
    data_b = curves.compute_wilczynski(curve_b)
    n = curve_a.n
    kb = np.interp(
        curve_a.s, curve_b.s, data_b.kappa, period=curve_b.period
    )
    tb = np.interp(curve_a.s, curve_b.s, data_b.tau, period=curve_b.period)
    best_shift, best_err = 0, np.inf
    for k in range(n):
        err = max(
            np.max(np.abs(np.roll(data_a.kappa, -k) - kb)),
            np.max(np.abs(np.roll(data_a.tau, -k) - tb)),
        )
        if err < best_err:
            best_err, best_shift = err, k
    profile_tol = max(tol, 1e-4)
    if best_err > profile_tol:
        return False, None
    A = core.group_project(
        data_b.frames[0] @ np.linalg.inv(data_a.frames[best_shift])
    )
    mono_a = complex(data_a.meta.get("lift_monodromy", data_a.eps_gamma))
    shifted = np.roll(data_a.curve.values, -best_shift, axis=0)
    if best_shift:
        shifted[-best_shift:] = shifted[-best_shift:] * mono_a
    mapped = shifted @ A.T
    target = data_b.curve.values
    scale = np.max(np.abs(target))
    best = np.inf
    for j in range(3):
        eps = np.exp(2j * np.pi * j / 3.0)
        best = min(best, np.max(np.abs(mapped - eps * target)) / scale)
    if best > max(10 * profile_tol, 1e-3):
        return False, None
    return True, A
