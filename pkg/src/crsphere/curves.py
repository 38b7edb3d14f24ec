"""Lifts, strain, Wilczynski normalization, bending/twist and trihedra."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from . import core, sphere
from .errors import (
    InflectionPresent,
    NearInfinity,
    NonTransversal,
    TooFewSamples,
)
from .sampling import HEISENBERG, LIFT, SampledCurve


def lift_curve(curve):
    """Null-lift samples of a Heisenberg-sampled curve."""
    if curve.model == LIFT:
        return curve
    values = np.empty((curve.n, 3), dtype=complex)
    xy2 = curve.values[:, 0] ** 2 + curve.values[:, 1] ** 2
    values[:, 0] = 1.0
    values[:, 1] = curve.values[:, 0] + 1j * curve.values[:, 1]
    values[:, 2] = curve.values[:, 2] + 0.5j * xy2
    # the affine representative is genuinely periodic, whatever the
    # monodromy of the lift the samples originally came from
    meta = dict(curve.meta)
    meta.pop("lift_monodromy", None)
    return SampledCurve(
        s=curve.s,
        values=values,
        model=LIFT,
        periodic=curve.periodic,
        period=curve.period,
        meta=meta,
    )


def project_curve(curve):
    """Heisenberg samples of a lift-sampled curve."""
    if curve.model == HEISENBERG:
        return curve
    z1 = curve.values[:, 0]
    if np.any(np.abs(z1) <= 1e-12 * np.linalg.norm(curve.values, axis=1)):
        raise NearInfinity("curve passes too close to the point at infinity")
    w2 = curve.values[:, 1] / z1
    w3 = curve.values[:, 2] / z1
    return SampledCurve(
        s=curve.s,
        values=np.stack([w2.real, w2.imag, w3.real], axis=1),
        model=HEISENBERG,
        periodic=curve.periodic,
        period=curve.period,
        meta=dict(curve.meta),
    )


def _pairings(curve):
    """Per-sample <Gamma, Gamma'> of a lift-valued curve."""
    if curve.n < 5:
        raise TooFewSamples("need at least 5 samples")
    gamma = curve.values
    dgamma = curve.derivative(1)
    return np.einsum("ij,jk,ik->i", np.conj(gamma), core.H_FORM, dgamma)


def orientation_sign(curve):
    """Sign of Im<Gamma, Gamma'>, the recorded orientation convention."""
    pair = _pairings(lift_curve(curve))
    signs = np.sign(pair.imag)
    return int(signs[0]) if np.all(signs == signs[0]) and signs[0] != 0 else 0


def transversality_check(curve):
    """True iff Im<Gamma, Gamma'> keeps one nonzero sign at all samples."""
    return orientation_sign(curve) != 0


def strain_density(curve):
    """a(s) = i / <Gamma, Gamma'>; real and nonzero along transversal curves."""
    pair = _pairings(lift_curve(curve))
    scale = np.max(np.abs(pair))
    if np.any(np.abs(pair.imag) <= 1e-12 * max(scale, 1e-300)):
        raise NonTransversal("lift pairing vanishes: curve touches the contact plane")
    a = 1j / pair
    # Re<Gamma, Gamma'> vanishes identically for null lifts, so the
    # imaginary part of a is finite-difference noise; only a gross
    # residue signals a malformed lift
    if np.max(np.abs(a.imag)) > 1e-3 * np.max(np.abs(a.real)):
        raise NonTransversal("strain density has a non-real residue")
    return a.real


def lift_determinant(curve):
    """det(Gamma, Gamma', Gamma'') per sample, raw and scale-normalized."""
    curve = lift_curve(curve)
    gamma = curve.values
    d1 = curve.derivative(1)
    d2 = curve.derivative(2)
    det = np.linalg.det(np.stack([gamma, d1, d2], axis=2))
    scale = (
        np.linalg.norm(gamma, axis=1)
        * np.linalg.norm(d1, axis=1)
        * np.linalg.norm(d2, axis=1)
    )
    return det, det / np.where(scale > 0, scale, 1.0)


def inflection_scan(curve, tol_det=1e-6):
    """Parameters where the scale-normalized lift determinant vanishes."""
    _, normalized = lift_determinant(curve)
    return curve.s[np.abs(normalized) < tol_det]


def normalize_wilczynski(curve, tol_det=1e-6):
    """Rescale a lift so det(Gamma, Gamma', Gamma'') = -1 everywhere.

    The cube root of -1/det is taken on a continuous branch along the
    curve.  For closed curves the branch mismatch after one period is a
    cube root of unity, recorded in ``meta["eps_gamma"]``.
    """
    curve = lift_curve(curve)
    det, normalized = lift_determinant(curve)
    if np.any(np.abs(normalized) < tol_det):
        raise InflectionPresent("CR inflection points present; W-lift undefined")
    target = -1.0 / det
    phase = np.unwrap(np.angle(target))
    f = np.abs(target) ** (1.0 / 3.0) * np.exp(1j * phase / 3.0)
    eps = complex(curve.meta.get("lift_monodromy", 1.0))
    if curve.periodic:
        # the rescaling contributes the phase advance of -1/det over one
        # period, closing the wrap from the last sample back to the
        # first with a principal-value step; it composes with whatever
        # monodromy the input lift already carried
        wrap_step = np.angle(target[0] / target[-1])
        turns = int(np.round((phase[-1] + wrap_step - phase[0]) / (2 * np.pi)))
        eps *= np.exp(2j * np.pi * turns / 3.0)
    meta = dict(curve.meta)
    meta["eps_gamma"] = eps
    meta["lift_monodromy"] = eps
    return SampledCurve(
        s=curve.s,
        values=curve.values * f[:, None],
        model=LIFT,
        periodic=curve.periodic,
        period=curve.period,
        meta=meta,
    )


def total_strain(curve):
    """Integral of the strain density over the sampled range."""
    curve = lift_curve(curve)
    a = strain_density(curve)
    if curve.periodic:
        return float(np.sum(a) * curve.step)
    return float(np.trapezoid(a, curve.s))


def _spectral_filter(coeffs, k):
    """Zero Fourier modes that sit at the sampling noise floor.

    The underlying curves are analytic, so their true coefficients
    decay exponentially; the highest-frequency modes of a sampled
    curve estimate the noise floor and everything at that level is
    discarded rather than amplified by later differentiation.
    """
    mag = np.abs(coeffs)
    if mag.ndim > 1:
        mag = np.max(mag, axis=tuple(range(1, mag.ndim)))
    order = np.argsort(np.abs(k))
    tail = max(8, len(k) // 10)
    floor = np.median(mag[order][-tail:])
    keep = mag > 10.0 * floor
    keep[np.abs(k) <= 2] = True
    return np.where(keep[(slice(None),) + (None,) * (coeffs.ndim - 1)], coeffs, 0.0)


def _trig_evaluate(samples, period, t, monodromy=1.0):
    """Trigonometric interpolation of a uniform periodic sampling.

    A scalar monodromy over the period is factored out first, so
    projectively periodic lifts interpolate as smooth functions.
    """
    samples = np.asarray(samples)
    n = samples.shape[0]
    grid = np.arange(n) * (period / n)
    theta = np.angle(complex(monodromy))
    if theta != 0.0:
        samples = samples * np.exp(-1j * theta * grid / period)[:, None]
    k = np.fft.fftfreq(n, d=1.0 / n)
    coeffs = _spectral_filter(np.fft.fft(samples, axis=0) / n, k)
    basis = np.exp(2j * np.pi * np.outer(np.asarray(t), k) / period)
    out = basis @ coeffs
    if theta != 0.0:
        out = out * np.exp(1j * theta * np.asarray(t) / period)[:, None]
    return out


def natural_reparametrize(curve, samples=None):
    """Resample a W-normalized lift so the strain density becomes 1."""
    curve = lift_curve(curve)
    a = strain_density(curve)
    n = samples or curve.n
    h = curve.step
    if curve.periodic:
        # spectral antiderivative of the periodic strain density and
        # Newton inversion of the strictly increasing parameter map
        period = curve.period
        k = np.fft.fftfreq(curve.n, d=1.0 / curve.n)
        coeffs = _spectral_filter(np.fft.fft(a) / curve.n, k)
        mean = coeffs[0].real
        osc = np.where(k != 0, coeffs / np.where(k != 0, 2j * np.pi * k / period, 1.0), 0.0)

        def s_of(t):
            basis = np.exp(2j * np.pi * np.outer(t, k) / period)
            return mean * t + ((basis - 1.0) @ osc).real

        def a_of(t):
            basis = np.exp(2j * np.pi * np.outer(t, k) / period)
            return (basis @ coeffs).real

        total = mean * period
        s_new = np.linspace(0.0, total, n, endpoint=False)
        t = s_new / mean
        for _ in range(4):
            t = t - (s_of(t) - s_new) / a_of(t)
        mono = curve.meta.get("lift_monodromy", 1.0)
        new_values = _trig_evaluate(curve.values, period, t, monodromy=mono)
        out = SampledCurve(
            s=s_new,
            values=new_values,
            model=LIFT,
            periodic=True,
            period=float(total),
            meta=dict(curve.meta),
        )
    else:
        cumulative = np.concatenate([[0.0], np.cumsum((a[1:] + a[:-1]) / 2 * np.diff(curve.s))])
        total = cumulative[-1]
        s_new = np.linspace(0.0, total, n)
        t_of_s = CubicSpline(cumulative, curve.s)
        interp = CubicSpline(curve.s, curve.values, axis=0)
        out = SampledCurve(
            s=s_new,
            values=interp(t_of_s(s_new)),
            model=LIFT,
            periodic=False,
            meta=dict(curve.meta),
        )
    return normalize_wilczynski(out)


def bending_twist(curve):
    """Bending and twist sequences of a natural W-lift.

    kappa = <Gamma', Gamma'> / 2 and tau = Im<Gamma'', Gamma'> + 3 kappa^2.
    """
    curve = lift_curve(curve)
    d1 = curve.derivative(1)
    d2 = curve.derivative(2)
    sq = np.einsum("ij,jk,ik->i", np.conj(d1), core.H_FORM, d1)
    kappa = 0.5 * sq.real
    cross = np.einsum("ij,jk,ik->i", np.conj(d2), core.H_FORM, d1)
    tau = cross.imag + 3 * kappa**2
    return kappa, tau


@dataclass(frozen=True)
class WilczynskiData:
    """Natural W-lift of a curve with its frames and local invariants."""

    curve: SampledCurve
    frames: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray
    eps_gamma: complex = 1.0 + 0j
    meta: dict = field(default_factory=dict)

    @property
    def heisenberg(self):
        return project_curve(self.curve)


def wilczynski_frame(curve, kappa=None, tau=None):
    """Frame field (F1, F2, F3) along a natural W-lift, columnwise."""
    curve = lift_curve(curve)
    if kappa is None or tau is None:
        kappa, tau = bending_twist(curve)
    d1 = curve.derivative(1)
    d2 = curve.derivative(2)
    dkappa = fd_scalar(kappa, curve)
    gamma = curve.values
    f1 = gamma
    f3 = d1 - 1j * kappa[:, None] * gamma
    f2 = (
        d2
        - 2j * kappa[:, None] * d1
        - (tau + kappa**2 + 1j * dkappa)[:, None] * gamma
    )
    return np.stack([f1, f2, f3], axis=2)


def fd_scalar(values, curve):
    """Derivative of a per-sample scalar with the curve's scheme."""
    from .sampling import fd_derivative

    arr = np.asarray(values, dtype=float)[:, None]
    return fd_derivative(arr, curve.step, order=1, periodic=curve.periodic)[:, 0]


def compute_wilczynski(curve, samples=None):
    """Full pipeline: lift, W-normalize, natural parametrization, frames."""
    lifted = lift_curve(curve)
    if not transversality_check(lifted):
        raise NonTransversal("curve is not transversal")
    normalized = normalize_wilczynski(lifted)
    natural = natural_reparametrize(normalized, samples=samples)
    kappa, tau = bending_twist(natural)
    frames = wilczynski_frame(natural, kappa, tau)
    return WilczynskiData(
        curve=natural,
        frames=frames,
        kappa=kappa,
        tau=tau,
        eps_gamma=natural.meta.get("eps_gamma", 1.0 + 0j),
        meta=dict(curve.meta),
    )


def dual_is_legendrian(data, tol=1e-8):
    """Diagnostic: the dual curve is Legendrian iff the twist vanishes."""
    return bool(np.max(np.abs(data.tau)) <= tol)


def osculating_chain(curve, index):
    """Chain with first-order contact at the given sample."""
    curve = lift_curve(curve)
    _, normalized = lift_determinant(curve)
    if abs(normalized[index]) < 1e-6:
        raise InflectionPresent("no osculating chain at an inflection point")
    d1 = curve.derivative(1)
    normal = core.h_orthogonal_complement(curve.values[index], d1[index])
    return sphere.ChainSpec(normal)


@dataclass(frozen=True)
class Trihedron:
    """CR tangent, normal and rotated normal at a Heisenberg base point."""

    base: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray
    j_normal: np.ndarray


def _gauge_parameters(Y):
    """(rho, 3 theta, p, q) of an upper-triangular gauge element.

    The translation part is read off phase-coherently (v scaled by
    e^{-i theta}); this makes the extraction invariant under the
    cube-root-of-unity ambiguity of the Wilczynski frame.
    """
    y11 = Y[0, 0]
    rho = abs(y11)
    if rho <= 0:
        raise ValueError("degenerate gauge element")
    unit = y11 / rho
    v = Y[1, 2] / unit
    return rho, 3 * np.angle(y11), v.real, v.imag


def cr_trihedron(data, index):
    """CR trihedron of a curve at one sample, in Heisenberg coordinates."""
    curve = data.curve
    rep = curve.values[index]
    if abs(rep[0]) <= 1e-10 * np.linalg.norm(rep):
        raise NearInfinity("trihedron undefined near the point at infinity")
    base = (rep[1] / rep[0]).real, (rep[1] / rep[0]).imag, (rep[2] / rep[0]).real
    section = sphere.heisenberg_section(rep)
    # the frame factors as F = s_H(gamma) X with X in the triangular
    # gauge group; the trihedron reads off the parameters of X
    Y = np.linalg.solve(section, data.frames[index])
    rho, theta3, p, q = _gauge_parameters(Y)
    x, y, _ = base
    dz = np.array([0.0, 0.0, 1.0])
    e_x = np.array([1.0, 0.0, y])
    e_y = np.array([0.0, 1.0, -x])
    tangent = dz / rho**2 + (p / rho) * e_x + (q / rho) * e_y
    normal = (np.cos(theta3) * e_x - np.sin(theta3) * e_y) / rho
    j_normal = (np.sin(theta3) * e_x + np.cos(theta3) * e_y) / rho
    return Trihedron(
        base=np.array(base),
        tangent=tangent,
        normal=normal,
        j_normal=j_normal,
    )


def trihedra(data):
    """CR trihedra at every sample of a Wilczynski data set."""
    return [cr_trihedron(data, k) for k in range(data.curve.n)]
