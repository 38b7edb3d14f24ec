"""The sphere of null lines: Heisenberg chart, tori, cyclides and chains."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from . import core
from .errors import (
    DegenerateDirection,
    DomainError,
    LegendrianDirection,
    NotSpacelike,
    PointAtInfinity,
    ThroughInfinity,
)
from .sampling import HEISENBERG, SampledCurve

P0 = np.array([1, 0, 0], dtype=complex)
P_INFINITY = np.array([0, 0, 1], dtype=complex)


def _normalize_representative(rep):
    rep = np.asarray(rep, dtype=complex)
    norm = np.linalg.norm(rep)
    if norm == 0:
        raise ValueError("zero vector cannot represent a sphere point")
    rep = rep / norm
    for component in rep:
        if abs(component) > 1e-12:
            rep = rep * (abs(component) / component)
            break
    return rep


@dataclass(frozen=True)
class SpherePoint:
    """A null complex line, stored through a normalized representative."""

    rep: np.ndarray

    def __post_init__(self):
        rep = _normalize_representative(self.rep)
        if abs(core.herm_square(rep)) > 1e-10:
            raise ValueError("representative is not null")
        object.__setattr__(self, "rep", rep)

    def equals(self, other, tol=1e-9):
        wedge = np.cross(self.rep, other.rep)
        return bool(np.linalg.norm(wedge) <= tol)


def heisenberg_chart(point):
    """Null line of the Heisenberg point (x, y, z)."""
    x, y, z = (float(c) for c in point)
    return SpherePoint(np.array([1.0, x + 1j * y, z + 0.5j * (x * x + y * y)]))


def heisenberg_projection(point, tol=1e-12):
    """Heisenberg coordinates of a sphere point away from infinity."""
    rep = point.rep if isinstance(point, SpherePoint) else _normalize_representative(point)
    if abs(rep[0]) <= tol * np.linalg.norm(rep):
        raise PointAtInfinity("the point at infinity has no Heisenberg image")
    w2 = rep[1] / rep[0]
    w3 = rep[2] / rep[0]
    return np.array([w2.real, w2.imag, w3.real])


def heisenberg_section(point):
    """Group-valued section over the sphere minus infinity."""
    rep = point.rep if isinstance(point, SpherePoint) else np.asarray(point, dtype=complex)
    if abs(rep[0]) <= 1e-12 * np.linalg.norm(rep):
        raise PointAtInfinity("section undefined at infinity")
    a = rep[1] / rep[0]
    b = rep[2] / rep[0]
    return np.array(
        [
            [1, 0, 0],
            [a, 1, 0],
            [b, 1j * np.conj(a), 1],
        ],
        dtype=complex,
    )


def heisenberg_translation(point):
    """Group element translating the origin to the given Heisenberg point."""
    return heisenberg_section(heisenberg_chart(point))


def contact_form_value(base, vector):
    """zeta(v) = v_z + x v_y - y v_x for the contact form dz + x dy - y dx."""
    x, y, _ = base
    vx, vy, vz = vector
    return vz + x * vy - y * vx


def torus_rotation(theta1, theta2):
    """Maximal-torus element with the given Clifford angle-variables."""
    phase = np.exp(-1j * (theta1 + 2 * theta2) / 6)
    c, s = np.cos(theta1 / 2), np.sin(theta1 / 2)
    return np.array(
        [
            [phase * c, 0, phase * s],
            [0, np.exp(1j * (theta1 + 2 * theta2) / 3), 0],
            [-phase * s, 0, phase * c],
        ],
        dtype=complex,
    )


def slice_point(rho):
    """The slice representative [1, rho, i rho^2/2] of the torus action."""
    return np.array([1.0, rho, 0.5j * rho * rho], dtype=complex)


def cyclide_point(rho, theta1, theta2=0.0):
    """Heisenberg coordinates of the standard cyclide with parameter rho."""
    if not 0 < rho < np.sqrt(2):
        raise DomainError("cyclide parameter must lie in (0, sqrt(2))")
    den = 4 + rho**4 + (4 - rho**4) * np.cos(theta1)
    x = 2 * rho * (2 + rho**2 + (2 - rho**2) * np.cos(theta1)) / den
    y = -2 * rho * (rho**2 - 2) * np.sin(theta1) / den
    z = (rho**4 - 4) * np.sin(theta1) / den
    c, s = np.cos(theta2), np.sin(theta2)
    return np.array([c * x - s * y, s * x + c * y, z])


def cyclide_distance(rho, point):
    """Distance of a Heisenberg point from the cyclide, via its invariants.

    A point lies on the cyclide iff its torus orbit hits the slice at
    parameter rho; both torus invariants are checked through a dense
    theta1 scan followed by a local refinement.
    """
    point = np.asarray(point, dtype=float)
    radial = np.hypot(point[0], point[1])

    def gap(theta1):
        p = cyclide_point(rho, theta1)
        return np.hypot(np.hypot(p[0], p[1]) - radial, p[2] - point[2])

    thetas = np.linspace(0, 2 * np.pi, 721)
    gaps = [gap(t) for t in thetas]
    center = thetas[int(np.argmin(gaps))]
    span = thetas[1] - thetas[0]
    result = minimize_scalar(gap, bounds=(center - span, center + span), method="bounded")
    return float(min(result.fun, np.min(gaps)))


@dataclass(frozen=True)
class ChainSpec:
    """A chain, encoded by its spacelike h-normal vector."""

    normal: np.ndarray

    def __post_init__(self):
        normal = np.asarray(self.normal, dtype=complex)
        if core.causal_character(normal) is not core.CausalCharacter.SPACELIKE:
            raise NotSpacelike("chain normal must be spacelike")
        object.__setattr__(self, "normal", normal)


def chain_from_normal(spec, samples=256):
    """Heisenberg samples of the chain orthogonal to a spacelike vector.

    The projection is an ellipse whose xy-shadow is a circle of radius
    ||S|| / |S1|.
    """
    spec = spec if isinstance(spec, ChainSpec) else ChainSpec(np.asarray(spec, dtype=complex))
    S = spec.normal
    scale = np.linalg.norm(S)
    if abs(S[0]) <= 1e-10 * scale:
        raise ThroughInfinity("chain passes through the point at infinity")
    radius = np.sqrt(core.herm_square(S)) / abs(S[0])
    w = S[1] / S[0]
    a, b = w.real, w.imag
    c = (S[2] / S[0]).real
    t = np.linspace(0.0, 2 * np.pi, samples, endpoint=False)
    x = radius * np.cos(t) + a
    y = radius * np.sin(t) + b
    z = radius * (b * np.cos(t) - a * np.sin(t)) + c
    return SampledCurve(
        s=t,
        values=np.stack([x, y, z], axis=1),
        model=HEISENBERG,
        periodic=True,
        period=2 * np.pi,
        meta={"chain_normal": S.copy()},
    )


def chain_through(point, velocity, samples=256):
    """The unique chain through a point with a transversal tangent vector."""
    x0, y0, z0 = (float(c) for c in point)
    x1, y1, z1 = (float(c) for c in velocity)
    horiz = x1 * x1 + y1 * y1
    if horiz <= 1e-14:
        raise DegenerateDirection("chain direction needs a horizontal part")
    den = x1 * y0 - x0 * y1 - z1
    if abs(den) <= 1e-12 * (1 + horiz):
        raise LegendrianDirection("direction lies in the contact plane")
    c1 = horiz / (2 * den)
    period = np.pi / abs(c1)
    t = np.linspace(0.0, period, samples, endpoint=False)
    w = 2 * c1 * t
    x = (y1 + 2 * c1 * x0 - y1 * np.cos(w) + x1 * np.sin(w)) / (2 * c1)
    y = (-x1 + 2 * c1 * y0 + x1 * np.cos(w) + y1 * np.sin(w)) / (2 * c1)
    # the sine coefficient below carries the opposite sign from the
    # naive transcription; with it the tangent at t = 0 is exactly the
    # requested velocity and every sample stays h-orthogonal to a
    # common spacelike vector (checked in the test suite)
    z = (
        z0
        + (x0 * x1 + y0 * y1) / (2 * c1) * (1 - np.cos(w))
        - (horiz + 2 * c1 * (x0 * y1 - x1 * y0)) / (4 * c1 * c1) * np.sin(w)
    )
    return SampledCurve(
        s=t,
        values=np.stack([x, y, z], axis=1),
        model=HEISENBERG,
        periodic=True,
        period=period,
        meta={"c1": c1},
    )
