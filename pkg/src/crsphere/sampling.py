"""Sampled curves and finite-difference derivatives on their grids."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import TooFewSamples

LIFT = "lift"
HEISENBERG = "heisenberg"


@dataclass(frozen=True)
class SampledCurve:
    """A curve known through samples on a strictly increasing grid.

    ``values`` has shape (N, 3): complex null-lift representatives for
    the ``"lift"`` model, real Heisenberg coordinates for
    ``"heisenberg"``.  Periodic curves sample the half-open interval
    [0, period); the wrap is implicit.
    """

    s: np.ndarray
    values: np.ndarray
    model: str = LIFT
    periodic: bool = False
    period: float | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        values = np.asarray(self.values)
        if self.model == LIFT:
            values = values.astype(complex)
        else:
            values = values.astype(float)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "values", values)
        if s.ndim != 1 or values.shape != (s.size, 3):
            raise ValueError("samples must be an (N,) grid with (N, 3) values")
        if np.any(np.diff(s) <= 0):
            raise ValueError("parameter values must be strictly increasing")
        if self.periodic:
            if self.period is None or self.period <= s[-1]:
                raise ValueError("periodic curve needs period beyond the last sample")
            if abs(s[0]) > 1e-12:
                raise ValueError("periodic grids start at 0")

    @property
    def n(self):
        return self.s.size

    @property
    def step(self):
        """Uniform grid spacing (raises if the grid is not uniform)."""
        if self.periodic:
            h = self.period / self.n
        else:
            h = (self.s[-1] - self.s[0]) / (self.n - 1)
        if np.max(np.abs(np.diff(self.s) - h)) > 1e-9 * max(h, 1.0):
            raise ValueError("operation requires a uniform grid")
        return h

    def with_values(self, values, **changes):
        return replace(self, values=np.asarray(values), **changes)

    def derivative(self, order=1):
        """Per-sample derivative of the given order (1 or 2)."""
        if self.n < 7:
            raise TooFewSamples("need at least 7 samples for 4th-order stencils")
        wrap = self.meta.get("lift_monodromy", 1.0) if self.model == LIFT else 1.0
        return fd_derivative(
            self.values, self.step, order=order, periodic=self.periodic, wrap=wrap
        )


def _roll_stencil(values, h, shifts, weights, denom, wrap=1.0):
    out = np.zeros_like(values, dtype=values.dtype)
    for k, w in zip(shifts, weights):
        rolled = np.roll(values, -k, axis=0)
        if wrap != 1.0 and k != 0:
            # samples crossing the period boundary pick up the monodromy
            if k > 0:
                rolled[-k:] = rolled[-k:] * wrap
            else:
                rolled[:-k] = rolled[:-k] / wrap
        out += w * rolled
    return out / (denom * h)


# one-sided first-derivative weights at offsets 0..4 for the first two rows
_D1_EDGE = np.array(
    [
        [-25.0, 48.0, -36.0, 16.0, -3.0],
        [-3.0, -10.0, 18.0, -6.0, 1.0],
    ]
)
# one-sided second-derivative weights at offsets 0..5 for the first two rows
_D2_EDGE = np.array(
    [
        [45.0, -154.0, 214.0, -156.0, 61.0, -10.0],
        [10.0, -15.0, -4.0, 14.0, -6.0, 1.0],
    ]
)


def fd_derivative(values, h, order=1, periodic=False, wrap=1.0):
    """4th-order finite differences on a uniform grid.

    Periodic grids use central stencils throughout; arcs switch to
    one-sided stencils of the same order at the two points next to each
    end.  ``wrap`` is the multiplicative monodromy picked up across the
    period boundary (cube roots of unity for projectively periodic
    lifts).
    """
    values = np.asarray(values)
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if periodic:
        if order == 1:
            return _roll_stencil(
                values, h, (-2, -1, 1, 2), (1.0, -8.0, 8.0, -1.0), 12.0, wrap=wrap
            )
        return _roll_stencil(
            values,
            h * h,
            (-2, -1, 0, 1, 2),
            (-1.0, 16.0, -30.0, 16.0, -1.0),
            12.0,
            wrap=wrap,
        )
    out = np.empty_like(values, dtype=values.dtype)
    if order == 1:
        core = (
            values[:-4] - 8 * values[1:-3] + 8 * values[3:-1] - values[4:]
        ) / (12.0 * h)
        out[2:-2] = core
        edge = _D1_EDGE
        for row in (0, 1):
            out[row] = edge[row] @ values[:5] / (12.0 * h)
            out[-1 - row] = -edge[row] @ values[-1:-6:-1] / (12.0 * h)
    else:
        core = (
            -values[:-4] + 16 * values[1:-3] - 30 * values[2:-2] + 16 * values[3:-1] - values[4:]
        ) / (12.0 * h * h)
        out[2:-2] = core
        edge = _D2_EDGE
        for row in (0, 1):
            out[row] = edge[row] @ values[:6] / (12.0 * h * h)
            out[-1 - row] = edge[row] @ values[-1:-7:-1] / (12.0 * h * h)
    return out
