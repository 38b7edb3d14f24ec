"""Total strain functional and its closed critical curves."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from . import curves, isopara
from .errors import DomainError, NoRoot

total_strain = curves.total_strain


def criticality_residual(kappa, tau):
    """Residual of the criticality condition tau = -9 kappa^2."""
    return tau + 9.0 * kappa**2


def criticality_discriminant(kappa):
    """Hamiltonian discriminant along the critical locus tau = -9 kappa^2."""
    return -27.0 * (1.0 + 32.0 * kappa**3)


def quartic_residual(r, rho):
    """The even-degree polynomial in rho whose root gives criticality."""
    r = float(r)
    p_plus = 16 + 96 * rho**2 - 40 * rho**4 + 24 * rho**6 + rho**8
    p_minus = 16 - 96 * rho**2 - 40 * rho**4 - 24 * rho**6 + rho**8
    return p_minus - r * p_plus


def _config_residual(r, rho):
    forms = isopara.closed_forms(isopara.SECOND, r, rho)
    return criticality_residual(forms.kappa, forms.tau)


def critical_rho(r, seeds=200):
    """Clifford parameter at which the second-kind family is critical.

    A bracket scan over (0.01, sqrt(2) - 0.01) followed by Brent root
    refinement of the residual tau + 9 kappa^2, using the
    oracle-normalized closed forms.
    """
    r = isopara.spectral_ratio(r)
    lo, hi = 0.01, math.sqrt(2.0) - 0.01
    grid = np.linspace(lo, hi, seeds + 1)
    residuals = np.array([_config_residual(r, x) for x in grid])
    roots = []
    for k in range(seeds):
        a, b = residuals[k], residuals[k + 1]
        if a == 0.0:
            roots.append(float(grid[k]))
        elif a * b < 0:
            roots.append(
                float(brentq(lambda x: _config_residual(r, x), grid[k], grid[k + 1], xtol=1e-13))
            )
    if not roots:
        raise NoRoot(
            "no criticality root for r = %s; residual range [%g, %g]"
            % (r, residuals.min(), residuals.max())
        )
    return roots[0] if len(roots) == 1 else min(roots, key=lambda x: abs(_config_residual(r, x)))


@dataclass(frozen=True)
class CriticalitySolution:
    """Critical configuration of the total strain functional."""

    p: int
    q: int
    r: Fraction
    rho_star: float
    kappa: float
    tau: float
    residual: float


def critical_config(p, q, samples=2048):
    """Critical second-kind configuration of positive torus type (p, q)."""
    p, q = int(p), int(q)
    if math.gcd(p, q) != 1 or not 0 < p < q:
        raise DomainError("need coprime integers with 0 < p < q")
    r = Fraction(p - 2 * q, p + q)
    rho_star = critical_rho(r)
    spec = isopara.IsoparametricSpec(isopara.SECOND, r, rho_star)
    curve, forms = isopara.build_configuration(spec, samples=samples)
    solution = CriticalitySolution(
        p=p,
        q=q,
        r=r,
        rho_star=rho_star,
        kappa=forms.kappa,
        tau=forms.tau,
        residual=criticality_residual(forms.kappa, forms.tau),
    )
    return solution, curve, forms
