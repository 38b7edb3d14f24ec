"""Constant-invariant curves: spectra, classification and the two
families of symmetrical torus-knot configurations."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import core
from .errors import DomainError, NoConvergence
from .sampling import LIFT, SampledCurve
from .sphere import slice_point

FIRST = "first"
SECOND = "second"

SQRT2 = math.sqrt(2.0)

U_MATRIX = np.array(
    [
        [1 / SQRT2, 0, 1j / SQRT2],
        [0, 1, 0],
        [1j / SQRT2, 0, 1 / SQRT2],
    ],
    dtype=complex,
)
U_INVERSE = np.array(
    [
        [1 / SQRT2, 0, -1j / SQRT2],
        [0, 1, 0],
        [-1j / SQRT2, 0, 1 / SQRT2],
    ],
    dtype=complex,
)


def spectral_ratio(value):
    """Validate and reduce a rational spectral parameter in (-2, -1/2)."""
    if isinstance(value, str):
        if "/" not in value:
            raise DomainError("spectral parameter must be a fraction M/N")
        num, den = value.split("/", 1)
        r = Fraction(int(num), int(den))
    elif isinstance(value, Fraction):
        r = value
    elif isinstance(value, int):
        r = Fraction(value)
    elif isinstance(value, tuple):
        r = Fraction(*value)
    else:
        raise DomainError("spectral parameter must be rational, got %r" % (value,))
    if not Fraction(-2) < r < Fraction(-1, 2):
        raise DomainError("spectral parameter %s outside (-2, -1/2)" % r)
    return r


def first_kind_rho_bound(r):
    """Upper bound on rho for the first-kind domain."""
    r = float(r)
    return math.sqrt(2 * (-3 + 2 * math.sqrt(2 - r - r * r)) / (1 + 2 * r))


@dataclass(frozen=True)
class IsoparametricSpec:
    """Family kind, exact spectral parameter and Clifford parameter."""

    kind: str
    r: Fraction
    rho: float

    def __post_init__(self):
        if self.kind not in (FIRST, SECOND):
            raise DomainError("kind must be 'first' or 'second'")
        object.__setattr__(self, "r", spectral_ratio(self.r))
        if not 0 < self.rho < SQRT2:
            raise DomainError("Clifford parameter must lie in (0, sqrt(2))")
        if self.kind == FIRST and self.rho >= first_kind_rho_bound(self.r):
            raise DomainError(
                "first-kind domain requires rho < %.6f for r = %s"
                % (first_kind_rho_bound(self.r), self.r)
            )


FIRST_CLASS = "first-class"
SECOND_CLASS = "second-class"
NOT_CLOSABLE = "not-closable"


@dataclass(frozen=True)
class SpectralAnalysis:
    """Spectrum and causal data of the Hamiltonian at constant (kappa, tau)."""

    discriminant: float
    eigenvalues: tuple
    eigenvectors: tuple
    characters: tuple
    spectral_ratio: float | None
    klass: str


def eigenvector(kappa, e):
    """Eigenvector of the Hamiltonian for the eigenvalue e."""
    return np.array([-2 * kappa**2 - kappa * e + e * e, -1.0, -2j * kappa + 1j * e])


def analyze(kappa, tau):
    """Spectral analysis of the isoparametric Hamiltonian at (kappa, tau)."""
    disc = core.cubic_discriminant(kappa, tau)
    status, roots = core.solve_characteristic_cubic(kappa, tau)
    if status != "separated":
        return SpectralAnalysis(disc, roots, (), (), None, NOT_CLOSABLE)
    vectors = tuple(eigenvector(kappa, e) for e in roots)
    characters = tuple(core.causal_character(v) for v in vectors)
    klass = FIRST_CLASS if 3 * kappa > math.sqrt(abs(tau)) else SECOND_CLASS
    return SpectralAnalysis(
        disc, roots, vectors, characters, roots[0] / roots[2], klass
    )


def eigen_pattern(kind, r):
    """Diagonal frequency pattern (in units of the time scale c).

    The lift flow is Exp(s c diag(-i d)) conjugated by the pseudo-unitary
    change of basis; d lists the diagonal in the family's fixed order.
    """
    r = Fraction(r)
    if kind == FIRST:
        pattern = (-(1 + r), Fraction(1), r)
    else:
        pattern = (Fraction(1), -(1 + r), r)
    return np.array([float(v) for v in pattern])


def lift_value(kind, r, rho, c, sigma, s, order=0):
    """Value (or s-derivative) of the configuration lift at parameters s.

    Gamma(s) = sigma * U Exp(s c diag(-i d)) U^{-1} S(rho); derivatives
    just multiply the diagonal modes by their eigenvalues.
    """
    s = np.atleast_1d(np.asarray(s, dtype=float))
    d = c * eigen_pattern(kind, r)
    lam = -1j * d
    w = U_INVERSE @ slice_point(rho)
    modes = (lam**order * w)[None, :] * np.exp(np.outer(s, lam))
    return sigma * modes @ U_MATRIX.T


def _normalization_residuals(kind, r, rho, c, sigma):
    g0 = lift_value(kind, r, rho, c, sigma, 0.0, order=0)[0]
    g1 = lift_value(kind, r, rho, c, sigma, 0.0, order=1)[0]
    g2 = lift_value(kind, r, rho, c, sigma, 0.0, order=2)[0]
    det = np.linalg.det(np.stack([g0, g1, g2], axis=1))
    pairing = core.herm_product(g0, g1)
    return np.array([det.real + 1.0, det.imag, pairing.imag - 1.0])


def normalization_oracle(kind, r, rho, max_iter=100):
    """Time scale c > 0 and lift scale sigma of the W-normalized flow.

    The two normalization identities det(Gamma, Gamma', Gamma'') = -1
    and <Gamma, Gamma'> = i scale exactly as sigma^3 c^3 and
    |sigma|^2 c of their values at (c, sigma) = (1, 1), which gives a
    closed-form seed; a damped Newton iteration then polishes it to
    machine precision.
    """
    r = spectral_ratio(r)
    g0 = lift_value(kind, r, rho, 1.0, 1.0, 0.0, order=0)[0]
    g1 = lift_value(kind, r, rho, 1.0, 1.0, 0.0, order=1)[0]
    g2 = lift_value(kind, r, rho, 1.0, 1.0, 0.0, order=2)[0]
    det_unit = np.linalg.det(np.stack([g0, g1, g2], axis=1))
    pair_unit = core.herm_product(g0, g1).imag
    B = det_unit.real
    if abs(det_unit.imag) > 1e-9 * abs(det_unit):
        raise NoConvergence("unit-scale determinant is not real")
    if pair_unit <= 0 or B == 0:
        raise NoConvergence("no admissible normalization at these parameters")
    c = (pair_unit**3 / B**2) ** (1.0 / 3.0)
    sigma = math.copysign((1.0 / (pair_unit * c)) ** 0.5, 1.0) * (-1.0 if B > 0 else 1.0)
    # Newton polish on (c, Re sigma, Im sigma)
    x = np.array([c, sigma, 0.0])
    for _ in range(max_iter):
        res = _normalization_residuals(kind, r, rho, x[0], x[1] + 1j * x[2])
        if np.max(np.abs(res)) < 1e-13:
            break
        jac = np.zeros((3, 3))
        for j in range(3):
            dx = np.zeros(3)
            dx[j] = 1e-7 * max(1.0, abs(x[j]))
            plus = _normalization_residuals(
                kind, r, rho, *(lambda y: (y[0], y[1] + 1j * y[2]))(x + dx)
            )
            minus = _normalization_residuals(
                kind, r, rho, *(lambda y: (y[0], y[1] + 1j * y[2]))(x - dx)
            )
            jac[:, j] = (plus - minus) / (2 * dx[j])
        try:
            step = np.linalg.solve(jac, res)
        except np.linalg.LinAlgError as exc:
            raise NoConvergence("singular Newton system") from exc
        scale = 1.0
        base = np.max(np.abs(res))
        for _ in range(30):
            trial = x - scale * step
            if trial[0] > 0:
                trial_res = _normalization_residuals(
                    kind, r, rho, trial[0], trial[1] + 1j * trial[2]
                )
                if np.max(np.abs(trial_res)) < base:
                    x = trial
                    break
            scale /= 2
        else:
            raise NoConvergence("damped Newton stalled")
    else:
        raise NoConvergence("normalization oracle did not converge")
    return float(x[0]), complex(x[1], x[2])


@dataclass(frozen=True)
class ConfigClosedForms:
    """Scalar data of a symmetrical configuration."""

    kind: str
    r: Fraction
    rho: float
    c: float
    mu: float
    sigma: complex
    kappa: float
    tau: float
    omega_lift: float
    knot: tuple
    spin: Fraction
    anomaly: float
    maslov: int
    eigenvalues: tuple = field(default=())


def knot_type(kind, r):
    """Reduced torus-knot type of a symmetrical configuration."""
    r = spectral_ratio(r)
    if kind == FIRST:
        f = (2 + r) / (1 + 2 * r)
        return int(-f.numerator), int(-f.denominator)
    f = (2 + r) / (1 - r)
    return int(f.numerator), int(f.denominator)


def spin_anomaly(r):
    """CR spin and phase anomaly from the residues of m and n mod 3."""
    r = spectral_ratio(r)
    m, n = r.numerator, r.denominator
    if m % 3 == 1 and n % 3 == 1:
        return Fraction(1, 3), 4 * math.pi / 3
    if m % 3 == 2 and n % 3 == 2:
        return Fraction(1, 3), 2 * math.pi / 3
    return Fraction(1), 0.0


def maslov_closed(kind, r):
    """Closed-form Maslov index of a symmetrical configuration."""
    r = spectral_ratio(r)
    if kind == FIRST:
        return -(r.denominator + r.numerator)
    p, q = knot_type(SECOND, r)
    return p + q


def closed_forms(kind, r, rho):
    """All scalar closed forms of a configuration, oracle-normalized."""
    r = spectral_ratio(r)
    c, sigma = normalization_oracle(kind, r, rho)
    g1 = lift_value(kind, r, rho, c, sigma, 0.0, order=1)[0]
    g2 = lift_value(kind, r, rho, c, sigma, 0.0, order=2)[0]
    kappa = 0.5 * core.herm_product(g1, g1).real
    tau = core.herm_product(g2, g1).imag + 3 * kappa**2
    omega_lift = 2 * math.pi * r.denominator / c
    spin, anomaly = spin_anomaly(r)
    eigenvalues = tuple(sorted(c * eigen_pattern(kind, r)))
    return ConfigClosedForms(
        kind=kind,
        r=r,
        rho=rho,
        c=c,
        mu=c / (1 + c),
        sigma=sigma,
        kappa=kappa,
        tau=tau,
        omega_lift=omega_lift,
        knot=knot_type(kind, r),
        spin=spin,
        anomaly=anomaly,
        maslov=maslov_closed(kind, r),
        eigenvalues=eigenvalues,
    )


def curve_minimal_period(forms):
    """Minimal period of the curve itself (a third of the lift's if the
    spin is 1/3)."""
    if forms.spin == Fraction(1, 3):
        return forms.omega_lift / 3.0
    return forms.omega_lift


def build_configuration(spec, samples=512, span="curve"):
    """Sampled W-lift of a symmetrical configuration over one period.

    ``span`` selects the curve's minimal period (default) or the lift's
    (``"lift"``), which is three times longer when the spin is 1/3.
    """
    if not isinstance(spec, IsoparametricSpec):
        raise DomainError("build_configuration expects an IsoparametricSpec")
    forms = closed_forms(spec.kind, spec.r, spec.rho)
    period = curve_minimal_period(forms) if span == "curve" else forms.omega_lift
    s = np.linspace(0.0, period, samples, endpoint=False)
    values = lift_value(spec.kind, spec.r, spec.rho, forms.c, forms.sigma, s)
    start = values[0]
    wrapped = lift_value(spec.kind, spec.r, spec.rho, forms.c, forms.sigma, period)[0]
    ratios = wrapped / start
    if np.max(np.abs(ratios - ratios[0])) > 1e-9:
        raise NoConvergence("lift monodromy is not scalar")
    roots = np.exp(2j * np.pi * np.arange(3) / 3.0)
    monodromy = complex(roots[np.argmin(np.abs(roots - ratios[0]))])
    meta = {
        "kind": spec.kind,
        "r": "%d/%d" % (spec.r.numerator, spec.r.denominator),
        "rho": spec.rho,
        "c": forms.c,
        "mu": forms.mu,
        "sigma": forms.sigma,
        "kappa": forms.kappa,
        "tau": forms.tau,
        "omega_lift": forms.omega_lift,
        "knot": forms.knot,
        "spin": str(forms.spin),
        "anomaly": forms.anomaly,
        "maslov": forms.maslov,
        "span": span,
        "lift_monodromy": monodromy,
    }
    curve = SampledCurve(
        s=s, values=values, model=LIFT, periodic=True, period=period, meta=meta
    )
    return curve, forms
