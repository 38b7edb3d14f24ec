"""Cross-checks of the published closed-form constants against the
numerical normalization oracle.

Every comparison is reported, never silently repaired: agreement within
tolerance is a PASS entry, disagreement a FLAG entry carrying both
values.  The oracle side is always the authoritative one used by the
rest of the package.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import isopara, variational

TOLERANCE = 1e-6

FIG7_STRAIN = 6.01323
FIG7_PARAMS = (Fraction(-5, 7), 0.7)
FIG6_PARAMS = (Fraction(-5, 6), 0.47343)


def published_mu(kind, r, rho):
    """The published closed form of the time-scale parameter mu."""
    r = float(r)
    cube = (2 + 3 * r - 3 * r**2 - 2 * r**3) * (-4 * rho + rho**5)
    shift = 2 * math.copysign(abs(cube) ** (2.0 / 3.0), 1.0)
    if kind == isopara.FIRST:
        num = 4 + 8 * r + 12 * rho**2 + (1 + 2 * r) * rho**4
    else:
        num = -4 + 4 * r - 12 * rho**2 * (1 + 2 * r) + (r - 1) * rho**4
    return num / (num - shift)


def published_sigma(kind, r, rho):
    """The published lift scale; the published lift carries it with a
    leading minus sign."""
    r = float(r)
    mu = published_mu(kind, r, rho)
    cube = rho * (-2 - 3 * r + 3 * r**2 + 2 * r**3) * (4 - rho**4)
    return 2 * (1 - mu) / (mu * math.copysign(abs(cube) ** (1.0 / 3.0), cube))


def published_kappa(kind, r, rho):
    """The published bending of a symmetrical configuration."""
    r = float(r)
    den = 4 * abs((2 + 3 * r - 3 * r**2 - 2 * r**3) * rho * (-4 + rho**4)) ** (2.0 / 3.0)
    if kind == isopara.FIRST:
        num = -8 * r**2 * rho**2 - (-2 + rho**2) ** 2 - 2 * r * (2 + rho**2) ** 2
    else:
        num = 16 * r * rho**2 - (-2 + rho**2) ** 2 + r**2 * (2 + rho**2) ** 2
    return num / den


def published_tau(kind, r, rho):
    """The published twist; the second-kind display contains a garbled
    factor ("12 rho 2"), transcribed here in its most plausible reading
    12 rho^2."""
    r = float(r)
    den = 16 * abs((2 + 3 * r - 3 * r**2 - 2 * r**3) * rho * (-4 + rho**4)) ** (4.0 / 3.0)
    if kind == isopara.FIRST:
        sq = 8 * r**2 * rho**2 + (-2 + rho**2) ** 2 + 2 * r * (2 + rho**2) ** 2
        lin = 4 + 12 * rho**2 + rho**4 + 2 * r * (4 + rho**4)
        num = 9 * sq**2 - 4 * (1 + r + r**2) * lin**2
    else:
        sq = 16 * r * rho**2 - (-2 + rho**2) ** 2 + r**2 * (2 + rho**2) ** 2
        lin = 4 + 12 * rho**2 + rho**4 - r * (4 - 12 * rho**2 + rho**4)
        num = 3 * sq**2 - 4 * (1 + r + r**2) * lin**2
    return num / den


def published_critical_rho(r):
    """The published closed form for the critical Clifford parameter."""
    r = float(r)
    root = math.sqrt(3 * (1 + r + r**2))
    inner = 5 + 8 * r + 5 * r**2 + 3 * (1 + r) * root
    value = (6 + 6 * r + 4 * root - abs(inner) ** 0.25) / (1 - r)
    return math.copysign(abs(value) ** 0.5, value)


def quartic_root_candidates(r):
    """The four published roots f1..f4 for rho^2 on the critical locus."""
    r = float(r)
    root = math.sqrt(3) * math.sqrt(1 + r + r**2)
    out = []
    for sign_outer in (-1.0, 1.0):
        inner = 5 + 5 * r**2 + sign_outer * 3 * root + r * (8 + sign_outer * 3 * root)
        quarter = abs(inner) ** 0.25
        for sign_inner in (-1.0, 1.0):
            out.append((6 + 6 * r + sign_outer * 4 * root + sign_inner * quarter) / (1 - r))
    # ordering f1, f2, f3, f4 of the published display
    return out[0], out[1], out[2], out[3]


@dataclass(frozen=True)
class AuditEntry:
    """One published-vs-oracle comparison."""

    name: str
    published: float
    oracle: float
    delta: float
    verdict: str
    note: str = ""


def _entry(name, published, oracle, note="", tol=TOLERANCE):
    delta = abs(published - oracle)
    scale = max(abs(oracle), 1.0)
    verdict = "PASS" if delta <= tol * scale else "FLAG"
    return AuditEntry(name, float(published), float(oracle), float(delta), verdict, note)


def run_audit():
    """Full published-vs-oracle comparison report."""
    entries = []

    for kind, (r, rho) in ((isopara.FIRST, FIG6_PARAMS), (isopara.SECOND, FIG7_PARAMS)):
        c, sigma = isopara.normalization_oracle(kind, r, rho)
        mu = c / (1 + c)
        tag = "%s(%s, %g)" % (kind, r, rho)
        entries.append(
            _entry("mu " + tag, published_mu(kind, r, rho), mu,
                   note="oracle solves the normalization identities directly")
        )
        entries.append(
            _entry("|sigma| " + tag, abs(published_sigma(kind, r, rho)), abs(sigma),
                   note="published lift uses -sigma; the oracle sign makes det = -1")
        )
        forms = isopara.closed_forms(kind, r, rho)
        entries.append(_entry("kappa " + tag, published_kappa(kind, r, rho), forms.kappa))
        tau_note = (
            "published display disagrees by a factor 3 in the leading term"
            if kind == isopara.FIRST
            else "display has a garbled '12 rho 2' factor, read as 12 rho^2"
        )
        entries.append(
            _entry("tau " + tag, published_tau(kind, r, rho), forms.tau, note=tau_note)
        )

    # Fig. 7 caption strain vs the oracle-normalized configuration
    forms = isopara.closed_forms(isopara.SECOND, *FIG7_PARAMS)
    entries.append(
        _entry("fig7 strain", FIG7_STRAIN, forms.omega_lift / 3.0,
               note="caption quotes 5 decimals; informational", tol=1e-5)
    )

    # published critical-parameter formula vs the root-finder
    r = FIG7_PARAMS[0]
    rho_star = variational.critical_rho(r)
    entries.append(
        _entry("critical rho(-5/7)", published_critical_rho(r), rho_star,
               note="published closed form exceeds sqrt(2) at this r; root-finder is authoritative")
    )
    f1, f2, f3, f4 = quartic_root_candidates(r)
    entries.append(
        _entry("quartic root f3(-5/7) vs rho*^2", f3, rho_star**2,
               note="published bound asserts f3 in (6-4 sqrt 2, 2)")
    )
    entries.append(
        _entry("quartic residual at rho*", variational.quartic_residual(r, rho_star), 0.0,
               note="published even-degree polynomial evaluated at the numeric root", tol=1e-8)
    )
    return entries


def report_json(entries=None):
    """Machine-readable audit report."""
    entries = run_audit() if entries is None else entries
    return json.dumps([asdict(e) for e in entries], indent=2)
