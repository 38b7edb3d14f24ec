"""Linear algebra over the indefinite Hermitian space C^{2,1}.

The Hermitian form is carried by the anti-diagonal matrix

    h = [[0, 0, i],
         [0, 1, 0],
         [-i, 0, 0]],

with product ``<z, w> = conj(z)^t h w`` (conjugate-linear in the first
slot).  All lifts, frames and flows in the package live over this form.
"""

from __future__ import annotations

import enum
import math

import numpy as np
import scipy.linalg

from .errors import AlgebraViolation, DegenerateSpan

H_FORM = np.array([[0, 0, 1j], [0, 1, 0], [-1j, 0, 0]], dtype=complex)

E1 = np.array([1, 0, 0], dtype=complex)
E2 = np.array([0, 1, 0], dtype=complex)
E3 = np.array([0, 0, 1], dtype=complex)


class CausalCharacter(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def herm_product(z, w):
    """Indefinite Hermitian product <z, w> = conj(z)^t h w."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return complex(np.conj(z) @ H_FORM @ w)


def herm_square(z):
    """Real value <z, z> (the imaginary residue is checked and dropped)."""
    val = herm_product(z, z)
    return val.real


def causal_character(v, tol=1e-10):
    """Classify a nonzero vector as spacelike, timelike or lightlike.

    A symmetric dead-band relative to the Euclidean norm decides the
    lightlike case, since exact vanishing is unattainable in floats.
    """
    v = np.asarray(v, dtype=complex)
    norm2 = float(np.sum(np.abs(v) ** 2))
    if norm2 == 0.0:
        raise ValueError("causal_character of the zero vector")
    q = herm_square(v)
    if abs(q) <= tol * norm2:
        return CausalCharacter.LIGHTLIKE
    return CausalCharacter.SPACELIKE if q > 0 else CausalCharacter.TIMELIKE


def is_group_element(A, tol=1e-10):
    """True iff A preserves the form h and has unit determinant."""
    A = np.asarray(A, dtype=complex)
    defect = np.max(np.abs(np.conj(A.T) @ H_FORM @ A - H_FORM))
    return defect <= tol and abs(np.linalg.det(A) - 1) <= tol


def is_algebra_element(K, tol=1e-8):
    """True iff K is tangent to the group: conj(K)^t h + h K = 0, tr K = 0."""
    K = np.asarray(K, dtype=complex)
    defect = np.max(np.abs(np.conj(K.T) @ H_FORM + H_FORM @ K))
    return defect <= tol and abs(np.trace(K)) <= tol


def structure_matrix(kappa, tau):
    """Coefficient matrix K of the frame equation F' = F K.

    Its columns express (F1', F2', F3') in the frame (F1, F2, F3) for a
    naturally parametrized curve with bending kappa and twist tau.
    """
    return np.array(
        [
            [1j * kappa, -1j, tau],
            [0, -2j * kappa, 1],
            [1, 0, 1j * kappa],
        ],
        dtype=complex,
    )


def hamiltonian(kappa, tau):
    """Self-adjoint generator i*K of the isoparametric flow."""
    return 1j * structure_matrix(kappa, tau)


def cubic_discriminant(kappa, tau):
    """Discriminant of the characteristic cubic of the Hamiltonian."""
    return (
        -27.0
        + 108.0 * kappa * (kappa**2 + tau)
        - 324.0 * kappa**4 * tau
        - 72.0 * kappa**2 * tau**2
        - 4.0 * tau**3
    )


def characteristic_cubic(kappa, tau, t):
    """P(t) = -t^3 + (3k^2 - tau) t + 2k^3 + 2k tau - 1."""
    return -(t**3) + (3 * kappa**2 - tau) * t + 2 * kappa**3 + 2 * kappa * tau - 1


def _eigenvalues_trig(a, b):
    """Closed-form real roots of t^3 - a t - b = 0 for a > 0, b != 0.

    Valid when the cubic has three distinct real roots (4a^3 > 27b^2).
    Returns the roots in increasing order.
    """
    s = math.copysign(1.0, b)
    root = math.sqrt(12 * a**3 - 81 * b**2)
    amp = 2 * math.sqrt(a / 3)
    l1 = -amp * math.cos(math.atan(-root / (9 * b)) / 3 + math.pi / 6 * (1 + s))
    l2 = -amp * math.cos(math.atan(-root / (9 * b)) / 3 - math.pi / 6 * (3 - s))
    l3 = amp * math.cos(math.atan(root / (9 * b)) / 3 - math.pi / 6 * (1 + s)) - amp * math.sin(
        math.atan(root / (9 * b)) / 3 - math.pi / 6 * s
    )
    return l1, l2, l3


def _real_roots_fallback(kappa, tau):
    """Real roots of the characteristic cubic via the companion matrix."""
    # roots of t^3 - a t - b with a = 3k^2 - tau, b = 2k^3 + 2k tau - 1
    a = 3 * kappa**2 - tau
    b = 2 * kappa**3 + 2 * kappa * tau - 1
    roots = np.roots([1.0, 0.0, -a, -b])
    real = sorted(float(z.real) for z in roots if abs(z.imag) <= 1e-9 * (1 + abs(z)))
    return tuple(real)


def solve_characteristic_cubic(kappa, tau):
    """Real spectrum of the isoparametric Hamiltonian.

    Returns ``(status, roots)`` with status ``"separated"`` and three
    increasing real roots summing to zero when the discriminant is
    positive, else ``"non-separated"`` with whatever real roots exist.
    The trigonometric closed form is used on its domain of validity and
    a companion-matrix solver everywhere else.
    """
    disc = cubic_discriminant(kappa, tau)
    a = 3 * kappa**2 - tau
    b = 2 * kappa**3 + 2 * kappa * tau - 1
    guard = 1 - 2 * kappa**2 - 2 * kappa * tau
    use_trig = (
        disc > 0
        and a > 0
        and abs(b) > 1e-12 * (1 + abs(a)) ** 1.5
        and abs(guard) > 1e-12
        and 12 * a**3 - 81 * b**2 > 0
    )
    if use_trig:
        roots = sorted(_eigenvalues_trig(a, b))
    else:
        roots = list(_real_roots_fallback(kappa, tau))
    if len(roots) == 3:
        # the cubic has no quadratic term, so the roots sum to zero;
        # re-center to kill the rounding drift
        shift = sum(roots) / 3.0
        roots = [r - shift for r in roots]
        # separation is decided on the roots themselves: the polynomial
        # discriminant cancels catastrophically when the roots are small
        gap = min(roots[1] - roots[0], roots[2] - roots[1])
        scale = max(abs(roots[0]), abs(roots[2]))
        if gap > 1e-9 * (1.0 + scale):
            return "separated", tuple(roots)
    return "non-separated", tuple(roots)


def one_parameter_exp(K, s):
    """Group element Exp(s K) for K in the Lie algebra.

    Diagonalizable inputs go through the eigen-decomposition; nearly
    defective ones fall back to scaling-and-squaring.
    """
    K = np.asarray(K, dtype=complex)
    if not is_algebra_element(K, tol=1e-8):
        raise AlgebraViolation("K is not in the Lie algebra of the group")
    w, V = np.linalg.eig(K)
    gaps = np.abs(w[:, None] - w[None, :]) + np.where(np.eye(3) > 0, np.inf, 0.0)
    sep = np.min(gaps)
    if np.isfinite(np.linalg.cond(V)) and sep > 1e-6:
        return (V * np.exp(s * w)) @ np.linalg.inv(V)
    return scipy.linalg.expm(s * K)


def h_orthogonal_complement(u, v):
    """The direction h-orthogonal to both u and v.

    ``<S, u> = 0`` says conj(S) annihilates h u, so conj(S) is the cross
    product of h u and h v.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    S = np.conj(np.cross(H_FORM @ u, H_FORM @ v))
    scale = np.linalg.norm(u) * np.linalg.norm(v)
    if scale == 0 or np.linalg.norm(S) <= 1e-12 * scale:
        raise DegenerateSpan("u and v do not span a plane")
    S = S / np.linalg.norm(S)
    res = max(abs(herm_product(S, u)) / max(np.linalg.norm(u), 1e-300),
              abs(herm_product(S, v)) / max(np.linalg.norm(v), 1e-300))
    if res > 1e-10:
        raise DegenerateSpan("orthogonality residual too large: %g" % res)
    return S


def group_project(A):
    """Pull a near-group matrix back onto the group.

    One step of the symmetric correction A <- A (I - h^{-1} E / 2) with
    E = conj(A)^t h A - h converges quadratically; two or three sweeps
    reach machine precision.  The determinant phase is removed last.
    """
    A = np.asarray(A, dtype=complex)
    h_inv = np.linalg.inv(H_FORM)
    for _ in range(4):
        E = np.conj(A.T) @ H_FORM @ A - H_FORM
        if np.max(np.abs(E)) < 1e-15:
            break
        A = A @ (np.eye(3) - 0.5 * (h_inv @ E))
    det = np.linalg.det(A)
    # det is a unit modulus number near 1; take the principal cube root
    A = A * np.exp(-1j * np.angle(det) / 3) / abs(det) ** (1.0 / 3.0)
    return A
