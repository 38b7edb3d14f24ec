"""Pseudo-Hermitian linear algebra and the characteristic cubic."""

import numpy as np
import pytest
from scipy.linalg import expm

from crsphere import core, errors


def random_group_element(seed, scale=0.4):
    rng = np.random.default_rng(seed)
    raw = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    K = core.H_FORM @ (scale * (raw - raw.conj().T))
    K = K - (np.trace(K) / 3.0) * np.eye(3)
    return expm(K)


def test_form_is_hermitian_involution():
    assert np.allclose(core.H_FORM, core.H_FORM.conj().T)
    assert np.allclose(core.H_FORM @ core.H_FORM, np.eye(3))


def test_herm_product_sesquilinear():
    rng = np.random.default_rng(1)
    z = rng.normal(size=3) + 1j * rng.normal(size=3)
    w = rng.normal(size=3) + 1j * rng.normal(size=3)
    lam = 0.7 - 1.3j
    assert np.isclose(core.herm_product(lam * z, w), np.conj(lam) * core.herm_product(z, w))
    assert np.isclose(core.herm_product(z, lam * w), lam * core.herm_product(z, w))
    assert np.isclose(core.herm_product(z, w), np.conj(core.herm_product(w, z)))
    assert np.isclose(core.herm_square(z), core.herm_product(z, z).real)


def test_causal_characters():
    assert core.causal_character(np.array([0, 1, 0], dtype=complex)) is core.CausalCharacter.SPACELIKE
    assert core.causal_character(np.array([1, 0, 0], dtype=complex)) is core.CausalCharacter.LIGHTLIKE
    timelike = np.array([1, 0, 1j], dtype=complex)
    assert core.herm_square(timelike) < 0
    assert core.causal_character(timelike) is core.CausalCharacter.TIMELIKE


def test_group_membership():
    A = random_group_element(3)
    assert core.is_group_element(A)
    assert np.isclose(np.linalg.det(A), 1.0)
    assert not core.is_group_element(1.1 * A)


def test_structure_matrix_in_algebra():
    K = core.structure_matrix(0.3, -1.2)
    assert core.is_algebra_element(K)
    assert abs(np.trace(K)) < 1e-12


def test_cubic_roots_match_companion_matrix():
    rng = np.random.default_rng(7)
    for _ in range(100):
        kappa = rng.uniform(-2, 2)
        tau = rng.uniform(-8, 2)
        status, roots = core.solve_characteristic_cubic(kappa, tau)
        for t in roots:
            assert abs(core.characteristic_cubic(kappa, tau, t)) < 1e-8
        if status == "separated":
            assert roots[0] < roots[1] < roots[2]
            assert abs(sum(roots)) < 1e-12


def test_separation_near_cancellation_point():
    # the discriminant polynomial loses all digits near (1/2, 3/4);
    # separation must still be decided correctly from the roots
    status, roots = core.solve_characteristic_cubic(0.5000010757, 0.7499967757)
    assert status == "separated"
    assert len(roots) == 3


def test_one_parameter_exp_matches_expm():
    K = core.structure_matrix(-0.64, -3.49)
    for s in (0.1, 1.7, 6.0):
        assert np.allclose(core.one_parameter_exp(K, s), expm(s * K), atol=1e-10)


def test_h_orthogonal_complement():
    rng = np.random.default_rng(9)
    u = rng.normal(size=3) + 1j * rng.normal(size=3)
    v = rng.normal(size=3) + 1j * rng.normal(size=3)
    w = core.h_orthogonal_complement(u, v)
    assert abs(core.herm_product(u, w)) < 1e-10
    assert abs(core.herm_product(v, w)) < 1e-10
    with pytest.raises(errors.DegenerateSpan):
        core.h_orthogonal_complement(u, 2.0 * u)


def test_group_project_recovers_nearby_element():
    A = random_group_element(11)
    noisy = A + 1e-6 * (np.ones((3, 3)) + 0.5j)
    projected = core.group_project(noisy)
    assert core.is_group_element(projected, tol=1e-12)
    assert np.max(np.abs(projected - A)) < 1e-5
    assert np.allclose(core.group_project(A), A, atol=1e-12)
