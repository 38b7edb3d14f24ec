"""Heisenberg chart, torus geometry, cyclides and chains."""

import numpy as np
import pytest

from crsphere import core, curves, errors, sphere


def test_chart_projection_round_trip():
    rng = np.random.default_rng(2)
    for _ in range(20):
        p = rng.normal(size=3)
        back = sphere.heisenberg_projection(sphere.heisenberg_chart(p))
        assert np.allclose(back, p, atol=1e-12)


def test_projection_rejects_infinity():
    with pytest.raises(errors.PointAtInfinity):
        sphere.heisenberg_projection(sphere.SpherePoint(sphere.P_INFINITY))


def test_section_is_group_valued():
    for p in ([0.3, -1.2, 0.5], [0.0, 0.0, 0.0], [2.0, 1.0, -3.0]):
        A = sphere.heisenberg_translation(p)
        assert core.is_group_element(A, tol=1e-10)
        origin = sphere.heisenberg_chart([0.0, 0.0, 0.0])
        moved = sphere.SpherePoint(A @ origin.rep)
        assert moved.equals(sphere.heisenberg_chart(p))


def test_contact_form_value():
    assert sphere.contact_form_value([1.0, 2.0, 0.0], [0.5, -1.0, 3.0]) == 3.0 + 1.0 * -1.0 - 2.0 * 0.5


def test_torus_rotation_in_group():
    for t1, t2 in [(0.3, 1.1), (2.0, -0.7), (np.pi, np.pi / 3)]:
        A = sphere.torus_rotation(t1, t2)
        assert core.is_group_element(A, tol=1e-10)
    both = sphere.torus_rotation(0.3, 0.0) @ sphere.torus_rotation(0.0, 1.1)
    assert np.allclose(both, sphere.torus_rotation(0.3, 1.1), atol=1e-12)


def test_cyclide_contains_torus_orbit_of_slice():
    rho = 0.7
    seed = sphere.SpherePoint(sphere.slice_point(rho))
    for t1, t2 in [(0.4, 0.0), (1.7, 2.1), (3.9, -0.5)]:
        moved = sphere.SpherePoint(sphere.torus_rotation(t1, t2) @ seed.rep)
        p = sphere.heisenberg_projection(moved)
        assert sphere.cyclide_distance(rho, p) < 1e-3


def test_chain_from_normal_is_transversal_ellipse():
    chain = sphere.chain_from_normal(np.array([0.9, 0.7071 + 0.7071j, -1j]))
    # every sample is h-orthogonal to the normal
    lift = curves.lift_curve(chain)
    normal = np.array([0.9, 0.7071 + 0.7071j, -1j])
    pair = np.einsum("j,jk,ik->i", np.conj(normal), core.H_FORM, lift.values)
    assert np.max(np.abs(pair)) < 1e-10
    # the xy-shadow is a circle
    x, y = chain.values[:, 0], chain.values[:, 1]
    radius = np.hypot(x - np.mean(x), y - np.mean(y))
    assert np.ptp(radius) < 1e-9


def test_chain_through_point_and_direction():
    point = [0.2, 0.3, 0.1]
    velocity = [1.0, 0.0, 0.0]
    chain = sphere.chain_through(point, velocity)
    assert np.allclose(chain.values[0], point, atol=1e-12)
    tangent = chain.derivative(1)[0]
    cross = np.cross(tangent, velocity)
    assert np.linalg.norm(cross) < 1e-8
    # all samples share a common h-orthogonal spacelike vector
    lift = curves.lift_curve(chain)
    d1 = lift.derivative(1)
    normal = core.h_orthogonal_complement(lift.values[0], d1[0])
    assert core.causal_character(normal) is core.CausalCharacter.SPACELIKE
    pair = np.einsum("j,jk,ik->i", np.conj(normal), core.H_FORM, lift.values)
    assert np.max(np.abs(pair)) < 1e-6 * np.max(np.abs(lift.values)) * np.linalg.norm(normal)


def test_chain_rejects_legendrian_direction():
    with pytest.raises(errors.LegendrianDirection):
        # dz + x dy - y dx annihilates this velocity at the base point
        sphere.chain_through([1.0, 0.0, 0.0], [1.0, 1.0, -1.0])


def test_chain_normal_must_be_spacelike():
    with pytest.raises(errors.NotSpacelike):
        sphere.ChainSpec(np.array([1.0, 0.0, 0.0], dtype=complex))
