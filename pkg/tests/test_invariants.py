"""Maslov index, monodromy and Gaussian linking integrals."""

import math

import numpy as np
import pytest

from crsphere import curves, errors, invariants, isopara, sampling


def circle_pair(offset=(1.0, 0.0, 0.0), n=400):
    """Two unit circles forming a standard linked pair."""
    t = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
    a = np.stack([np.cos(t), np.sin(t), np.zeros_like(t)], axis=1)
    b = np.stack(
        [offset[0] + np.cos(t), offset[1] + np.zeros_like(t), offset[2] + np.sin(t)], axis=1
    )
    make = lambda v: sampling.SampledCurve(
        s=t, values=v, model=sampling.HEISENBERG, periodic=True, period=2 * np.pi
    )
    return make(a), make(b)


def test_maslov_reference_values(conf34_lift, conf74_lift):
    assert invariants.maslov_numeric(conf34_lift[0]) == 7
    assert invariants.maslov_numeric(conf74_lift[0]) == -1


def test_monodromy_reference_values(conf34_lift, conf74_lift):
    curve, forms = conf34_lift
    spin, anomaly = invariants.monodromy(curve, isopara.curve_minimal_period(forms))
    assert spin == "1/3"
    assert abs(anomaly - 4 * math.pi / 3) < 1e-12
    curve, forms = conf74_lift
    spin, anomaly = invariants.monodromy(curve, isopara.curve_minimal_period(forms))
    assert spin == "1"
    assert anomaly == 0.0


def test_gauss_linking_linked_circles():
    a, b = circle_pair()
    result = invariants.gauss_linking(a, b, quadrature=512)
    assert abs(result.rounded) == 1
    assert result.residual < 1e-6
    # symmetry in the two arguments
    swapped = invariants.gauss_linking(b, a, quadrature=512)
    assert abs(result.raw_integral - swapped.raw_integral) < 1e-9


def test_gauss_linking_unlinked_circles():
    a, b = circle_pair(offset=(5.0, 0.0, 0.0))
    result = invariants.gauss_linking(a, b, quadrature=256)
    assert result.rounded == 0
    assert result.residual < 1e-6


def test_gauss_linking_rejects_intersecting_curves():
    a, b = circle_pair(offset=(0.0, 0.0, 0.0))
    with pytest.raises(errors.CurvesIntersect):
        invariants.gauss_linking(a, b, quadrature=128)


def test_bennequin_and_self_linking(heis34, data34):
    beta = invariants.bennequin_estimate(heis34)
    assert beta.rounded == 5
    sl = invariants.self_linking_estimate(data34)
    assert sl.rounded == 12
    # beta = pq - (p + q) and SL = pq for the (3, 4) torus knot
    assert sl.rounded - beta.rounded == 7


def test_pushoffs_stay_disjoint(heis34, data34):
    eps = 0.05
    contact = invariants.contact_pushoff(heis34, eps)
    cr = invariants.cr_pushoff(data34, eps)
    for pushed in (contact, cr):
        gap = np.min(
            np.linalg.norm(pushed.values[:, None, :] - heis34.values[None, :, :], axis=-1)
        )
        assert gap > 1e-6


def test_chi_vanishes_on_axis_curve():
    # a curve with Gamma1 - i Gamma3 identically zero has no Maslov index
    t = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)
    values = np.stack(
        [np.exp(1j * t), np.exp(-2j * t), -1j * np.exp(1j * t)], axis=1
    )
    curve = sampling.SampledCurve(
        s=t, values=values, model=sampling.LIFT, periodic=True, period=2 * np.pi
    )
    with pytest.raises(errors.ChiVanishes):
        invariants.maslov_numeric(curve)
