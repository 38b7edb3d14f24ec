"""Critical curves of the total strain functional."""

from fractions import Fraction

import numpy as np
import pytest

from crsphere import curves, errors, isopara, variational


def test_criticality_residual_and_discriminant():
    assert variational.criticality_residual(0.5, -2.25) == 0.0
    kappa = -0.3
    assert abs(
        variational.criticality_discriminant(kappa) - (-27.0 * (1.0 + 32.0 * kappa**3))
    ) < 1e-12


def test_critical_rho_reference_value():
    rho = variational.critical_rho(Fraction(-5, 7))
    assert abs(rho - 0.6759620472778803) < 1e-10
    forms = isopara.closed_forms(isopara.SECOND, Fraction(-5, 7), rho)
    assert abs(forms.tau + 9.0 * forms.kappa**2) < 1e-9
    assert abs(variational.quartic_residual(Fraction(-5, 7), rho)) < 1e-10


def test_critical_config_end_to_end():
    solution, curve, forms = variational.critical_config(3, 4, samples=2048)
    assert solution.r == Fraction(-5, 7)
    assert forms.knot == (3, 4)
    kappa, tau = curves.bending_twist(curve)
    residual = abs(float(np.mean(tau)) + 9.0 * float(np.mean(kappa)) ** 2)
    assert residual < 1e-8


def test_critical_config_rejects_bad_types():
    with pytest.raises(errors.DomainError):
        variational.critical_config(2, 4)
    with pytest.raises(errors.DomainError):
        variational.critical_config(4, 3)


def test_discriminant_on_critical_locus():
    from crsphere import core

    for kappa in (-0.9, -0.5, -0.1, 0.4):
        full = core.cubic_discriminant(kappa, -9.0 * kappa**2)
        assert abs(full - variational.criticality_discriminant(kappa)) < 1e-10 * (1 + abs(full))
