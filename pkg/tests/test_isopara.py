"""Symmetrical isoparametric configurations and their closed forms."""

import math
from fractions import Fraction

import numpy as np
import pytest

from crsphere import core, errors, isopara


def test_spectral_ratio_parsing():
    assert isopara.spectral_ratio("-5/7") == Fraction(-5, 7)
    assert isopara.spectral_ratio(Fraction(-5, 6)) == Fraction(-5, 6)
    assert isopara.spectral_ratio(-1) == Fraction(-1)
    for bad in ("-1/3", "-2", "-1/2", "0.7"):
        with pytest.raises((errors.DomainError, ValueError)):
            isopara.spectral_ratio(bad)


def test_first_kind_rho_bound():
    assert abs(isopara.first_kind_rho_bound(Fraction(-5, 6)) - 0.474379186524744) < 1e-12
    with pytest.raises(errors.DomainError):
        isopara.IsoparametricSpec(isopara.FIRST, Fraction(-5, 6), 0.48)


def test_normalization_oracle_reference_values():
    c, sigma = isopara.normalization_oracle(isopara.SECOND, Fraction(-5, 7), 0.7)
    assert abs(c - 2.4380833580723076) < 1e-10
    assert abs(sigma - 0.605535632447164) < 1e-9
    c1, sigma1 = isopara.normalization_oracle(isopara.FIRST, Fraction(-5, 6), 0.47343)
    assert abs(c1 - 0.002737156654123218) < 1e-12
    assert sigma1.real < 0


def test_normalization_identities_at_arbitrary_parameter():
    for kind, r, rho in [
        (isopara.SECOND, Fraction(-5, 7), 0.7),
        (isopara.FIRST, Fraction(-5, 6), 0.3),
        (isopara.SECOND, Fraction(-1), 0.9),
    ]:
        c, sigma = isopara.normalization_oracle(kind, r, rho)
        for s in (0.0, 0.83, 2.9):
            g = [isopara.lift_value(kind, r, rho, c, sigma, s, order=k)[0] for k in range(3)]
            det = np.linalg.det(np.stack(g, axis=-1))
            assert abs(det + 1.0) < 1e-10
            assert abs(core.herm_product(g[0], g[1]) - 1j) < 1e-10


def test_closed_forms_reference_values():
    f = isopara.closed_forms(isopara.SECOND, Fraction(-5, 7), 0.7)
    assert abs(f.mu - 0.70914026919909) < 1e-10
    assert abs(f.kappa - -0.6425434254563307) < 1e-10
    assert abs(f.tau - -3.4925519611566256) < 1e-9
    assert abs(f.omega_lift - 18.039701966971343) < 1e-9
    assert f.knot == (3, 4)
    assert f.spin == Fraction(1, 3)
    assert abs(f.anomaly - 4 * math.pi / 3) < 1e-12
    assert f.maslov == 7
    g = isopara.closed_forms(isopara.FIRST, Fraction(-5, 6), 0.47343)
    assert abs(g.kappa - 0.5000010757) < 1e-8
    assert abs(g.tau - 0.7499967757) < 1e-8
    assert g.knot == (7, -4)
    assert g.spin == Fraction(1)
    assert g.anomaly == 0.0
    assert g.maslov == -1


def test_eigenvalue_ratio_and_pattern():
    f = isopara.closed_forms(isopara.SECOND, Fraction(-5, 7), 0.7)
    e = sorted(f.eigenvalues)
    assert abs(sum(e)) < 1e-9
    assert abs(e[0] / e[2] - float(f.r)) < 1e-9


def test_analyze_classifies_reference_configs():
    f = isopara.closed_forms(isopara.SECOND, Fraction(-5, 7), 0.7)
    analysis = isopara.analyze(f.kappa, f.tau)
    assert analysis.klass == isopara.SECOND_CLASS
    assert analysis.characters == (
        core.CausalCharacter.SPACELIKE,
        core.CausalCharacter.SPACELIKE,
        core.CausalCharacter.TIMELIKE,
    )
    assert abs(analysis.spectral_ratio - float(f.r)) < 1e-8
    g = isopara.closed_forms(isopara.FIRST, Fraction(-5, 6), 0.47343)
    analysis = isopara.analyze(g.kappa, g.tau)
    assert analysis.klass == isopara.FIRST_CLASS
    assert isopara.analyze(0.0, -1.4).klass == isopara.NOT_CLOSABLE


def test_eigenvectors_satisfy_hamiltonian():
    f = isopara.closed_forms(isopara.SECOND, Fraction(-5, 7), 0.7)
    analysis = isopara.analyze(f.kappa, f.tau)
    H = core.hamiltonian(f.kappa, f.tau)
    for e, v in zip(analysis.eigenvalues, analysis.eigenvectors):
        v = np.asarray(v, dtype=complex)
        assert np.max(np.abs(H @ v - e * v)) < 1e-8 * max(1.0, np.max(np.abs(v)))


def test_build_configuration_monodromy_and_meta(conf34, conf34_lift):
    curve, forms = conf34
    assert curve.periodic
    assert abs(curve.period - forms.omega_lift / 3.0) < 1e-12
    eps = curve.meta["lift_monodromy"]
    assert abs(eps - np.exp(4j * np.pi / 3)) < 1e-12
    lift_curve, _ = conf34_lift
    assert lift_curve.meta["lift_monodromy"] == 1.0
    assert abs(lift_curve.period - forms.omega_lift) < 1e-12


def test_spin_anomaly_residue_table():
    assert isopara.spin_anomaly(Fraction(-5, 7)) == (Fraction(1, 3), 4 * math.pi / 3)
    assert isopara.spin_anomaly(Fraction(-7, 5))[0] == Fraction(1, 3)
    assert isopara.spin_anomaly(Fraction(-5, 6)) == (Fraction(1), 0.0)
    assert isopara.spin_anomaly(Fraction(-1)) == (Fraction(1), 0.0)
