"""Shared fixtures: the two reference symmetrical configurations."""

from fractions import Fraction

import pytest

from crsphere import curves, isopara

R34 = Fraction(-5, 7)
RHO34 = 0.7
R74 = Fraction(-5, 6)
RHO74 = 0.47343


@pytest.fixture(scope="session")
def conf34():
    """Second-kind (3,4) configuration sampled over one curve period."""
    spec = isopara.IsoparametricSpec(isopara.SECOND, R34, RHO34)
    return isopara.build_configuration(spec, samples=512)


@pytest.fixture(scope="session")
def conf34_lift():
    """Second-kind (3,4) configuration over one full lift period."""
    spec = isopara.IsoparametricSpec(isopara.SECOND, R34, RHO34)
    return isopara.build_configuration(spec, samples=1536, span="lift")


@pytest.fixture(scope="session")
def conf74():
    """First-kind (7,-4) configuration over one curve period."""
    spec = isopara.IsoparametricSpec(isopara.FIRST, R74, RHO74)
    return isopara.build_configuration(spec, samples=512)


@pytest.fixture(scope="session")
def conf74_lift():
    """First-kind (7,-4) configuration over one full lift period."""
    spec = isopara.IsoparametricSpec(isopara.FIRST, R74, RHO74)
    return isopara.build_configuration(spec, samples=1536, span="lift")


@pytest.fixture(scope="session")
def data34(conf34):
    """Full local-invariant pipeline on the (3,4) configuration."""
    curve, _ = conf34
    return curves.compute_wilczynski(curve)


@pytest.fixture(scope="session")
def heis34(conf34):
    """Heisenberg trajectory of the (3,4) configuration."""
    curve, _ = conf34
    return curves.project_curve(curve)
