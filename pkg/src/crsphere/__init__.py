"""CR invariants of transversal curves in the 3-sphere.

Pseudo-Hermitian linear algebra, the Heisenberg model of the sphere of
null lines, Wilczynski lifts and frames, bending/twist, global knot
invariants via Gaussian linking integrals, symmetrical isoparametric
configurations and the critical curves of the total strain functional.
"""

__version__ = "0.1.0"

from . import (  # noqa: F401
    audit,
    core,
    curves,
    errors,
    frames,
    invariants,
    isopara,
    sampling,
    sphere,
    variational,
)
