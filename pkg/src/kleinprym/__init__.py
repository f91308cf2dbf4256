"""Exact and analytic tools for the genus-3 family
y^2 = (x^4 + a x^2 + 1)(x^4 + b x^2 + 1): quotient curves, marked-tuple
normalisation, the deck involution on parameters, finite symplectic torsion
calculus, Velu isogenies, and Prym period matrices.
"""

from .errors import KleinPrymError
from .algebra import ComplexApprox, Polynomial, Rational
from .projline import MarkedTuple, MarkingConvention, MobiusMap, ProjectivePoint
from .family import CurveLabel, FamilyParams, InvolutionLabel, check_domain
from .moduli import phi_params, prym_fiber_invariants
from .torsion import TorsionPoint, duality_chain, example_surj_report
from .isogeny import KernelPoint, WeierstrassCurve, velu_quotient
from .periods import PeriodPair, PrymPeriodMatrix, elliptic_periods_agm

__version__ = "0.1.0"

__all__ = [
    "KleinPrymError",
    "ComplexApprox", "Polynomial", "Rational",
    "MarkedTuple", "MarkingConvention", "MobiusMap", "ProjectivePoint",
    "CurveLabel", "FamilyParams", "InvolutionLabel", "check_domain",
    "phi_params", "prym_fiber_invariants",
    "TorsionPoint", "duality_chain", "example_surj_report",
    "KernelPoint", "WeierstrassCurve", "velu_quotient",
    "PeriodPair", "PrymPeriodMatrix", "elliptic_periods_agm",
    "__version__",
]
