"""Integral homology of real partial flag manifolds of type A via Schubert cells."""

from .errors import DomainError, IntegrityError, InvalidCodeError, NotCoveringError
from .perm import ThetaSet, code, decode, enumerate_min_reps
from .cellular import Chain, ChainComplex, boundary_of, build_complex
from .snf import HomologyGroup, homology, smith_normal_form
from .poincare import free_poincare, mod2_poincare, torsion_poincare

__all__ = [
    "DomainError", "IntegrityError", "InvalidCodeError", "NotCoveringError",
    "ThetaSet", "code", "decode", "enumerate_min_reps",
    "Chain", "ChainComplex", "boundary_of", "build_complex",
    "HomologyGroup", "homology", "smith_normal_form",
    "free_poincare", "mod2_poincare", "torsion_poincare",
]
