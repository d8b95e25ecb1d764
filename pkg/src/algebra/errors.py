"""
Algebra errors.
Path: src/algebra/errors.py
"""
from typing import Sequence


class AlgebraError(Exception):
    """Base class for the equation kernel"""


class NotApplicable(AlgebraError):
    """The atomic operation has nothing to do on this input"""


class NoRealSolution(AlgebraError):
    pass


class DomainEmpty(AlgebraError):
    """Real roots exist but every one violates the variable's domain"""

    def __init__(self, message: str, roots: Sequence = ()):
        super().__init__(message)
        self.roots = list(roots)


class Inconsistent(AlgebraError):
    """The equation set has no solution; premises is a minimal infeasible subset"""

    def __init__(self, message: str, premises: Sequence = ()):
        super().__init__(message)
        self.premises = list(premises)


class ConversionError(AlgebraError):
    """A literal argument has no numeric meaning"""
