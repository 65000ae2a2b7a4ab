# Exception types shared across the package.

from __future__ import annotations


class EntfracError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(EntfracError):
    """Operands have incompatible or unsupported dimensions."""


class NotHermitianError(EntfracError):
    """Matrix deviates from its adjoint beyond tolerance."""


class NoConvergenceError(EntfracError):
    """An iterative routine hit its iteration cap without converging."""


class NotPsdError(EntfracError):
    """Matrix has a significantly negative eigenvalue."""


class OutOfRangeError(EntfracError, ValueError):
    """A scalar parameter lies outside its documented range."""


class NonOrthonormalEncodingError(EntfracError):
    """Encoding unitaries do not map the reference state to an orthonormal set."""


class DensityMatrixError(EntfracError):
    """A matrix fails one or more density-matrix invariants.

    ``violations`` names each failed invariant, e.g. ``["trace", "positivity"]``.
    """

    def __init__(self, violations: list[str], detail: str = ""):
        self.violations = list(violations)
        msg = "invalid density matrix: " + ", ".join(self.violations)
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class IdentityCheckError(EntfracError):
    """An internal closed-form identity failed; indicates a bug, not bad input."""
