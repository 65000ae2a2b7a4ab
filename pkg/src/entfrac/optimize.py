# Minimal derivative-free minimizer used by the numeric search routines.
#
# A dependency-light Nelder-Mead keeps per-call overhead low; the campaigns
# call it hundreds of thousands of times on 3..6 parameter objectives.

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class SearchBudget:
    """Effort knobs shared by all numeric maximizers.

    ``starts`` and ``maxiter`` drive the multi-start simplex searches,
    ``grid`` is the hyperspherical scan resolution, ``sweeps`` caps the
    rotation sweeps of the dependency-free symmetric eigensolver, and ``seed``
    fixes the start-point stream so results are reproducible.
    """

    starts: int = 8
    maxiter: int = 150
    grid: tuple[int, int, int] = (18, 18, 36)
    sweeps: int = 30
    seed: int = 0

    @classmethod
    def from_level(cls, level: int) -> "SearchBudget":
        """Preset ladder for the command line: 1 lean, 2 default, 3 thorough."""
        if level <= 1:
            return cls(starts=4, maxiter=80, grid=(10, 10, 20), sweeps=30)
        if level == 2:
            return cls()
        return cls(starts=16, maxiter=300, grid=(24, 24, 48), sweeps=60)

    def with_seed(self, seed: int) -> "SearchBudget":
        return replace(self, seed=seed)


def nelder_mead(
    f,
    x0,
    *,
    step: float = 0.5,
    maxiter: int = 200,
    xatol: float = 1e-8,
    fatol: float = 1e-10,
):
    """Minimize ``f`` from ``x0`` with the Nelder-Mead simplex method.

    Returns ``(x_best, f_best)``.  Fully deterministic: the initial simplex is
    ``x0`` plus ``step`` along each coordinate, and ties are broken by stable
    sorting.  Convergence is declared when the simplex collapses below
    ``xatol`` in every coordinate and the function spread falls below
    ``fatol``; hitting ``maxiter`` returns the best point seen so far.
    """
    x0 = np.asarray(x0, dtype=float)
    n = x0.size
    simplex = np.empty((n + 1, n))
    simplex[0] = x0
    for i in range(n):
        simplex[i + 1] = x0
        simplex[i + 1, i] += step
    fvals = np.array([f(p) for p in simplex])

    for _ in range(maxiter):
        order = np.argsort(fvals, kind="stable")
        simplex = simplex[order]
        fvals = fvals[order]
        if (
            np.max(np.abs(simplex[1:] - simplex[0])) <= xatol
            and fvals[-1] - fvals[0] <= fatol
        ):
            break
        centroid = simplex[:-1].mean(axis=0)
        # Reflection.
        xr = centroid + (centroid - simplex[-1])
        fr = f(xr)
        if fr < fvals[0]:
            # Expansion.
            xe = centroid + 2.0 * (centroid - simplex[-1])
            fe = f(xe)
            if fe < fr:
                simplex[-1], fvals[-1] = xe, fe
            else:
                simplex[-1], fvals[-1] = xr, fr
        elif fr < fvals[-2]:
            simplex[-1], fvals[-1] = xr, fr
        else:
            # Contraction (outside or inside).
            if fr < fvals[-1]:
                xc = centroid + 0.5 * (centroid - simplex[-1])
            else:
                xc = centroid - 0.5 * (centroid - simplex[-1])
            fc = f(xc)
            if fc < min(fr, fvals[-1]):
                simplex[-1], fvals[-1] = xc, fc
            else:
                # Shrink toward the best vertex.
                simplex[1:] = simplex[0] + 0.5 * (simplex[1:] - simplex[0])
                fvals[1:] = [f(p) for p in simplex[1:]]

    best = int(np.argmin(fvals))
    return simplex[best].copy(), float(fvals[best])
