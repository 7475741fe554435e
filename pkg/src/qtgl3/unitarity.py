"""Numeric specialization of Gram matrices and positivity scans over mu.

Exact Gram entries are evaluated at q = exp(2*pi*i*theta) (theta
rational, so |q| = 1 by construction) and a real mu, then tested for
positive definiteness through the smallest eigenvalue of the
symmetrized matrix.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

HERMITICITY_ERROR = 1e-8
PD_TOLERANCE = 1e-9  # scaled by matrix dimension


@dataclass
class SpecializedGram:
    theta: Fraction
    mu: float
    matrix: np.ndarray
    herm_residual: float


def specialize(gram, theta, mu):
    """Entry-wise evaluation followed by hermitian symmetrization.

    The pre-symmetrization residual is recorded; a residual above
    HERMITICITY_ERROR means the exact entries upstream were not actually
    hermitian, which is a bug, not a rounding issue.
    """
    theta = Fraction(theta)
    n = len(gram.basis)
    m = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            m[i, j] = gram.entries[i][j].evaluate(theta, mu)
    residual = float(np.max(np.abs(m - m.conj().T))) if n else 0.0
    if residual > HERMITICITY_ERROR:
        raise ValueError(f"hermiticity residual {residual:g} exceeds {HERMITICITY_ERROR:g}")
    m = (m + m.conj().T) / 2
    return SpecializedGram(theta=theta, mu=float(mu), matrix=m, herm_residual=residual)


def min_eigenvalue(sg):
    if sg.matrix.shape[0] == 0:
        return float("inf")
    return float(np.linalg.eigvalsh(sg.matrix)[0])


@dataclass
class ScanReport:
    level: tuple
    window: object
    theta: Fraction
    samples: list  # [(mu, min_eig, pd)], sorted by mu
    constraint: object = None

    def to_json(self):
        out = {
            "level": list(self.level),
            "window": self.window,
            "theta": f"{self.theta.numerator}/{self.theta.denominator}",
            "samples": [
                {"mu": mu, "min_eig": eig, "pd": pd} for (mu, eig, pd) in self.samples
            ],
        }
        if self.constraint is not None:
            out["constraint"] = list(self.constraint)
        return out


def worker_count():
    """Parallelism cap from QTW_THREADS (default: serial)."""
    try:
        return max(1, int(os.environ.get("QTW_THREADS", "1")))
    except ValueError:
        return 1


def mu_scan(engine, level, theta, mu_grid, window=None, constraint=None, gram=None):
    """Positive-definiteness report over a mu grid at fixed theta."""
    theta = Fraction(theta)
    if gram is None:
        gram = engine.gram(level, window=window, constraint=constraint)
    dim = len(gram.basis)
    tol = PD_TOLERANCE * dim

    def one(mu):
        eig = min_eigenvalue(specialize(gram, theta, mu))
        return (float(mu), eig, bool(eig > tol))

    mus = sorted(float(m) for m in mu_grid)
    workers = worker_count()
    if workers > 1 and len(mus) > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            samples = list(ex.map(one, mus))
    else:
        samples = [one(m) for m in mus]
    return ScanReport(level=tuple(level), window=gram.window, theta=theta,
                      samples=samples, constraint=gram.constraint)
