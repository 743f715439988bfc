"""Self-contained Hermitian eigensolver, closed-form spectra, degeneracy census.

The solver runs cyclic complex Jacobi rotations: each sweep visits every
off-diagonal pair (p, q) in a fixed order and applies the unitary plane
rotation that zeroes that entry. Convergence is quadratic and, at the sizes
used here (n <= 64), reaches machine precision within a handful of sweeps.
The fixed sweep order and an explicit eigenvector phase convention (largest
component made real and positive) make the output deterministic.

When numba is installed the sweep kernel is jit-compiled; otherwise the same
code runs as plain Python, slower but bit-for-bit identical in result.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without the extra
    HAVE_NUMBA = False

__all__ = [
    "ConvergenceError",
    "EigenSystem",
    "HAVE_NUMBA",
    "NonHermitianError",
    "closed_form_offsets",
    "degeneracy_census",
    "eigh",
]

MAX_DIMENSION = 64
_SWEEP_TOL = 1e-14
_MAX_SWEEPS = 100


class NonHermitianError(ValueError):
    """Input matrix deviates from Hermitian symmetry beyond the tolerance."""


class ConvergenceError(RuntimeError):
    """The rotation sweeps failed to reach the requested accuracy."""


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Ascending eigenvalues with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    def vector(self, k: int) -> np.ndarray:
        return self.eigenvectors[:, k]


def _jacobi_sweeps(a, v, conv_tol, max_sweeps):
    """Diagonalize Hermitian ``a`` in place, accumulating rotations into ``v``.

    Returns the number of sweeps used, or -1 if ``max_sweeps`` was exhausted.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off2 += abs(a[p, q]) ** 2
        if math.sqrt(2.0 * off2) <= conv_tol:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                # tan(theta) for the smaller-angle root of the zeroing condition
                tau = (app - aqq) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                w = (t * c) * (apq / r)
                wc = w.conjugate()
                for k in range(n):
                    bp = a[p, k]
                    bq = a[q, k]
                    a[p, k] = c * bp + w * bq
                    a[q, k] = -wc * bp + c * bq
                for k in range(n):
                    cp = a[k, p]
                    cq = a[k, q]
                    a[k, p] = c * cp + wc * cq
                    a[k, q] = -w * cp + c * cq
                for k in range(n):
                    vp = v[k, p]
                    vq = v[k, q]
                    v[k, p] = c * vp + wc * vq
                    v[k, q] = -w * vp + c * vq
    return -1


if HAVE_NUMBA:
    _jacobi_sweeps = njit(cache=True)(_jacobi_sweeps)


def _fix_phases(vectors: np.ndarray) -> None:
    """Rotate each column so its largest-magnitude component is real positive."""
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        top = col[int(np.argmax(np.abs(col)))]
        mag = abs(top)
        if mag > 0.0:
            col *= top.conjugate() / mag


def eigh(matrix: np.ndarray, herm_tol: float = 1e-12) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix of dimension <= 64.

    ``herm_tol`` bounds the admissible Hermiticity defect relative to the
    largest entry magnitude; anything beyond is rejected.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    if n > MAX_DIMENSION:
        raise ValueError(f"dimension {n} exceeds the supported maximum {MAX_DIMENSION}")

    scale = float(np.max(np.abs(m)))
    defect = float(np.max(np.abs(m - m.conj().T)))
    if defect > herm_tol * max(scale, 1.0):
        raise NonHermitianError(
            f"matrix is not Hermitian: defect {defect:.3e} exceeds tolerance"
        )

    work = (m + m.conj().T) / 2.0  # symmetrize roundoff-level asymmetry away
    vectors = np.eye(n, dtype=np.complex128)
    if n > 1 and scale > 0.0:
        sweeps = _jacobi_sweeps(work, vectors, _SWEEP_TOL * scale, _MAX_SWEEPS)
        if sweeps < 0:
            raise ConvergenceError(f"no convergence within {_MAX_SWEEPS} sweeps")

    values = np.diag(work).real.copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    _fix_phases(vectors)
    values.flags.writeable = False
    vectors.flags.writeable = False

    residual = float(np.max(np.abs(m @ vectors - vectors * values)))
    if residual > 1e-10 * max(scale, 1.0):
        raise ConvergenceError(f"residual {residual:.3e} exceeds bound")
    return EigenSystem(values, vectors)


_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)

_OFFSETS: dict[int, tuple[float, ...]] = {
    1: (0.0,),
    2: (-1.0, 1.0),
    3: (-_SQRT3, 0.0, _SQRT3),
    4: (-(1.0 + _SQRT2), 1.0 - _SQRT2, _SQRT2 - 1.0, 1.0 + _SQRT2),
    6: (
        -(1.0 + _SQRT3),
        -1.0,
        1.0 - _SQRT3,
        _SQRT3 - 1.0,
        1.0,
        1.0 + _SQRT3,
    ),
}


def closed_form_offsets(n: int) -> tuple[float, ...]:
    """Sorted eigenvalue offsets of a size-``n`` synonym block, in units of ``a``.

    Every block of the same size shares one offset family:
    size 2 gives {-1, +1}, size 3 gives {-sqrt3, 0, +sqrt3}, size 4 gives
    {+-(1+-sqrt2)}, size 6 gives {+-1, +-(1+sqrt3), +-(sqrt3-1)}.
    """
    try:
        return _OFFSETS[n]
    except KeyError:
        raise ValueError(f"no synonym-block family of size {n}") from None


def degeneracy_census(eigenvalues, tol: float | None = None) -> dict[int, int]:
    """Histogram mapping multiplicity to the number of eigenvalue clusters.

    Eigenvalues whose neighbouring gap is at most ``tol`` belong to one
    cluster; the default tolerance is 1e-8 of the spectral range.
    """
    values = np.sort(np.asarray(eigenvalues, dtype=float))
    if values.size == 0:
        return {}
    if tol is None:
        tol = 1e-8 * float(values[-1] - values[0])
    sizes = []
    run = 1
    for k in range(1, values.size):
        if values[k] - values[k - 1] <= tol:
            run += 1
        else:
            sizes.append(run)
            run = 1
    sizes.append(run)
    return dict(sorted(Counter(sizes).items()))
