"""Dense non-Hermitian eigensolver with spectrum utilities.

The solver pipeline is: geometric grading similarity, radix-2 norm
balancing, Householder reduction to upper Hessenberg, then shifted
complex QR iteration with deflation (Wilkinson shifts, an exceptional
shift every tenth stalled sweep, and a hard sweep budget of
``budget_factor * N``).

Two interchangeable kernels implement the Hessenberg/QR stage: a
compiled Cython extension and a pure numpy fallback.  The compiled one
is preferred when importable; set ``PTOSC_EIGEN_BACKEND=python`` or
``=compiled`` to force a choice (forcing ``compiled`` raises if the
extension is missing rather than silently degrading).
"""

from __future__ import annotations

import os

import numpy as np

from ptosc.errors import DomainError, EigenConvergenceError
from ptosc.eigen._prep import (
    balance_similarity,
    grade_similarity,
    isolate_similarity,
)
from ptosc.eigen.spectrum import (
    DEFAULT_TOL_REAL,
    Classification,
    SortMode,
    Spectrum,
    classify,
    sort_spectrum,
    sort_values,
)

__all__ = [
    "BACKEND",
    "eigenvalues",
    "SortMode",
    "Spectrum",
    "Classification",
    "sort_spectrum",
    "sort_values",
    "classify",
    "DEFAULT_TOL_REAL",
    "EigenConvergenceError",
]

_requested = os.environ.get("PTOSC_EIGEN_BACKEND", "").strip().lower()
if _requested in ("", "compiled"):
    try:
        from ptosc.eigen import _solver as _kernel

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise RuntimeError(
                "PTOSC_EIGEN_BACKEND=compiled but the compiled kernel is "
                "not importable; reinstall with a C compiler available"
            )
        from ptosc.eigen import _solver_py as _kernel

        BACKEND = "python"
elif _requested == "python":
    from ptosc.eigen import _solver_py as _kernel

    BACKEND = "python"
else:
    raise RuntimeError(
        "PTOSC_EIGEN_BACKEND=%r not recognized (use 'compiled' or "
        "'python')" % _requested
    )


def eigenvalues(matrix, budget_factor: int = 40) -> np.ndarray:
    """All eigenvalues of a square complex matrix, unordered.

    Parameters
    ----------
    matrix : array_like
        Square, finite.  Real input is promoted to complex128.
    budget_factor : int
        The QR stage may spend at most ``budget_factor * N`` sweeps in
        total before raising EigenConvergenceError.

    Returns
    -------
    numpy.ndarray
        complex128 vector of length N in deflation order; use
        :func:`sort_spectrum` for a deterministic presentation.
    """
    a = np.array(matrix, dtype=np.complex128, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("matrix must be square, got shape %r" % (a.shape,))
    if a.shape[0] == 0:
        raise DomainError("matrix must be at least 1x1")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise DomainError("matrix contains non-finite entries")
    n = a.shape[0]
    if n == 1:
        return a[0, :1].copy()
    ilo, ihi = isolate_similarity(a)
    isolated = np.concatenate(
        [np.diagonal(a)[:ilo], np.diagonal(a)[ihi + 1 :]]
    )
    if ihi <= ilo:
        window_evs = np.diagonal(a)[ilo : ihi + 1].copy()
    else:
        win = np.ascontiguousarray(a[ilo : ihi + 1, ilo : ihi + 1])
        win = grade_similarity(win)
        win = np.ascontiguousarray(win)
        balance_similarity(win)
        window_evs = _kernel.eigvals(win, int(budget_factor) * n)
    return np.concatenate([window_evs, isolated])
