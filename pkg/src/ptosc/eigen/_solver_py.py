"""Pure numpy eigensolver kernel: Hessenberg reduction + shifted QR.

Drop-in twin of the compiled kernel in ``_solver.pyx``; same algorithm,
same error contract, numpy slice arithmetic instead of C loops.  Kept
importable everywhere so the package works without a compiler, at
roughly an order of magnitude slower on 100x100 inputs.

The driver in ``ptosc.eigen`` applies grading and balancing before
calling :func:`eigvals`; the kernel assumes nothing about its input
beyond squareness and finiteness.
"""

from __future__ import annotations

import numpy as np

from ptosc.errors import EigenConvergenceError

_EPS = float(np.finfo(np.float64).eps)


def hessenberg_inplace(a: np.ndarray) -> None:
    """Reduce a (complex, square) to upper Hessenberg form in place.

    Householder reflections applied from both sides; entries below the
    first subdiagonal are zeroed exactly.
    """
    n = a.shape[0]
    for k in range(n - 2):
        col = a[k + 1 :, k]
        norm = np.linalg.norm(col)
        if norm == 0.0:
            continue
        x0 = col[0]
        phase = x0 / abs(x0) if x0 != 0.0 else 1.0
        alpha = -phase * norm
        v = col.copy()
        v[0] -= alpha
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        # A <- P A with P = I - 2 v v^H acting on rows k+1..n-1
        a[k + 1 :, k:] -= 2.0 * np.outer(v, v.conj() @ a[k + 1 :, k:])
        # A <- A P on columns k+1..n-1
        a[:, k + 1 :] -= 2.0 * np.outer(a[:, k + 1 :] @ v, v.conj())
        a[k + 1, k] = alpha
        a[k + 2 :, k] = 0.0


def _givens(x: complex, y: complex) -> tuple[float, complex]:
    """Rotation (c real, s complex) with -conj(s) x + c y = 0."""
    ay = abs(y)
    if ay == 0.0:
        return 1.0, 0.0 + 0.0j
    ax = abs(x)
    if ax == 0.0:
        return 0.0, y.conjugate() / ay
    r = np.hypot(ax, ay)
    c = ax / r
    s = (x / ax) * y.conjugate() / r
    return c, s


def _eig2x2(a: complex, b: complex, c: complex, d: complex) -> tuple[complex, complex]:
    """Eigenvalues of [[a, b], [c, d]], cancellation-safe."""
    s = 0.5 * (a + d)
    z = 0.5 * (a - d)
    disc = np.sqrt(np.complex128(z * z + b * c))
    lam1 = s + disc
    lam2 = s - disc
    # Refine the smaller root through the determinant when possible.
    det = a * d - b * c
    if abs(lam1) >= abs(lam2):
        if lam1 != 0.0:
            lam2 = det / lam1
    else:
        if lam2 != 0.0:
            lam1 = det / lam2
    return lam1, lam2


def _wilkinson_shift(a: np.ndarray, hi: int) -> complex:
    lam1, lam2 = _eig2x2(
        a[hi - 1, hi - 1], a[hi - 1, hi], a[hi, hi - 1], a[hi, hi]
    )
    corner = a[hi, hi]
    if abs(lam1 - corner) <= abs(lam2 - corner):
        return lam1
    return lam2


def _qr_sweep(a: np.ndarray, lo: int, hi: int, shift: complex) -> None:
    """One explicit shifted QR similarity step on the block lo..hi."""
    n = a.shape[0]
    idx = np.arange(lo, hi + 1)
    a[idx, idx] -= shift
    rots: list[tuple[float, complex]] = []
    for k in range(lo, hi):
        c, s = _givens(a[k, k], a[k + 1, k])
        rots.append((c, s))
        t1 = a[k, k:n].copy()
        t2 = a[k + 1, k:n]
        a[k, k:n] = c * t1 + s * t2
        a[k + 1, k:n] = -np.conj(s) * t1 + c * t2
        a[k + 1, k] = 0.0
    for k in range(lo, hi):
        c, s = rots[k - lo]
        top = min(k + 2, hi) + 1
        t1 = a[:top, k].copy()
        t2 = a[:top, k + 1]
        a[:top, k] = c * t1 + np.conj(s) * t2
        a[:top, k + 1] = -s * t1 + c * t2
    a[idx, idx] += shift


def qr_eigvals_inplace(a: np.ndarray, max_sweeps: int) -> np.ndarray:
    """Eigenvalues of an upper Hessenberg matrix by shifted QR.

    Deflates converged 1x1 and 2x2 trailing blocks; Wilkinson shift
    with an exceptional shift every tenth stalled sweep on the same
    block; raises EigenConvergenceError once the total sweep budget is
    spent.
    """
    n = a.shape[0]
    evs = np.empty(n, dtype=np.complex128)
    anorm = float(np.abs(a).sum(axis=0).max()) or 1.0
    hi = n - 1
    sweeps = 0
    stall = 0
    while hi >= 0:
        if hi == 0:
            evs[0] = a[0, 0]
            break
        lo = 0
        for m in range(hi, 0, -1):
            tst = abs(a[m - 1, m - 1]) + abs(a[m, m])
            if tst == 0.0:
                tst = anorm
            if abs(a[m, m - 1]) <= _EPS * tst:
                a[m, m - 1] = 0.0
                lo = m
                break
        if lo == hi:
            evs[hi] = a[hi, hi]
            hi -= 1
            stall = 0
            continue
        if lo == hi - 1:
            lam1, lam2 = _eig2x2(
                a[hi - 1, hi - 1], a[hi - 1, hi], a[hi, hi - 1], a[hi, hi]
            )
            evs[hi] = lam1
            evs[hi - 1] = lam2
            hi -= 2
            stall = 0
            continue
        if sweeps >= max_sweeps:
            raise EigenConvergenceError(lo, hi, sweeps)
        sweeps += 1
        stall += 1
        if stall % 10 == 0:
            shift = a[hi, hi] + 0.75 * abs(a[hi, hi - 1])
        else:
            shift = _wilkinson_shift(a, hi)
        _qr_sweep(a, lo, hi, shift)
    return evs


def eigvals(a: np.ndarray, max_sweeps: int) -> np.ndarray:
    """Eigenvalues of a general complex square matrix (destroys ``a``)."""
    hessenberg_inplace(a)
    return qr_eigvals_inplace(a, max_sweeps)
