"""Truncated number-basis matrix assembly.

All matrices are dense ``numpy.ndarray`` blocks of dtype complex128.
Truncation to N basis states breaks the canonical commutators in the
last corner entry: [a, a'] equals the identity except for (N-1, N-1),
where it is 1 - N, and [x, p] equals i*I except for the same corner,
where it is i*(1 - N).  Tests pin that defect; everything downstream
(spectra at finite N versus closed forms) inherits it.
"""

from __future__ import annotations

import csv

import numpy as np

from ptosc.errors import DomainError
from ptosc.model import Family, OscillatorSpec

__all__ = [
    "ladder",
    "position_matrix",
    "momentum_matrix",
    "hamiltonian_direct",
    "hamiltonian_secondquantized",
    "nonzero_entries",
    "write_matrix_csv",
]


def _check_size(n: int) -> int:
    n = int(n)
    if n < 2:
        raise DomainError("basis size N = %d not >= 2" % n)
    return n


def _check_w(w: float) -> float:
    w = float(w)
    if not np.isfinite(w) or not w > 0:
        raise DomainError("w = %g not > 0 and finite" % w)
    return w


def ladder(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Lowering and raising matrices on an N-state number basis.

    Returns ``(lower, raise_)`` with lower[k-1, k] = sqrt(k) and
    raise_[k, k-1] = sqrt(k), both complex128.
    """
    n = _check_size(n)
    m = np.sqrt(np.arange(1.0, n))
    lower = np.diag(m, 1).astype(np.complex128)
    raise_ = np.diag(m, -1).astype(np.complex128)
    return lower, raise_


def position_matrix(n: int, w: float) -> np.ndarray:
    """x = (a + a') / sqrt(2 w) in the number basis of frequency w."""
    w = _check_w(w)
    lower, raise_ = ladder(n)
    return (lower + raise_) / np.sqrt(2.0 * w)


def momentum_matrix(n: int, w: float) -> np.ndarray:
    """p = i sqrt(w / 2) (a' - a) in the number basis of frequency w."""
    w = _check_w(w)
    lower, raise_ = ladder(n)
    return 1j * np.sqrt(0.5 * w) * (raise_ - lower)


def hamiltonian_direct(spec: OscillatorSpec, w: float, n: int) -> np.ndarray:
    """Assemble the Hamiltonian from x and p matrix products.

    Momentum shift: (p + i L x)^2 + W^2 x^2.
    Coordinate shift: L^2 p^2 + (x + i R p)^2.

    The quadratic terms are formed as literal truncated-matrix products,
    so the result carries the truncation defect of the corner rows.
    """
    x = position_matrix(n, w)
    p = momentum_matrix(n, w)
    if spec.family is Family.MOMENTUM_SHIFT:
        y = p + 1j * spec.L * x
        return y @ y + spec.W**2 * (x @ x)
    z = x + 1j * spec.R * p
    return spec.L**2 * (p @ p) + z @ z


def hamiltonian_secondquantized(
    spec: OscillatorSpec, w: float, n: int
) -> np.ndarray:
    """Assemble the Hamiltonian from its ladder-operator form.

    Builds d*(a'a + aa')/2 + u*a^2/2 + v*(a')^2/2 with coefficients from
    :func:`ptosc.model.coefficients`, using the same truncated ladder
    blocks as the direct route.  The symmetric ordering is what the x/p
    products produce, so the two assemblies agree entrywise, truncation
    defect included; normal ordering would differ at the corner entry
    by d*n/2.
    """
    from ptosc.model import coefficients

    coeff = coefficients(spec, w)
    lower, raise_ = ladder(n)
    h = 0.5 * coeff.d * (raise_ @ lower + lower @ raise_)
    h += 0.5 * coeff.u * (lower @ lower)
    h += 0.5 * coeff.v * (raise_ @ raise_)
    return h


def nonzero_entries(
    matrix: np.ndarray, threshold: float = 1e-14
) -> list[tuple[int, int, float, float]]:
    """(row, col, re, im) for every entry with |entry| > threshold.

    Row-major order.  Useful for inspecting band structure; the CLI
    dumps this listing via :func:`write_matrix_csv`.
    """
    a = np.asarray(matrix)
    rows, cols = np.nonzero(np.abs(a) > threshold)
    return [
        (int(i), int(j), float(a[i, j].real), float(a[i, j].imag))
        for i, j in zip(rows, cols)
    ]


def write_matrix_csv(matrix: np.ndarray, path: str, threshold: float = 1e-14):
    """Write the nonzero-entry listing as CSV with header row,col,re,im."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["row", "col", "re", "im"])
        for row, col, re, im in nonzero_entries(matrix, threshold):
            writer.writerow([row, col, format(re, ".10g"), format(im, ".10g")])
