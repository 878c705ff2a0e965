"""Spectrum container, deterministic sorting, and reality classification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ptosc.errors import DomainError

__all__ = ["SortMode", "Spectrum", "Classification", "sort_spectrum", "classify"]

DEFAULT_TOL_REAL = 1e-6


class SortMode(str, Enum):
    BY_MAGNITUDE = "magnitude"
    BY_REAL_PART = "real"


def _canonical(values) -> np.ndarray:
    """complex128 copy with -0.0 imaginary parts normalized to +0.0."""
    vals = np.array(values, dtype=np.complex128).ravel()
    imag = vals.imag.copy()
    imag[imag == 0.0] = 0.0
    return vals.real + 1j * imag


def sort_values(values, mode: SortMode) -> np.ndarray:
    """Deterministic total order on a multiset of complex values.

    BY_MAGNITUDE: |z| ascending, ties by phase ascending in (-pi, pi],
    with the phase of a negative real taken as +pi.  This reproduces
    the magnitude ordering conventions of common matrix environments.
    BY_REAL_PART: real part ascending, ties by imaginary part.
    """
    vals = _canonical(values)
    if mode is SortMode.BY_MAGNITUDE:
        phase = np.angle(vals)
        neg_real = (vals.real < 0) & (vals.imag == 0.0)
        phase[neg_real] = math.pi
        order = np.lexsort((phase, np.abs(vals)))
    elif mode is SortMode.BY_REAL_PART:
        order = np.lexsort((vals.imag, vals.real))
    else:
        raise DomainError("unknown sort mode %r" % (mode,))
    return vals[order]


@dataclass(frozen=True)
class Spectrum:
    """An ordered multiset of eigenvalues plus its ordering convention."""

    values: tuple[complex, ...]
    mode: SortMode | None = None

    @classmethod
    def from_values(cls, values, mode: SortMode | None = None) -> "Spectrum":
        vals = _canonical(values)
        if mode is not None:
            vals = sort_values(vals, mode)
        return cls(values=tuple(complex(v) for v in vals), mode=mode)

    def __len__(self):
        return len(self.values)

    def head(self, count: int) -> "Spectrum":
        if count < 1 or count > len(self.values):
            raise DomainError(
                "count = %d not in 1..%d" % (count, len(self.values))
            )
        return Spectrum(values=self.values[:count], mode=self.mode)


def sort_spectrum(spectrum: Spectrum, mode: SortMode) -> Spectrum:
    """Re-sort a spectrum under the given mode."""
    return Spectrum.from_values(spectrum.values, mode)


@dataclass(frozen=True)
class Classification:
    """Partition of a value list into reals, conjugate pairs, and strays.

    ``kinds`` parallels the input order: "real", "pair:<k>" (both
    members of pair k), or "stray".
    """

    reals: tuple[float, ...]
    pairs: tuple[tuple[complex, complex], ...]
    strays: tuple[complex, ...]
    kinds: tuple[str, ...] = field(default=())


def classify(spectrum: Spectrum, tol_real: float = DEFAULT_TOL_REAL) -> Classification:
    """Split values into reals, conjugate pairs, and unmatched strays.

    A value is real when |Im z| <= tol_real * max(1, |z|).  The
    remaining values are greedily matched into conjugate pairs
    (|z - conj(y)| <= 2 * tol_real * max(1, |z|)), scanning in
    (re, im) order and taking the nearest available partner; whatever
    stays unmatched is a stray.
    """
    if not tol_real >= 0:
        raise DomainError("tol_real = %g not >= 0" % tol_real)
    vals = list(spectrum.values)
    kinds = ["" for _ in vals]
    reals: list[float] = []
    complex_idx: list[int] = []
    for i, z in enumerate(vals):
        if abs(z.imag) <= tol_real * max(1.0, abs(z)):
            kinds[i] = "real"
            reals.append(z.real)
        else:
            complex_idx.append(i)
    order = sorted(complex_idx, key=lambda i: (vals[i].real, vals[i].imag))
    unused = set(order)
    pairs: list[tuple[complex, complex]] = []
    pair_members: list[tuple[int, int]] = []
    for i in order:
        if i not in unused:
            continue
        z = vals[i]
        limit = 2.0 * tol_real * max(1.0, abs(z))
        best_j = -1
        best_dist = math.inf
        for j in order:
            if j == i or j not in unused:
                continue
            dist = abs(z - vals[j].conjugate())
            if dist < best_dist or (
                dist == best_dist
                and best_j >= 0
                and (vals[j].real, vals[j].imag)
                < (vals[best_j].real, vals[best_j].imag)
            ):
                best_dist = dist
                best_j = j
        if best_j >= 0 and best_dist <= limit:
            unused.discard(i)
            unused.discard(best_j)
            lo_i, hi_i = (i, best_j) if vals[i].imag <= vals[best_j].imag else (best_j, i)
            pairs.append((vals[lo_i], vals[hi_i]))
            pair_members.append((lo_i, hi_i))
    strays = [vals[i] for i in sorted(unused)]
    for i in sorted(unused):
        kinds[i] = "stray"
    # Number pairs by first appearance in the input ordering.
    tagged = sorted(range(len(pairs)), key=lambda k: min(pair_members[k]))
    for rank, k in enumerate(tagged):
        i, j = pair_members[k]
        kinds[i] = "pair:%d" % rank
        kinds[j] = "pair:%d" % rank
    ranked_pairs = [pairs[k] for k in tagged]
    return Classification(
        reals=tuple(reals),
        pairs=tuple(ranked_pairs),
        strays=tuple(strays),
        kinds=tuple(kinds),
    )
