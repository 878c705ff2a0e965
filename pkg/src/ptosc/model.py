"""Oscillator families, auxiliary frequencies, and quadratic coefficients.

Two non-Hermitian quadratic Hamiltonians are supported:

* momentum shift:   H = (p + i*L*x)**2 + W**2 * x**2
* coordinate shift: H = L**2 * p**2 + (x + i*R*p)**2

Written in ladder operators of an auxiliary harmonic frequency w > 0,
either Hamiltonian becomes

    H = d(w) * (a'a + 1/2) + u(w) * a**2 / 2 + v(w) * (a')**2 / 2

with real coefficients d, u, v that depend on the family parameters and
on w.  Frequencies that kill u or v make the matrix representation
triangular, so the exact eigenvalues (2n + 1) * d(w) / 2 can be read off
the diagonal; a separate variational frequency minimizes the diagonal
coefficient d(w) instead.  This module owns that scalar algebra; matrix
assembly lives in :mod:`ptosc.fock`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ptosc.errors import DomainError

__all__ = [
    "Family",
    "OscillatorSpec",
    "FrequencyLabel",
    "FrequencyChoice",
    "QuadraticCoefficients",
    "RejectedFrequency",
    "CandidateFrequencies",
    "coefficients",
    "candidate_frequencies",
    "variational_frequency",
    "closed_form_energy",
    "resolve_frequency",
]


class Family(str, Enum):
    """Which of the two oscillator families a spec describes."""

    MOMENTUM_SHIFT = "momentum"
    COORDINATE_SHIFT = "coordinate"


def _require_finite(name, value):
    if not math.isfinite(value):
        raise DomainError("%s = %r must be finite" % (name, value))
    return float(value)


@dataclass(frozen=True)
class OscillatorSpec:
    """Parameters of one oscillator.

    Momentum-shift specs use ``W`` (potential strength, > 0) and ``L``
    (imaginary momentum shift, >= 0).  Coordinate-shift specs use ``L``
    (kinetic strength, > 0) and ``R`` (imaginary coordinate shift,
    >= 0).  Use the :meth:`momentum_shift` / :meth:`coordinate_shift`
    constructors rather than filling fields by hand.
    """

    family: Family
    W: float | None = None
    L: float = 0.0
    R: float | None = None

    def __post_init__(self):
        if self.family is Family.MOMENTUM_SHIFT:
            if self.W is None:
                raise DomainError("momentum-shift spec requires W")
            if self.R is not None:
                raise DomainError("momentum-shift spec does not take R")
            W = _require_finite("W", self.W)
            L = _require_finite("L", self.L)
            if not W > 0:
                raise DomainError("W = %g not > 0" % W)
            if not L >= 0:
                raise DomainError("L = %g not >= 0" % L)
            object.__setattr__(self, "W", W)
            object.__setattr__(self, "L", L)
        elif self.family is Family.COORDINATE_SHIFT:
            if self.R is None:
                raise DomainError("coordinate-shift spec requires R")
            if self.W is not None:
                raise DomainError("coordinate-shift spec does not take W")
            L = _require_finite("L", self.L)
            R = _require_finite("R", self.R)
            if not L > 0:
                raise DomainError("L = %g not > 0" % L)
            if not R >= 0:
                raise DomainError("R = %g not >= 0" % R)
            object.__setattr__(self, "L", L)
            object.__setattr__(self, "R", R)
        else:
            raise DomainError("unknown family %r" % (self.family,))

    @classmethod
    def momentum_shift(cls, W: float, L: float = 0.0) -> "OscillatorSpec":
        """Spec for H = (p + i*L*x)**2 + W**2 * x**2."""
        return cls(family=Family.MOMENTUM_SHIFT, W=W, L=L)

    @classmethod
    def coordinate_shift(cls, L: float, R: float = 0.0) -> "OscillatorSpec":
        """Spec for H = L**2 * p**2 + (x + i*R*p)**2."""
        return cls(family=Family.COORDINATE_SHIFT, L=L, R=R)


class FrequencyLabel(str, Enum):
    """How an auxiliary frequency was selected."""

    SUM_ROOT = "sum"
    DIFF_ROOT = "diff"
    NEG_DIFF_ROOT = "negdiff"
    VARIATIONAL = "variational"
    MANUAL = "manual"


@dataclass(frozen=True)
class FrequencyChoice:
    """A concrete auxiliary frequency together with its provenance label."""

    label: FrequencyLabel
    w: float

    def __post_init__(self):
        w = _require_finite("w", self.w)
        if not w > 0:
            raise DomainError("w = %g not > 0" % w)
        object.__setattr__(self, "w", w)


@dataclass(frozen=True)
class QuadraticCoefficients:
    """Coefficients of H = d*(a'a + 1/2) + u*a^2/2 + v*(a')^2/2."""

    d: float
    u: float
    v: float


@dataclass(frozen=True)
class RejectedFrequency:
    """A candidate frequency that is undefined for the given parameters."""

    label: FrequencyLabel
    reason: str


@dataclass(frozen=True)
class CandidateFrequencies:
    """Admissible special frequencies plus the rejected ones with reasons."""

    accepted: tuple[FrequencyChoice, ...]
    rejected: tuple[RejectedFrequency, ...]

    def get(self, label: FrequencyLabel) -> FrequencyChoice:
        for choice in self.accepted:
            if choice.label is label:
                return choice
        for rej in self.rejected:
            if rej.label is label:
                raise DomainError(rej.reason)
        raise DomainError("no candidate labeled %s" % label.value)


def coefficients(spec: OscillatorSpec, w: float) -> QuadraticCoefficients:
    """Quadratic ladder coefficients of ``spec`` at auxiliary frequency w.

    Momentum shift (strength W, shift L):

        d = w + (W^2 - L^2)/w
        u = -w + (W^2 - L^2)/w + 2L
        v = -w + (W^2 - L^2)/w - 2L

    Coordinate shift (strength L, shift R):

        d = (L^2 - R^2) w + 1/w
        u = -(L^2 - R^2) w + 1/w + 2R
        v = -(L^2 - R^2) w + 1/w - 2R

    Raises
    ------
    DomainError
        If w is not strictly positive and finite, or if the resulting
        coefficients overflow to non-finite values.
    """
    w = _require_finite("w", w)
    if not w > 0:
        raise DomainError("w = %g not > 0" % w)
    if spec.family is Family.MOMENTUM_SHIFT:
        c = spec.W**2 - spec.L**2
        base = c / w
        d = w + base
        u = -w + base + 2.0 * spec.L
        v = -w + base - 2.0 * spec.L
    else:
        c = spec.L**2 - spec.R**2
        base = 1.0 / w
        d = c * w + base
        u = -c * w + base + 2.0 * spec.R
        v = -c * w + base - 2.0 * spec.R
    for name, val in (("d", d), ("u", u), ("v", v)):
        if not math.isfinite(val):
            raise DomainError(
                "coefficient %s is not finite at w = %g (overflow)" % (name, w)
            )
    return QuadraticCoefficients(d=d, u=u, v=v)


def _accept(out, rejected, label, desc, w):
    """File w under accepted or rejected depending on positivity."""
    if not math.isfinite(w):
        rejected.append(
            RejectedFrequency(label, "%s = %g not finite" % (desc, w))
        )
    elif w > 0:
        out.append(FrequencyChoice(label=label, w=w))
    else:
        rejected.append(
            RejectedFrequency(label, "%s = %g not > 0" % (desc, w))
        )


def candidate_frequencies(spec: OscillatorSpec) -> CandidateFrequencies:
    """All special frequencies of ``spec`` that are positive and finite.

    The sum/diff/negdiff roots zero one of the off-diagonal coefficients
    (u or v) and hence make the matrix representation triangular; the
    variational frequency minimizes the diagonal coefficient d.
    Candidates whose defining expression is not strictly positive are
    returned in the rejection list with the violated inequality spelled
    out, in the fixed order sum, diff, negdiff, variational.
    """
    accepted: list[FrequencyChoice] = []
    rejected: list[RejectedFrequency] = []
    if spec.family is Family.MOMENTUM_SHIFT:
        W, L = spec.W, spec.L
        _accept(accepted, rejected, FrequencyLabel.SUM_ROOT, "w = L + W", L + W)
        _accept(accepted, rejected, FrequencyLabel.DIFF_ROOT, "w = L - W", L - W)
        _accept(
            accepted, rejected, FrequencyLabel.NEG_DIFF_ROOT, "w = W - L", W - L
        )
        gap = W**2 - L**2
        if gap > 0:
            _accept(
                accepted,
                rejected,
                FrequencyLabel.VARIATIONAL,
                "w = sqrt(W^2 - L^2)",
                math.sqrt(gap),
            )
        else:
            rejected.append(
                RejectedFrequency(
                    FrequencyLabel.VARIATIONAL,
                    "W^2 - L^2 = %g not > 0" % gap,
                )
            )
    else:
        L, R = spec.L, spec.R
        if L - R > 0:
            _accept(
                accepted,
                rejected,
                FrequencyLabel.SUM_ROOT,
                "w = 1/(L - R)",
                1.0 / (L - R),
            )
        else:
            rejected.append(
                RejectedFrequency(
                    FrequencyLabel.SUM_ROOT, "L - R = %g not > 0" % (L - R)
                )
            )
        _accept(
            accepted,
            rejected,
            FrequencyLabel.DIFF_ROOT,
            "w = 1/(L + R)",
            1.0 / (L + R),
        )
        if R - L > 0:
            _accept(
                accepted,
                rejected,
                FrequencyLabel.NEG_DIFF_ROOT,
                "w = 1/(R - L)",
                1.0 / (R - L),
            )
        else:
            rejected.append(
                RejectedFrequency(
                    FrequencyLabel.NEG_DIFF_ROOT,
                    "R - L = %g not > 0" % (R - L),
                )
            )
        gap = L**2 - R**2
        if gap > 0:
            _accept(
                accepted,
                rejected,
                FrequencyLabel.VARIATIONAL,
                "w = 1/sqrt(L^2 - R^2)",
                1.0 / math.sqrt(gap),
            )
        else:
            rejected.append(
                RejectedFrequency(
                    FrequencyLabel.VARIATIONAL,
                    "L^2 - R^2 = %g not > 0" % gap,
                )
            )
    return CandidateFrequencies(tuple(accepted), tuple(rejected))


def variational_frequency(spec: OscillatorSpec) -> FrequencyChoice:
    """Frequency minimizing the diagonal coefficient d(w) over w > 0.

    Momentum shift: w = sqrt(W^2 - L^2), defined only for W > L.
    Coordinate shift: w = 1/sqrt(L^2 - R^2), defined only for L > R.

    Raises
    ------
    DomainError
        Naming the violated inequality when the minimizer does not
        exist (d is then unbounded below or attains no interior
        minimum).
    """
    if spec.family is Family.MOMENTUM_SHIFT:
        gap = spec.W**2 - spec.L**2
        if not gap > 0:
            raise DomainError(
                "W^2 - L^2 = %g not > 0 (need W > L for a variational "
                "frequency)" % gap
            )
        return FrequencyChoice(FrequencyLabel.VARIATIONAL, math.sqrt(gap))
    gap = spec.L**2 - spec.R**2
    if not gap > 0:
        raise DomainError(
            "L^2 - R^2 = %g not > 0 (need L > R for a variational "
            "frequency)" % gap
        )
    return FrequencyChoice(FrequencyLabel.VARIATIONAL, 1.0 / math.sqrt(gap))


def closed_form_energy(spec: OscillatorSpec, choice: FrequencyChoice, n: int) -> float:
    """Diagonal energy (2n + 1) * d(w) / 2 at the chosen frequency.

    For the sum/diff/negdiff roots the matrix is triangular and this is
    an exact eigenvalue of the untruncated problem.  For variational or
    manual frequencies it is only the diagonal matrix element in the
    number basis, not an eigenvalue claim.
    """
    if n < 0:
        raise DomainError("n = %d not >= 0" % n)
    d = coefficients(spec, choice.w).d
    return 0.5 * d * (2 * n + 1)


def resolve_frequency(
    spec: OscillatorSpec,
    strategy: FrequencyLabel | str,
    manual_w: float | None = None,
) -> FrequencyChoice:
    """Turn a strategy name into a concrete FrequencyChoice.

    Manual strategy requires ``manual_w``; the named strategies forbid
    it and fail with the candidate's rejection reason when the frequency
    is undefined for ``spec``.
    """
    label = FrequencyLabel(strategy)
    if label is FrequencyLabel.MANUAL:
        if manual_w is None:
            raise DomainError("manual strategy requires an explicit w")
        return FrequencyChoice(FrequencyLabel.MANUAL, manual_w)
    if manual_w is not None:
        raise DomainError(
            "strategy %s does not take an explicit w" % label.value
        )
    return candidate_frequencies(spec).get(label)
