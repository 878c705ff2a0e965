"""Spectrum diagnosis: reality verdicts, convergence, closed forms, sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from ptosc import fock
from ptosc.eigen import (
    DEFAULT_TOL_REAL,
    Classification,
    SortMode,
    Spectrum,
    classify,
    eigenvalues,
    sort_values,
)
from ptosc.errors import DomainError, EigenConvergenceError
from ptosc.model import (
    Family,
    FrequencyChoice,
    FrequencyLabel,
    OscillatorSpec,
    closed_form_energy,
    resolve_frequency,
)

__all__ = [
    "Verdict",
    "PTDiagnosis",
    "diagnose",
    "ConvergenceRecord",
    "ConvergenceReport",
    "converged_subset",
    "ComparisonRow",
    "ClosedFormComparison",
    "compare_closed_form",
    "SweepPoint",
    "sweep",
]

DEFAULT_BASIS_SIZE = 100
DEFAULT_EXAMINED_COUNT = 40


class Verdict(str, Enum):
    """Reality pattern of the examined leading spectrum.

    BROKEN as soon as one conjugate pair is present.  The all-real
    verdicts require strictly uniform sign; any other all-real pattern,
    and any stray-containing pattern without pairs (including exact
    zeros), falls into the MIXED_REAL catch-all so that every outcome
    is representable.
    """

    ALL_REAL_POSITIVE = "all-real-positive"
    ALL_REAL_NEGATIVE = "all-real-negative"
    BROKEN = "broken"
    MIXED_REAL = "mixed-real"


def _verdict_from(classification: Classification) -> Verdict:
    if classification.pairs:
        return Verdict.BROKEN
    if not classification.strays:
        reals = classification.reals
        if all(v > 0 for v in reals):
            return Verdict.ALL_REAL_POSITIVE
        if all(v < 0 for v in reals):
            return Verdict.ALL_REAL_NEGATIVE
    return Verdict.MIXED_REAL


@dataclass(frozen=True)
class PTDiagnosis:
    """Outcome of examining the leading spectrum of one configuration."""

    spec: OscillatorSpec
    choice: FrequencyChoice
    basis_size: int
    examined_count: int
    tol_real: float
    spectrum: Spectrum
    evidence: Spectrum
    classification: Classification
    verdict: Verdict


def diagnose(
    spec: OscillatorSpec,
    choice: FrequencyChoice,
    basis_size: int = DEFAULT_BASIS_SIZE,
    examined_count: int = DEFAULT_EXAMINED_COUNT,
    tol_real: float = DEFAULT_TOL_REAL,
) -> PTDiagnosis:
    """Assemble, solve, and classify the leading spectrum.

    The Hamiltonian is assembled by direct operator products at the
    chosen frequency, all basis_size eigenvalues are computed, the
    spectrum is ordered by magnitude, and the first examined_count
    values are classified into reals, conjugate pairs, and strays.
    """
    if not 1 <= examined_count <= basis_size:
        raise DomainError(
            "examined_count = %d not in 1..%d" % (examined_count, basis_size)
        )
    h = fock.hamiltonian_direct(spec, choice.w, basis_size)
    values = eigenvalues(h)
    spectrum = Spectrum.from_values(values, SortMode.BY_MAGNITUDE)
    evidence = spectrum.head(examined_count)
    classification = classify(evidence, tol_real)
    return PTDiagnosis(
        spec=spec,
        choice=choice,
        basis_size=basis_size,
        examined_count=examined_count,
        tol_real=tol_real,
        spectrum=spectrum,
        evidence=evidence,
        classification=classification,
        verdict=_verdict_from(classification),
    )


@dataclass(frozen=True)
class ConvergenceRecord:
    """One matched eigenvalue across two basis sizes."""

    value_small: complex
    value_large: complex
    drift: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Leading-eigenvalue stability between two truncation sizes."""

    size_small: int
    size_large: int
    drift_tol: float
    records: tuple[ConvergenceRecord, ...]
    stable_count: int


def converged_subset(
    spec: OscillatorSpec,
    choice: FrequencyChoice,
    size_small: int,
    size_large: int,
    drift_tol: float = 1e-6,
) -> ConvergenceReport:
    """Match spectra at two sizes and count the stable leading run.

    Both spectra are sorted by real part; each small-basis value is
    paired with its nearest large-basis neighbor (several small values
    may share one neighbor, which keeps truncation-defect duplicates
    from cascading).  stable_count is the length of the leading run
    whose drift stays within drift_tol * max(1, |value|).  Values
    outside that run are truncation artifacts, not converged
    eigenvalues.
    """
    if not 4 <= size_small < size_large:
        raise DomainError(
            "need 4 <= size_small < size_large, got %d, %d"
            % (size_small, size_large)
        )
    ev_small = sort_values(
        eigenvalues(fock.hamiltonian_direct(spec, choice.w, size_small)),
        SortMode.BY_REAL_PART,
    )
    ev_large = sort_values(
        eigenvalues(fock.hamiltonian_direct(spec, choice.w, size_large)),
        SortMode.BY_REAL_PART,
    )
    records = []
    for z in ev_small:
        dist = np.abs(ev_large - z)
        j = int(np.argmin(dist))
        records.append(
            ConvergenceRecord(
                value_small=complex(z),
                value_large=complex(ev_large[j]),
                drift=float(dist[j]),
            )
        )
    stable = 0
    for rec in records:
        if rec.drift <= drift_tol * max(1.0, abs(rec.value_small)):
            stable += 1
        else:
            break
    return ConvergenceReport(
        size_small=size_small,
        size_large=size_large,
        drift_tol=drift_tol,
        records=tuple(records),
        stable_count=stable,
    )


@dataclass(frozen=True)
class ComparisonRow:
    """One computed real eigenvalue against its closed-form partner."""

    n: int
    computed: float
    closed_form: float
    abs_error: float


@dataclass(frozen=True)
class ClosedFormComparison:
    rows: tuple[ComparisonRow, ...]
    partial: bool


_ROOT_LABELS = (
    FrequencyLabel.SUM_ROOT,
    FrequencyLabel.DIFF_ROOT,
    FrequencyLabel.NEG_DIFF_ROOT,
)


def compare_closed_form(diagnosis: PTDiagnosis, count: int) -> ClosedFormComparison:
    """Pair leading real eigenvalues with the triangular closed form.

    Only meaningful for the sum/diff/negdiff roots, where the matrix is
    triangular and (2n + 1) * d / 2 enumerates exact eigenvalues.  The
    computed reals are taken in |value| ascending order.  When fewer
    than ``count`` reals were classified (a broken-spectrum window) the
    available rows are returned with ``partial`` set.
    """
    if diagnosis.choice.label not in _ROOT_LABELS:
        raise DomainError(
            "closed-form comparison applies to sum/diff/negdiff roots, "
            "not %s" % diagnosis.choice.label.value
        )
    if count < 1:
        raise DomainError("count = %d not >= 1" % count)
    reals = sorted(diagnosis.classification.reals, key=abs)
    rows = []
    for n, value in enumerate(reals[:count]):
        reference = closed_form_energy(diagnosis.spec, diagnosis.choice, n)
        rows.append(
            ComparisonRow(
                n=n,
                computed=value,
                closed_form=reference,
                abs_error=abs(value - reference),
            )
        )
    return ClosedFormComparison(rows=tuple(rows), partial=len(rows) < count)


@dataclass(frozen=True)
class SweepPoint:
    """Outcome at one grid point of a parameter sweep.

    Exactly one of diagnosis / rejection / error is populated beyond
    the parameters: rejection records an inadmissible frequency
    strategy, error a solver failure.  Grid order is preserved.
    """

    index: int
    params: Mapping[str, float]
    choice: FrequencyChoice | None
    diagnosis: PTDiagnosis | None
    rejection: str | None
    error: str | None


def sweep(
    family: Family,
    fixed: Mapping[str, float],
    axis: str,
    values: Sequence[float],
    strategy: FrequencyLabel | str,
    basis_size: int = DEFAULT_BASIS_SIZE,
    examined_count: int = DEFAULT_EXAMINED_COUNT,
    tol_real: float = DEFAULT_TOL_REAL,
    manual_w: float | None = None,
) -> list[SweepPoint]:
    """Diagnose a family along one parameter axis.

    ``fixed`` holds the non-varying parameter (e.g. {"W": 10}), ``axis``
    names the varying one.  Inadmissible strategies and per-point solver
    failures are recorded in their row and the sweep continues.
    """
    points: list[SweepPoint] = []
    for index, value in enumerate(values):
        params = dict(fixed)
        params[axis] = float(value)
        if family is Family.MOMENTUM_SHIFT:
            spec = OscillatorSpec.momentum_shift(
                W=params["W"], L=params.get("L", 0.0)
            )
        else:
            spec = OscillatorSpec.coordinate_shift(
                L=params["L"], R=params.get("R", 0.0)
            )
        try:
            choice = resolve_frequency(spec, strategy, manual_w)
        except DomainError as exc:
            points.append(
                SweepPoint(
                    index=index,
                    params=params,
                    choice=None,
                    diagnosis=None,
                    rejection=str(exc),
                    error=None,
                )
            )
            continue
        try:
            diag = diagnose(
                spec,
                choice,
                basis_size=basis_size,
                examined_count=examined_count,
                tol_real=tol_real,
            )
        except (EigenConvergenceError, DomainError) as exc:
            points.append(
                SweepPoint(
                    index=index,
                    params=params,
                    choice=choice,
                    diagnosis=None,
                    rejection=None,
                    error=str(exc),
                )
            )
            continue
        points.append(
            SweepPoint(
                index=index,
                params=params,
                choice=choice,
                diagnosis=diag,
                rejection=None,
                error=None,
            )
        )
    return points
