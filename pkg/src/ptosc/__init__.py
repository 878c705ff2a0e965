"""Truncated-basis spectra of PT-symmetrized complex harmonic oscillators.

Builds dense number-basis matrices for two families of non-Hermitian
quadratic Hamiltonians, computes their full spectra with a built-in
complex QR eigensolver, and classifies the leading eigenvalues as real,
conjugate-paired, or stray to decide whether the spectrum is real or
broken at a given auxiliary frequency.
"""

from ptosc.analysis import (
    ClosedFormComparison,
    ConvergenceReport,
    PTDiagnosis,
    Verdict,
    compare_closed_form,
    converged_subset,
    diagnose,
    sweep,
)
from ptosc.eigen import (
    BACKEND,
    Classification,
    SortMode,
    Spectrum,
    classify,
    eigenvalues,
    sort_spectrum,
)
from ptosc.errors import DomainError, EigenConvergenceError
from ptosc.fock import (
    hamiltonian_direct,
    hamiltonian_secondquantized,
    ladder,
    momentum_matrix,
    position_matrix,
)
from ptosc.model import (
    CandidateFrequencies,
    Family,
    FrequencyChoice,
    FrequencyLabel,
    OscillatorSpec,
    QuadraticCoefficients,
    candidate_frequencies,
    closed_form_energy,
    coefficients,
    resolve_frequency,
    variational_frequency,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND",
    "Family",
    "OscillatorSpec",
    "FrequencyLabel",
    "FrequencyChoice",
    "QuadraticCoefficients",
    "CandidateFrequencies",
    "coefficients",
    "candidate_frequencies",
    "variational_frequency",
    "closed_form_energy",
    "resolve_frequency",
    "ladder",
    "position_matrix",
    "momentum_matrix",
    "hamiltonian_direct",
    "hamiltonian_secondquantized",
    "eigenvalues",
    "Spectrum",
    "SortMode",
    "Classification",
    "sort_spectrum",
    "classify",
    "Verdict",
    "PTDiagnosis",
    "diagnose",
    "converged_subset",
    "ConvergenceReport",
    "compare_closed_form",
    "ClosedFormComparison",
    "sweep",
    "DomainError",
    "EigenConvergenceError",
]
