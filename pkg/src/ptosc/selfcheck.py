"""Bundled consistency checks: operator algebra, assembly, eigensolver.

Four groups, each reporting a named pass/fail result with a short detail
string:

* commutator defect: the position/momentum commutator equals i times the
  identity except for the known corner entry i*(1 - N) a finite ladder
  basis forces.
* assembly equivalence: the operator-composition build and the
  normal-ordered coefficient build of the Hamiltonian agree entrywise.
* triangular ground truth: whenever one quadratic band vanishes, the
  examined spectrum matches (2n + 1) * d / 2 exactly.
* eigensolver oracles: similarity invariance on seeded random matrices,
  the trace identity, and small cases with pencil-and-paper eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ptosc import eigen
from ptosc.analysis import diagnose
from ptosc.eigen import SortMode, sort_values
from ptosc.fock import (
    hamiltonian_direct,
    hamiltonian_secondquantized,
    momentum_matrix,
    position_matrix,
)
from ptosc.model import (
    Family,
    OscillatorSpec,
    candidate_frequencies,
    coefficients,
)

__all__ = ["CheckResult", "run_all"]

_SPECS = (
    OscillatorSpec.momentum_shift(W=10.0, L=5.4),
    OscillatorSpec.momentum_shift(W=5.4, L=10.0),
    OscillatorSpec.coordinate_shift(L=10.0, R=8.0),
    OscillatorSpec.coordinate_shift(L=8.0, R=10.0),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_commutator_defect() -> CheckResult:
    worst = 0.0
    for n in (2, 5, 10, 100):
        for w in (0.1, 1.0, 8.41665):
            x = position_matrix(n, w)
            p = momentum_matrix(n, w)
            expected = 1j * np.eye(n, dtype=np.complex128)
            expected[n - 1, n - 1] = 1j * (1.0 - n)
            defect = float(np.max(np.abs(x @ p - p @ x - expected)))
            worst = max(worst, defect)
    return CheckResult(
        name="commutator-defect",
        passed=worst <= 1e-13,
        detail="max deviation %.3e over N in {2,5,10,100}, w in {0.1,1,8.41665} (tol 1e-13)"
        % worst,
    )


def check_assembly_equivalence() -> CheckResult:
    worst = 0.0
    for spec in _SPECS:
        for choice in candidate_frequencies(spec).accepted:
            for n in (10, 50, 100):
                a = hamiltonian_direct(spec, choice.w, n)
                b = hamiltonian_secondquantized(spec, choice.w, n)
                scale = max(1.0, float(np.max(np.abs(a))))
                rel = float(np.max(np.abs(a - b))) / scale
                worst = max(worst, rel)
    return CheckResult(
        name="assembly-equivalence",
        passed=worst <= 1e-10,
        detail="max entrywise relative deviation %.3e (tol 1e-10)" % worst,
    )


def check_triangular_ground_truth() -> CheckResult:
    worst = 0.0
    cases = 0
    for spec in _SPECS:
        for choice in candidate_frequencies(spec).accepted:
            q = coefficients(spec, choice.w)
            if q.u != 0.0 and q.v != 0.0:
                continue
            cases += 1
            diag = diagnose(spec, choice)
            law = np.array(
                sort_values(
                    [0.5 * q.d * (2 * k + 1) for k in range(len(diag.evidence))],
                    SortMode.BY_MAGNITUDE,
                )
            )
            got = np.array(diag.evidence.values)
            rel = float(
                np.max(np.abs(got - law) / np.maximum(1.0, np.abs(law)))
            )
            worst = max(worst, rel)
    return CheckResult(
        name="triangular-ground-truth",
        passed=cases > 0 and worst <= 1e-9,
        detail="%d one-sided cases, max relative deviation %.3e (tol 1e-9)"
        % (cases, worst),
    )


def _random_complex(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def _match_multisets(a: np.ndarray, b: np.ndarray) -> float:
    """Greedy nearest matching; max matched distance scaled by magnitude."""
    bb = list(b)
    worst = 0.0
    for z in sort_values(a, SortMode.BY_MAGNITUDE)[::-1]:
        j = int(np.argmin([abs(z - y) for y in bb]))
        worst = max(worst, abs(z - bb[j]) / max(1.0, abs(z)))
        bb.pop(j)
    return worst


def check_eigensolver_similarity() -> CheckResult:
    rng = np.random.default_rng(20260819)
    worst = 0.0
    for _ in range(10):
        n = int(rng.integers(2, 21))
        m = _random_complex(rng, n)
        g = _random_complex(rng, n)
        g += n * np.eye(n)  # keep the change of basis comfortably invertible
        sim = np.linalg.solve(g, m @ g)
        worst = max(
            worst,
            _match_multisets(eigen.eigenvalues(m), eigen.eigenvalues(sim)),
        )
    return CheckResult(
        name="eigensolver-similarity",
        passed=worst <= 1e-7,
        detail="max relative eigenvalue drift %.3e under similarity (tol 1e-7)"
        % worst,
    )


def check_eigensolver_trace() -> CheckResult:
    rng = np.random.default_rng(77)
    worst = 0.0
    mats = [_random_complex(rng, n) for n in (3, 8, 17, 40)]
    mats.append(hamiltonian_direct(_SPECS[0], 8.41665, 60))
    for m in mats:
        n = m.shape[0]
        gap = abs(complex(np.sum(eigen.eigenvalues(m))) - complex(np.trace(m)))
        bound = 1e-8 * float(np.max(np.abs(m))) * n
        worst = max(worst, gap / bound)
    return CheckResult(
        name="eigensolver-trace",
        passed=worst <= 1.0,
        detail="worst trace-identity deviation at %.3e of budget" % worst,
    )


def check_eigensolver_analytic() -> CheckResult:
    worst = 0.0
    diag = np.diag([1.0 + 0j, 3.0, 5.0])
    worst = max(
        worst,
        _match_multisets(eigen.eigenvalues(diag), np.array([1.0, 3.0, 5.0])),
    )
    rot = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=np.complex128)
    worst = max(
        worst,
        _match_multisets(eigen.eigenvalues(rot), np.array([1j, -1j])),
    )
    comp = np.array(
        [[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
        dtype=np.complex128,
    )
    roots = np.exp(2j * math.pi * np.arange(3) / 3.0)
    worst = max(worst, _match_multisets(eigen.eigenvalues(comp), roots))
    return CheckResult(
        name="eigensolver-analytic",
        passed=worst <= 1e-12,
        detail="max deviation %.3e on closed-form cases (tol 1e-12)" % worst,
    )


def run_all() -> list[CheckResult]:
    return [
        check_commutator_defect(),
        check_assembly_equivalence(),
        check_triangular_ground_truth(),
        check_eigensolver_similarity(),
        check_eigensolver_trace(),
        check_eigensolver_analytic(),
    ]
