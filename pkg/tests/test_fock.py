"""Truncated ladder-basis operators and Hamiltonian assembly."""

import csv
import math

import numpy as np
import pytest

from ptosc.errors import DomainError
from ptosc.fock import (
    hamiltonian_direct,
    hamiltonian_secondquantized,
    ladder,
    momentum_matrix,
    nonzero_entries,
    position_matrix,
    write_matrix_csv,
)
from ptosc.model import OscillatorSpec, candidate_frequencies

SPECS = (
    OscillatorSpec.momentum_shift(W=10.0, L=5.4),
    OscillatorSpec.momentum_shift(W=5.4, L=10.0),
    OscillatorSpec.coordinate_shift(L=10.0, R=8.0),
    OscillatorSpec.coordinate_shift(L=8.0, R=10.0),
)


def spec_strategy_cases():
    cases = []
    for spec in SPECS:
        for choice in candidate_frequencies(spec).accepted:
            cases.append((spec, choice))
    return cases


class TestLadder:
    def test_entries_are_root_of_level(self):
        lower, raise_ = ladder(6)
        for n in range(1, 6):
            assert lower[n - 1, n] == pytest.approx(math.sqrt(n))
            assert raise_[n, n - 1] == pytest.approx(math.sqrt(n))
        assert np.count_nonzero(lower) == 5
        assert np.count_nonzero(raise_) == 5

    def test_adjoint_relation(self):
        lower, raise_ = ladder(9)
        assert np.array_equal(raise_, lower.conj().T)

    def test_number_operator_is_diagonal_count(self):
        lower, raise_ = ladder(7)
        number = raise_ @ lower
        assert np.count_nonzero(number - np.diag(np.diagonal(number))) == 0
        assert np.diagonal(number) == pytest.approx(np.arange(7.0), rel=1e-15)

    def test_rejects_tiny_basis(self):
        with pytest.raises(DomainError, match="not >= 2"):
            ladder(1)


class TestQuadratureMatrices:
    def test_position_scaling(self):
        x = position_matrix(4, 2.0)
        assert x[0, 1] == pytest.approx(1.0 / math.sqrt(4.0))
        assert np.array_equal(x, x.conj().T)

    def test_momentum_scaling(self):
        p = momentum_matrix(4, 2.0)
        assert p[0, 1] == pytest.approx(-1j * math.sqrt(1.0))
        assert p[1, 0] == pytest.approx(1j * math.sqrt(1.0))
        assert np.allclose(p, p.conj().T, atol=1e-15)

    @pytest.mark.parametrize("n", [2, 5, 10, 100])
    @pytest.mark.parametrize("w", [0.1, 1.0, 8.41665])
    def test_commutator_defect_is_confined_to_corner(self, n, w):
        # [x, p] = i*I except the last diagonal entry, which is i*(1-N)
        x = position_matrix(n, w)
        p = momentum_matrix(n, w)
        expected = 1j * np.eye(n, dtype=np.complex128)
        expected[n - 1, n - 1] = 1j * (1.0 - n)
        assert np.max(np.abs(x @ p - p @ x - expected)) <= 1e-13

    def test_rejects_bad_frequency(self):
        with pytest.raises(DomainError):
            position_matrix(4, 0.0)
        with pytest.raises(DomainError):
            momentum_matrix(4, -1.0)


class TestAssembly:
    @pytest.mark.parametrize("spec,choice", spec_strategy_cases())
    @pytest.mark.parametrize("n", [10, 50, 100])
    def test_direct_equals_ladder_form(self, spec, choice, n):
        a = hamiltonian_direct(spec, choice.w, n)
        b = hamiltonian_secondquantized(spec, choice.w, n)
        scale = max(1.0, float(np.max(np.abs(a))))
        assert np.max(np.abs(a - b)) <= 1e-10 * scale

    def test_sum_root_is_lower_triangular(self):
        spec = SPECS[0]
        w = 15.4
        h = hamiltonian_direct(spec, w, 30)
        scale = float(np.max(np.abs(h)))
        assert np.max(np.abs(np.triu(h, 1))) <= 1e-12 * scale

    def test_negdiff_root_is_upper_triangular(self):
        spec = SPECS[0]
        w = 4.6
        h = hamiltonian_direct(spec, w, 30)
        scale = float(np.max(np.abs(h)))
        assert np.max(np.abs(np.tril(h, -1))) <= 1e-12 * scale

    def test_band_structure_is_pentadiagonal(self):
        # only the diagonal and the two-step bands can be populated
        spec = SPECS[2]
        h = hamiltonian_direct(spec, 1.0, 25)
        mask = np.ones_like(h, dtype=bool)
        for offset in (-2, 0, 2):
            mask &= ~np.eye(25, k=offset, dtype=bool)
        assert np.max(np.abs(h[mask])) == 0.0

    def test_unshifted_case_is_hermitian(self):
        spec = OscillatorSpec.momentum_shift(W=3.0, L=0.0)
        h = hamiltonian_direct(spec, 2.0, 20)
        assert np.max(np.abs(h - h.conj().T)) <= 1e-12

    def test_truncation_corrupts_last_diagonal_entry(self):
        # diagonal reads (2n+1) until the corner, which drops to N-1
        spec = OscillatorSpec.momentum_shift(W=1.0, L=0.0)
        h = hamiltonian_direct(spec, 1.0, 6)
        diag = np.real(np.diagonal(h))
        assert diag[:5] == pytest.approx([1, 3, 5, 7, 9], abs=1e-13)
        assert diag[5] == pytest.approx(5.0, abs=1e-13)

    def test_rejects_small_basis(self):
        with pytest.raises(DomainError):
            hamiltonian_direct(SPECS[0], 1.0, 1)


class TestMatrixDump:
    def test_nonzero_entries_of_diagonal_case(self):
        spec = OscillatorSpec.momentum_shift(W=1.0, L=0.0)
        h = hamiltonian_direct(spec, 1.0, 5)
        entries = nonzero_entries(h)
        assert [(r, c) for r, c, _, _ in entries] == [
            (0, 0), (1, 1), (2, 2), (3, 3), (4, 4)
        ]
        assert entries[1][2] == pytest.approx(3.0)
        assert entries[1][3] == pytest.approx(0.0)

    def test_csv_round_trip(self, tmp_path):
        spec = SPECS[0]
        h = hamiltonian_direct(spec, 15.4, 8)
        path = tmp_path / "matrix.csv"
        write_matrix_csv(h, str(path))
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["row", "col", "re", "im"]
        got = {
            (int(r), int(c)): complex(float(re), float(im))
            for r, c, re, im in rows[1:]
        }
        for (r, c), value in got.items():
            assert value == pytest.approx(h[r, c], rel=1e-9)
        # lower triangular at the sum root: nothing above the diagonal
        assert all(c <= r for r, c in got)
