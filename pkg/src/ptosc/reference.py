"""Built-in reference listings for the two bundled comparison tables.

Each block pins one (family, parameters, frequency strategy) cell: the
leading real eigenvalues and conjugate pairs it is expected to show, the
per-row absolute tolerances, and the expected reality verdict.  Values
are stored at the precision they are distributed with: one decimal for
the small reals, two for the pair members.  Triangular-strategy rows
carry tight tolerances (eigensolver precision); variational-strategy
rows carry loose ones (their listing sits in the truncation-sensitive
region).

``run_table`` recomputes every block with the standard recipe (N = 100,
first 40 by magnitude, reality tolerance 1e-6) and reports pass/fail per
row, which is exactly what the ``table1``/``table2`` CLI commands print.
"""

from __future__ import annotations

from dataclasses import dataclass

from ptosc.analysis import Verdict, diagnose
from ptosc.model import (
    Family,
    FrequencyLabel,
    OscillatorSpec,
    resolve_frequency,
)

__all__ = [
    "ReferenceReal",
    "ReferencePair",
    "ReferenceBlock",
    "RowResult",
    "BlockResult",
    "TABLE1_BLOCKS",
    "TABLE2_BLOCKS",
    "run_table",
]


@dataclass(frozen=True)
class ReferenceReal:
    value: float
    tol: float


@dataclass(frozen=True)
class ReferencePair:
    re: float
    im: float  # magnitude of the imaginary part
    tol: float


@dataclass(frozen=True)
class ReferenceBlock:
    table: str
    block: int
    family: Family
    W: float | None
    L: float
    R: float | None
    strategy: FrequencyLabel
    reals: tuple[ReferenceReal, ...]
    pairs: tuple[ReferencePair, ...]
    verdict: Verdict

    def spec(self) -> OscillatorSpec:
        if self.family is Family.MOMENTUM_SHIFT:
            return OscillatorSpec.momentum_shift(W=self.W, L=self.L)
        return OscillatorSpec.coordinate_shift(L=self.L, R=self.R)


def _reals(values, tol):
    return tuple(ReferenceReal(v, tol) for v in values)


TABLE1_BLOCKS: tuple[ReferenceBlock, ...] = (
    ReferenceBlock(
        table="table1",
        block=1,
        family=Family.MOMENTUM_SHIFT,
        W=10.0,
        L=5.4,
        R=None,
        strategy=FrequencyLabel.VARIATIONAL,
        reals=_reals((-10.0, -30.0, -50.0), 1e-2),
        pairs=(ReferencePair(816.4, 28.4, 1.0),),
        verdict=Verdict.BROKEN,
    ),
    ReferenceBlock(
        table="table1",
        block=2,
        family=Family.MOMENTUM_SHIFT,
        W=10.0,
        L=5.4,
        R=None,
        strategy=FrequencyLabel.SUM_ROOT,
        reals=_reals((10.0, 30.0, 50.0, 70.0, 90.0), 1e-6),
        pairs=(),
        verdict=Verdict.ALL_REAL_POSITIVE,
    ),
    ReferenceBlock(
        table="table1",
        block=3,
        family=Family.MOMENTUM_SHIFT,
        W=10.0,
        L=5.4,
        R=None,
        strategy=FrequencyLabel.NEG_DIFF_ROOT,
        reals=_reals((10.0, 30.0, 50.0, 70.0, 90.0), 1e-6),
        pairs=(),
        verdict=Verdict.ALL_REAL_POSITIVE,
    ),
    ReferenceBlock(
        table="table1",
        block=4,
        family=Family.MOMENTUM_SHIFT,
        W=5.4,
        L=10.0,
        R=None,
        strategy=FrequencyLabel.DIFF_ROOT,
        reals=_reals((-5.4, -16.2, -27.0, -37.8), 1e-6),
        pairs=(),
        verdict=Verdict.ALL_REAL_NEGATIVE,
    ),
)

TABLE2_BLOCKS: tuple[ReferenceBlock, ...] = (
    ReferenceBlock(
        table="table2",
        block=1,
        family=Family.COORDINATE_SHIFT,
        W=None,
        L=10.0,
        R=8.0,
        strategy=FrequencyLabel.VARIATIONAL,
        reals=_reals((10.0, 30.0, 50.0), 1e-2),
        pairs=(ReferencePair(409.65, 13.47, 1.0),),
        verdict=Verdict.BROKEN,
    ),
    ReferenceBlock(
        table="table2",
        block=2,
        family=Family.COORDINATE_SHIFT,
        W=None,
        L=10.0,
        R=8.0,
        strategy=FrequencyLabel.SUM_ROOT,
        reals=_reals((10.0, 30.0, 50.0, 70.0, 90.0), 1e-6),
        pairs=(),
        verdict=Verdict.ALL_REAL_POSITIVE,
    ),
    ReferenceBlock(
        table="table2",
        block=3,
        family=Family.COORDINATE_SHIFT,
        W=None,
        L=10.0,
        R=8.0,
        strategy=FrequencyLabel.DIFF_ROOT,
        reals=_reals((10.0, 30.0, 50.0, 70.0, 90.0), 1e-6),
        pairs=(),
        verdict=Verdict.ALL_REAL_POSITIVE,
    ),
    ReferenceBlock(
        table="table2",
        block=4,
        family=Family.COORDINATE_SHIFT,
        W=None,
        L=8.0,
        R=10.0,
        strategy=FrequencyLabel.NEG_DIFF_ROOT,
        reals=_reals((-8.0, -24.0, -40.0, -56.0), 1e-6),
        pairs=(),
        verdict=Verdict.ALL_REAL_NEGATIVE,
    ),
)


@dataclass(frozen=True)
class RowResult:
    """One reference comparison: a real value, a pair, or the verdict."""

    kind: str  # "real" | "pair" | "verdict"
    label: str
    reference_re: float | None
    reference_im: float | None
    computed_re: float | None
    computed_im: float | None
    abs_error: float | None
    tol: float | None
    passed: bool


@dataclass(frozen=True)
class BlockResult:
    block: ReferenceBlock
    w: float
    rows: tuple[RowResult, ...]
    passed: bool


def _check_block(block: ReferenceBlock, basis_size: int, examined_count: int,
                 tol_real: float) -> BlockResult:
    spec = block.spec()
    choice = resolve_frequency(spec, block.strategy)
    diag = diagnose(
        spec,
        choice,
        basis_size=basis_size,
        examined_count=examined_count,
        tol_real=tol_real,
    )
    reals = sorted(diag.classification.reals, key=abs)
    rows: list[RowResult] = []
    for ref in block.reals:
        if reals:
            nearest = min(reals, key=lambda v: abs(v - ref.value))
            err = abs(nearest - ref.value)
            rows.append(
                RowResult(
                    kind="real",
                    label=format(ref.value, ".10g"),
                    reference_re=ref.value,
                    reference_im=0.0,
                    computed_re=nearest,
                    computed_im=0.0,
                    abs_error=err,
                    tol=ref.tol,
                    passed=err <= ref.tol,
                )
            )
        else:
            rows.append(
                RowResult(
                    kind="real",
                    label=format(ref.value, ".10g"),
                    reference_re=ref.value,
                    reference_im=0.0,
                    computed_re=None,
                    computed_im=None,
                    abs_error=None,
                    tol=ref.tol,
                    passed=False,
                )
            )
    for ref in block.pairs:
        label = "%.10g +/- %.10gi" % (ref.re, ref.im)
        best = None
        best_err = None
        for lo, hi in diag.classification.pairs:
            err = max(abs(hi.real - ref.re), abs(abs(hi.imag) - ref.im))
            if best_err is None or err < best_err:
                best = hi
                best_err = err
        if best is None:
            rows.append(
                RowResult(
                    kind="pair",
                    label=label,
                    reference_re=ref.re,
                    reference_im=ref.im,
                    computed_re=None,
                    computed_im=None,
                    abs_error=None,
                    tol=ref.tol,
                    passed=False,
                )
            )
        else:
            rows.append(
                RowResult(
                    kind="pair",
                    label=label,
                    reference_re=ref.re,
                    reference_im=ref.im,
                    computed_re=best.real,
                    computed_im=abs(best.imag),
                    abs_error=best_err,
                    tol=ref.tol,
                    passed=best_err <= ref.tol,
                )
            )
    rows.append(
        RowResult(
            kind="verdict",
            label=block.verdict.value,
            reference_re=None,
            reference_im=None,
            computed_re=None,
            computed_im=None,
            abs_error=None,
            tol=None,
            passed=diag.verdict is block.verdict,
        )
    )
    return BlockResult(
        block=block,
        w=choice.w,
        rows=tuple(rows),
        passed=all(r.passed for r in rows),
    )


def run_table(table: str, basis_size: int = 100, examined_count: int = 40,
              tol_real: float = 1e-6) -> list[BlockResult]:
    """Recompute one table's blocks and compare against the references."""
    if table == "table1":
        blocks = TABLE1_BLOCKS
    elif table == "table2":
        blocks = TABLE2_BLOCKS
    else:
        raise ValueError("table must be 'table1' or 'table2', got %r" % table)
    return [
        _check_block(b, basis_size, examined_count, tol_real) for b in blocks
    ]
