"""Verification harness: formula-vs-simulation grids, per-pass structural
profiles, and the move-to-front vs transpose crossover scan.

A grid cell simulates one (algorithm, family, n, k) configuration and
compares the simulated grand total with the closed-form prediction.
Under the partial model the prediction is the full-model total minus one
per request, i.e. minus k*n. Cells are assembled deterministically in
(algorithm, family, n, k) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .closed_form import Algorithm, Prediction, as_algorithm, as_family, expected_pass_costs, predict
from .errors import InvalidParameterError, SolistError
from .list_core import CostLedger, CostModel, ListState
from .policies import MoveToFront, Policy, Transpose, serve
from .seqgen import Family, RequestSequence, gen_t1, gen_t2

__all__ = [
    "GridCell",
    "VerificationReport",
    "PassProfile",
    "CrossoverResult",
    "verify_grid",
    "per_pass_profile",
    "crossover",
]

_POLICIES: dict[Algorithm, Policy] = {
    Algorithm.MTF: MoveToFront(),
    Algorithm.TRANS: Transpose(),
}

_GENERATORS: dict[Family, Callable[[int, int], RequestSequence]] = {
    Family.T1: gen_t1,
    Family.T2: gen_t2,
}


@dataclass(frozen=True)
class GridCell:
    """One verified configuration. ``first_divergence`` is the 1-based
    index of the first request of the first pass whose simulated subtotal
    deviates from the predicted per-pass decomposition (None when the
    cell matches, or when every pass subtotal agrees and only the
    bookkeeping differs)."""

    algorithm: Algorithm
    family: Family
    n: int
    k: int
    simulated: int
    predicted: int
    match: bool
    first_divergence: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    algorithms: tuple[Algorithm, ...]
    families: tuple[Family, ...]
    n_range: tuple[int, int]
    k_range: tuple[int, int]
    model: CostModel
    cells: tuple[GridCell, ...]

    @property
    def mismatches(self) -> tuple[GridCell, ...]:
        return tuple(cell for cell in self.cells if not cell.match)

    @property
    def mismatch_count(self) -> int:
        return len(self.mismatches)

    @property
    def passed(self) -> bool:
        return self.mismatch_count == 0


@dataclass(frozen=True)
class PassProfile:
    """Simulated per-pass costs and pass-end configurations (full model)."""

    algorithm: Algorithm
    family: Family
    n: int
    k: int
    pass_costs: tuple[int, ...]
    pass_end_configs: tuple[ListState, ...]


@dataclass(frozen=True)
class CrossoverResult:
    """Smallest repetition count at which transpose strictly beats
    move-to-front, or None if it never does within the searched range."""

    family: Family
    n: int
    k_star: int | None
    searched_k_max: int


def _check_range(bounds: tuple[int, int], name: str) -> tuple[int, int]:
    lo, hi = bounds
    for value in (lo, hi):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise InvalidParameterError(f"{name} bounds must be positive integers, got {bounds!r}")
    if lo > hi:
        raise InvalidParameterError(f"{name} range is empty: {lo}..{hi}")
    return lo, hi


def _simulate(algorithm: Algorithm, family: Family, n: int, k: int, model: CostModel) -> CostLedger:
    sequence = _GENERATORS[family](n, k)
    return serve(_POLICIES[algorithm], ListState.initial(n), sequence, model)


def _first_divergence(
    ledger: CostLedger, algorithm: Algorithm, family: Family, n: int, k: int, model: CostModel
) -> int | None:
    expected = expected_pass_costs(algorithm, family, n, k)
    if model is CostModel.PARTIAL:
        expected = tuple(cost - n for cost in expected)
    for index, (simulated, predicted) in enumerate(zip(ledger.pass_totals, expected)):
        if simulated != predicted:
            return index * n + 1
    return None


def verify_grid(
    algorithms: Iterable[Algorithm | str],
    families: Iterable[Family | str],
    n_range: tuple[int, int],
    k_range: tuple[int, int],
    model: CostModel = CostModel.FULL,
    predictor: Callable[[Algorithm, Family, int, int], Prediction] = predict,
) -> VerificationReport:
    """Compare simulation against prediction on every cell of the grid.

    ``predictor`` defaults to the closed-form evaluators; it is injectable
    so the mismatch-reporting path can be exercised directly.
    """
    algorithms = tuple(as_algorithm(a) for a in algorithms)
    families = tuple(as_family(f) for f in families)
    if not algorithms or not families:
        raise InvalidParameterError("need at least one algorithm and one family")
    for family in families:
        if family not in _GENERATORS:
            raise InvalidParameterError(f"no generated family {family.value}")
    n_lo, n_hi = _check_range(n_range, "n")
    k_lo, k_hi = _check_range(k_range, "k")

    cells = []
    for algorithm in algorithms:
        for family in families:
            for n in range(n_lo, n_hi + 1):
                for k in range(k_lo, k_hi + 1):
                    ledger = _simulate(algorithm, family, n, k, model)
                    simulated = ledger.grand_total
                    predicted = predictor(algorithm, family, n, k).total
                    if model is CostModel.PARTIAL:
                        predicted -= k * n
                    match = simulated == predicted
                    divergence = None
                    if not match:
                        divergence = _first_divergence(ledger, algorithm, family, n, k, model)
                    cells.append(
                        GridCell(algorithm, family, n, k, simulated, predicted, match, divergence)
                    )
    return VerificationReport(
        algorithms=algorithms,
        families=families,
        n_range=(n_lo, n_hi),
        k_range=(k_lo, k_hi),
        model=model,
        cells=tuple(cells),
    )


def per_pass_profile(algorithm: Algorithm | str, family: Family | str, n: int, k: int) -> PassProfile:
    """Full-model per-pass costs and pass-end configurations."""
    algorithm = as_algorithm(algorithm)
    family = as_family(family)
    if family not in _GENERATORS:
        raise InvalidParameterError(f"no generated family {family.value}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k!r}")
    ledger = _simulate(algorithm, family, n, k, CostModel.FULL)
    return PassProfile(
        algorithm=algorithm,
        family=family,
        n=n,
        k=k,
        pass_costs=ledger.pass_totals,
        pass_end_configs=ledger.pass_end_configs,
    )


def crossover(family: Family | str, n: int, k_max: int) -> CrossoverResult:
    """Scan k = 1..k_max for the first strict transpose win.

    Ties do not count as a win. Once a win is found, dominance must
    persist through k_max; the totals are arithmetic-like in k, so a
    broken dominance would mean a defective evaluator.
    """
    family = as_family(family)
    if not isinstance(k_max, int) or isinstance(k_max, bool) or k_max < 1:
        raise InvalidParameterError(f"k_max must be a positive integer, got {k_max!r}")
    k_star = None
    for k in range(1, k_max + 1):
        trans_total = predict(Algorithm.TRANS, family, n, k).total
        mtf_total = predict(Algorithm.MTF, family, n, k).total
        wins = trans_total < mtf_total
        if k_star is None and wins:
            k_star = k
        elif k_star is not None and not wins:
            raise SolistError(
                f"dominance broken at family={family.value} n={n} k={k}: "
                f"transpose won at k={k_star} but not at k={k}"
            )
    return CrossoverResult(family=family, n=n, k_star=k_star, searched_k_max=k_max)
