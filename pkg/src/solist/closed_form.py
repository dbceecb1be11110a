"""Exact closed-form total-cost evaluators for move-to-front and
transpose on the two repeated-permutation families, under the full cost
model.

Every evaluator works in exact rational arithmetic and asserts that the
result is an integer before returning it; nothing is ever rounded. The
transpose/t1 evaluator dispatches on the parity of n and on whether k is
past the saturation threshold (n/2 passes for even n, (n-1)/2 for odd n)
after which the per-pass cost stops growing.

Case labels: "1" (mtf/t1), "2" (mtf/t2), "3.1a"/"3.1b"/"3.1c"
(trans/t1: below threshold, past threshold with n even, past threshold
with n odd), "3.2a"/"3.2b" (trans/t2: n even, n odd).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidParameterError
from .seqgen import Family

__all__ = [
    "Algorithm",
    "Prediction",
    "mtf_t1",
    "mtf_t2",
    "trans_t1",
    "trans_t2",
    "predict",
    "expected_pass_costs",
]


class Algorithm(Enum):
    """Algorithms that have closed-form cost formulas."""

    MTF = "mtf"
    TRANS = "trans"


@dataclass(frozen=True)
class Prediction:
    """An exact predicted grand total for (algorithm, family, n, k)."""

    algorithm: Algorithm
    family: Family
    n: int
    k: int
    case_id: str
    total: int


def _check_n_k(n: int, k: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k!r}")


def _exact_int(value: Fraction, context: str) -> int:
    # Integrality is provable for every case; a trip here is a bug.
    if value.denominator != 1:
        raise ArithmeticError(f"{context} evaluated to non-integer {value}")
    return int(value)


def mtf_t1(n: int, k: int) -> Prediction:
    """Move-to-front on the ascending family: (n^2*(2k - 1) + n) / 2.

    The first pass costs n(n+1)/2 and every later pass costs n^2 because
    each pass leaves the list exactly reversed.
    """
    _check_n_k(n, k)
    total = _exact_int(Fraction(n * n * (2 * k - 1) + n, 2), "mtf/t1")
    return Prediction(Algorithm.MTF, Family.T1, n, k, "1", total)


def mtf_t2(n: int, k: int) -> Prediction:
    """Move-to-front on the descending family: k * n^2.

    Every request finds its item at the back, and each pass restores the
    initial configuration.
    """
    _check_n_k(n, k)
    return Prediction(Algorithm.MTF, Family.T2, n, k, "2", k * n * n)


def trans_t1(n: int, k: int) -> Prediction:
    """Transpose on the ascending family, dispatched on parity and k.

    Pass i costs n(n+1)/2 + min(i-1, s) where the saturation threshold s
    is n/2 for even n and (n-1)/2 for odd n. Below saturation the sum
    telescopes to k*(n^2 + n + k - 1)/2; past it the steady-state pass
    cost takes over:

      even n, k > n/2:      ((n^2 + 2n)/2) * (4k - 1)/4
      odd n,  k > (n-1)/2:  k*(n^2 + 2n - 1)/2 - (n^2 - 1)/8
    """
    _check_n_k(n, k)
    if n % 2 == 0:
        if k <= n // 2:
            case_id = "3.1a"
            total = Fraction(k * (n * n + n + k - 1), 2)
        else:
            case_id = "3.1b"
            total = Fraction(n * n + 2 * n, 2) * Fraction(4 * k - 1, 4)
    else:
        if k <= (n - 1) // 2:
            case_id = "3.1a"
            total = Fraction(k * (n * n + n + k - 1), 2)
        else:
            case_id = "3.1c"
            total = Fraction(k * (n * n + 2 * n - 1), 2) - Fraction(n * n - 1, 8)
    return Prediction(Algorithm.TRANS, Family.T1, n, k, case_id, _exact_int(total, "trans/t1"))


def trans_t2(n: int, k: int) -> Prediction:
    """Transpose on the descending family: a constant cost per pass.

    Each pass restores the initial configuration, costing (n^2 + 2n)/2
    for even n and (n^2 + 2n - 3)/2 + 1 for odd n.
    """
    _check_n_k(n, k)
    if n % 2 == 0:
        case_id = "3.2a"
        total = Fraction(k * (n * n + 2 * n), 2)
    else:
        case_id = "3.2b"
        total = k * (Fraction(n * n + 2 * n - 3, 2) + 1)
    return Prediction(Algorithm.TRANS, Family.T2, n, k, case_id, _exact_int(total, "trans/t2"))


_EVALUATORS = {
    (Algorithm.MTF, Family.T1): mtf_t1,
    (Algorithm.MTF, Family.T2): mtf_t2,
    (Algorithm.TRANS, Family.T1): trans_t1,
    (Algorithm.TRANS, Family.T2): trans_t2,
}


def as_algorithm(value: Algorithm | str) -> Algorithm:
    if isinstance(value, Algorithm):
        return value
    try:
        return Algorithm(str(value).lower())
    except ValueError:
        raise InvalidParameterError(
            f"unknown algorithm {value!r}; expected one of {[a.value for a in Algorithm]}"
        ) from None


def as_family(value: Family | str) -> Family:
    if isinstance(value, Family):
        return value
    try:
        return Family(str(value).upper())
    except ValueError:
        raise InvalidParameterError(
            f"unknown family {value!r}; expected 'T1' or 'T2'"
        ) from None


def predict(algorithm: Algorithm | str, family: Family | str, n: int, k: int) -> Prediction:
    """Route to the matching evaluator for (algorithm, family)."""
    algorithm = as_algorithm(algorithm)
    family = as_family(family)
    try:
        evaluator = _EVALUATORS[(algorithm, family)]
    except KeyError:
        raise InvalidParameterError(
            f"no closed form for algorithm={algorithm.value} family={family.value}"
        ) from None
    return evaluator(n, k)


def expected_pass_costs(algorithm: Algorithm | str, family: Family | str, n: int, k: int) -> tuple[int, ...]:
    """Per-pass decomposition of the predicted total, full cost model.

    Sums to ``predict(...).total``; used to localize any disagreement
    between a formula and a simulation down to the first divergent pass.
    """
    algorithm = as_algorithm(algorithm)
    family = as_family(family)
    if family not in (Family.T1, Family.T2):
        raise InvalidParameterError(f"no per-pass decomposition for family {family.value}")
    _check_n_k(n, k)
    first = n * (n + 1) // 2
    if algorithm is Algorithm.MTF:
        if family is Family.T1:
            return (first,) + (n * n,) * (k - 1)
        return (n * n,) * k
    if family is Family.T1:
        saturation = n // 2 if n % 2 == 0 else (n - 1) // 2
        return tuple(first + min(i - 1, saturation) for i in range(1, k + 1))
    if n % 2 == 0:
        per_pass = (n * n + 2 * n) // 2
    else:
        per_pass = (n * n + 2 * n - 3) // 2 + 1
    return (per_pass,) * k
