"""The three reorganization policies: move-to-front, transpose, and
frequency count.

Each policy maps (state, requested item) to (access cost, new state).
Cost is charged at the pre-reorganization position; the reorganization
itself uses only free exchanges, so no policy ever pays for a move.
``step`` performs one access as a pure function; ``serve`` folds a whole
request sequence into a :class:`CostLedger`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .errors import InvalidParameterError, ItemNotInListError
from .list_core import CostLedger, CostModel, ListState
from .seqgen import RequestSequence

__all__ = [
    "AccessOutcome",
    "Policy",
    "MoveToFront",
    "Transpose",
    "FrequencyCount",
    "make_policy",
    "serve",
]

# In-place advance function used by serve's inner loop: moves the item
# inside a working list and returns its 1-based pre-access position.
_Advance = Callable[[list, int], int]


@dataclass(frozen=True)
class AccessOutcome:
    """Result of serving one request: the charged cost, the reorganized
    list, and the policy value to use for the next request (carries the
    updated counters for frequency count)."""

    cost: int
    new_state: ListState
    new_policy: "Policy"


class Policy:
    """Base class for reorganization rules. Policies are immutable values;
    stateful rules (frequency count) return an updated copy from ``step``."""

    kind: str = ""

    def step(self, state: ListState, item: int, model: CostModel = CostModel.FULL) -> AccessOutcome:
        raise NotImplementedError

    def _start_run(self, initial: ListState) -> _Advance:
        raise NotImplementedError


class MoveToFront(Policy):
    """After accessing an item, move it to the front of the list."""

    kind = "mtf"

    def step(self, state: ListState, item: int, model: CostModel = CostModel.FULL) -> AccessOutcome:
        cost = state.access_cost(item, model)
        return AccessOutcome(cost, state.move_to_front(item), self)

    def _start_run(self, initial: ListState) -> _Advance:
        def advance(order: list, item: int) -> int:
            pos = order.index(item)
            if pos:
                order.insert(0, order.pop(pos))
            return pos + 1

        return advance

    def __repr__(self) -> str:
        return "MoveToFront()"

    def __eq__(self, other) -> bool:
        return type(other) is MoveToFront

    def __hash__(self) -> int:
        return hash(MoveToFront)


class Transpose(Policy):
    """After accessing an item, swap it with its immediate predecessor."""

    kind = "trans"

    def step(self, state: ListState, item: int, model: CostModel = CostModel.FULL) -> AccessOutcome:
        cost = state.access_cost(item, model)
        return AccessOutcome(cost, state.transpose_forward(item), self)

    def _start_run(self, initial: ListState) -> _Advance:
        def advance(order: list, item: int) -> int:
            pos = order.index(item)
            if pos:
                order[pos - 1], order[pos] = order[pos], order[pos - 1]
            return pos + 1

        return advance

    def __repr__(self) -> str:
        return "Transpose()"

    def __eq__(self, other) -> bool:
        return type(other) is Transpose

    def __hash__(self) -> int:
        return hash(Transpose)


@dataclass(frozen=True, eq=True)
class FrequencyCount(Policy):
    """Keep the list in non-increasing order of per-item access counters.

    Counters start at 0 unless given. On access the item's counter is
    incremented and the item moves forward past every consecutive
    predecessor whose counter is strictly smaller, stopping at the first
    predecessor with a counter greater than or equal to its own. Ties are
    therefore stable: among equal counters the earlier-promoted item keeps
    its position.
    """

    kind = "fc"
    counters: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for item, count in self.counters.items():
            if not isinstance(count, int) or isinstance(count, bool) or count < 0:
                raise InvalidParameterError(
                    f"counter for item {item} must be a nonnegative integer, got {count!r}"
                )
        object.__setattr__(self, "counters", dict(self.counters))

    def counter(self, item: int) -> int:
        return self.counters.get(item, 0)

    def step(self, state: ListState, item: int, model: CostModel = CostModel.FULL) -> AccessOutcome:
        cost = state.access_cost(item, model)
        counts = {member: self.counters.get(member, 0) for member in state.order}
        counts[item] += 1
        order = list(state.order)
        src = order.index(item)
        dest = src
        while dest > 0 and counts[order[dest - 1]] < counts[item]:
            dest -= 1
        if dest != src:
            order.insert(dest, order.pop(src))
        return AccessOutcome(cost, ListState(tuple(order)), FrequencyCount(counts))

    def _start_run(self, initial: ListState) -> _Advance:
        counts = {member: self.counters.get(member, 0) for member in initial.order}

        def advance(order: list, item: int) -> int:
            src = order.index(item)
            c = counts[item] + 1
            counts[item] = c
            dest = src
            while dest > 0 and counts[order[dest - 1]] < c:
                dest -= 1
            if dest != src:
                order.insert(dest, order.pop(src))
            return src + 1

        return advance


_FACTORIES = {
    "mtf": MoveToFront,
    "trans": Transpose,
    "fc": FrequencyCount,
}


def make_policy(name: str) -> Policy:
    """Build a fresh policy from its short name ('mtf', 'trans', 'fc')."""
    try:
        factory = _FACTORIES[name.lower()]
    except (KeyError, AttributeError):
        raise InvalidParameterError(
            f"unknown policy {name!r}; expected one of {sorted(_FACTORIES)}"
        ) from None
    return factory()


def serve(
    policy: Policy,
    initial: ListState,
    sequence: RequestSequence,
    model: CostModel = CostModel.FULL,
) -> CostLedger:
    """Serve a whole request sequence and return its cost ledger.

    Behaves exactly like folding ``policy.step`` over the requests, but
    runs on a single working copy of the arrangement so that large
    verification grids stay fast. When ``sequence`` declares a pass
    structure, the ledger also records per-pass subtotals and the
    configuration snapshot at every pass boundary.
    """
    if not isinstance(model, CostModel):
        raise InvalidParameterError(f"unknown cost model {model!r}")
    requests = sequence.requests
    order = list(initial.order)
    advance = policy._start_run(initial)
    partial = model is CostModel.PARTIAL

    per_request: list[int] = []
    pass_len = sequence.pass_length
    pass_totals: list[int] | None = [] if pass_len else None
    pass_configs: list[ListState] | None = [] if pass_len else None
    pass_acc = 0

    for index, item in enumerate(requests):
        try:
            pos = advance(order, item)
        except (ValueError, KeyError):
            raise ItemNotInListError(item, request_index=index) from None
        cost = pos - 1 if partial else pos
        per_request.append(cost)
        if pass_len:
            pass_acc += cost
            if (index + 1) % pass_len == 0:
                pass_totals.append(pass_acc)
                pass_configs.append(ListState(tuple(order)))
                pass_acc = 0

    return CostLedger(
        per_request=tuple(per_request),
        access_total=sum(per_request),
        paid_exchange_total=0,
        final_state=ListState(tuple(order)),
        pass_totals=tuple(pass_totals) if pass_totals is not None else None,
        pass_end_configs=tuple(pass_configs) if pass_configs is not None else None,
    )
