"""Policy behaviour, checked three ways: frozen examples, a naive
independent oracle, and the pure step/serve equivalence."""

import pytest
from hypothesis import given, settings, strategies as st

from solist import (
    CostModel,
    FrequencyCount,
    InvalidParameterError,
    ItemNotInListError,
    ListState,
    MoveToFront,
    Transpose,
    explicit_sequence,
    gen_t1,
    gen_t2,
    make_policy,
    serve,
)

import reference

POLICIES = {
    "mtf": MoveToFront(),
    "trans": Transpose(),
    "fc": FrequencyCount(),
}


@st.composite
def instance(draw, max_n=6, max_m=24):
    n = draw(st.integers(min_value=1, max_value=max_n))
    perm = draw(st.permutations(list(range(1, n + 1))))
    m = draw(st.integers(min_value=0, max_value=max_m))
    requests = draw(st.lists(st.sampled_from(perm), min_size=m, max_size=m))
    return ListState(tuple(perm)), tuple(requests)


def fold_steps(policy, state, requests, model=CostModel.FULL):
    total = 0
    for item in requests:
        outcome = policy.step(state, item, model)
        total += outcome.cost
        state = outcome.new_state
        policy = outcome.new_policy
    return total, state


def test_trans_step_on_tail_item():
    outcome = Transpose().step(ListState((2, 3, 4, 1)), 1, CostModel.FULL)
    assert outcome.cost == 4
    assert outcome.new_state.order == (2, 3, 1, 4)
    assert outcome.new_policy == Transpose()


def test_mtf_step_on_tail_item():
    outcome = MoveToFront().step(ListState((1, 2, 3, 4)), 4, CostModel.FULL)
    assert outcome.cost == 4
    assert outcome.new_state.order == (4, 1, 2, 3)


def test_fc_step_promotes_past_zero_counters():
    outcome = FrequencyCount().step(ListState((1, 2, 3)), 3, CostModel.FULL)
    assert outcome.cost == 3
    assert outcome.new_state.order == (3, 1, 2)
    assert outcome.new_policy.counter(3) == 1
    assert outcome.new_policy.counter(1) == 0


def test_fc_step_respects_equal_counters():
    # Equal counters block promotion: the accessed item stays behind
    # items whose counter now ties its own.
    policy = FrequencyCount(counters={1: 1, 2: 0, 3: 0})
    outcome = policy.step(ListState((1, 2, 3)), 2, CostModel.FULL)
    assert outcome.new_state.order == (1, 2, 3)
    assert outcome.new_policy.counter(2) == 1


def test_fc_preseeded_counters_control_placement():
    policy = FrequencyCount(counters={1: 5, 2: 0, 3: 0})
    outcome = policy.step(ListState((1, 2, 3)), 3, CostModel.FULL)
    assert outcome.new_state.order == (1, 3, 2)


def test_fc_rejects_bad_counters():
    with pytest.raises(InvalidParameterError):
        FrequencyCount(counters={1: -1})
    with pytest.raises(InvalidParameterError):
        FrequencyCount(counters={1: 1.5})


def test_serve_trans_one_ascending_pass():
    ledger = serve(Transpose(), ListState.initial(4), gen_t1(4, 1))
    assert ledger.grand_total == 10
    assert ledger.per_request == (1, 2, 3, 4)
    assert ledger.final_state.order == (2, 3, 4, 1)


def test_serve_trans_one_descending_pass():
    ledger = serve(Transpose(), ListState.initial(4), gen_t2(4, 1))
    assert ledger.grand_total == 12
    assert ledger.per_request == (4, 4, 2, 2)
    assert ledger.final_state.order == (1, 2, 3, 4)


def test_serve_mtf_two_ascending_passes():
    ledger = serve(MoveToFront(), ListState.initial(4), gen_t1(4, 2))
    assert ledger.grand_total == 26
    assert ledger.pass_totals == (10, 16)
    assert ledger.final_state.order == (4, 3, 2, 1)


def test_serve_empty_sequence_costs_nothing():
    ledger = serve(MoveToFront(), ListState.initial(3), explicit_sequence(()))
    assert ledger.grand_total == 0
    assert ledger.per_request == ()
    assert ledger.final_state.order == (1, 2, 3)


def test_serve_records_pass_end_configs():
    ledger = serve(Transpose(), ListState.initial(4), gen_t2(4, 2))
    assert ledger.pass_end_configs is not None
    assert [s.order for s in ledger.pass_end_configs] == [(1, 2, 3, 4), (1, 2, 3, 4)]


def test_serve_rejects_unknown_model():
    with pytest.raises(InvalidParameterError):
        serve(MoveToFront(), ListState.initial(3), gen_t1(3, 1), model="half")


def test_serve_reports_missing_item_with_request_index():
    seq = explicit_sequence((1, 2, 9))
    with pytest.raises(ItemNotInListError) as exc_info:
        serve(MoveToFront(), ListState.initial(3), seq)
    assert exc_info.value.item == 9
    assert exc_info.value.request_index == 2
    assert "request 2" in str(exc_info.value)


def test_make_policy_accepts_known_names():
    assert make_policy("mtf") == MoveToFront()
    assert make_policy("trans") == Transpose()
    assert make_policy("fc") == FrequencyCount()
    with pytest.raises(InvalidParameterError):
        make_policy("lru")


def test_policy_kind_labels():
    assert MoveToFront().kind == "mtf"
    assert Transpose().kind == "trans"
    assert FrequencyCount().kind == "fc"


@pytest.mark.parametrize("name", ["mtf", "trans", "fc"])
@given(inst=instance())
@settings(max_examples=60)
def test_serve_equals_folded_steps(name, inst):
    state, requests = inst
    ledger = serve(POLICIES[name], state, explicit_sequence(requests))
    total, final = fold_steps(POLICIES[name], state, requests)
    assert ledger.grand_total == total
    assert ledger.final_state == final


@pytest.mark.parametrize("name", ["mtf", "trans", "fc"])
@given(inst=instance())
@settings(max_examples=60)
def test_serve_matches_naive_oracle(name, inst):
    state, requests = inst
    ledger = serve(POLICIES[name], state, explicit_sequence(requests))
    costs, trace = reference.run(name, list(state.order), list(requests))
    assert ledger.per_request == tuple(costs)
    if requests:
        assert ledger.final_state.order == trace[-1]


@pytest.mark.parametrize("name", ["mtf", "trans", "fc"])
@given(inst=instance())
@settings(max_examples=40)
def test_partial_cost_is_full_minus_request_count(name, inst):
    state, requests = inst
    seq = explicit_sequence(requests)
    full = serve(POLICIES[name], state, seq, model=CostModel.FULL)
    partial = serve(POLICIES[name], state, seq, model=CostModel.PARTIAL)
    assert partial.grand_total == full.grand_total - len(requests)
    assert partial.final_state == full.final_state


@pytest.mark.parametrize("name", ["mtf", "trans", "fc"])
@given(inst=instance())
@settings(max_examples=40)
def test_no_paid_exchanges_are_charged(name, inst):
    # All three rules only ever move the accessed item forward, which
    # is free under the full model.
    state, requests = inst
    ledger = serve(POLICIES[name], state, explicit_sequence(requests))
    assert ledger.paid_exchange_total == 0


@pytest.mark.parametrize("name", ["mtf", "trans", "fc"])
@given(inst=instance())
@settings(max_examples=40)
def test_serve_is_deterministic(name, inst):
    state, requests = inst
    seq = explicit_sequence(requests)
    assert serve(POLICIES[name], state, seq) == serve(POLICIES[name], state, seq)


def test_fc_small_trace():
    # Requests 2,2,3 on (1,2,3): costs 2,1,3 then 3 sits behind 2.
    ledger = serve(FrequencyCount(), ListState.initial(3), explicit_sequence((2, 2, 3)))
    assert ledger.per_request == (2, 1, 3)
    assert ledger.grand_total == 6
    assert ledger.final_state.order == (2, 3, 1)


@given(inst=instance())
@settings(max_examples=60)
def test_fc_counters_never_decrease(inst):
    state, requests = inst
    policy = FrequencyCount()
    members = state.order
    for item in requests:
        before = {x: policy.counter(x) for x in members}
        outcome = policy.step(state, item, CostModel.FULL)
        state, policy = outcome.new_state, outcome.new_policy
        assert policy.counter(item) == before[item] + 1
        assert all(policy.counter(x) >= before[x] for x in members)


@given(inst=instance())
@settings(max_examples=60)
def test_fc_keeps_counters_non_increasing_along_list(inst):
    # Starting from all-zero counters the arrangement stays sorted by
    # non-increasing counter after every single access.
    state, requests = inst
    policy = FrequencyCount()
    for item in requests:
        outcome = policy.step(state, item, CostModel.FULL)
        state, policy = outcome.new_state, outcome.new_policy
        along = [policy.counter(x) for x in state.order]
        assert along == sorted(along, reverse=True)


def test_step_does_not_mutate_inputs():
    state = ListState((1, 2, 3, 4))
    policy = FrequencyCount()
    policy.step(state, 4, CostModel.FULL)
    assert state.order == (1, 2, 3, 4)
    assert policy.counter(4) == 0
