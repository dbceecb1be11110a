"""Deliberately naive reference implementations, used only as oracles.

Nothing here shares code with the library. Costs come from a literal
front-to-back comparison walk, rearrangements rebuild whole lists, and
the frequency-count rule is realized as a full stable re-sort by
descending counter instead of a forward scan. Slow and obvious on
purpose.
"""


def walk_cost(order, item, model="full"):
    comparisons = 0
    for member in order:
        if member == item:
            return comparisons if model == "partial" else comparisons + 1
        comparisons += 1
    raise AssertionError(f"{item} not in {order}")


def apply_mtf(order, item):
    return [item] + [x for x in order if x != item]


def apply_trans(order, item):
    i = order.index(item)
    if i == 0:
        return list(order)
    out = list(order)
    out[i - 1], out[i] = out[i], out[i - 1]
    return out


def run(rule, order, requests, model="full"):
    """Serve requests naively.

    Returns (per-request costs, configurations after each request).
    """
    order = list(order)
    counters = {x: 0 for x in order}
    costs = []
    trace = []
    for item in requests:
        costs.append(walk_cost(order, item, model))
        if rule == "mtf":
            order = apply_mtf(order, item)
        elif rule == "trans":
            order = apply_trans(order, item)
        elif rule == "fc":
            counters[item] += 1
            order = sorted(order, key=lambda x: -counters[x])  # stable: ties keep order
        else:
            raise AssertionError(f"unknown rule {rule}")
        trace.append(tuple(order))
    return costs, trace
