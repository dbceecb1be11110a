"""Why the totals have closed forms at all: per-pass regularity.

A repeated-permutation sequence settles into a rhythm after very few
passes. This script shows the three rhythms behind the formulas: the
transpose saturation ramp, the configurations that restore themselves,
and the move-to-front reversal.

Run:  python3 demos/pass_structure.py
"""

from solist import per_pass_profile


def show(algo, family, n, k):
    profile = per_pass_profile(algo, family, n, k)
    print(f"{algo} on {family}, n={n}, k={k}")
    for i, (cost, config) in enumerate(zip(profile.pass_costs, profile.pass_end_configs), 1):
        print(f"  pass {i}: cost {cost:3d}, ends at {config.order}")
    print()


def main():
    # Transpose on ascending scans: each pass costs one more than the
    # last until the ramp saturates at floor(n/2) extra, and from then
    # on every pass ends in the same steady arrangement.
    show("trans", "T1", 6, 7)

    # Descending scans undo themselves. Both rules return the list to
    # its starting arrangement after every pass, so each pass costs the
    # same and the total is linear in k.
    show("trans", "T2", 6, 3)
    show("mtf", "T2", 6, 3)

    # Move-to-front on ascending scans reverses the list in pass one and
    # then keeps re-reversing it, paying the worst case n^2 forever.
    show("mtf", "T1", 6, 4)


if __name__ == "__main__":
    main()
