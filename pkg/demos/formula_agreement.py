"""Check the closed-form cost formulas against brute-force simulation.

Every (algorithm, family, n, k) cell below is computed twice: once by
serving the sequence request by request, once by evaluating the exact
formula. Run:  python3 demos/formula_agreement.py
"""

from solist import verify_grid


def main():
    report = verify_grid(["mtf", "trans"], ["T1", "T2"], (1, 12), (1, 12))

    print("sample cells (algorithm, family, n, k, simulated, predicted):")
    for cell in report.cells[17::71]:
        flag = "ok" if cell.match else "MISMATCH"
        print(
            f"  {cell.algorithm.value:5s} {cell.family.value} "
            f"n={cell.n:2d} k={cell.k:2d}  {cell.simulated:6d} vs {cell.predicted:6d}  {flag}"
        )

    print()
    print(f"grid: n, k in 1..12, {len(report.cells)} cells")
    print(f"mismatches: {report.mismatch_count}")
    print(f"verdict: {'PASS' if report.passed else 'FAIL'}")


if __name__ == "__main__":
    main()
