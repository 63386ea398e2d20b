"""Collapsed Lauricella sum vs the literal multi-sum.

    python3 benchmarks/bench_lauricella.py
"""

import time

from harmonic_renyi.lauricella import BudgetExceeded, lauricella_F, lauricella_F_naive


def clock(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def main():
    print(f"{'n':>3} {'q':>2} {'collapsed (s)':>14} {'naive (s)':>10}")
    for q in (2, 3, 4):
        for n in (2, 4, 6, 8, 12, 20):
            lauricella_F.cache_clear()
            fast = clock(lauricella_F, n, q)
            try:
                slow = f"{clock(lauricella_F_naive, n, q, 10**6):10.4f}"
            except BudgetExceeded:
                slow = f"{'budget':>10}"
            print(f"{n:>3} {q:>2} {fast:14.5f} {slow}")
    lauricella_F.cache_clear()
    print(f"n=52 q=5 collapsed: {clock(lauricella_F, 52, 5):.4f} s")


if __name__ == "__main__":
    main()
