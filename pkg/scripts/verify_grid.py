"""Verify every descriptor in a small grid and print one summary row each."""

import argparse
import itertools
import time
import warnings

from mincode.construction import CodeDescriptor, verify_instance


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--m", type=int, nargs="+", default=[4])
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'q':>3} {'m':>2} {'k':>2} {'alpha':<10} {'minimal':>7} {'w_min':>6} {'w_max':>6} {'ratio':>10} {'ab':>5} {'claims':>6} {'secs':>6}")
    for q, m in itertools.product(args.q, args.m):
        for k in range(1, m - 1):
            for alpha in sorted({(1,) * k, tuple(min(i, q - 1) for i in range(1, k + 1))}):
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    d = CodeDescriptor.from_q(q, m, k, alpha)
                t0 = time.perf_counter()
                r = verify_instance(d, workers=args.workers)
                secs = time.perf_counter() - t0
                print(f"{q:>3} {m:>2} {k:>2} {str(alpha):<10} {str(r.verdict.minimal):>7} {r.ab.w_min:>6} "
                      f"{r.ab.w_max:>6} {str(r.ab.ratio):>10} {str(r.ab.holds):>5} "
                      f"{'ok' if r.passed else 'FAIL':>6} {secs:6.2f}")


if __name__ == "__main__":
    main()
