"""Tabulate the two weight constraints and the corollary region over a parameter range."""

import argparse

from mincode.construction import predict


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5, 7, 9, 11, 13])
    ap.add_argument("--max-m", type=int, default=12)
    args = ap.parse_args()

    exceptions = 0
    print("q,m,k,w_min_formula,constraint1,constraint2,corollary_region")
    for q in args.q:
        for m in range(4, args.max_m + 1):
            for k in range(1, m - 1):
                p = predict(q, m, k)
                if p.corollary_region and not (p.constraint1 and p.constraint2):
                    exceptions += 1
                print(f"{q},{m},{k},{p.w_min_formula},{int(p.constraint1)},{int(p.constraint2)},{int(p.corollary_region)}")
    print(f"# corollary-region descriptors violating a constraint: {exceptions}")


if __name__ == "__main__":
    main()
