"""Deal a secret over GF(q), then reconstruct it from every minimal access set."""

import argparse
import random
import time

from mincode import sss
from mincode.construction import CodeDescriptor


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-q", type=int, default=3)
    ap.add_argument("-m", type=int, default=4)
    ap.add_argument("-k", type=int, default=2)
    ap.add_argument("--secret", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    inst = sss.make_instance(CodeDescriptor.from_q(args.q, args.m, args.k))
    bundle = sss.deal(inst, args.secret, seed=args.seed)
    sets = sss.enumerate_minimal_access_sets(inst)
    sizes = sorted({len(A) for A in sets})
    ok = sum(sss.reconstruct(inst, A, bundle.restrict(A)) == args.secret for A in sets)
    print(f"participants={len(inst.participants)} minimal_sets={len(sets)} sizes={sizes}")
    print(f"recovered the secret from {ok}/{len(sets)} minimal sets")

    rng = random.Random(args.seed)
    A = sets[rng.randrange(len(sets))]
    drop = rng.choice(list(A))
    B = A.without(drop)
    print(f"dropping P{drop} from a set of {len(A)}: authorized={sss.is_authorized(inst, B)} "
          f"perfect={sss.perfectness_check(inst, B, bundle.shares)}")
    print(f"elapsed {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
