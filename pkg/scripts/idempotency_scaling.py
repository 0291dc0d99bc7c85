"""Time the exact idempotency check e_mu^2 = e_mu as |mu| grows.

    python scripts/idempotency_scaling.py --max-n 10
"""

import argparse
import time

from qsphere.bundles import build_e, build_f, is_idempotent


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    print(f"{'n':>3} {'terms':>7} {'e_-n':>9} {'e_n':>9} {'f_-n':>9} {'f_n':>9}  (seconds)")
    for n in range(args.max_n + 1):
        row, terms = [], 0
        for build, mu in ((build_e, -n), (build_e, n), (build_f, -n), (build_f, n)):
            t0 = time.perf_counter()
            x = build(mu)
            ok = is_idempotent(x)
            row.append(f"{time.perf_counter() - t0:9.3f}" if ok else "   FAILED")
            terms = max(terms, sum(len(v.terms) for r in x.entries for v in r))
        print(f"{n:>3} {terms:>7} " + " ".join(row))


if __name__ == "__main__":
    main()
