"""Compare the Yamada value with the cabled bracket on seeded random diagrams."""
import argparse
import random
import time

from yamada_skein.cabling import phi_check
from yamada_skein.corpus import random_graph_diagram


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--max-crossings", type=int, default=4)
    ap.add_argument("--max-edges", type=int, default=6)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    start = time.perf_counter()
    failures = 0
    for i in range(args.count):
        D = random_graph_diagram(rng, args.max_crossings, args.max_edges)
        r = phi_check(D)
        if not r.passed:
            failures += 1
            print(f"#{i}: {r.details()}\n{D.to_json()}")
    print(f"{args.count - failures}/{args.count} agree in {time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
