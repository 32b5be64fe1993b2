"""List every tau-critical 3-graph of order 3 on at most N vertices, up to isomorphism."""

import argparse
import time
from math import factorial

from hypercrit.core import degrees
from hypercrit.enumeration import MAX_ENUM_VERTICES, UniformEnumerator
from hypercrit.setpairs import bollobas_sum, edge_bound, extract_setpair_system
from hypercrit.transversal import check_tau_critical


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6, help=f"largest vertex count (<= {MAX_ENUM_VERTICES})")
    args = ap.parse_args()
    bound = edge_bound(3, 3)
    worst = 0
    for n in range(3, args.max_n + 1):
        t0 = time.perf_counter()
        E = UniformEnumerator(n, 3)
        total = found = 0
        for cls in E.classes():
            total += 1
            H = E.hypergraph(cls.mask)
            if not check_tau_critical(H, 3, 3).is_critical:
                continue
            found += 1
            live = [d for d in degrees(H).values() if d]
            worst = max(worst, len(H.edges))
            s = bollobas_sum(extract_setpair_system(H))
            print(
                f"n={n} |E|={len(H.edges):2d} support={len(live)} min_deg={min(live)} "
                f"sum={s} labelled_copies={cls.orbit_size(factorial(n))} edges={list(H.edges)}"
            )
        print(f"# n={n}: {found} critical of {total} classes ({time.perf_counter() - t0:.1f}s)")
    print(f"# largest critical edge count {worst}, bound {bound}: {'ok' if worst <= bound else 'VIOLATED'}")


if __name__ == "__main__":
    main()
