#!/usr/bin/env python3
"""Show the tightness family: balanced complete multipartite (Turan) graphs.

A part of size s contributes s * 1/(n - (n - s)) = 1 to the exact weight
bound, so W(T(n, r)) = r, and the whole chain W = phi = omega = r collapses
to equality across the family.  This script prints the chain over a grid of
(n, r) pairs; the flat column should read yes everywhere.

Usage: python scripts/equality_family.py [--max-n 15] [--max-r 5]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cliquebounds import OracleLimits, clique_number_exact, phi_exact, wei_bound  # noqa: E402
from cliquebounds.generators import turan  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=15)
    parser.add_argument("--max-r", type=int, default=5)
    args = parser.parse_args()

    limits = OracleLimits(max_n_phi=max(12, args.max_n))
    print(f"{'n':>4} {'r':>3} {'W(G)':>8} {'phi':>4} {'omega':>6}  flat")
    for r in range(2, args.max_r + 1):
        for n in range(r, args.max_n + 1):
            g = turan(n, r)
            wei = wei_bound(g)
            phi = phi_exact(g, limits)
            omega = clique_number_exact(g)
            flat = "yes" if wei == phi == omega else ""
            print(f"{n:>4} {r:>3} {str(wei):>8} {phi:>4} {omega:>6}  {flat}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
