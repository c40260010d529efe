#!/usr/bin/env python3
"""Folner-box defect decay across amenable families.

For growing box sides L, reports the exact generator Folner defect of the
box, the Reiter l1 norm (identical by construction), and the recomputed
defect of the symmetric-group certificate built from the box by
right-translation fill over a fixed word-metric ball.
"""

import argparse
from fractions import Fraction

from soficlab.almosthom import defect, separation
from soficlab.amenability import folner_box, generator_folner_defect
from soficlab.backends import heisenberg_backend, zpower_backend
from soficlab.balls import ball
from soficlab.constructions import folner_to_sofic

FAMILIES = {
    "z": (zpower_backend(1), (8, 16, 32, 64, 128)),
    "z2": (zpower_backend(2), (4, 8, 16, 32)),
    "heisenberg": (heisenberg_backend(), (4, 6, 8, 10)),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--radius", type=int, default=2, help="ball radius of the certificate domain")
    parser.add_argument("--family", choices=sorted(FAMILIES), action="append",
                        help="repeatable; default: all families")
    args = parser.parse_args()

    for name in args.family or sorted(FAMILIES):
        backend, sides = FAMILIES[name]
        domain = ball(backend, args.radius)
        print(f"{name} (ball radius {args.radius}, {len(domain)} elements)")
        print(f"  {'L':>4} {'|phi|':>7} {'folner defect':>16} {'cert defect':>16} {'cert separation':>16}")
        for L in sides:
            phi = folner_box(backend, L)
            box_defect = generator_folner_defect(phi)
            hom = folner_to_sofic(domain, phi)
            print(
                f"  {L:>4} {len(phi):>7} {str(box_defect):>16}"
                f" {str(defect(hom)):>16} {str(separation(hom)):>16}"
            )
        print()


if __name__ == "__main__":
    main()
