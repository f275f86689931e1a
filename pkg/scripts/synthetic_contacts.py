#!/usr/bin/env python3
"""Write a synthetic face-to-face contact stream in KONECT 4-column form.

Visitors arrive in waves, mingle in small groups for a few minutes and leave;
group members log a contact every ``dt`` seconds with probability ``p``.  The
defaults give roughly the size of the Infectious day (410 nodes, ~17k links,
20 s resolution, 8 hours).
"""
import argparse
import random
from itertools import combinations


def generate(nodes, hours, dt, group_max, stay_steps, p, seed):
    rng = random.Random(seed)
    horizon = hours * 3600 // dt
    edges = set()
    people = list(range(1, nodes + 1))
    rng.shuffle(people)
    i = 0
    while i < len(people):
        size = rng.randint(2, group_max)
        group = people[i:i + size]
        i += size
        start = rng.randrange(horizon - stay_steps)
        length = rng.randint(stay_steps // 3, stay_steps)
        for step in range(start, start + length):
            for u, v in combinations(group, 2):
                if rng.random() < p:
                    edges.add((u, v, step * dt))
    return sorted(edges, key=lambda e: (e[2], e[0], e[1]))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out")
    ap.add_argument("--nodes", type=int, default=410)
    ap.add_argument("--hours", type=int, default=8)
    ap.add_argument("--dt", type=int, default=20)
    ap.add_argument("--group-max", type=int, default=5)
    ap.add_argument("--stay-steps", type=int, default=40)
    ap.add_argument("--p", type=float, default=0.45)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    edges = generate(args.nodes, args.hours, args.dt, args.group_max, args.stay_steps, args.p, args.seed)
    t0 = 1246250000
    with open(args.out, "w") as fh:
        fh.write("% sym unweighted\n")
        for u, v, t in edges:
            fh.write(f"{u} {v} 1 {t0 + t}\n")
    print(f"{len(edges)} contacts written to {args.out}")


if __name__ == "__main__":
    main()
