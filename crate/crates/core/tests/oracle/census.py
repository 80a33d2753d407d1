#!/usr/bin/env python3
"""Generate-and-filter census of semirings on n <= 3 points.

Every n x n table is tested for associativity, and every pair of
associative tables for both distributive laws; no pruning. Isomorphism classes are counted by the least
(add, mul) tuple over all relabellings.

Prints one JSON object per order: {"order", "labelled", "up_to_iso"}.
"""
import itertools
import json
import sys


def tables(n):
    for cells in itertools.product(range(n), repeat=n * n):
        yield cells


def assoc(t, n):
    return all(
        t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]]
        for x in range(n) for y in range(n) for z in range(n)
    )


def distributive(add, mul, n):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                bc = add[b * n + c]
                if mul[a * n + bc] != add[mul[a * n + b] * n + mul[a * n + c]]:
                    return False
                if mul[bc * n + a] != add[mul[b * n + a] * n + mul[c * n + a]]:
                    return False
    return True


def relabel(t, p, n):
    out = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            out[p[x] * n + p[y]] = p[t[x * n + y]]
    return tuple(out)


def census(n):
    semigroups = [t for t in tables(n) if assoc(t, n)]
    labelled = [(a, m) for a in semigroups for m in semigroups if distributive(a, m, n)]
    perms = list(itertools.permutations(range(n)))
    classes = {min(relabel(a, p, n) + relabel(m, p, n) for p in perms) for a, m in labelled}
    return {"order": n, "labelled": len(labelled), "up_to_iso": len(classes)}


if __name__ == "__main__":
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    for n in range(1, top + 1):
        print(json.dumps(census(n)))
