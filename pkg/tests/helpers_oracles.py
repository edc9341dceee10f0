"""Independent oracles for the test suite.

Everything here is deliberately naive: plain loops over all triples,
all subsets, all pairs.  These implementations never share code with the
package so they can serve as independent ground truth.
"""

from __future__ import annotations

import itertools
from collections import Counter


def oracle_associative(table) -> bool:
    n = len(table)
    return all(
        table[table[a][b]][c] == table[a][table[b][c]]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


def oracle_subgroup_sets(table, identity: int) -> set[frozenset[int]]:
    """All subgroup member sets by exhaustive subset enumeration (order <= 16)."""
    n = len(table)
    others = [x for x in range(n) if x != identity]
    out: set[frozenset[int]] = set()
    for mask in range(1 << len(others)):
        members = [identity] + [x for i, x in enumerate(others) if mask >> i & 1]
        inside = set(members)
        if all(table[a][b] in inside for a in members for b in members):
            out.add(frozenset(members))
    return out


def oracle_min_distance(codewords) -> int:
    best = len(codewords[0])
    for a, b in itertools.combinations(codewords, 2):
        d = sum(x != y for x, y in zip(a, b))
        if d < best:
            best = d
    return best


def oracle_distance_census(codewords, center) -> list[int]:
    n = len(codewords[0])
    counts = [0] * (n + 1)
    for word in codewords:
        counts[sum(x != y for x, y in zip(word, codewords[center]))] += 1
    return counts


def oracle_projection_counts(codewords, coords) -> Counter:
    return Counter(tuple(word[i] for i in coords) for word in codewords)
