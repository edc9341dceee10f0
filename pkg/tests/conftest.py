from __future__ import annotations

import random

import pytest

from quasiuniform import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    build_code,
    build_named_group,
    parse_subgroup_selection,
    subgroup_generated,
)

# The classic worked instance over C3xC3 with its four order-3 subgroups,
# columns in the order <(1,0)>, <(0,1)>, <(1,1)>, <(1,2)>.
TERNARY_SELECTION = "gens:(1,0)|gens:(0,1)|gens:(1,1)|gens:(1,2)"
TERNARY_CODEWORDS = (
    (0, 0, 0, 0),
    (1, 0, 1, 1),
    (2, 0, 2, 2),
    (0, 1, 2, 1),
    (1, 1, 0, 2),
    (2, 1, 1, 0),
    (0, 2, 1, 2),
    (1, 2, 2, 0),
    (2, 2, 0, 1),
)

S3_SELECTION = "gens:(12)|gens:(13)|gens:(23)"
S3_CODEWORDS = (
    (0, 0, 0),
    (0, 1, 1),
    (1, 0, 2),
    (2, 2, 0),
    (1, 2, 1),
    (2, 1, 2),
)

D12_SELECTION = "gens:r^3|gens:r^2;s"

# Named-family specs used by the randomized suite; all orders <= 64.
SUITE_SPECS = (
    "C2", "C6", "C8", "C12", "C16", "C24", "C36", "C64",
    "C2xC2", "C2xC4", "C3xC3", "C2xC6", "C4xC4", "C2xC2xC2",
    "C5xC5", "C2xC8", "C3xC9", "C2xC2xC2xC2",
    "D4", "D6", "D8", "D12", "D16", "D24", "D32", "D48",
    "S3", "S4", "A4", "A5",
    "Q8", "Dic12", "Dic16", "Dic24",
)

# p-group instances whose subgroups all have index p (prime alphabet size).
PRIME_INDEX_SPECS = (
    ("C2xC2", 2),
    ("C3xC3", 3),
    ("C5xC5", 5),
    ("D8", 2),
    ("Q8", 2),
    ("C4xC4", 2),
    ("D16", 2),
    ("C2xC2xC2", 2),
)


def build_suite(seed: int = 20260810) -> list[tuple[str, FiniteGroup, list[Subgroup]]]:
    """Deterministic list of (spec, group, subgroup tuple) instances."""
    rng = random.Random(seed)
    instances: list[tuple[str, FiniteGroup, list[Subgroup]]] = []
    for spec in SUITE_SPECS:
        G = build_named_group(spec)
        chosen: set[tuple[tuple[int, ...], ...]] = set()
        attempts = 0
        while len(chosen) < 2 and attempts < 40:
            attempts += 1
            count = rng.randint(1, 4)
            by_members: dict[tuple[int, ...], Subgroup] = {}
            for _ in range(count):
                size = min(rng.randint(1, 2), max(G.order - 1, 1))
                population = range(1, G.order) if G.order > 1 else range(1)
                gens = rng.sample(population, k=size)
                H = subgroup_generated(G, gens)
                by_members.setdefault(H.members, H)
            subs = sorted(by_members.values(), key=lambda H: H.sort_key())
            key = tuple(H.members for H in subs)
            if key in chosen:
                continue
            chosen.add(key)
            instances.append((spec, G, subs))
    for spec, p in PRIME_INDEX_SPECS:
        G = build_named_group(spec)
        subs = [H for H in all_subgroups(G) if H.index == p]
        instances.append((spec, G, subs))
    return instances


@pytest.fixture(scope="session")
def suite():
    return build_suite()


@pytest.fixture(scope="session")
def ternary_instance():
    G = build_named_group("C3xC3")
    subs = parse_subgroup_selection(G, TERNARY_SELECTION)
    return G, subs, build_code(G, subs)


@pytest.fixture(scope="session")
def s3_instance():
    G = build_named_group("S3")
    subs = parse_subgroup_selection(G, S3_SELECTION)
    return G, subs, build_code(G, subs)


@pytest.fixture(scope="session")
def d12_instance():
    G = build_named_group("D12")
    subs = parse_subgroup_selection(G, D12_SELECTION)
    return G, subs, build_code(G, subs)
