from __future__ import annotations

import itertools

from hypothesis import given, settings, strategies as st

from quasiuniform import (
    abelian_invariants,
    build_coset_table,
    build_named_group,
    distance_profile,
    entropy_profile,
    induced_support,
    intersect_subgroups,
    label_coordinates,
    reduce_code,
    subgroup_generated,
    verify_quasi_uniform,
    weight_enumerator_formula,
)
from quasiuniform.util import (
    all_subsets,
    divisors,
    is_power_of,
    nonempty_subsets,
    partitions,
    prime_factorization,
)

SMALL_SPECS = (
    "C2", "C6", "C12", "C2xC4", "C3xC3", "C2xC2xC2",
    "D8", "D12", "S3", "S4", "A4", "Q8", "Dic12",
)

ABELIAN_SPECS = ("C2", "C6", "C12", "C2xC4", "C3xC3", "C2xC2xC2", "C2xC6", "C4xC4")

_groups = {spec: build_named_group(spec) for spec in SMALL_SPECS + ABELIAN_SPECS}


@st.composite
def group_instances(draw):
    """A group plus a tuple of 1..3 pairwise-distinct generated subgroups."""
    G = _groups[draw(st.sampled_from(SMALL_SPECS))]
    count = draw(st.integers(1, 3))
    by_members = {}
    for _ in range(count):
        gens = draw(st.lists(st.integers(0, G.order - 1), min_size=1, max_size=2))
        H = subgroup_generated(G, gens)
        by_members.setdefault(H.members, H)
    return G, sorted(by_members.values(), key=lambda H: H.sort_key())


@settings(max_examples=40, deadline=None)
@given(group_instances())
def test_reduction_size_and_uniform_multiplicities(instance):
    G, subs = instance
    code = reduce_code(build_coset_table(G, subs))
    meet = intersect_subgroups(subs)
    assert code.size * meet.order == G.order
    for subset in nonempty_subsets(code.n):
        inter = intersect_subgroups([subs[i] for i in subset])
        support = induced_support(code, subset)
        assert set(support.values()) == {inter.order // meet.order}
        assert len(support) * inter.order == G.order


@settings(max_examples=30, deadline=None)
@given(group_instances())
def test_enumerator_formula_matches_census_everywhere(instance):
    G, subs = instance
    code = label_coordinates(reduce_code(build_coset_table(G, subs)))
    assert verify_quasi_uniform(code).ok
    enum = weight_enumerator_formula(entropy_profile(code))
    assert enum.coeffs[0] == 1
    assert sum(enum.coeffs) == code.size
    for center in range(code.size):
        assert distance_profile(code, center).counts == enum.coeffs


@settings(max_examples=30, deadline=None)
@given(group_instances())
def test_intersection_distance_formula_matches_brute_force(instance):
    from quasiuniform import is_normal, min_distance, min_distance_group

    G, subs = instance
    if not all(is_normal(G, H) for H in subs):
        return
    code = reduce_code(build_coset_table(G, subs))
    if code.size < 2:
        return
    assert min_distance_group(G, subs) == min_distance(code)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(SMALL_SPECS), st.randoms(use_true_random=False))
def test_validation_accepts_relabeled_tables(spec, rng):
    # a group table conjugated by any relabeling is still a valid group table
    from quasiuniform import FiniteGroup

    G = _groups[spec]
    perm = list(range(G.order))
    rng.shuffle(perm)
    inverse = [0] * G.order
    for i, p in enumerate(perm):
        inverse[p] = i
    table = [
        [perm[G.mul(inverse[i], inverse[j])] for j in range(G.order)]
        for i in range(G.order)
    ]
    relabeled = FiniteGroup("relabeled", table, [str(i) for i in range(G.order)])
    assert relabeled.identity == perm[G.identity]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(ABELIAN_SPECS), st.data())
def test_invariant_iso_encodes_group_law(spec, data):
    G = _groups[spec]
    inv = abelian_invariants(G)
    x = data.draw(st.integers(0, G.order - 1))
    y = data.draw(st.integers(0, G.order - 1))
    expected = tuple((a + b) % d for a, b, d in zip(inv.iso[x], inv.iso[y], inv.factors))
    assert inv.iso[G.mul(x, y)] == expected
    assert inv.encode(inv.decode(x)) == x


@given(st.integers(0, 10))
def test_subset_iteration_order(n):
    subsets = list(all_subsets(min(n, 6)))
    assert subsets[0] == ()
    assert subsets == sorted(subsets, key=lambda s: (len(s), s))
    assert len(subsets) == 2 ** min(n, 6)


@given(st.integers(1, 300))
def test_factorization_and_divisors(m):
    factors = prime_factorization(m)
    product = 1
    for p, e in factors.items():
        product *= p**e
    assert product == m
    divs = divisors(m)
    assert divs == sorted(d for d in range(1, m + 1) if m % d == 0)


@given(st.integers(0, 12))
def test_partitions_are_partitions(n):
    seen = set()
    for parts in partitions(n):
        assert sum(parts) == n
        assert list(parts) == sorted(parts, reverse=True)
        seen.add(parts)
    assert len(seen) == len(list(partitions(n)))


@given(st.integers(1, 2000), st.integers(2, 10))
def test_power_detection(m, q):
    assert is_power_of(m, q) == (m in {q**k for k in range(0, 12)})


def test_partition_counts_match_known_values():
    known = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15}
    for n, count in known.items():
        assert len(list(partitions(n))) == count


def test_distinct_coset_count_across_columns():
    # every coset appearing in the table is distinct across distinct subgroups
    for spec in SMALL_SPECS:
        G = _groups[spec]
        subs = []
        seen = set()
        for g in itertools.islice(G.elements(), 1, 4):
            H = subgroup_generated(G, [g])
            if H.members not in seen:
                seen.add(H.members)
                subs.append(H)
        if not subs:
            continue
        table = build_coset_table(G, subs)
        distinct = {coset for column in table.cosets for coset in column}
        assert len(distinct) == sum(H.index for H in subs)
