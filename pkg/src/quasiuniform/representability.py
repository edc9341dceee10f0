"""Abelian-group representability of a subgroup configuration.

A configuration (G, G_1..G_n) is abelian-group representable when some
abelian group A with subgroups A_1..A_n has identical indices
[G : intersection over S] == [A : intersection over S] for every nonempty
coordinate subset S.  The search here is exhaustive at desk scale: one
candidate per isomorphism class of abelian groups of the relevant order,
coordinate pools filtered by the singleton indices, then a depth-first
fill that checks subset indices smallest-first.

By default only |A| == |G| is searched; a widening multiple extends the
candidate orders to all divisors of multiple * |G| that the target indices
divide.  Searches are single-threaded and fully deterministic: the first
hit in enumeration order is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError, InvariantError
from .groups import (
    DEFAULT_ENUM_CAP,
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    Subgroup,
    all_subgroups,
    build_named_group,
    intersect_subgroups,
    is_nilpotent,
    is_normal,
)
from .util import divisors, nonempty_subsets, partitions, prime_factorization

DEFAULT_SEARCH_CAP = 128
MAX_COORDINATES = 5


@dataclass(frozen=True, eq=False)
class IndexVector:
    """Index [G : G_S] for every nonempty coordinate subset S."""

    n: int
    indices: dict[tuple[int, ...], int]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IndexVector)
            and self.n == other.n
            and self.indices == other.indices
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "indices": {
                ",".join(map(str, k)): v
                for k, v in sorted(self.indices.items(), key=lambda kv: (len(kv[0]), kv[0]))
            },
        }


@dataclass(frozen=True, eq=False)
class Representation:
    """An abelian group and subgroups realizing a target index vector."""

    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]

    def index_vector(self) -> IndexVector:
        return index_vector(self.group, self.subgroups)


@dataclass(frozen=True, eq=False)
class RepresentationSearch:
    """Outcome of one representability search."""

    representation: Representation | None
    checked_candidates: int
    orders_searched: tuple[int, ...]

    @property
    def restricted(self) -> bool:
        return len(self.orders_searched) == 1


def index_vector(G: FiniteGroup, subs) -> IndexVector:
    subgroups = tuple(subs)
    if not subgroups:
        raise ValueError("need at least one subgroup")
    for H in subgroups:
        if not isinstance(H, Subgroup) or H.group is not G:
            raise ValueError("all subgroups must belong to the same parent group")
    indices: dict[tuple[int, ...], int] = {}
    meets: dict[tuple[int, ...], Subgroup] = {}
    for subset in nonempty_subsets(len(subgroups)):
        if len(subset) == 1:
            meet = subgroups[subset[0]]
        else:
            meet = intersect_subgroups([meets[subset[:-1]], subgroups[subset[-1]]])
        meets[subset] = meet
        indices[subset] = G.order // meet.order
    return IndexVector(n=len(subgroups), indices=indices)


def abelian_groups_of_order(
    m: int, *, order_cap: int = DEFAULT_ORDER_CAP
) -> list[FiniteGroup]:
    """One representative per isomorphism class of abelian groups of order m.

    Classes correspond to a choice of partition of each prime exponent;
    enumeration is deterministic (primes ascending, partitions largest part
    first), matching e.g. order 8 -> C8, C2xC4, C2xC2xC2.
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m > order_cap:
        raise CapExceededError(f"order {m} exceeds the cap {order_cap}")
    if m == 1:
        return [build_named_group("C1", order_cap=order_cap)]
    primes = sorted(prime_factorization(m).items())
    per_prime = [
        [tuple(p**part for part in parts) for parts in partitions(e)] for p, e in primes
    ]
    groups = []
    for combo in itertools.product(*per_prime):
        factors = sorted(itertools.chain.from_iterable(combo))
        spec = "x".join(f"C{f}" for f in factors)
        groups.append(build_named_group(spec, order_cap=order_cap))
    return groups


def _swap_subset(subset: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
    swapped = [j if x == i else i if x == j else x for x in subset]
    return tuple(sorted(swapped))


def _symmetry_classes(target: IndexVector) -> list[int]:
    """Class label per coordinate; swapping coordinates within a class fixes target."""
    n = target.n

    def swap_invariant(i: int, j: int) -> bool:
        return all(
            target.indices[subset] == target.indices[_swap_subset(subset, i, j)]
            for subset in nonempty_subsets(n)
        )

    labels = list(range(n))
    for j in range(n):
        for i in range(j):
            if labels[i] == i and swap_invariant(i, j):
                labels[j] = i
                break
    return labels


def representation_search(
    G: FiniteGroup,
    subs,
    *,
    search_cap: int = DEFAULT_SEARCH_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
    widen_order_multiple: int = 1,
) -> RepresentationSearch:
    """Exhaustive search for an abelian representation of (G, subs).

    An abelian G represents itself and is returned directly.  Otherwise
    candidate groups of each searched order are tried in deterministic
    order; ``checked_candidates`` counts subgroup placements attempted in
    the depth-first fill.  Coordinates interchangeable under the target's
    symmetry are filled with non-decreasing pool positions, which prunes
    permuted duplicates without losing completeness.
    """
    subgroups = tuple(subs)
    n = len(subgroups)
    if n < 1:
        raise ValueError("need at least one subgroup")
    if widen_order_multiple < 1:
        raise ValueError("the widening multiple must be at least 1")
    for H in subgroups:
        if not isinstance(H, Subgroup) or H.group is not G:
            raise ValueError("all subgroups must belong to the same parent group")
    if G.is_abelian:
        # self-representation; exact and search-free, so the caps do not apply
        rep = Representation(group=G, subgroups=subgroups)
        return RepresentationSearch(rep, checked_candidates=0, orders_searched=(G.order,))
    if n > MAX_COORDINATES:
        raise CapExceededError(f"search supports at most {MAX_COORDINATES} subgroups")
    if G.order > search_cap:
        raise CapExceededError(f"group order {G.order} exceeds the search cap {search_cap}")

    target = index_vector(G, subgroups)
    if widen_order_multiple == 1:
        orders = [G.order]
    else:
        needed = set(target.indices.values())
        orders = [
            m
            for m in divisors(widen_order_multiple * G.order)
            if all(m % t == 0 for t in needed)
        ]
    classes = _symmetry_classes(target)
    subsets_by_level = [
        sorted(
            (s for s in itertools.chain([()], nonempty_subsets(k))),
            key=lambda s: (len(s), s),
        )
        for k in range(n)
    ]
    checked = 0

    def search_group(A: FiniteGroup) -> Representation | None:
        nonlocal checked
        candidates = all_subgroups(A, enum_cap=enum_cap)
        pools: list[list[Subgroup]] = []
        for i in range(n):
            want = target.indices[(i,)]
            pool = [H for H in candidates if A.order % H.order == 0 and A.order // H.order == want]
            if not pool:
                return None
            pools.append(pool)
        full_members = frozenset(range(A.order))
        chosen: list[Subgroup] = []
        positions: list[int] = []

        def fill(k: int, meets: dict[tuple[int, ...], frozenset[int]]):
            nonlocal checked
            if k == n:
                return Representation(group=A, subgroups=tuple(chosen))
            start = 0
            for prev in range(k - 1, -1, -1):
                if classes[prev] == classes[k]:
                    start = positions[prev]
                    break
            for pos in range(start, len(pools[k])):
                candidate = pools[k][pos]
                checked += 1
                new_meets: dict[tuple[int, ...], frozenset[int]] = {}
                member_set = candidate.member_set()
                for subset in subsets_by_level[k]:
                    base = meets[subset] if subset else full_members
                    meet = base & member_set
                    key = subset + (k,)
                    if A.order % len(meet) or A.order // len(meet) != target.indices[key]:
                        break
                    new_meets[key] = meet
                else:
                    chosen.append(candidate)
                    positions.append(pos)
                    hit = fill(k + 1, {**meets, **new_meets})
                    if hit is not None:
                        return hit
                    chosen.pop()
                    positions.pop()
            return None

        return fill(0, {})

    searched: list[int] = []
    for m in orders:
        searched.append(m)
        for A in abelian_groups_of_order(m, order_cap=max(m, DEFAULT_ORDER_CAP)):
            hit = search_group(A)
            if hit is not None:
                if hit.index_vector() != target:
                    raise InvariantError("search returned a non-matching representation")
                return RepresentationSearch(
                    hit, checked_candidates=checked, orders_searched=tuple(searched)
                )
    return RepresentationSearch(
        None, checked_candidates=checked, orders_searched=tuple(searched)
    )


def find_abelian_representation(
    G: FiniteGroup,
    subs,
    *,
    search_cap: int = DEFAULT_SEARCH_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
    widen_order_multiple: int = 1,
) -> Representation | None:
    """First abelian representation in deterministic order, or None."""
    return representation_search(
        G,
        subs,
        search_cap=search_cap,
        enum_cap=enum_cap,
        widen_order_multiple=widen_order_multiple,
    ).representation


def check_non_nilpotent_witness(
    G: FiniteGroup,
    *,
    n_max: int = 3,
    family_budget: int = 200,
    search_cap: int = DEFAULT_SEARCH_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> tuple[tuple[Subgroup, ...], IndexVector] | None:
    """Find a subgroup family of a non-nilpotent G with no abelian representation.

    Candidate families start from the conjugate family of a non-normal
    Sylow subgroup (the source of non-nilpotency), then fall back to
    combinations of proper nontrivial subgroups, conjugates first, of size
    1..n_max.  Returns the first family the representation search cannot
    match, with its index vector, or None once the family budget is spent.
    """
    if is_nilpotent(G, enum_cap=enum_cap):
        raise ValueError("group is nilpotent; this search expects a non-nilpotent group")
    subs = all_subgroups(G, enum_cap=enum_cap)
    proper = [H for H in subs if 1 < H.order < G.order]
    sylow_families: list[tuple[Subgroup, ...]] = []
    conjugate_pool: list[Subgroup] = []
    for p, e in sorted(prime_factorization(G.order).items()):
        pk = p**e
        non_normal = [H for H in subs if H.order == pk and not is_normal(G, H)]
        if non_normal:
            conjugate_pool.extend(non_normal)
            if len(non_normal) <= n_max:
                sylow_families.append(tuple(non_normal))
    pool = conjugate_pool + [H for H in proper if H not in conjugate_pool]

    def families():
        seen: set[tuple[tuple[int, ...], ...]] = set()
        for family in sylow_families:
            key = tuple(H.members for H in family)
            seen.add(key)
            yield family
        for size in range(1, n_max + 1):
            for family in itertools.combinations(pool, size):
                key = tuple(H.members for H in family)
                if key not in seen:
                    seen.add(key)
                    yield family

    tried = 0
    for family in families():
        if tried >= family_budget:
            return None
        tried += 1
        outcome = representation_search(
            G, family, search_cap=search_cap, enum_cap=enum_cap
        )
        if outcome.representation is None:
            return family, index_vector(G, family)
    return None
