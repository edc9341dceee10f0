"""Exact arithmetic for small finite groups given by explicit multiplication tables.

A group is a value object: a multiplication table over element indices
0..N-1 plus one display name per element.  Construction validates the full
set of group axioms (Latin square, identity, two-sided inverses,
associativity), so everything downstream can trust any instance to be a
genuine group.  All types here are immutable after construction and all
operations are pure functions, safe to call concurrently on shared objects.

Naming convention for dihedral-type specs: ``D12`` denotes the dihedral
group of ORDER 12 (the symmetries of the hexagon) and ``Dic12`` the
dicyclic group of order 12.  Both order- and degree-based conventions
exist in the literature; this library is consistently order-based.

Everything is meant for desk-scale computation.  The default caps
(order 2048 for construction, 512 for subgroup enumeration) keep every
algorithm exhaustive and independently checkable.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import factorial, prod

import numpy as np

from .errors import CapExceededError, GroupParseError, GroupTableError, InvariantError
from .util import prime_factorization

DEFAULT_ORDER_CAP = 2048
DEFAULT_ENUM_CAP = 512


# ---------------------------------------------------------------------------
# table validation
# ---------------------------------------------------------------------------

def _magma_closure(table: np.ndarray, seed) -> np.ndarray:
    """Smallest subset containing seed and closed under the raw table product."""
    cur = np.unique(np.asarray(seed, dtype=np.int64))
    while True:
        prods = table[np.ix_(cur, cur)]
        nxt = np.union1d(cur, prods.ravel())
        if nxt.size == cur.size:
            return cur
        cur = nxt


def _generating_set(table: np.ndarray, identity: int) -> list[int]:
    """Greedy magma generating set used by the associativity check.

    By Light's associativity test, verifying (a*s)*b == a*(s*b) for every
    a, b and every s in a generating set verifies associativity for all
    triples, so the check below is exact while staying near-quadratic for
    group-like tables.
    """
    n = len(table)
    gens: list[int] = []
    covered = _magma_closure(table, (identity,))
    while covered.size < n:
        mask = np.ones(n, dtype=bool)
        mask[covered] = False
        gens.append(int(np.flatnonzero(mask)[0]))
        covered = _magma_closure(table, (identity, *gens))
    return gens


def _find_identity(table: np.ndarray) -> int:
    n = len(table)
    rng = np.arange(n)
    candidates = np.flatnonzero((table == rng).all(axis=1))
    for e in candidates:
        if np.array_equal(table[:, e], rng):
            return int(e)
    raise GroupTableError("table has no two-sided identity element")


def _validate_axioms(table: np.ndarray, identity: int) -> np.ndarray:
    """Check the group axioms exhaustively; return the inverse lookup array."""
    n = len(table)
    rng = np.arange(n)
    if not (np.sort(table, axis=1) == rng).all():
        raise GroupTableError("some table row is not a permutation of the elements")
    if not (np.sort(table, axis=0) == rng[:, None]).all():
        raise GroupTableError("some table column is not a permutation of the elements")
    inverse = np.argmax(table == identity, axis=1)
    if not (table[inverse, rng] == identity).all():
        raise GroupTableError("inverses are not two-sided")
    for s in _generating_set(table, identity):
        left = table[table[:, s], :]    # (a*s)*b
        right = table[:, table[s, :]]   # a*(s*b)
        if not np.array_equal(left, right):
            raise GroupTableError("multiplication is not associative")
    return inverse.astype(np.int32)


class FiniteGroup:
    """A finite group on elements 0..order-1 with an explicit multiplication table.

    ``cayley[a, b]`` is the index of the product a*b.  The table is fully
    validated at construction time.
    """

    def __init__(self, name: str, cayley, names, *, order_cap: int = DEFAULT_ORDER_CAP):
        table = np.ascontiguousarray(np.asarray(cayley, dtype=np.int32))
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise GroupTableError("multiplication table must be square")
        n = table.shape[0]
        if n == 0:
            raise GroupTableError("group must have at least one element")
        if n > order_cap:
            raise CapExceededError(f"group order {n} exceeds the order cap {order_cap}")
        if table.min() < 0 or table.max() >= n:
            raise GroupTableError("table entries must be element indices")
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise GroupTableError(f"expected {n} element names, got {len(names)}")
        if len(set(names)) != n:
            raise GroupTableError("element names must be distinct")
        identity = _find_identity(table)
        inverse = _validate_axioms(table, identity)
        table.setflags(write=False)
        inverse.setflags(write=False)
        self.name = str(name)
        self.order = n
        self.cayley = table
        self.names = names
        self.identity = identity
        self._inverse = inverse
        self._name_index = {s: i for i, s in enumerate(names)}
        self._abelian: bool | None = None

    # -- basic arithmetic ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def inv(self, a: int) -> int:
        return int(self._inverse[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        result = self.identity
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        x = a
        k = 1
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def index_of(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise GroupParseError(f"unknown element name {name!r} in group {self.name}") from None

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.cayley, self.cayley.T))
        return self._abelian

    def subgroup(self, members) -> "Subgroup":
        return Subgroup(self, tuple(members))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subset of a parent group closed under product and inverse."""

    group: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted({int(m) for m in self.members}))
        object.__setattr__(self, "members", members)
        G = self.group
        if not members:
            raise GroupTableError("a subgroup cannot be empty")
        if members[0] < 0 or members[-1] >= G.order:
            raise GroupTableError("subgroup member index out of range")
        mem = np.fromiter(members, dtype=np.int64)
        inside = np.zeros(G.order, dtype=bool)
        inside[mem] = True
        if not inside[G.identity]:
            raise GroupTableError("a subgroup must contain the identity")
        if not inside[G.cayley[np.ix_(mem, mem)]].all():
            raise GroupTableError("member set is not closed under multiplication")
        if not inside[G._inverse[mem]].all():
            raise GroupTableError("member set is not closed under inverse")
        if G.order % len(members):
            raise InvariantError("closed subset size does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.group.order // len(self.members)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, element: int) -> bool:
        return element in self.member_set()

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.members), self.members)

    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily over ascending indices."""
        G = self.group
        gens: list[int] = []
        generated = {G.identity}
        for x in self.members:
            if x not in generated:
                gens.append(x)
                generated = _closure_from(G, gens)
        return tuple(gens)

    def describe(self) -> str:
        gens = self.generators()
        if not gens:
            return f"<{self.group.names[self.group.identity]}>"
        return "<" + ",".join(self.group.names[g] for g in gens) + ">"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.group is other.group
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.members))

    def __repr__(self) -> str:
        return f"Subgroup({self.group.name}, {self.describe()}, order={self.order})"


def _closure_from(G: FiniteGroup, gens) -> set[int]:
    """Members of the subgroup generated by gens (finite group, so products suffice)."""
    table = G.cayley
    seen = {G.identity}
    stack = [G.identity]
    gen_list = [int(g) for g in gens]
    while stack:
        x = stack.pop()
        for g in gen_list:
            y = int(table[x, g])
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def subgroup_generated(G: FiniteGroup, gens) -> Subgroup:
    """Smallest subgroup of G containing the given element indices."""
    gen_list = sorted({int(g) for g in gens})
    if gen_list and (gen_list[0] < 0 or gen_list[-1] >= G.order):
        raise ValueError("generator index out of range")
    return Subgroup(G, tuple(sorted(_closure_from(G, gen_list))))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (G.identity,))


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(G.elements()))


def _cyclic_members(G: FiniteGroup, g: int) -> tuple[int, ...]:
    out = [G.identity]
    x = g
    while x != G.identity:
        out.append(x)
        x = G.mul(x, g)
    return tuple(sorted(out))


def all_subgroups(G: FiniteGroup, *, enum_cap: int = DEFAULT_ENUM_CAP) -> list[Subgroup]:
    """Every subgroup of G, sorted by (order, members).

    Enumeration closes unions of cyclic subgroups layer by layer: every
    subgroup is reachable by repeatedly adjoining the generator of a cyclic
    subgroup not yet contained, so the sweep is complete.
    """
    if G.order > enum_cap:
        raise CapExceededError(
            f"subgroup enumeration for order {G.order} exceeds the cap {enum_cap}"
        )
    cyclic: dict[frozenset[int], int] = {}
    for g in G.elements():
        cyclic.setdefault(frozenset(_cyclic_members(G, g)), g)
    found: dict[frozenset[int], tuple[int, ...]] = {frozenset({G.identity}): ()}
    for members, gen in cyclic.items():
        found.setdefault(members, (gen,))
    cyclic_items = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    queue = list(found.items())
    while queue:
        members, gens = queue.pop()
        for cyc, gen in cyclic_items:
            if cyc <= members:
                continue
            new_gens = gens + (gen,)
            grown = frozenset(_closure_from(G, new_gens))
            if grown not in found:
                found[grown] = new_gens
                queue.append((grown, new_gens))
    return [
        Subgroup(G, tuple(sorted(fs)))
        for fs in sorted(found, key=lambda fs: (len(fs), sorted(fs)))
    ]


def intersect_subgroups(subs) -> Subgroup:
    """Intersection of a nonempty list of subgroups of one common parent."""
    subs = list(subs)
    if not subs:
        raise ValueError("need at least one subgroup to intersect")
    G = subs[0].group
    for s in subs[1:]:
        if s.group is not G:
            raise ValueError("cannot intersect subgroups of different parent groups")
    common = set(subs[0].members)
    for s in subs[1:]:
        common &= s.member_set()
    return Subgroup(G, tuple(sorted(common)))


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    """True iff gH == Hg for every g (equivalently gHg^-1 == H)."""
    if H.group is not G:
        raise ValueError("subgroup does not belong to this group")
    mem = np.fromiter(H.members, dtype=np.int64)
    left = np.sort(G.cayley[:, mem], axis=1)    # row g: g*H
    right = np.sort(G.cayley[mem, :].T, axis=1)  # row g: H*g
    return bool(np.array_equal(left, right))


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Partition of G into left cosets of H, sorted by minimal element index.

    Scanning elements in ascending index order yields exactly that
    canonical order, and makes the identity's coset come first.
    """
    if H.group is not G:
        raise ValueError("subgroup does not belong to this group")
    mem = np.fromiter(H.members, dtype=np.int64)
    seen = np.zeros(G.order, dtype=bool)
    cosets: list[tuple[int, ...]] = []
    for g in G.elements():
        if seen[g]:
            continue
        coset = np.sort(G.cayley[g, mem])
        cosets.append(tuple(int(x) for x in coset))
        seen[coset] = True
    return cosets


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class QuotientGroup:
    """The group of cosets of a normal subgroup, with its induced table."""

    parent: FiniteGroup
    modulus: Subgroup
    blocks: tuple[tuple[int, ...], ...]
    block_index: tuple[int, ...]
    group: FiniteGroup

    @property
    def table(self) -> np.ndarray:
        return self.group.cayley

    def block_of(self, element: int) -> int:
        return self.block_index[element]

    def __repr__(self) -> str:
        return f"QuotientGroup({self.group.name}, order={self.group.order})"


def quotient(G: FiniteGroup, H: Subgroup) -> QuotientGroup:
    """Quotient of G by a normal subgroup H, with well-definedness verified."""
    if H.group is not G:
        raise ValueError("subgroup does not belong to this group")
    if not is_normal(G, H):
        raise ValueError(f"cannot form a quotient: {H.describe()} is not normal in {G.name}")
    blocks = tuple(left_cosets(G, H))
    block_index = np.empty(G.order, dtype=np.int64)
    for i, block in enumerate(blocks):
        for x in block:
            block_index[x] = i
    reps = [block[0] for block in blocks]
    qtable = block_index[G.cayley[np.ix_(reps, reps)]]
    # The induced product must not depend on the representative choice.
    expected = qtable[block_index, :][:, block_index]
    if not np.array_equal(block_index[G.cayley], expected):
        raise InvariantError("quotient multiplication is not well-defined")
    names = [f"[{G.names[r]}]" for r in reps]
    qgroup = FiniteGroup(
        f"{G.name}/{H.describe()}", qtable, names, order_cap=max(G.order, DEFAULT_ORDER_CAP)
    )
    return QuotientGroup(
        parent=G,
        modulus=H,
        blocks=blocks,
        block_index=tuple(int(i) for i in block_index),
        group=qgroup,
    )


# ---------------------------------------------------------------------------
# abelian invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant-factor form of a finite abelian group.

    ``factors`` is the chain d_1 | d_2 | ... | d_k (each > 1, product equal
    to the group order) and ``iso[x]`` the residue tuple of element x under
    an explicit isomorphism onto Z_{d_1} x ... x Z_{d_k}.
    """

    factors: tuple[int, ...]
    iso: tuple[tuple[int, ...], ...]

    def encode(self, residues) -> int:
        """Pack a residue tuple into one integer, first factor most significant."""
        value = 0
        for r, d in zip(residues, self.factors):
            value = value * d + (r % d)
        return value

    def decode(self, value: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.factors):
            out.append(value % d)
            value //= d
        return tuple(reversed(out))


def _check_invariant_iso(G: FiniteGroup, factors: tuple[int, ...], iso) -> None:
    if prod(factors) != G.order:
        raise InvariantError("invariant factors do not multiply to the group order")
    if any(d <= 1 for d in factors):
        raise InvariantError("invariant factors must exceed 1")
    if any(factors[i + 1] % factors[i] for i in range(len(factors) - 1)):
        raise InvariantError("invariant factors must form a divisibility chain")
    if len(set(iso)) != G.order:
        raise InvariantError("invariant-factor relabeling is not a bijection")
    if iso[G.identity] != tuple(0 for _ in factors):
        raise InvariantError("identity must map to the zero tuple")
    for j, d in enumerate(factors):
        r = np.fromiter((t[j] for t in iso), dtype=np.int64)
        if not np.array_equal(r[G.cayley], (r[:, None] + r[None, :]) % d):
            raise InvariantError("invariant-factor relabeling is not a homomorphism")


def abelian_invariants(G: FiniteGroup, *, enum_cap: int = DEFAULT_ENUM_CAP) -> AbelianInvariants:
    """Invariant factors d_1 | ... | d_k of an abelian group, with explicit iso.

    Peels off a cyclic subgroup generated by an element of maximal order
    (minimal index breaks ties) and finds a complement by exhaustive search
    over the subgroup list; recursion on the complement yields the chain.
    The resulting map is re-checked exhaustively before returning.
    """
    if not G.is_abelian:
        raise ValueError("invariant factors are only computed for abelian groups")

    subgroups_cache: list[Subgroup] | None = None

    def subgroup_list() -> list[Subgroup]:
        nonlocal subgroups_cache
        if subgroups_cache is None:
            subgroups_cache = all_subgroups(G, enum_cap=enum_cap)
        return subgroups_cache

    def split(members: tuple[int, ...]) -> tuple[list[int], dict[int, tuple[int, ...]]]:
        if len(members) == 1:
            return [], {members[0]: ()}
        best_order, generator = 0, members[0]
        for x in members:
            d = G.element_order(x)
            if d > best_order:
                best_order, generator = d, x
        d = best_order
        powers = [G.identity]
        x = generator
        while x != G.identity:
            powers.append(x)
            x = G.mul(x, generator)
        if d == len(members):
            complement: tuple[int, ...] = (G.identity,)
        else:
            power_set = set(powers)
            member_set = set(members)
            want = len(members) // d
            complement = ()
            for S in subgroup_list():
                if (
                    S.order == want
                    and set(S.members) <= member_set
                    and len(power_set & S.member_set()) == 1
                ):
                    complement = S.members
                    break
            if not complement:
                raise InvariantError("no cyclic complement found in an abelian group")
        rest_factors, rest_iso = split(complement)
        iso: dict[int, tuple[int, ...]] = {}
        for x in members:
            for a in range(d):
                y = G.mul(x, G.inv(powers[a]))
                if y in rest_iso:
                    iso[x] = rest_iso[y] + (a,)
                    break
            else:
                raise InvariantError("element does not split over the cyclic complement")
        return rest_factors + [d], iso

    factors_list, iso_map = split(tuple(G.elements()))
    factors = tuple(factors_list)
    iso = tuple(iso_map[x] for x in G.elements())
    _check_invariant_iso(G, factors, iso)
    return AbelianInvariants(factors, iso)


def is_nilpotent(G: FiniteGroup, *, enum_cap: int = DEFAULT_ENUM_CAP) -> bool:
    """True iff every Sylow p-subgroup of G is normal."""
    factorization = prime_factorization(G.order) if G.order > 1 else {}
    subs = all_subgroups(G, enum_cap=enum_cap) if factorization else []
    for p, e in factorization.items():
        pk = p**e
        for H in subs:
            if H.order == pk and not is_normal(G, H):
                return False
    return True


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

_ATOM_RE = re.compile(r"(dic|c|d|s|a)(\d+)")


def _parse_atom(text: str) -> tuple[str, int]:
    t = text.strip().lower()
    if t == "q8":
        return ("dic", 8)
    m = _ATOM_RE.fullmatch(t)
    if not m:
        raise GroupParseError(f"unrecognized group atom {text!r}")
    family, num = m.group(1), int(m.group(2))
    if family == "c":
        if num < 1:
            raise GroupParseError("cyclic order must be at least 1")
    elif family == "d":
        if num < 2 or num % 2:
            raise GroupParseError(f"dihedral spec D{num}: the order must be even and >= 2")
    elif family == "dic":
        if num < 8 or num % 4:
            raise GroupParseError(
                f"dicyclic spec Dic{num}: the order must be a multiple of 4 and >= 8"
            )
    elif family in ("s", "a"):
        if num < 1:
            raise GroupParseError("symmetric/alternating degree must be at least 1")
    return (family, num)


def _atom_order(family: str, num: int) -> int:
    if family in ("c", "d", "dic"):
        return num
    if family == "s":
        return factorial(num)
    return max(1, factorial(num) // 2)  # alternating


def _canonical_atom(family: str, num: int) -> str:
    if family == "dic":
        return "Q8" if num == 8 else f"Dic{num}"
    return family.upper() + str(num)


def _cyclic_atom(n: int) -> tuple[list[str], np.ndarray]:
    k = np.arange(n)
    return [str(i) for i in range(n)], (k[:, None] + k[None, :]) % n


def _rotation_name(prefix: str, i: int, reflected: bool, flip: str) -> str:
    if not reflected:
        if i == 0:
            return "1"
        return prefix if i == 1 else f"{prefix}^{i}"
    if i == 0:
        return flip
    head = prefix if i == 1 else f"{prefix}^{i}"
    return head + flip


def _dihedral_atom(order: int) -> tuple[list[str], np.ndarray]:
    m = order // 2
    k = np.arange(order)
    i, j = k % m, k // m
    i1, j1 = i[:, None], j[:, None]
    i2, j2 = i[None, :], j[None, :]
    inew = np.where(j1 == 1, (i1 - i2) % m, (i1 + i2) % m)
    table = ((j1 + j2) % 2) * m + inew
    names = [_rotation_name("r", int(ii), bool(jj), "s") for ii, jj in zip(i, j)]
    return names, table


def _dicyclic_atom(order: int) -> tuple[list[str], np.ndarray]:
    deg = order // 4
    two_deg = 2 * deg
    k = np.arange(order)
    i, j = k % two_deg, k // two_deg
    i1, j1 = i[:, None], j[:, None]
    i2, j2 = i[None, :], j[None, :]
    base = np.where(j1 == 1, i1 - i2, i1 + i2)
    inew = (base + np.where((j1 == 1) & (j2 == 1), deg, 0)) % two_deg
    table = ((j1 + j2) % 2) * two_deg + inew
    names = [_rotation_name("a", int(ii), bool(jj), "b") for ii, jj in zip(i, j)]
    return names, table


def _perm_cycles(p: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        cycles.append(cyc)
    return cycles


def _cycle_name(p: tuple[int, ...]) -> str:
    cycles = _perm_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + "".join(str(x + 1) for x in cyc) + ")" for cyc in cycles)


def _perm_parity(p: tuple[int, ...]) -> int:
    return sum(len(c) - 1 for c in _perm_cycles(p)) % 2


def _permutation_atom(degree: int, even_only: bool) -> tuple[list[str], np.ndarray]:
    perms = [
        p
        for p in itertools.permutations(range(degree))
        if not even_only or _perm_parity(p) == 0
    ]
    perms.sort(key=lambda p: (sum(1 for i, x in enumerate(p) if x != i), _cycle_name(p)))
    arr = np.array(perms, dtype=np.int64)
    n = len(perms)
    base = degree ** np.arange(degree, dtype=np.int64)
    keys = arr @ base
    order_idx = np.argsort(keys)
    composed = arr[:, arr]          # composed[x, y] applies y first, then x
    pos = np.searchsorted(keys[order_idx], composed @ base)
    table = order_idx[pos].astype(np.int64)
    if table.shape != (n, n):
        raise InvariantError("permutation composition table has wrong shape")
    return [_cycle_name(p) for p in perms], table


def _build_atom(family: str, num: int) -> tuple[list[str], np.ndarray]:
    if family == "c":
        return _cyclic_atom(num)
    if family == "d":
        return _dihedral_atom(num)
    if family == "dic":
        return _dicyclic_atom(num)
    if family == "s":
        return _permutation_atom(num, even_only=False)
    return _permutation_atom(num, even_only=True)


def _direct_product(parts: list[tuple[list[str], np.ndarray]]) -> tuple[list[str], np.ndarray]:
    names_lists = [p[0] for p in parts]
    table = np.zeros((1, 1), dtype=np.int64)
    for _, atom_table in parts:
        k = len(atom_table)
        table = (table[:, None, :, None] * k + atom_table[None, :, None, :]).reshape(
            table.shape[0] * k, table.shape[1] * k
        )
    names = ["(" + ",".join(combo) + ")" for combo in itertools.product(*names_lists)]
    return names, table


def build_named_group(spec: str, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a validated group from a spec string.

    Grammar: ``spec := atom ("x" atom)*`` with atoms ``C<n>`` (cyclic of
    order n), ``D<n>`` (dihedral of order n, n even), ``S<n>`` / ``A<n>``
    (symmetric / alternating of degree n), ``Q8`` and ``Dic<n>`` (dicyclic
    of order n, 4 | n).  Case-insensitive; whitespace is ignored.

    Element order is canonical per family (identity first): residues for
    cyclic groups, rotations then reflections for dihedral and dicyclic
    groups, permutations sorted by support size then cycle notation, and
    row-major tuples for direct products.
    """
    cleaned = re.sub(r"\s+", "", spec)
    if not cleaned:
        raise GroupParseError("empty group spec")
    atom_texts = cleaned.lower().split("x")
    if any(not t for t in atom_texts):
        raise GroupParseError(f"malformed group spec {spec!r}")
    atoms = [_parse_atom(t) for t in atom_texts]
    total = prod(_atom_order(f, n) for f, n in atoms)
    if total > order_cap:
        raise CapExceededError(f"group order {total} exceeds the order cap {order_cap}")
    parts = [_build_atom(f, n) for f, n in atoms]
    names, table = parts[0] if len(parts) == 1 else _direct_product(parts)
    canonical = "x".join(_canonical_atom(f, n) for f, n in atoms)
    return FiniteGroup(canonical, table, names, order_cap=order_cap)
