"""Coset tables over a subgroup selection, and the codes they induce.

Pipeline: pick a group G and subgroups G_1..G_n, tabulate the left coset
of every element against every subgroup (one row per element, one column
per subgroup), then deduplicate rows.  The distinct rows form a code of
length n; the i-th symbol ranges over the cosets of G_i, identified by
their position in canonical coset order.  Coordinates of normal subgroups
can then be relabeled so the symbols live in the quotient group — residue
tuples when the quotient is abelian, quotient element indices otherwise.

All code-level coordinate subsets are 0-based tuples.  Types are
immutable; operations are pure functions.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import GroupParseError, InvariantError
from .groups import (
    DEFAULT_ENUM_CAP,
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    Subgroup,
    abelian_invariants,
    all_subgroups,
    build_named_group,
    intersect_subgroups,
    is_normal,
    left_cosets,
    quotient,
    subgroup_generated,
)

KIND_ABELIAN = "canonical-abelian"
KIND_QUOTIENT = "quotient-group"
KIND_OPAQUE = "opaque-labels"


# ---------------------------------------------------------------------------
# coset table
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CosetTable:
    """The |G| x n matrix of coset identifiers for (G, G_1..G_n).

    ``cells[g, i]`` is the canonical index of the coset g*G_i; column i uses
    identifiers 0..[G:G_i)-1 assigned in order of each coset's minimal
    element.  ``cosets[i][c]`` lists the members of coset c in column i.
    """

    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    cells: np.ndarray
    cosets: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def n(self) -> int:
        return len(self.subgroups)


def build_coset_table(G: FiniteGroup, subs) -> CosetTable:
    """Tabulate left cosets of each subgroup for every group element."""
    subgroups = tuple(subs)
    if not subgroups:
        raise ValueError("need at least one subgroup")
    for H in subgroups:
        if not isinstance(H, Subgroup) or H.group is not G:
            raise ValueError("all subgroups must belong to the same parent group")
    seen_members: dict[tuple[int, ...], int] = {}
    for i, H in enumerate(subgroups):
        j = seen_members.setdefault(H.members, i)
        if j != i:
            raise ValueError(
                f"duplicate subgroup {H.describe()} at positions {j} and {i}: "
                "a repeated coordinate duplicates a column and adds no information, "
                "and the distinct-coset alphabet count assumes distinct subgroups"
            )
    cells = np.empty((G.order, len(subgroups)), dtype=np.int64)
    per_column = []
    for i, H in enumerate(subgroups):
        cosets = left_cosets(G, H)
        coset_of = np.empty(G.order, dtype=np.int64)
        for c, coset in enumerate(cosets):
            for x in coset:
                coset_of[x] = c
        cells[:, i] = coset_of
        per_column.append(tuple(cosets))
    cells.setflags(write=False)
    return CosetTable(group=G, subgroups=subgroups, cells=cells, cosets=tuple(per_column))


# ---------------------------------------------------------------------------
# alphabets and codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CoordinateAlphabet:
    """Symbol set of one code coordinate.

    kind is one of ``canonical-abelian`` (symbols encode residue tuples for
    the given invariant factors), ``quotient-group`` (symbols are element
    indices of the attached quotient group) or ``opaque-labels`` (no
    algebraic meaning, just canonical coset positions).
    """

    kind: str
    size: int
    label_names: tuple[str, ...]
    factors: tuple[int, ...] | None = None
    quotient: FiniteGroup | None = None

    def __post_init__(self):
        if self.kind not in (KIND_ABELIAN, KIND_QUOTIENT, KIND_OPAQUE):
            raise ValueError(f"unknown alphabet kind {self.kind!r}")
        if len(self.label_names) != self.size:
            raise ValueError("need one label name per symbol")
        if self.kind == KIND_ABELIAN:
            if self.factors is None or prod(self.factors) != self.size:
                raise ValueError("invariant factors must multiply to the alphabet size")
        if self.kind == KIND_QUOTIENT and (
            self.quotient is None or self.quotient.order != self.size
        ):
            raise ValueError("quotient-group alphabet needs its quotient group")

    def _decode(self, value: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.factors):
            out.append(value % d)
            value //= d
        return tuple(reversed(out))

    def _encode(self, residues) -> int:
        value = 0
        for r, d in zip(residues, self.factors):
            value = value * d + (r % d)
        return value

    def combine(self, a: int, b: int) -> int:
        """Group product of two symbols, where the alphabet carries one."""
        if self.kind == KIND_ABELIAN:
            ra, rb = self._decode(a), self._decode(b)
            return self._encode(
                tuple((x + y) % d for x, y, d in zip(ra, rb, self.factors))
            )
        if self.kind == KIND_QUOTIENT:
            return self.quotient.mul(a, b)
        raise ValueError("opaque labels carry no algebraic structure")

    def invert(self, a: int) -> int:
        if self.kind == KIND_ABELIAN:
            return self._encode(tuple((-x) % d for x, d in zip(self._decode(a), self.factors)))
        if self.kind == KIND_QUOTIENT:
            return self.quotient.inv(a)
        raise ValueError("opaque labels carry no algebraic structure")

    @property
    def identity_symbol(self) -> int:
        return 0

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind, "size": self.size}
        if self.factors is not None:
            out["factors"] = list(self.factors)
        return out


@dataclass(frozen=True, eq=False)
class QuasiUniformCode:
    """Deduplicated codeword list over per-coordinate alphabets.

    ``representatives[k]`` is the group element whose table row produced
    codeword k (present only for codes built from a group);
    ``group_structured`` records whether every chosen subgroup was normal.
    """

    n: int
    codewords: tuple[tuple[int, ...], ...]
    alphabets: tuple[CoordinateAlphabet, ...]
    group: FiniteGroup | None = None
    subgroups: tuple[Subgroup, ...] | None = None
    representatives: tuple[int, ...] | None = None
    group_structured: bool = False
    labeled: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("codes must have at least one coordinate")
        if not self.codewords:
            raise ValueError("codes must be nonempty")
        if len(self.alphabets) != self.n:
            raise ValueError("need one alphabet per coordinate")
        if len(set(self.codewords)) != len(self.codewords):
            raise InvariantError("codewords must be pairwise distinct")
        for word in self.codewords:
            if len(word) != self.n:
                raise ValueError("codeword length disagrees with the code length")
            for i, sym in enumerate(word):
                if not 0 <= sym < self.alphabets[i].size:
                    raise ValueError("codeword symbol outside its coordinate alphabet")

    @property
    def size(self) -> int:
        return len(self.codewords)


def code_from_codewords(codewords, sizes=None) -> QuasiUniformCode:
    """Wrap raw codeword tuples as a code with opaque alphabets (no provenance)."""
    words = tuple(tuple(int(s) for s in w) for w in codewords)
    if not words:
        raise ValueError("codes must be nonempty")
    n = len(words[0])
    if sizes is None:
        sizes = [max(w[i] for w in words) + 1 for i in range(n)]
    alphabets = tuple(
        CoordinateAlphabet(KIND_OPAQUE, s, tuple(str(v) for v in range(s))) for s in sizes
    )
    return QuasiUniformCode(n=n, codewords=words, alphabets=alphabets)


def reduce_code(table: CosetTable) -> QuasiUniformCode:
    """Deduplicate table rows into the code, checking the size identity.

    Keeps the first occurrence of each distinct row (canonical element
    order), so the identity element's codeword always survives and comes
    first.  The number of distinct rows must equal |G| divided by the order
    of the intersection of all chosen subgroups; a mismatch means the
    construction is broken.  When every subgroup is normal and the
    intersection is nontrivial, the same code is rebuilt through the
    quotient by the intersection and both routes are asserted equal.
    """
    G = table.group
    first_seen: dict[tuple[int, ...], int] = {}
    for g in G.elements():
        row = tuple(int(x) for x in table.cells[g])
        first_seen.setdefault(row, g)
    codewords = tuple(first_seen)
    meet = intersect_subgroups(table.subgroups)
    if len(codewords) * meet.order != G.order:
        raise InvariantError(
            f"row deduplication produced {len(codewords)} codewords, expected "
            f"{G.order // meet.order} = |G|/|intersection|"
        )
    alphabets = tuple(
        CoordinateAlphabet(
            KIND_OPAQUE, len(cosets), tuple(str(c) for c in range(len(cosets)))
        )
        for cosets in table.cosets
    )
    code = QuasiUniformCode(
        n=table.n,
        codewords=codewords,
        alphabets=alphabets,
        group=G,
        subgroups=table.subgroups,
        representatives=tuple(first_seen.values()),
        group_structured=all(is_normal(G, H) for H in table.subgroups),
    )
    if code.group_structured and meet.order > 1:
        _assert_quotient_route_matches(table, code, meet)
    return code


def _assert_quotient_route_matches(
    table: CosetTable, code: QuasiUniformCode, meet: Subgroup
) -> None:
    """Rebuild the code through G/(intersection) and compare labeled output."""
    q = quotient(table.group, meet)
    quotient_subs = [
        Subgroup(q.group, tuple(sorted({q.block_index[x] for x in H.members})))
        for H in table.subgroups
    ]
    quotient_code = reduce_code(build_coset_table(q.group, quotient_subs))
    left = label_coordinates(code)
    right = label_coordinates(quotient_code)
    same_alphabets = all(
        a.kind == b.kind and a.size == b.size and a.factors == b.factors
        for a, b in zip(left.alphabets, right.alphabets)
    )
    if left.codewords != right.codewords or not same_alphabets:
        raise InvariantError(
            "direct row deduplication and the quotient-group reconstruction disagree"
        )


def _residue_display(residues: tuple[int, ...]) -> str:
    if not residues:
        return "0"
    if len(residues) == 1:
        return str(residues[0])
    return "(" + ",".join(str(r) for r in residues) + ")"


def label_coordinates(
    code: QuasiUniformCode, *, enum_cap: int = DEFAULT_ENUM_CAP
) -> QuasiUniformCode:
    """Relabel coordinates so symbols carry the algebra of their quotient.

    For a normal subgroup with abelian quotient, symbols are re-indexed
    through the quotient's invariant-factor isomorphism, so the identity
    coset becomes symbol 0 and symbol addition matches coset multiplication.
    A nonabelian quotient keeps the canonical coset indices, which coincide
    with the quotient group's element indices, and attaches that group.
    Non-normal subgroups keep opaque canonical coset indices.
    """
    if code.group is None or code.subgroups is None:
        raise ValueError("labeling requires a code built from a group")
    G = code.group
    alphabets: list[CoordinateAlphabet] = []
    relabels: list[tuple[int, ...]] = []
    for H in code.subgroups:
        size = H.index
        if is_normal(G, H):
            q = quotient(G, H)
            if q.group.is_abelian:
                inv = abelian_invariants(q.group, enum_cap=enum_cap)
                relabel = tuple(inv.encode(inv.iso[c]) for c in range(size))
                names = [""] * size
                for c in range(size):
                    names[relabel[c]] = _residue_display(inv.iso[c])
                alphabets.append(
                    CoordinateAlphabet(
                        KIND_ABELIAN, size, tuple(names), factors=inv.factors
                    )
                )
            else:
                relabel = tuple(range(size))
                alphabets.append(
                    CoordinateAlphabet(
                        KIND_QUOTIENT, size, q.group.names, quotient=q.group
                    )
                )
        else:
            relabel = tuple(range(size))
            alphabets.append(
                CoordinateAlphabet(KIND_OPAQUE, size, tuple(str(c) for c in range(size)))
            )
        relabels.append(relabel)
    codewords = tuple(
        tuple(relabels[i][sym] for i, sym in enumerate(word)) for word in code.codewords
    )
    return QuasiUniformCode(
        n=code.n,
        codewords=codewords,
        alphabets=tuple(alphabets),
        group=code.group,
        subgroups=code.subgroups,
        representatives=code.representatives,
        group_structured=code.group_structured,
        labeled=True,
    )


def induced_support(code: QuasiUniformCode, coords) -> dict[tuple[int, ...], int]:
    """Projection of the code onto the given coordinates, with multiplicities."""
    subset = tuple(sorted({int(c) for c in coords}))
    if not subset:
        raise ValueError("coordinate subset must be nonempty")
    if subset[0] < 0 or subset[-1] >= code.n:
        raise ValueError("coordinate index out of range")
    counts = Counter(tuple(word[i] for i in subset) for word in code.codewords)
    return dict(counts)


def build_code(G: FiniteGroup, subs, *, enum_cap: int = DEFAULT_ENUM_CAP) -> QuasiUniformCode:
    """Convenience pipeline: coset table, reduction, canonical labeling."""
    return label_coordinates(reduce_code(build_coset_table(G, subs)), enum_cap=enum_cap)


# ---------------------------------------------------------------------------
# subgroup selection syntax and serialization
# ---------------------------------------------------------------------------

def _parse_single_subgroup(G: FiniteGroup, text: str) -> Subgroup:
    t = text.strip()
    if not t.startswith("gens:"):
        raise GroupParseError(
            f"bad subgroup spec {text!r}: expected 'gens:<name>(;<name>)*'"
        )
    body = t[len("gens:"):]
    names = [s for s in body.split(";") if s.strip()]
    if not names:
        raise GroupParseError(f"bad subgroup spec {text!r}: no generators given")
    return subgroup_generated(G, [G.index_of(s.strip()) for s in names])


def parse_subgroup_selection(
    G: FiniteGroup, text: str, *, enum_cap: int = DEFAULT_ENUM_CAP
) -> list[Subgroup]:
    """Parse a subgroup selection string against a group.

    Forms: ``gens:<name>(;<name>)*`` joined by ``|`` for explicit subgroups,
    or the selectors ``all-nontrivial`` (proper nontrivial subgroups),
    ``all-normal-proper`` (proper nontrivial normal subgroups) and
    ``all-index:<k>``, each in canonical (order, members) order.
    """
    t = text.strip()
    if t == "all-nontrivial":
        subs = [H for H in all_subgroups(G, enum_cap=enum_cap) if 1 < H.order < G.order]
    elif t == "all-normal-proper":
        subs = [
            H
            for H in all_subgroups(G, enum_cap=enum_cap)
            if 1 < H.order < G.order and is_normal(G, H)
        ]
    elif t.startswith("all-index:"):
        raw = t[len("all-index:"):]
        try:
            k = int(raw)
        except ValueError:
            raise GroupParseError(f"bad index in selector {text!r}") from None
        if k < 1:
            raise GroupParseError(f"bad index in selector {text!r}")
        subs = [H for H in all_subgroups(G, enum_cap=enum_cap) if H.index == k]
    else:
        subs = [_parse_single_subgroup(G, part) for part in t.split("|")]
    if not subs:
        raise GroupParseError(f"selector {text!r} matched no subgroups of {G.name}")
    return subs


def subgroup_spec(H: Subgroup) -> str:
    """Round-trippable spec for one subgroup (its full member list as generators)."""
    return "gens:" + ";".join(H.group.names[x] for x in H.members)


def code_to_json_dict(code: QuasiUniformCode) -> dict:
    if code.group is None or code.subgroups is None:
        raise ValueError("serialization requires a code built from a group")
    return {
        "n": code.n,
        "group_spec": code.group.name,
        "subgroup_specs": [subgroup_spec(H) for H in code.subgroups],
        "alphabets": [a.to_json_dict() for a in code.alphabets],
        "codewords": [list(word) for word in code.codewords],
    }


def code_to_json(code: QuasiUniformCode) -> str:
    return json.dumps(code_to_json_dict(code), indent=2, sort_keys=True)


def code_from_json_dict(
    data: dict,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> QuasiUniformCode:
    """Rebuild a code from its serialized form and verify the stored payload.

    The group and subgroups are reconstructed from their specs and the full
    pipeline re-run; the stored codewords and alphabets must match the
    reconstruction exactly.
    """
    if not isinstance(data, dict):
        raise ValueError("code JSON must be an object")
    for key in ("n", "group_spec", "subgroup_specs", "alphabets", "codewords"):
        if key not in data:
            raise ValueError(f"code JSON is missing the {key!r} field")
    G = build_named_group(str(data["group_spec"]), order_cap=order_cap)
    subs = [_parse_single_subgroup(G, str(s)) for s in data["subgroup_specs"]]
    code = build_code(G, subs, enum_cap=enum_cap)
    stored_words = tuple(tuple(int(s) for s in w) for w in data["codewords"])
    if int(data["n"]) != code.n or stored_words != code.codewords:
        raise ValueError("stored codewords disagree with the reconstructed code")
    stored_alphabets = data["alphabets"]
    if len(stored_alphabets) != code.n:
        raise ValueError("stored alphabets disagree with the reconstructed code")
    for stored, built in zip(stored_alphabets, code.alphabets):
        if not isinstance(stored, dict):
            raise ValueError("alphabet entries must be objects")
        factors = tuple(stored["factors"]) if "factors" in stored else None
        if (
            stored.get("kind") != built.kind
            or int(stored.get("size", -1)) != built.size
            or factors != built.factors
        ):
            raise ValueError("stored alphabets disagree with the reconstructed code")
    return code
