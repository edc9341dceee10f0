"""Code analysis: uniformity checks, entropy profiles, weight enumerators.

Entropies are never touched as floating-point logarithms.  A profile
stores exact support cardinalities, and the enumerator identity is
evaluated with integer ratios of support sizes, which makes the
cross-check against the direct distance census bit-exact.

Coordinate subsets are 0-based tuples, always iterated by size then
lexicographically; every reported witness follows that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .construction import QuasiUniformCode, induced_support
from .errors import AnalysisError, InvariantError
from .groups import FiniteGroup, Subgroup, intersect_subgroups, is_normal
from .util import is_power_of, nonempty_subsets


# ---------------------------------------------------------------------------
# report and profile types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniformityWitness:
    """Two projected tuples with different multiplicities on one subset."""

    subset: tuple[int, ...]
    tuple_a: tuple[int, ...]
    count_a: int
    tuple_b: tuple[int, ...]
    count_b: int

    def to_json_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "tuples": [list(self.tuple_a), list(self.tuple_b)],
            "multiplicities": [self.count_a, self.count_b],
        }


@dataclass(frozen=True)
class QuasiUniformityReport:
    ok: bool
    witness: UniformityWitness | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"ok": self.ok}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


@dataclass(frozen=True)
class EntropyProfile:
    """Support cardinality of every nonempty coordinate subset."""

    n: int
    support_sizes: dict[tuple[int, ...], int]

    def __post_init__(self):
        for subset in nonempty_subsets(self.n):
            if subset not in self.support_sizes:
                raise AnalysisError(f"profile is missing subset {subset}")
            size = self.support_sizes[subset]
            if size < 1:
                raise AnalysisError("support sizes must be positive")
            for i in subset:
                smaller = tuple(x for x in subset if x != i)
                if smaller and self.support_sizes[smaller] > size:
                    raise AnalysisError("support sizes must be monotone under inclusion")

    def subset_size(self, subset) -> int:
        key = tuple(sorted(subset))
        return 1 if not key else self.support_sizes[key]

    @property
    def full_size(self) -> int:
        return self.support_sizes[tuple(range(self.n))]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "support_sizes": {
                ",".join(map(str, k)): v
                for k, v in sorted(self.support_sizes.items(), key=lambda kv: (len(kv[0]), kv[0]))
            },
        }


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n of the homogeneous polynomial sum A_j x^(n-j) y^j."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise AnalysisError("need exactly n+1 coefficients")
        if any(c < 0 for c in self.coeffs):
            raise AnalysisError("weight enumerator coefficients must be nonnegative")

    def to_json_dict(self) -> dict:
        return {"n": self.n, "coeffs": list(self.coeffs), "polynomial": polynomial_string(self)}


@dataclass(frozen=True)
class DistanceProfile:
    """Census of Hamming distances from one codeword to the whole code."""

    center: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.counts[0] != 1:
            raise InvariantError("distance zero must count exactly the center itself")


@dataclass(frozen=True)
class AlmostAffineReport:
    ok: bool
    q: int
    witness: tuple[int, ...] | None = None
    witness_size: int | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"ok": self.ok, "q": self.q}
        if self.witness is not None:
            out["witness"] = list(self.witness)
            out["projection_size"] = self.witness_size
        return out


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def verify_quasi_uniform(code: QuasiUniformCode) -> QuasiUniformityReport:
    """Check that every coordinate-subset projection has equal multiplicities.

    On failure, reports the first violating subset in size-then-lex order
    together with two projected tuples whose multiplicities differ.
    """
    for subset in nonempty_subsets(code.n):
        counts = induced_support(code, subset)
        items = sorted(counts.items())
        base_tuple, base_count = items[0]
        for t, c in items[1:]:
            if c != base_count:
                witness = UniformityWitness(subset, base_tuple, base_count, t, c)
                return QuasiUniformityReport(ok=False, witness=witness)
    return QuasiUniformityReport(ok=True)


def entropy_profile(code: QuasiUniformCode) -> EntropyProfile:
    """Exact support sizes for all nonempty coordinate subsets.

    Requires a quasi-uniform code.  For codes built from a group the size
    of each projection must equal the index of the corresponding subgroup
    intersection; that identity is asserted as an internal cross-check.
    """
    report = verify_quasi_uniform(code)
    if not report.ok:
        raise AnalysisError(
            f"code is not quasi-uniform: subset {report.witness.subset} has "
            f"multiplicities {report.witness.count_a} and {report.witness.count_b}"
        )
    sizes: dict[tuple[int, ...], int] = {}
    for subset in nonempty_subsets(code.n):
        sizes[subset] = len(induced_support(code, subset))
    if code.group is not None and code.subgroups is not None:
        G = code.group
        for subset in nonempty_subsets(code.n):
            meet = intersect_subgroups([code.subgroups[i] for i in subset])
            if sizes[subset] * meet.order != G.order:
                raise InvariantError(
                    f"projection size {sizes[subset]} on {subset} disagrees with "
                    f"the subgroup-intersection index {G.order // meet.order}"
                )
    return EntropyProfile(n=code.n, support_sizes=sizes)


def weight_enumerator_formula(profile: EntropyProfile) -> WeightEnumerator:
    """Weight enumerator from support sizes alone.

    Expands sum over subsets A of (S_N / S_A) * (x-y)^|A| * y^(n-|A|) in
    exact integer arithmetic, where S_A is the support size of A and the
    empty subset contributes S_empty = 1.  Every ratio must be an integer;
    a non-integer ratio means the profile does not come from the supported
    construction and is reported rather than rounded.
    """
    n = profile.n
    full = profile.full_size
    by_size = [0] * (n + 1)
    by_size[0] = full  # empty subset: ratio S_N / 1
    for subset in nonempty_subsets(n):
        size = profile.support_sizes[subset]
        ratio, remainder = divmod(full, size)
        if remainder:
            raise AnalysisError(
                f"support-size ratio {full}/{size} for subset {subset} is not an "
                "integer; this profile does not arise from the supported construction"
            )
        by_size[len(subset)] += ratio
    coeffs = []
    for j in range(n + 1):
        x_deg = n - j
        total = 0
        for a in range(x_deg, n + 1):
            term = by_size[a] * comb(a, x_deg)
            total += -term if (a - x_deg) % 2 else term
        coeffs.append(total)
    enum = WeightEnumerator(n=n, coeffs=tuple(coeffs))
    if sum(enum.coeffs) != full:
        raise InvariantError("enumerator coefficients must sum to the code size")
    return enum


def distance_profile(code: QuasiUniformCode, center_index: int) -> DistanceProfile:
    """Exact Hamming-distance census from the chosen codeword."""
    if not 0 <= center_index < code.size:
        raise IndexError(f"center index {center_index} out of range")
    words = np.asarray(code.codewords, dtype=np.int64)
    dists = (words != words[center_index]).sum(axis=1)
    counts = np.bincount(dists, minlength=code.n + 1)
    return DistanceProfile(center=center_index, counts=tuple(int(c) for c in counts))


def min_distance(code: QuasiUniformCode) -> int:
    """Brute-force minimum pairwise Hamming distance."""
    if code.size < 2:
        raise ValueError("minimum distance needs at least two codewords")
    words = np.asarray(code.codewords, dtype=np.int64)
    best = code.n
    for i in range(len(words) - 1):
        d = int((words[i + 1:] != words[i]).sum(axis=1).min())
        if d < best:
            best = d
            if best == 1:
                break
    return best


def min_distance_group(G: FiniteGroup, subs) -> int:
    """Minimum distance of the code from (G, subs) via subgroup intersections.

    Valid when every subgroup is normal: the distance equals n minus the
    largest number of coordinates whose subgroups intersect in strictly
    more than the intersection of all of them (after row deduplication the
    full intersection acts as the effective identity).  If no subset
    qualifies the code separates every pair of rows, giving distance n.
    """
    subgroups = tuple(subs)
    if not subgroups:
        raise ValueError("need at least one subgroup")
    seen: set[tuple[int, ...]] = set()
    for H in subgroups:
        if not isinstance(H, Subgroup) or H.group is not G:
            raise ValueError("all subgroups must belong to the same parent group")
        if H.members in seen:
            raise ValueError("duplicate subgroups are rejected, as in code construction")
        seen.add(H.members)
        if not is_normal(G, H):
            raise ValueError(
                f"{H.describe()} is not normal; the intersection formula is only "
                "claimed for group-structured codes"
            )
    n = len(subgroups)
    meet = intersect_subgroups(subgroups)
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            inter = intersect_subgroups([subgroups[i] for i in subset])
            if inter.order > meet.order:
                return n - size
    return n


def is_almost_affine(code: QuasiUniformCode, q: int | None = None) -> AlmostAffineReport:
    """Check that every projection size is an integer power of q.

    When q is omitted it defaults to the common coordinate alphabet size;
    mixed alphabets require an explicit q.
    """
    if q is None:
        sizes = {a.size for a in code.alphabets}
        if len(sizes) != 1:
            raise ValueError(
                "coordinates use different alphabet sizes; supply q explicitly"
            )
        q = sizes.pop()
    if q < 2:
        raise ValueError("q must be at least 2")
    for subset in nonempty_subsets(code.n):
        size = len(induced_support(code, subset))
        if not is_power_of(size, q):
            return AlmostAffineReport(ok=False, q=q, witness=subset, witness_size=size)
    return AlmostAffineReport(ok=True, q=q)


def polynomial_string(enum: WeightEnumerator) -> str:
    """Render the enumerator like ``x^4 + 8*x*y^3``, descending x-degree."""
    def power(var: str, e: int) -> str | None:
        if e == 0:
            return None
        return var if e == 1 else f"{var}^{e}"

    terms = []
    for j, coeff in enumerate(enum.coeffs):
        if coeff == 0:
            continue
        parts = [p for p in (power("x", enum.n - j), power("y", j)) if p]
        if coeff != 1 or not parts:
            parts = [str(coeff)] + parts
        terms.append("*".join(parts))
    return " + ".join(terms) if terms else "0"
