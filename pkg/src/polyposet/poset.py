"""Interval posets: the set of intervals of a permutation ordered by inclusion.

The poset of a permutation is identified with its labeled interval set; two
permutations have equal posets exactly when they have the same intervals.
Minimal elements are the singletons, the maximum is (1, n), and the cover
relation is inclusion-maximality.  Children of a node are ordered by their
minimum, which fixes the plane embedding used by the renderer.
"""
from __future__ import annotations

import dataclasses
from collections import Counter
from typing import Iterable

from .perm import Permutation, all_intervals


class ElementNotInPoset(KeyError):
    """Queried interval is not an element of the poset."""


@dataclasses.dataclass(frozen=True)
class IntervalPoset:
    """An interval poset over ambient size n, as its set of value ranges.

    Always contains the n singletons and (1, n).  Order is containment:
    (a, b) <= (c, d) iff c <= a and b <= d.
    """

    n: int
    intervals: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("poset needs n >= 1")
        for lo, hi in self.intervals:
            if not (1 <= lo <= hi <= n):
                raise ValueError(f"interval ({lo}, {hi}) out of range for n={n}")
        missing = {(i, i) for i in range(1, n + 1)} | {(1, n)}
        if not missing <= self.intervals:
            raise ValueError("trivial intervals must all be present")

    def __contains__(self, v: tuple[int, int]) -> bool:
        return v in self.intervals

    def __len__(self) -> int:
        return len(self.intervals)

    def sorted_elements(self) -> list[tuple[int, int]]:
        return sorted(self.intervals)


def poset_of(p: Permutation) -> IntervalPoset:
    """The interval poset of a permutation.

    >>> sorted(poset_of(Permutation((2, 4, 1, 3))).intervals)
    [(1, 1), (1, 4), (2, 2), (3, 3), (4, 4)]
    """
    return IntervalPoset(p.n, all_intervals(p))


def _contains(outer: tuple[int, int], inner: tuple[int, int]) -> bool:
    return outer[0] <= inner[0] and inner[1] <= outer[1]


def hasse_children(P: IntervalPoset, v: tuple[int, int]) -> list[tuple[int, int]]:
    """Direct descendants of v, sorted by ascending minimum.

    These are the maximal elements of P strictly below v; empty for
    singletons.
    """
    if v not in P.intervals:
        raise ElementNotInPoset(v)
    below = [w for w in P.intervals if w != v and _contains(v, w)]
    children = [w for w in below
                if not any(x != w and _contains(x, w) for x in below)]
    children.sort(key=lambda iv: iv[0])
    return children


def hasse_edges(P: IntervalPoset) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All cover pairs (parent, child), parents in (lo, hi) order and
    children in ascending-minimum order under each parent."""
    edges = []
    for v in P.sorted_elements():
        for c in hasse_children(P, v):
            edges.append((v, c))
    return edges


def is_tree(P: IntervalPoset) -> bool:
    """True iff the Hasse diagram is a tree: every element except (1, n)
    has exactly one direct parent.

    >>> from .perm import parse_permutation
    >>> is_tree(poset_of(parse_permutation("2413")))
    True
    >>> is_tree(poset_of(parse_permutation("5123647")))
    False
    """
    root = (1, P.n)
    parents = Counter(child for _, child in hasse_edges(P))
    return all(parents[v] == 1 for v in P.intervals if v != root)


def children_histogram(P: IntervalPoset) -> dict[int, int]:
    """Map child-count k to the number of elements with exactly k direct
    descendants.

    >>> children_histogram(poset_of(Permutation((2, 4, 1, 3))))
    {0: 4, 4: 1}
    """
    counts = Counter(len(hasse_children(P, v)) for v in P.intervals)
    return dict(sorted(counts.items()))


def canonical_key(P: IntervalPoset) -> str:
    """Deterministic identity key; equal posets have equal keys.

    >>> canonical_key(poset_of(Permutation((2, 4, 1, 3))))
    '4|1-1,1-4,2-2,3-3,4-4'
    """
    body = ",".join(f"{lo}-{hi}" for lo, hi in P.sorted_elements())
    return f"{P.n}|{body}"


def key_of_family(n: int, intervals: Iterable[tuple[int, int]]) -> str:
    """``canonical_key`` for a raw interval family, without building a poset."""
    body = ",".join(f"{lo}-{hi}" for lo, hi in sorted(intervals))
    return f"{n}|{body}"


@dataclasses.dataclass(frozen=True)
class FamilyVerdict:
    """Outcome of ``validate_interval_family``.

    ``ok`` means no necessary condition was refuted; it does not certify
    that some permutation realizes the family.  On failure, ``failure``
    names the first violated condition and ``witnesses`` carries the
    offending intervals (plus the missing interval for closure failures).
    """

    ok: bool
    failure: str | None = None
    witnesses: tuple = ()


def _closure_violation(intervals, n):
    """First Obs-style closure failure among properly overlapping pairs."""
    elems = sorted(intervals)
    for idx, I in enumerate(elems):
        a, b = I
        for J in elems[idx + 1:]:
            c, d = J
            # sorted order gives a <= c; proper overlap means a < c <= b < d
            if not (a < c <= b < d):
                continue
            for derived, tag in (((c, b), "intersection"), ((a, d), "union"),
                                 ((a, c - 1), "difference"), ((b + 1, d), "difference")):
                if derived not in intervals:
                    return (I, J, derived, tag)
    return None


def _family_children(intervals, v):
    below = [w for w in intervals if w != v and _contains(v, w)]
    return [w for w in below
            if not any(x != w and _contains(x, w) for x in below)]


def _three_descendant_violation(intervals):
    for v in sorted(intervals):
        kids = _family_children(intervals, v)
        if len(kids) == 3:
            return (v, tuple(sorted(kids, key=lambda iv: iv[0])))
    return None


def validate_interval_family(intervals: Iterable[tuple[int, int]],
                             n: int) -> FamilyVerdict:
    """Check the necessary conditions for a family to be an interval poset.

    Conditions, in checking order: the trivial intervals are present; for
    every properly overlapping pair the union, intersection and both
    differences are present; no element has exactly 3 direct descendants.
    Passing means "not refuted", realizability is a separate search
    (census ``realize``).
    """
    fam = frozenset(intervals)
    required = {(i, i) for i in range(1, n + 1)} | {(1, n)}
    missing = sorted(required - fam)
    if missing:
        return FamilyVerdict(False, "trivial-intervals", tuple(missing))
    bad = _closure_violation(fam, n)
    if bad is not None:
        I, J, miss, tag = bad
        return FamilyVerdict(False, "closure", (I, J, miss, tag))
    bad = _three_descendant_violation(fam)
    if bad is not None:
        v, kids = bad
        return FamilyVerdict(False, "three-descendants", (v, kids))
    return FamilyVerdict(True)


def format_interval(v: tuple[int, int]) -> str:
    """'{a}' for singletons, '[a,b]' otherwise."""
    lo, hi = v
    return f"{{{lo}}}" if lo == hi else f"[{lo},{hi}]"


def write_poset_text(P: IntervalPoset) -> str:
    """Serialize as a header line 'n <n>' plus one 'lo hi' line per interval."""
    lines = [f"n {P.n}"]
    lines.extend(f"{lo} {hi}" for lo, hi in P.sorted_elements())
    return "\n".join(lines) + "\n"


def parse_poset_text(text: str) -> IntervalPoset:
    """Inverse of ``write_poset_text``; blank lines are ignored."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n "):
        raise ValueError("poset text must start with a header line 'n <n>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ValueError(f"bad header line {lines[0]!r}") from None
    intervals = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad interval line {ln!r}")
        try:
            lo, hi = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad interval line {ln!r}") from None
        intervals.add((lo, hi))
    return IntervalPoset(n, frozenset(intervals))
