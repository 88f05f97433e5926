"""Independent oracles used to cross-check the library.

Each oracle recomputes a quantity by a deliberately different route than
the implementation under test: intervals by scanning value ranges instead
of position windows, sum intervals by explicit window splitting, face
emptiness by geometric segment-vs-hull tests on the unit circle, class
enumeration by naive filtration of every diagonal subset, and realization
by scanning entire symmetric groups.
"""
from __future__ import annotations

import itertools
import math

from polyposet.polygon import Dissection, DissectionClass, all_diagonals, \
    satisfies_class

EPS = 1e-9


def oracle_intervals(entries) -> set[tuple[int, int]]:
    """Intervals found from the value side: (lo, hi) is an interval iff the
    positions of values lo..hi occupy a contiguous stretch."""
    n = len(entries)
    pos = {v: i for i, v in enumerate(entries)}
    out = set()
    for lo in range(1, n + 1):
        for hi in range(lo, n + 1):
            ps = [pos[v] for v in range(lo, hi + 1)]
            if max(ps) - min(ps) == hi - lo:
                out.add((lo, hi))
    return out


def oracle_has_sum_interval(entries, parts: int) -> bool:
    """Sum-interval existence by explicit enumeration of windows and cut
    points: every part must be a block and the parts' value ranges must be
    consecutive, all ascending or all descending."""
    n = len(entries)
    for i in range(n):
        for j in range(i + parts - 1, n):
            inner = range(i + 1, j + 1)
            for cuts in itertools.combinations(inner, parts - 1):
                bounds = [i, *cuts, j + 1]
                segs = [entries[bounds[t]:bounds[t + 1]] for t in range(parts)]
                if any(max(s) - min(s) != len(s) - 1 for s in segs):
                    continue
                asc = all(min(segs[t + 1]) == max(segs[t]) + 1
                          for t in range(parts - 1))
                desc = all(max(segs[t + 1]) == min(segs[t]) - 1
                           for t in range(parts - 1))
                if asc or desc:
                    return True
    return False


def oracle_realizers(family, n: int) -> list[tuple[int, ...]]:
    """All permutations of order n whose interval set equals the family,
    in lexicographic order, via full scan of S_n (practical to n = 6)."""
    fam = set(family)
    return [p for p in itertools.permutations(range(1, n + 1))
            if oracle_intervals(p) == fam]


def _vertex_xy(m: int, i: int) -> tuple[float, float]:
    ang = math.pi / 2 - 2 * math.pi * (i - 1) / m
    return (math.cos(ang), math.sin(ang))


def segment_enters_hull(m: int, face: tuple[int, ...],
                        chord: tuple[int, int]) -> bool:
    """Does the chord's segment meet the open interior of the convex hull
    of the face vertices?  Clips the segment against the hull's half-planes
    and then tests the clipped midpoint strictly; chords running along an
    edge or only touching a vertex therefore do not count.  Coordinates are
    on the unit circle, where every nonzero margin at these sizes is far
    above EPS."""
    pts = [_vertex_xy(m, v) for v in face]
    k = len(pts)
    a = _vertex_xy(m, chord[0])
    b = _vertex_xy(m, chord[1])
    area2 = sum(pts[i][0] * pts[(i + 1) % k][1] - pts[(i + 1) % k][0] * pts[i][1]
                for i in range(k))
    sign = 1.0 if area2 > 0 else -1.0

    def side(px, py, p, q):
        ex, ey = q[0] - p[0], q[1] - p[1]
        return sign * (ex * (py - p[1]) - ey * (px - p[0]))

    t0, t1 = 0.0, 1.0
    for i in range(k):
        p, q = pts[i], pts[(i + 1) % k]
        f_a = side(a[0], a[1], p, q)
        f_b = side(b[0], b[1], p, q)
        if abs(f_a - f_b) < EPS:
            if f_a < EPS:
                return False
            continue
        t_cross = f_a / (f_a - f_b)
        if f_a > f_b:
            t1 = min(t1, t_cross)
        else:
            t0 = max(t0, t_cross)
        if t0 >= t1 - EPS:
            return False
    tm = (t0 + t1) / 2
    px = a[0] + tm * (b[0] - a[0])
    py = a[1] + tm * (b[1] - a[1])
    return all(side(px, py, pts[i], pts[(i + 1) % k]) > EPS for i in range(k))


def geometric_empty_faces(D: Dissection, k: int) -> list[tuple[int, ...]]:
    """Empty k-gon faces decided geometrically instead of by the arc rule."""
    out = []
    for face in itertools.combinations(range(1, D.m + 1), k):
        sides = [(face[i], face[i + 1]) for i in range(k - 1)] + \
                [(face[0], face[-1])]
        if not all(D.has_chord(u, v) for u, v in sides):
            continue
        if any(segment_enters_hull(D.m, face, c) for c in D.diagonals):
            continue
        out.append(face)
    return out


def naive_class_dissections(m: int, clazz: DissectionClass) \
        -> list[frozenset[tuple[int, int]]]:
    """Every diagonal subset, filtered by the public class predicate;
    practical through m = 7 (2^14 subsets)."""
    diags = all_diagonals(m)
    out = []
    for bits in range(1 << len(diags)):
        chosen = frozenset(d for i, d in enumerate(diags) if bits >> i & 1)
        if satisfies_class(Dissection(m, chosen), clazz):
            out.append(chosen)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def framed_quadfree_count_vectorized(m: int) -> int:
    """Count framed quad-free dissections by filtering all 2^d diagonal
    subsets with numpy bit masks.  Everything — diagonal order, crossings,
    frames, arc containment — is rederived here from first principles so
    the check shares no logic with the pruned search."""
    import numpy as np

    diags = [(u, v) for u in range(1, m + 1) for v in range(u + 2, m + 1)
             if (u, v) != (1, m)]
    index = {c: i for i, c in enumerate(diags)}
    d = len(diags)

    def outer(u, v):
        return v - u == 1 or (u, v) == (1, m)

    def in_one_arc(face, x, y):
        arcs = [(face[i], face[i + 1]) for i in range(3)]
        for lo, hi in arcs:
            if lo <= x <= hi and lo <= y <= hi:
                return True
        hi, lo = face[3], face[0]
        return (x >= hi or x <= lo) and (y >= hi or y <= lo)

    subsets = np.arange(1 << d, dtype=np.uint32)
    ok = np.ones(1 << d, dtype=bool)

    for i in range(d):
        for j in range(i + 1, d):
            (p, q), (r, s) = diags[i], diags[j]
            if not (p < r < q < s or r < p < s < q):
                continue
            x1, x2, x3, x4 = sorted((p, q, r, s))
            req = np.uint32(0)
            for e in ((x1, x2), (x2, x3), (x3, x4), (x1, x4)):
                if not outer(*e):
                    req |= np.uint32(1 << index[e])
            pair = np.uint32((1 << i) | (1 << j))
            ok &= ~(((subsets & pair) == pair) & ((subsets & req) != req))

    for face in itertools.combinations(range(1, m + 1), 4):
        sides = np.uint32(0)
        for e in ((face[0], face[1]), (face[1], face[2]),
                  (face[2], face[3]), (face[0], face[3])):
            if not outer(*e):
                sides |= np.uint32(1 << index[e])
        pens = np.uint32(0)
        for c in diags:
            if not in_one_arc(face, *c):
                pens |= np.uint32(1 << index[c])
        pens &= ~sides
        ok &= ~(((subsets & sides) == sides) & ((subsets & pens) == 0))

    return int(ok.sum())
