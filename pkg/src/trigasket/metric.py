"""Exact quotient metrics on the gluing stages and on the address space.

`dist_level` evaluates the two-path junction formula: within one copy
distances halve; across copies the shortest route either crosses the shared
corner directly or detours through the third copy, whose crossing always
costs exactly 1 inside the outer minimum. `dist_oracle` rebuilds the same
metric with none of that structure (equivalence classes + Floyd-Warshall on
min-over-representative edge weights), so exact agreement between the two is
a real check, not a tautology.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .words import (
    AddressWord,
    CanonicalAddress,
    PAD,
    distinguished,
    embed,
    iter_words,
)

HALF = Fraction(1, 2)
ONE = Fraction(1)
ZERO = Fraction(0)

ORACLE_MAX_LEVEL = 5  # 3^(n+1) raw words; Floyd-Warshall beyond this is not desk-scale

# Junction crossings, keyed by ordered copy pair (m, m'):
# (direct corner on m side, direct corner on m' side,
#  via corner on m side,    via corner on m' side).
# The via route's middle leg crosses the third copy corner-to-corner and
# contributes exactly 1 inside the minimum.
JUNCTIONS: dict[tuple[str, str], tuple[str, str, str, str]] = {
    ("a", "b"): ("L", "T", "R", "R"),
    ("b", "a"): ("T", "L", "R", "R"),
    ("a", "c"): ("R", "T", "L", "L"),
    ("c", "a"): ("T", "R", "L", "L"),
    ("b", "c"): ("R", "L", "T", "T"),
    ("c", "b"): ("L", "R", "T", "T"),
}


@lru_cache(maxsize=None)
def _corner_dist(labels: str, d: str, corner: str) -> Fraction:
    """Distance from the word (labels, d) to its level's `corner` word.

    Corner words are pad(corner)^n.corner, so this recursion is linear in the
    word length: the same-copy branch strips one label, and the cross-copy
    branch needs only corner distances of the tail. This is the fast path
    that keeps dist_level quadratic instead of exponential.
    """
    if not labels:
        return ZERO if d == corner else ONE
    m, tail = labels[0], labels[1:]
    mc = PAD[corner]  # the corner word's repeated label
    if m == mc:
        return HALF * _corner_dist(tail, d, corner)
    p, q, pv, qv = JUNCTIONS[(m, mc)]
    direct = _corner_dist(tail, d, p) + (ZERO if q == corner else ONE)
    via = _corner_dist(tail, d, pv) + ONE + (ZERO if qv == corner else ONE)
    return HALF * min(direct, via)


@lru_cache(maxsize=None)
def _dist(lu: str, du: str, lv: str, dv: str) -> Fraction:
    if not lu:
        return ZERO if du == dv else ONE
    mu, mv = lu[0], lv[0]
    if mu == mv:
        return HALF * _dist(lu[1:], du, lv[1:], dv)
    p, q, pv, qv = JUNCTIONS[(mu, mv)]
    direct = _corner_dist(lu[1:], du, p) + _corner_dist(lv[1:], dv, q)
    via = _corner_dist(lu[1:], du, pv) + ONE + _corner_dist(lv[1:], dv, qv)
    return HALF * min(direct, via)


def dist_level(u: AddressWord, v: AddressWord, level: int) -> Fraction:
    """Quotient metric between two words of the given common level."""
    if u.level != level or v.level != level:
        raise ValueError(
            f"level mismatch: {u} is level {u.level}, {v} is level {v.level}, want {level}"
        )
    # symmetric memo key
    a, b = sorted(((u.labels, u.terminal), (v.labels, v.terminal)))
    return _dist(a[0], a[1], b[0], b[1])


def dist_G(u: CanonicalAddress, v: CanonicalAddress) -> Fraction:
    """Metric on the address space: embed to the deeper level, measure there."""
    n = max(u.level, v.level)
    return dist_level(embed(u.word, n), embed(v.word, n), n)


def tensor_dist_G(mu: str, u: CanonicalAddress, mv: str, v: CanonicalAddress) -> Fraction:
    """One gluing step over the address metric, by the same two-path formula.

    Label-prepending is an isometry, so this must equal
    dist_G(prepend(mu, u), prepend(mv, v)) exactly; the acceptance suite
    checks that equality.
    """
    if mu == mv:
        return HALF * dist_G(u, v)
    p, q, pv, qv = JUNCTIONS[(mu, mv)]
    corners = {
        "T": CanonicalAddress(AddressWord("", "T")),
        "L": CanonicalAddress(AddressWord("", "L")),
        "R": CanonicalAddress(AddressWord("", "R")),
    }
    direct = dist_G(u, corners[p]) + dist_G(corners[q], v)
    via = dist_G(u, corners[pv]) + ONE + dist_G(corners[qv], v)
    return HALF * min(direct, via)


def diameter_bound_check(prefix: str, x1: AddressWord, x2: AddressWord) -> bool:
    """Points sharing an n-label prefix sit within 2^-n of each other."""
    if x1.level != x2.level:
        raise ValueError("tails must share a level")
    n = len(prefix)
    u = AddressWord(prefix + x1.labels, x1.terminal)
    v = AddressWord(prefix + x2.labels, x2.terminal)
    return dist_level(u, v, u.level) <= Fraction(1, 2**n)


# ---------------------------------------------------------------------------
# Independent oracle: explicit quotient construction + all-pairs shortest path
# ---------------------------------------------------------------------------


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[rj] = ri


class OracleTable:
    """Level-n quotient space built from scratch: class ids and a distance matrix."""

    def __init__(self, level: int, class_of: dict[AddressWord, int], dist: list[list[Fraction]]):
        self.level = level
        self.class_of = class_of
        self.dist = dist

    @property
    def class_count(self) -> int:
        return len(self.dist)

    def lookup(self, u: AddressWord, v: AddressWord) -> Fraction:
        return self.dist[self.class_of[u]][self.class_of[v]]


@lru_cache(maxsize=None)
def _oracle_table(level: int) -> OracleTable:
    if level == 0:
        words = list(iter_words(0))
        class_of = {w: i for i, w in enumerate(words)}
        dist = [[ZERO if i == j else ONE for j in range(3)] for i in range(3)]
        return OracleTable(0, class_of, dist)

    prev = _oracle_table(level - 1)
    # proto-nodes: (copy label, inner class); the three junction pairs merge
    proto = [(m, c) for m in "abc" for c in range(prev.class_count)]
    index = {pc: i for i, pc in enumerate(proto)}
    uf = _UnionFind(len(proto))
    ct, cl, cr = distinguished(level - 1)
    corner = {
        "T": prev.class_of[ct],
        "L": prev.class_of[cl],
        "R": prev.class_of[cr],
    }
    # the gluing relations of one step: b.T~a.L, a.R~c.T, c.L~b.R
    uf.union(index[("b", corner["T"])], index[("a", corner["L"])])
    uf.union(index[("a", corner["R"])], index[("c", corner["T"])])
    uf.union(index[("c", corner["L"])], index[("b", corner["R"])])

    roots = sorted({uf.find(i) for i in range(len(proto))})
    cid = {root: i for i, root in enumerate(roots)}
    n = len(roots)

    # edge weights: min over representatives of the pre-quotient step metric
    # (half the inner quotient distance inside one copy, 1 across copies)
    dist = [[ONE] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = ZERO
    members: list[list[tuple[str, int]]] = [[] for _ in range(n)]
    for pc, i in index.items():
        members[cid[uf.find(i)]].append(pc)
    for i in range(n):
        for j in range(i + 1, n):
            best = ONE
            for m1, c1 in members[i]:
                for m2, c2 in members[j]:
                    if m1 == m2:
                        w = HALF * prev.dist[c1][c2]
                        if w < best:
                            best = w
            dist[i][j] = best
            dist[j][i] = best

    # Floyd-Warshall; all values are <= 1, so any intermediate at distance 1
    # can never shorten a path and its pass is skipped outright.
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik >= ONE:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt

    class_of: dict[AddressWord, int] = {}
    for w in iter_words(level):
        inner = prev.class_of[AddressWord(w.labels[1:], w.terminal)]
        class_of[w] = cid[uf.find(index[(w.labels[0], inner)])]
    return OracleTable(level, class_of, dist)


def oracle_table(level: int) -> OracleTable:
    """The cached explicit quotient at a level (guarded: the space grows 3^n)."""
    if not 0 <= level <= ORACLE_MAX_LEVEL:
        raise ValueError(f"oracle supports levels 0..{ORACLE_MAX_LEVEL}, got {level}")
    return _oracle_table(level)


def dist_oracle(u: AddressWord, v: AddressWord, level: int) -> Fraction:
    """Brute-force quotient-graph distance; independent of dist_level."""
    if u.level != level or v.level != level:
        raise ValueError("oracle arguments must both have the stated level")
    return oracle_table(level).lookup(u, v)


def oracle_classes_agree(u: AddressWord, v: AddressWord) -> bool:
    """Whether the closure construction puts two same-level words in one class."""
    if u.level != v.level:
        raise ValueError("words must share a level")
    t = oracle_table(u.level)
    return t.class_of[u] == t.class_of[v]
