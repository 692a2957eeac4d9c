"""Runnable acceptance criteria.

Ten numbered checks covering the metric recursion, the gluing functor, the
plane embedding, and the counterexample gallery. Each returns a
CriterionResult; `run_suite` groups them the way the `verify` subcommand
exposes them. Every gate is exact (Fraction comparisons); randomness is
seeded per criterion so output is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from random import Random
from typing import Callable

from trigasket.words import (
    LABELS,
    AddressWord,
    CanonicalAddress,
    canonicalize,
    glue_partner,
    iter_canonical,
    iter_words,
    parse_word,
    prepend,
)
from trigasket.metric import (
    diameter_bound_check,
    dist_G,
    dist_level,
    dist_oracle,
    oracle_table,
    tensor_dist_G,
)
from trigasket.coalgebras import finality_check, get_coalgebra, theta
from trigasket.algebras import mediate_from_initial
from trigasket.geometry import (
    VERTEX,
    Point2,
    QSqrt3,
    coords,
    exact_address,
    sigma,
    sigma_inv,
)
from trigasket.counterexamples import (
    APEX,
    delta_nonlipschitz_report,
    delta_point,
    i_algebra,
    y_algebra,
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.number:>2} {self.name}: {self.detail}"


def _result(number: int, name: str, passed: bool, detail: str) -> CriterionResult:
    return CriterionResult(number, name, passed, detail)


# ---------------------------------------------------------------- criterion 1


def metric_matches_oracle() -> CriterionResult:
    """Recursive two-path distance vs brute-force quotient-graph metric."""
    checked = 0
    for level in range(4):
        ws = list(iter_words(level))
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                if dist_level(ws[i], ws[j], level) != dist_oracle(ws[i], ws[j], level):
                    return _result(
                        1, "metric-matches-oracle", False,
                        f"mismatch at level {level}: {ws[i].text} / {ws[j].text}",
                    )
                checked += 1
    rng = Random(1001)
    ws4 = list(iter_words(4))
    for _ in range(10_000):
        u = rng.choice(ws4)
        v = rng.choice(ws4)
        if dist_level(u, v, 4) != dist_oracle(u, v, 4):
            return _result(
                1, "metric-matches-oracle", False,
                f"mismatch at level 4: {u.text} / {v.text}",
            )
        checked += 1
    return _result(
        1, "metric-matches-oracle", True,
        f"exact equality on {checked} pairs (levels 0-3 exhaustive, 10000 random at level 4)",
    )


# ---------------------------------------------------------------- criterion 2


def prefix_diameter_bound() -> CriterionResult:
    """A shared n-label prefix confines any two tails to diameter 2^-n."""
    rng = Random(1002)
    tails = {t: list(iter_words(t)) for t in range(3)}

    def prefixed(prefix: str, w: AddressWord) -> AddressWord:
        return AddressWord(prefix + w.labels, w.terminal)

    for _ in range(10_000):
        n = rng.randint(0, 10)
        prefix = "".join(rng.choice(LABELS) for _ in range(n))
        t = rng.randint(0, 2)
        x1, x2 = rng.choice(tails[t]), rng.choice(tails[t])
        if not diameter_bound_check(prefix, x1, x2):
            return _result(
                2, "prefix-diameter-bound", False,
                f"d > 2^-{n} for prefix {prefix!r}, tails {x1.text}/{x2.text}",
            )
    for _ in range(10_000):
        n = rng.randint(0, 10)
        prefix = "".join(rng.choice(LABELS) for _ in range(n))
        t = rng.randint(0, 2)
        x1, x2, y1, y2 = (rng.choice(tails[t]) for _ in range(4))
        level = n + t
        d1 = dist_level(prefixed(prefix, x1), prefixed(prefix, x2), level)
        d2 = dist_level(prefixed(prefix, y1), prefixed(prefix, y2), level)
        if abs(d1 - d2) > Fraction(2, 2**n):
            return _result(
                2, "prefix-diameter-bound", False,
                f"|d1-d2| > 2^(1-{n}) for prefix {prefix!r}",
            )
    return _result(
        2, "prefix-diameter-bound", True,
        "10000 pair samples within 2^-n and 10000 quadruples within 2^(1-n), levels 0-10",
    )


# ---------------------------------------------------------------- criterion 3


def gluing_step_isometry() -> CriterionResult:
    """Prepending a label is an isometry from the glued tensor onto its image."""
    rng = Random(1003)
    canon = list(iter_canonical(8))
    checked = 0
    for _ in range(1_000):
        u = rng.choice(canon)
        v = rng.choice(canon)
        for mu, mv in product(LABELS, repeat=2):
            lhs = tensor_dist_G(mu, u, mv, v)
            rhs = dist_G(prepend(mu, u), prepend(mv, v))
            if lhs != rhs:
                return _result(
                    3, "gluing-step-isometry", False,
                    f"{mu}*{u.text} / {mv}*{v.text}: tensor {lhs} vs image {rhs}",
                )
            checked += 1
    return _result(
        3, "gluing-step-isometry", True,
        f"exact equality on {checked} label-pair combinations (1000 address pairs, levels <= 8)",
    )


# ---------------------------------------------------------------- criterion 4


def uniform_cauchy_modulus() -> CriterionResult:
    """d_G(theta_p, theta_q) <= 2^-p for p < q, same modulus for every point."""
    rng = Random(1004)
    canon6 = list(iter_canonical(6))
    gasket_pts = [VERTEX["T"], VERTEX["L"], VERTEX["R"]]
    while len(gasket_pts) < 200:
        gasket_pts.append(coords(rng.choice(canon6)))
    delta_pts = [APEX]
    while len(delta_pts) < 200:
        den = rng.randint(1, 4096)
        delta_pts.append(delta_point(Fraction(rng.randint(0, den), den)))

    checked = 0
    for name, pts in (("gasket-sigma", gasket_pts), ("delta", delta_pts)):
        co = get_coalgebra(name)
        for x in pts:
            ths = [theta(co, x, n) for n in range(1, 15)]
            for p in range(1, 14):
                for q in range(p + 1, 15):
                    if dist_G(ths[p - 1], ths[q - 1]) > Fraction(1, 2**p):
                        return _result(
                            4, "uniform-cauchy-modulus", False,
                            f"{name}: d(theta_{p}, theta_{q}) > 2^-{p} at {x!r}",
                        )
                    checked += 1
    return _result(
        4, "uniform-cauchy-modulus", True,
        f"{checked} (p,q) comparisons, 200 points per coalgebra, depths to 14, zero violations",
    )


# ---------------------------------------------------------------- criterion 5


def three_point_collapse() -> CriterionResult:
    """Mediating map onto the 3-point algebra tears apart converging addresses."""
    alg = y_algebra()
    top = mediate_from_initial(alg, canonicalize(parse_word(".T")))
    if top != "t":
        return _result(5, "three-point-collapse", False, f"f(.T) = {top!r}, want 't'")
    image = alg.space.dist("l", "t")
    for n in range(1, 11):
        xn = canonicalize(parse_word("a" * n + ".L"))
        fx = mediate_from_initial(alg, xn)
        dom = dist_G(xn, canonicalize(parse_word(".T")))
        if fx != "l" or dom != Fraction(1, 2**n) or image != 1:
            return _result(
                5, "three-point-collapse", False,
                f"n={n}: f={fx!r}, domain {dom}, image {image}",
            )
    return _result(
        5, "three-point-collapse", True,
        "f(a^n.L)='l' at domain distance 2^-n from f(.T)='t', image distance 1, n=1..10",
    )


# ---------------------------------------------------------------- criterion 6


def edge_drain_collapse() -> CriterionResult:
    """Same tear on the marked-triple algebra that drains the bottom edge to R."""
    alg = i_algebra()
    space = alg.space
    left = mediate_from_initial(alg, canonicalize(parse_word(".L")))
    if left != space.L:
        return _result(6, "edge-drain-collapse", False, f"h(.L) = {left!r}")
    for n in range(1, 11):
        wn = canonicalize(parse_word("b" * n + ".R"))
        hn = mediate_from_initial(alg, wn)
        dom = dist_G(wn, canonicalize(parse_word(".L")))
        img = space.dist(hn, left)
        if hn != space.R or dom > Fraction(1, 2**n) or img != 1:
            return _result(
                6, "edge-drain-collapse", False,
                f"n={n}: h={hn!r}, domain {dom}, image {img}",
            )
    return _result(
        6, "edge-drain-collapse", True,
        "h(b^n.R)=R within 2^-n of h(.L)=L, image distance 1, n=1..10",
    )


# ---------------------------------------------------------------- criterion 7


def unbounded_expansion() -> CriterionResult:
    """Witness pairs certify expansion ratio >= 2*2^n for the fold coalgebra."""
    rep = delta_nonlipschitz_report(10)
    if not rep.passed:
        return _result(7, "unbounded-expansion", False, "report gate failed")
    tol = Fraction(1, 2**16)
    if coords(parse_word(".L")) != Point2(QSqrt3.of(0), QSqrt3.of(0)):
        return _result(7, "unbounded-expansion", False, "L corner is not the origin")
    for row in rep.rows:
        limit_y = coords(parse_word("b" * row.n + ".R"))
        want_y = Point2(QSqrt3.of(Fraction(1, 2**row.n)), QSqrt3.of(0))
        if limit_y != want_y:
            return _result(
                7, "unbounded-expansion", False,
                f"n={row.n}: y-limit point is not (1/2^{row.n}, 0)",
            )
        if row.x_limit_defect > tol or row.y_limit_defect > tol:
            return _result(
                7, "unbounded-expansion", False,
                f"n={row.n}: limit defect exceeds 2^-16",
            )
        if row.ratio < 2 * 2**row.n - Fraction(1, 2**10):
            return _result(
                7, "unbounded-expansion", False,
                f"n={row.n}: ratio {row.ratio} below 2*2^{row.n} - 2^-10",
            )
    final = rep.rows[-1].ratio
    return _result(
        7, "unbounded-expansion", True,
        f"limits pinned to within 2^-16, ratios exactly 2*2^n (n=1..10, final {final})",
    )


# ---------------------------------------------------------------- criterion 8


def plane_embedding_roundtrip() -> CriterionResult:
    """Similitude fixed points, address round trips, junction coincidence."""
    fixed = [
        ("a", VERTEX["T"], Point2(QSqrt3.of(Fraction(1, 2)), QSqrt3.of(0, Fraction(1, 2)))),
        ("b", VERTEX["L"], Point2(QSqrt3.of(0), QSqrt3.of(0))),
        ("c", VERTEX["R"], Point2(QSqrt3.of(1), QSqrt3.of(0))),
    ]
    for m, v, want in fixed:
        if v != want or sigma(m, v) != v:
            return _result(
                8, "plane-embedding-roundtrip", False, f"sigma_{m} fixed point is off",
            )

    trips = 0
    for w in iter_canonical(6):
        if exact_address(coords(w)) != w:
            return _result(
                8, "plane-embedding-roundtrip", False,
                f"exact_address(coords({w.text})) != {w.text}",
            )
        p = coords(w)
        for m in LABELS:
            q = sigma(m, p)
            m2, p2 = sigma_inv(q)
            if sigma(m2, p2) != q:
                return _result(
                    8, "plane-embedding-roundtrip", False,
                    f"sigma_inv(sigma({m}, coords({w.text}))) moved the point",
                )
            if prepend(m, w).word.labels[:1] == m and (m2, p2) != (m, p):
                return _result(
                    8, "plane-embedding-roundtrip", False,
                    f"canonical peel of {m}*{w.text} is not ({m}, coords({w.text}))",
                )
            trips += 1

    junctions = 0
    for level in range(1, 6):
        for u in iter_words(level):
            v = glue_partner(u)
            if v is None:
                continue
            if coords(u) != coords(v):
                return _result(
                    8, "plane-embedding-roundtrip", False,
                    f"{u.text} ~ {v.text} but coords differ",
                )
            junctions += 1
    return _result(
        8, "plane-embedding-roundtrip", True,
        f"3 fixed points exact, {trips} sigma round trips (levels <= 6), "
        f"{junctions} junction words with coinciding coordinates",
    )


# ---------------------------------------------------------------- criterion 9


def finality_square() -> CriterionResult:
    """Unfold-then-anchor commutes with one coalgebra step; corruption must not."""
    rng = Random(1009)
    canon5 = list(iter_canonical(5))
    sample_g = [VERTEX["T"], VERTEX["L"], VERTEX["R"]]
    while len(sample_g) < 20:
        sample_g.append(coords(rng.choice(canon5)))
    sample_d = [APEX, delta_point(Fraction(1, 3)), delta_point(Fraction(2, 7)),
                delta_point(Fraction(1, 2)), delta_point(Fraction(5, 16))]
    while len(sample_d) < 20:
        den = rng.randint(1, 1024)
        sample_d.append(delta_point(Fraction(rng.randint(0, den), den)))

    gask = get_coalgebra("gasket-sigma")
    delt = get_coalgebra("delta")
    rg = finality_check(gask, sample_g, depth=12)
    rd = finality_check(delt, sample_d, depth=12)
    if not (rg.passed and rd.passed):
        return _result(9, "finality-square", False, f"{rg}; {rd}")

    flip = {"a": "b", "b": "c", "c": "a"}

    def corrupted(p, k: int) -> CanonicalAddress:
        t = theta(delt, p, k)
        w = t.word
        if w.level == 0:
            return t
        return canonicalize(AddressWord(flip[w.labels[0]] + w.labels[1:], w.terminal))

    bad = finality_check(delt, sample_d, depth=12, theta_fn=corrupted)
    if bad.passed:
        return _result(9, "finality-square", False, "corrupted candidate passed")
    return _result(
        9, "finality-square", True,
        f"both coalgebras commute to depth 12 with defect {max(rg.max_violation, rd.max_violation)} "
        f"(bound 2^(1-k)); corrupted candidate breaches the bound",
    )


# --------------------------------------------------------------- criterion 10


def canonicalization_complete() -> CriterionResult:
    """Canonical forms separate points exactly as the brute-force closure does."""
    expected = {0: 3, 1: 6, 2: 15, 3: 42, 4: 123}
    total = 0
    for level in range(5):
        table = oracle_table(level)
        by_class: dict[int, set[CanonicalAddress]] = {}
        for w in iter_words(level):
            by_class.setdefault(table.class_of[w], set()).add(canonicalize(w))
            total += 1
        if len(by_class) != expected[level]:
            return _result(
                10, "canonicalization-complete", False,
                f"level {level}: {len(by_class)} classes, want {expected[level]}",
            )
        if any(len(forms) != 1 for forms in by_class.values()):
            return _result(
                10, "canonicalization-complete", False,
                f"level {level}: some closure class has two canonical forms",
            )
        forms = {next(iter(f)) for f in by_class.values()}
        if len(forms) != len(by_class):
            return _result(
                10, "canonicalization-complete", False,
                f"level {level}: distinct classes share a canonical form",
            )
    return _result(
        10, "canonicalization-complete", True,
        f"partitions identical on all {total} words of levels 0-4 "
        f"(class counts 3, 6, 15, 42, 123)",
    )


# -------------------------------------------------------------------- suites


CRITERIA: tuple[tuple[int, Callable[[], CriterionResult]], ...] = (
    (1, metric_matches_oracle),
    (2, prefix_diameter_bound),
    (3, gluing_step_isometry),
    (4, uniform_cauchy_modulus),
    (5, three_point_collapse),
    (6, edge_drain_collapse),
    (7, unbounded_expansion),
    (8, plane_embedding_roundtrip),
    (9, finality_square),
    (10, canonicalization_complete),
)

SUITES: dict[str, tuple[int, ...]] = {
    "metric": (1, 2, 3, 10),
    "functor": (4, 8, 9),
    "counterexamples": (5, 6, 7),
    "all": tuple(range(1, 11)),
}


def run_criterion(number: int) -> CriterionResult:
    for num, fn in CRITERIA:
        if num == number:
            return fn()
    raise ValueError(f"no criterion numbered {number}")


def run_suite(suite: str = "all") -> list[CriterionResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return [run_criterion(n) for n in SUITES[suite]]
