"""Tri-pointed metric spaces, the gluing construction on them, and map certifiers.

A tri-pointed space is a 1-bounded metric space with marked points T, L, R
pairwise at distance 1. The gluing of a space X takes three labeled copies,
halves distances inside each copy, and identifies (b,T)=(a,L), (a,R)=(c,T),
(c,L)=(b,R); its marked points are (a,T), (b,L), (c,R). Maps are certified
empirically on finite carriers or supplied samples; continuity is reported
as a modulus table, never "passed", since finite data cannot certify it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Hashable, Optional, Sequence

from .metric import JUNCTIONS
from .numerics import MetricValue, RadicalSum, value_float, value_le

Point = Hashable

HALF = Fraction(1, 2)
ONE = Fraction(1)

# glued pairs, written toward the canonical member (same preference as words)
_GLUE_NORMAL = {("b", "T"): ("a", "L"), ("c", "T"): ("a", "R"), ("c", "L"): ("b", "R")}


class ValidationError(ValueError):
    """A space or structure map violates its declared invariants."""


@dataclass(frozen=True)
class TriPointedSpace:
    """Carrier with an exact metric and marked points T, L, R.

    `points` enumerates finite carriers (None means infinite/abstract); the
    metric must return exactly comparable values (Fraction or RadicalSum).
    """

    name: str
    dist: Callable[[Point, Point], MetricValue]
    T: Point
    L: Point
    R: Point
    points: Optional[tuple[Point, ...]] = None

    @property
    def marked(self) -> tuple[Point, Point, Point]:
        return (self.T, self.L, self.R)

    def is_finite(self) -> bool:
        return self.points is not None


def validate_space(space: TriPointedSpace) -> None:
    """Marked distances exactly 1; full metric axioms when finite."""
    for p, q in combinations(space.marked, 2):
        if space.dist(p, q) != ONE:
            raise ValidationError(
                f"{space.name}: marked points {p!r}, {q!r} not at distance 1"
            )
    if not space.is_finite():
        # infinite carriers: spot-check symmetry and self-distance on marks
        for p in space.marked:
            if space.dist(p, p) != 0:
                raise ValidationError(f"{space.name}: d({p!r},{p!r}) != 0")
        return
    pts = space.points
    for p in pts:
        if space.dist(p, p) != 0:
            raise ValidationError(f"{space.name}: d({p!r},{p!r}) != 0")
    for p, q in combinations(pts, 2):
        d1, d2 = space.dist(p, q), space.dist(q, p)
        if d1 != d2:
            raise ValidationError(f"{space.name}: asymmetric at {p!r},{q!r}")
        if not value_le(d1, ONE):
            raise ValidationError(f"{space.name}: d({p!r},{q!r}) > 1")
        if value_le(d1, 0):
            raise ValidationError(f"{space.name}: distinct points at distance 0")
    for p, q, r in combinations(pts, 3):
        for x, y, z in ((p, q, r), (q, r, p), (r, p, q)):
            if not value_le(space.dist(x, y), space.dist(x, z) + space.dist(z, y)):
                raise ValidationError(f"{space.name}: triangle fails at {x!r},{y!r},{z!r}")


def glue_normalize(m: str, x: Point, base: TriPointedSpace) -> tuple[str, Point]:
    """Canonical member of a labeled point's glued pair."""
    for (m1, d1), (m2, d2) in _GLUE_NORMAL.items():
        if m == m1 and x == getattr(base, d1):
            return m2, getattr(base, d2)
    return m, x


@dataclass(frozen=True)
class TensorSpace(TriPointedSpace):
    """The glued triple of a base space; points are normalized (label, base point)."""

    base: TriPointedSpace = None  # type: ignore[assignment]


def _tensor_dist(base: TriPointedSpace) -> Callable[[Point, Point], MetricValue]:
    def dist(p: Point, q: Point) -> MetricValue:
        (m1, x), (m2, y) = p, q
        if m1 == m2:
            return HALF * base.dist(x, y)
        pd, qd, pv, qv = JUNCTIONS[(m1, m2)]
        corner = {"T": base.T, "L": base.L, "R": base.R}
        direct = base.dist(x, corner[pd]) + base.dist(corner[qd], y)
        via = base.dist(x, corner[pv]) + ONE + base.dist(corner[qv], y)
        best = direct if value_le(direct, via) else via
        return HALF * best

    return dist


def tensor(space: TriPointedSpace) -> TensorSpace:
    """Glue three labeled copies of a validated space."""
    validate_space(space)
    points: Optional[tuple[Point, ...]] = None
    if space.is_finite():
        seen = []
        for m in "abc":
            for x in space.points:
                p = glue_normalize(m, x, space)
                if p not in seen:
                    seen.append(p)
        points = tuple(seen)
    return TensorSpace(
        name=f"glue({space.name})",
        dist=_tensor_dist(space),
        T=("a", space.T),
        L=("b", space.L),
        R=("c", space.R),
        points=points,
        base=space,
    )


# ---------------------------------------------------------------------------
# Map witnesses and certification
# ---------------------------------------------------------------------------

SHORT = "short"
ISOMETRIC = "isometric"
CONTINUOUS = "continuous"


def lipschitz(k: "Fraction | int") -> tuple[str, Fraction]:
    return ("lipschitz", Fraction(k))


@dataclass(frozen=True)
class MapWitness:
    """A marked-point-preserving map together with its claimed class."""

    f: Callable[[Point], Point]
    domain: TriPointedSpace
    codomain: TriPointedSpace
    claimed_class: "str | tuple[str, Fraction]"
    name: str = "map"

    def __post_init__(self) -> None:
        for d in ("T", "L", "R"):
            if self.f(getattr(self.domain, d)) != getattr(self.codomain, d):
                raise ValidationError(f"{self.name}: does not preserve mark {d}")


def tensor_map(w: MapWitness) -> MapWitness:
    """Apply the gluing to a map: (m, x) goes to (m, f(x)), same claimed class."""
    dom, cod = tensor(w.domain), tensor(w.codomain)

    def g(p: Point) -> Point:
        m, x = p
        return glue_normalize(m, w.f(x), w.codomain)

    return MapWitness(g, dom, cod, w.claimed_class, name=f"glue({w.name})")


@dataclass
class CertifyReport:
    witness_name: str
    claimed_class: "str | tuple[str, Fraction]"
    passed: Optional[bool]  # None for continuity (report-only)
    checked_pairs: int
    worst_pair: Optional[tuple[Point, Point]] = None
    best_constant: Optional[float] = None  # max observed d(fx,fy)/d(x,y)
    modulus_table: list[tuple[float, float]] = field(default_factory=list)

    def __str__(self) -> str:
        cls = self.claimed_class
        head = f"{self.witness_name}: class={cls} pairs={self.checked_pairs}"
        if self.passed is None:
            rows = ", ".join(f"eps={e:g} -> delta={d:g}" for e, d in self.modulus_table)
            return f"{head} modulus[{rows}]"
        verdict = "pass" if self.passed else f"FAIL at {self.worst_pair}"
        const = "" if self.best_constant is None else f" max-ratio={self.best_constant:.6g}"
        return f"{head} {verdict}{const}"


def _pair_iter(
    w: MapWitness, sample_pairs: Optional[Sequence[tuple[Point, Point]]]
):
    if sample_pairs is not None:
        yield from sample_pairs
        return
    if not w.domain.is_finite():
        raise ValidationError(
            f"{w.name}: infinite domain needs an explicit pair sample"
        )
    yield from combinations(w.domain.points, 2)


def certify(
    w: MapWitness, sample_pairs: Optional[Sequence[tuple[Point, Point]]] = None
) -> CertifyReport:
    """Check the claimed class pair by pair, exactly.

    short: d(fx,fy) <= d(x,y); lipschitz k: <= k*d(x,y); isometric: equality.
    continuous: no verdict, just the observed modulus (worst shrink of image
    distance per domain-distance bucket) since samples cannot certify it.
    """
    claimed = w.claimed_class
    checked = 0
    worst: Optional[tuple[Point, Point]] = None
    best_c = 0.0
    ok = True
    moduli: dict[float, float] = {}

    for x, y in _pair_iter(w, sample_pairs):
        dxy = w.domain.dist(x, y)
        dfxy = w.codomain.dist(w.f(x), w.f(y))
        checked += 1
        fx, fy = value_float(dfxy), value_float(dxy)
        if fy > 0:
            ratio = fx / fy
            if ratio > best_c:
                best_c = ratio
        if claimed == CONTINUOUS:
            # observed delta for each eps: smallest domain distance whose
            # image distance exceeds eps (any delta below it works on sample)
            for eps in (0.5, 0.25, 0.125, 0.0625):
                if fx > eps:
                    moduli[eps] = min(moduli.get(eps, float("inf")), fy)
            continue
        if claimed == SHORT:
            good = value_le(dfxy, dxy)
        elif claimed == ISOMETRIC:
            good = value_le(dfxy, dxy) and value_le(dxy, dfxy)
        else:
            kind, k = claimed
            if kind != "lipschitz":
                raise ValidationError(f"unknown map class {claimed!r}")
            good = value_le(dfxy, k * dxy)
        if not good and ok:
            ok = False
            worst = (x, y)

    if claimed == CONTINUOUS:
        table = sorted(moduli.items(), reverse=True)
        return CertifyReport(w.name, claimed, None, checked, None, best_c, table)
    return CertifyReport(w.name, claimed, ok, checked, worst, best_c)


def initial_map(space: TriPointedSpace) -> MapWitness:
    """The unique marked-point map out of the three-point space; an isometric embedding."""
    corner = i_space()

    def f(p: Point) -> Point:
        return {"T": space.T, "L": space.L, "R": space.R}[p]

    return MapWitness(f, corner, space, ISOMETRIC, name=f"eta({space.name})")


# ---------------------------------------------------------------------------
# Concrete finite spaces
# ---------------------------------------------------------------------------


def discrete_space(name: str, t: Point, l: Point, r: Point) -> TriPointedSpace:
    pts = (t, l, r)

    def dist(p: Point, q: Point) -> Fraction:
        return Fraction(0) if p == q else ONE

    return TriPointedSpace(name=name, dist=dist, T=t, L=l, R=r, points=pts)


def i_space() -> TriPointedSpace:
    """The three-corner space itself."""
    return discrete_space("I", "T", "L", "R")


def load_space(text: str, name: str = "loaded") -> TriPointedSpace:
    """Parse the plain-text finite-space table format.

    Line 1: `points: p q r ...`
    Line 2: `marked: T=p L=q R=r`
    Then one matrix row per point: `p: 0 1/2 1 ...` (exact fractions, full
    symmetric matrix in the order of line 1). '#' starts a comment.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if len(lines) < 2 or not lines[0].startswith("points:") or not lines[1].startswith("marked:"):
        raise ValidationError("space table needs 'points:' then 'marked:' lines")
    pts = tuple(lines[0].split(":", 1)[1].split())
    marks: dict[str, str] = {}
    for item in lines[1].split(":", 1)[1].split():
        key, _, val = item.partition("=")
        marks[key] = val
    if set(marks) != {"T", "L", "R"} or any(v not in pts for v in marks.values()):
        raise ValidationError("marked line must name T=, L=, R= among the points")
    index = {p: i for i, p in enumerate(pts)}
    matrix: dict[str, list[Fraction]] = {}
    for ln in lines[2:]:
        pname, _, row = ln.partition(":")
        pname = pname.strip()
        if pname not in index:
            raise ValidationError(f"matrix row for unknown point {pname!r}")
        vals = [Fraction(tok) for tok in row.split()]
        if len(vals) != len(pts):
            raise ValidationError(f"row {pname!r} has {len(vals)} entries, want {len(pts)}")
        matrix[pname] = vals
    if set(matrix) != set(pts):
        raise ValidationError("matrix rows must cover every point exactly once")

    def dist(p: Point, q: Point) -> Fraction:
        return matrix[p][index[q]]

    space = TriPointedSpace(
        name=name, dist=dist, T=marks["T"], L=marks["L"], R=marks["R"], points=pts
    )
    validate_space(space)
    return space


def dump_space(space: TriPointedSpace) -> str:
    """Inverse of load_space for finite spaces."""
    if not space.is_finite():
        raise ValidationError("only finite spaces can be dumped")
    pts = space.points
    lines = [
        "points: " + " ".join(str(p) for p in pts),
        f"marked: T={space.T} L={space.L} R={space.R}",
    ]
    for p in pts:
        row = " ".join(str(Fraction(space.dist(p, q))) for q in pts)
        lines.append(f"{p}: {row}")
    return "\n".join(lines) + "\n"
