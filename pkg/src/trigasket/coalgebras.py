"""Structure maps that produce one gluing step, and limits into the completion.

A coalgebra on X maps a point to (label, next point). Iterating it yields a
label trace; anchoring the trace after n steps at the corner matched to the
last label (a->T, b->L, c->R) gives a canonical address theta_n whose tail
is pinned down to within 2^-n. The limit of that sequence is the mediating
map into the completed address space; LimitPoint packages the sequence with
its certified modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .metric import dist_G
from .numerics import MetricValue, value_float, value_le
from .spaces import Point, TriPointedSpace, ValidationError
from .words import AddressWord, CanonicalAddress, canonicalize, embed

ANCHOR = {"a": "T", "b": "L", "c": "R"}


@dataclass(frozen=True)
class Coalgebra:
    space: TriPointedSpace
    e: Callable[[Point], tuple[str, Point]]
    name: str = "coalgebra"
    claimed_class: "str | tuple[str, Fraction] | None" = None


def validate_coalgebra(co: Coalgebra) -> None:
    """Marked points must map to their own copy's marked pair.

    (a,T), (b,L), (c,R) have no glued twin, so equality here is exact, not
    up-to-gluing.
    """
    s = co.space
    want = [("T", "a", s.T), ("L", "b", s.L), ("R", "c", s.R)]
    for nm, m, x in want:
        got = co.e(x)
        if got != (m, x):
            raise ValidationError(f"{co.name}: e({nm}) = {got!r}, expected ({m!r}, {nm})")


def unfold(co: Coalgebra, x: Point, n: int) -> tuple[str, Point]:
    """Iterate the structure map n times: the label trace and the final point."""
    if n < 0:
        raise ValueError("depth must be nonnegative")
    labels = []
    p = x
    for _ in range(n):
        m, p = co.e(p)
        labels.append(m)
    return "".join(labels), p


def theta(co: Coalgebra, x: Point, n: int) -> CanonicalAddress:
    """The depth-n address approximant of x's limit."""
    if n < 1:
        raise ValueError("theta needs depth >= 1")
    labels, _ = unfold(co, x, n)
    return canonicalize(AddressWord(labels, ANCHOR[labels[-1]]))


@dataclass(frozen=True)
class LimitPoint:
    """A point of the completion: the approximant sequence plus its modulus."""

    co: Coalgebra
    x: Point

    def theta(self, n: int) -> CanonicalAddress:
        return theta(self.co, self.x, n)

    def modulus(self, n: int) -> Fraction:
        """Certified bound on the distance from theta(n) to the limit."""
        return Fraction(1, 2**n)


def mediate_to_final(co: Coalgebra, x: Point) -> LimitPoint:
    return LimitPoint(co, x)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class FinalityReport:
    coalgebra_name: str
    depth: int
    checked: int
    passed: bool
    max_violation: Fraction
    witness: Optional[str] = None

    def __str__(self) -> str:
        if self.passed:
            return (
                f"{self.coalgebra_name}: square holds to depth {self.depth} "
                f"({self.checked} cases, max defect {self.max_violation})"
            )
        return f"{self.coalgebra_name}: FAIL {self.witness} (defect {self.max_violation})"


def finality_check(
    co: Coalgebra,
    sample: Sequence[Point],
    depth: int,
    theta_fn: Optional[Callable[[Point, int], CanonicalAddress]] = None,
) -> FinalityReport:
    """One-step compatibility of the candidate limit map with the coalgebra.

    For e(x) = (m1, x1) the address theta(x, k) must agree with m1 glued onto
    theta(x1, k-1) to within 2^(1-k). For the built-in theta the two sides
    are the same trace shifted by one step, so the defect is exactly 0; the
    bound is the one the limit argument guarantees for any correct candidate,
    and a corrupted candidate (wrong label on a branch) must breach it.
    """
    if theta_fn is None:
        theta_fn = lambda p, k: theta(co, p, k)
    worst = Fraction(0)
    witness = None
    checked = 0
    ok = True
    for x in sample:
        m1, x1 = co.e(x)
        for k in range(2, depth + 1):
            lhs = theta_fn(x, k)
            sub = embed(theta_fn(x1, k - 1).word, k - 1)
            rhs = canonicalize(AddressWord(m1 + sub.labels, sub.terminal))
            d = dist_G(lhs, rhs)
            checked += 1
            if d > worst:
                worst = d
                witness = f"x={x!r} k={k}: {lhs.text} vs {rhs.text}"
            if d > Fraction(1, 2 ** (k - 1)):
                ok = False
    return FinalityReport(co.name, depth, checked, ok, worst, None if ok else witness)


@dataclass
class ModulusRow:
    x: Point
    y: Point
    dist_domain: MetricValue
    dist_image: Fraction
    ratio: Optional[float]  # display only; gates are exact
    skipped: bool = False


@dataclass
class ModulusReport:
    coalgebra_name: str
    depth: int
    rows: list[ModulusRow]
    max_ratio: Optional[float]
    short_ok: Optional[bool]  # set when the coalgebra claims to be short

    def __str__(self) -> str:
        head = f"{self.coalgebra_name}: depth {self.depth}, {len(self.rows)} pairs"
        tail = "" if self.max_ratio is None else f", max ratio {self.max_ratio:.6g}"
        verdict = ""
        if self.short_ok is not None:
            verdict = ", short: " + ("pass" if self.short_ok else "FAIL")
        return head + tail + verdict


def modulus_report(
    co: Coalgebra, pairs: Sequence[tuple[Point, Point]], depth: int
) -> ModulusReport:
    """Expansion ratios of the limit map at finite depth.

    Image distances carry a 2*2^-depth uncertainty from the two approximants,
    so the short gate is the exact inequality
    d(theta x, theta y) <= d(x, y) + 2^(1-depth), no division involved.
    """
    rows: list[ModulusRow] = []
    max_ratio: Optional[float] = None
    slack = Fraction(2, 2**depth)
    short_ok: Optional[bool] = True if co.claimed_class == "short" else None
    for x, y in pairs:
        dxy = co.space.dist(x, y)
        if value_float(dxy) == 0.0:
            rows.append(ModulusRow(x, y, dxy, Fraction(0), None, skipped=True))
            continue
        dimg = dist_G(theta(co, x, depth), theta(co, y, depth))
        ratio = float(dimg) / value_float(dxy)
        if max_ratio is None or ratio > max_ratio:
            max_ratio = ratio
        if short_ok is not None and not value_le(dimg, dxy + slack):
            short_ok = False
        rows.append(ModulusRow(x, y, dxy, dimg, ratio))
    return ModulusReport(co.name, depth, rows, max_ratio, short_ok)


def get_coalgebra(name: str) -> Coalgebra:
    """Built-in coalgebras by name: gasket-sigma, delta."""
    if name == "gasket-sigma":
        from .geometry import gasket_space, sigma_inv

        co = Coalgebra(
            gasket_space(), lambda p: sigma_inv(p), name="gasket-sigma",
            claimed_class="short",
        )
    elif name == "delta":
        from .counterexamples import delta_coalgebra

        co = delta_coalgebra()
    else:
        raise KeyError(f"no built-in coalgebra {name!r}")
    validate_coalgebra(co)
    return co
