"""Three decisive examples with exact witness numbers.

Two algebras whose mediating maps out of the address space are not
continuous (address distance 2^-n against image distance 1), and one
coalgebra on a triangle outline whose structure map is Lipschitz with
constant 2 while its limit map expands some pairs by 2*2^n, so no single
Lipschitz constant works.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebras import Algebra
from .coalgebras import Coalgebra, theta
from .metric import dist_G
from .numerics import sqrt_fraction
from .spaces import TriPointedSpace, discrete_space
from .words import AddressWord, canonicalize


def y_algebra() -> Algebra:
    """Three discrete points; only the pairs (a,t) and (c,r) escape l."""
    space = discrete_space("Y", "t", "l", "r")
    table = {("a", "t"): "t", ("c", "r"): "r"}

    def e(m: str, x: str) -> str:
        return table.get((m, x), "l")

    return Algebra(space, e, name="Y")


def i_algebra() -> Algebra:
    """An algebra on the corner space itself; everything right of L drains to R."""
    space = discrete_space("I", "T", "L", "R")
    table = {
        ("a", "T"): "T",
        ("a", "L"): "L",
        ("b", "T"): "L",
        ("b", "L"): "L",
        ("a", "R"): "R",
        ("c", "T"): "R",
        ("b", "R"): "R",
        ("c", "L"): "R",
        ("c", "R"): "R",
    }

    def e(m: str, x: str) -> str:
        return table[(m, x)]

    return Algebra(space, e, name="I-e")


# ---------------------------------------------------------------------------
# The triangle-outline coalgebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DeltaPoint:
    """Either the apex, or (s, 0) on the base segment, s an exact rational."""

    s: Union[Fraction, None]  # None encodes the apex

    def __post_init__(self) -> None:
        if self.s is not None and not 0 <= self.s <= 1:
            raise ValueError("segment coordinate must lie in [0, 1]")

    @property
    def is_apex(self) -> bool:
        return self.s is None

    def __str__(self) -> str:
        return "apex" if self.is_apex else str(self.s)


APEX = DeltaPoint(None)


def delta_point(s: "Fraction | int | str") -> DeltaPoint:
    return DeltaPoint(Fraction(s))


def delta_space() -> TriPointedSpace:
    """Base segment plus apex, Euclidean metric (apex distances are radicals)."""

    def dist(p: DeltaPoint, q: DeltaPoint):
        if p == q:
            return Fraction(0)
        if p.is_apex or q.is_apex:
            s = q.s if p.is_apex else p.s
            return sqrt_fraction(s * s - s + 1)  # (s-1/2)^2 + 3/4
        return abs(p.s - q.s)

    return TriPointedSpace(
        name="triangle-outline",
        dist=dist,
        T=APEX,
        L=delta_point(0),
        R=delta_point(1),
        points=None,
    )


def delta_step(p: DeltaPoint) -> tuple[str, DeltaPoint]:
    """Piecewise map: outer quarters collapse to corners, middle halves expand x4.

    At s = 1/2 the two middle cases give (b,1) and (c,0), the glued pair;
    the b branch is the deterministic choice and either is acceptable.
    """
    if p.is_apex:
        return "a", APEX
    s = p.s
    if s <= Fraction(1, 4):
        return "b", delta_point(0)
    if s <= Fraction(1, 2):
        return "b", delta_point(4 * s - 1)
    if s <= Fraction(3, 4):
        return "c", delta_point(4 * s - 2)
    return "c", delta_point(1)


def delta_coalgebra() -> Coalgebra:
    return Coalgebra(
        delta_space(), delta_step, name="delta", claimed_class=("lipschitz", Fraction(2))
    )


def delta_coalgebra_alt() -> Coalgebra:
    """Same dynamics but resolving s = 1/2 through the other representative (c, 0).

    Exists so tests can confirm the limit addresses are representative
    independent.
    """

    def e(p: DeltaPoint) -> tuple[str, DeltaPoint]:
        if not p.is_apex and p.s == Fraction(1, 2):
            return "c", delta_point(0)
        return delta_step(p)

    return Coalgebra(
        delta_space(), e, name="delta-alt", claimed_class=("lipschitz", Fraction(2))
    )


# ---------------------------------------------------------------------------
# The unbounded-expansion report
# ---------------------------------------------------------------------------

REPORT_MAX_N = 12
_LIMIT_TOL = Fraction(1, 2**16)
_RATIO_SLACK = Fraction(1, 2**10)


@dataclass
class NonLipschitzRow:
    n: int
    x: Fraction
    y: Fraction
    dist_domain: Fraction
    dist_image: Fraction
    ratio: Fraction
    bound: Fraction  # 2*2^n - slack; ratio must meet or exceed it
    x_limit_defect: Fraction  # distance of theta_q(x) from the L corner
    y_limit_defect: Fraction  # distance of theta_q(y) from the b^n.R point


@dataclass
class NonLipschitzReport:
    rows: list[NonLipschitzRow]
    passed: bool

    def __str__(self) -> str:
        lines = [
            f"{'n':>3} {'x':>16} {'y':>16} {'d(x,y)':>12} {'d(fx,fy)':>10} "
            f"{'ratio':>8} {'bound':>16}"
        ]
        for r in self.rows:
            lines.append(
                f"{r.n:>3} {str(r.x):>16} {str(r.y):>16} {str(r.dist_domain):>12} "
                f"{str(r.dist_image):>10} {str(r.ratio):>8} {str(r.bound):>16}"
            )
        lines.append(
            "expansion is unbounded: pass" if self.passed else "REPORT FAILED"
        )
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "x", "y", "dist_domain", "dist_image", "ratio", "bound"])
        for r in self.rows:
            writer.writerow(
                [r.n, r.x, r.y, r.dist_domain, r.dist_image, r.ratio, r.bound]
            )
        return buf.getvalue()


def delta_pair(n: int) -> tuple[Fraction, Fraction]:
    """The witness pair at index n: both sit deep inside the n-th fold."""
    base = sum(Fraction(1, 4**j) for j in range(1, n + 1))
    return base + Fraction(1, 4 ** (n + 1)), base + Fraction(3, 4 ** (n + 1))


def delta_nonlipschitz_report(n_max: int) -> NonLipschitzReport:
    """Exact expansion ratios d_G(theta x, theta y) / |x - y| for the witness pairs.

    The x_n limit is the L corner and the y_n limit is the point b^n.R, both
    identified to within 2^-16; the ratio is exactly 2*2^n and must beat
    2*2^n minus a 2^-10 slack.
    """
    if not 1 <= n_max <= REPORT_MAX_N:
        raise ValueError(f"n_max must be 1..{REPORT_MAX_N}")
    co = delta_coalgebra()
    corner_l = canonicalize(AddressWord("", "L"))
    rows = []
    passed = True
    for n in range(1, n_max + 1):
        x, y = delta_pair(n)
        q = n + 16
        tx = theta(co, delta_point(x), q)
        ty = theta(co, delta_point(y), q)
        y_target = canonicalize(AddressWord("b" * n, "R"))
        dx_defect = dist_G(tx, corner_l)
        dy_defect = dist_G(ty, y_target)
        d_dom = y - x
        d_img = dist_G(tx, ty)
        ratio = d_img / d_dom
        bound = 2 * Fraction(2**n) - _RATIO_SLACK
        ok = (
            dx_defect <= _LIMIT_TOL
            and dy_defect <= _LIMIT_TOL
            and ratio >= bound
        )
        passed = passed and ok
        rows.append(
            NonLipschitzRow(n, x, y, d_dom, d_img, ratio, bound, dx_defect, dy_defect)
        )
    return NonLipschitzReport(rows, passed)
