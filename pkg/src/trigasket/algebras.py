"""Structure maps that consume one gluing step, and folds out of the address space.

An algebra on a space X is a map e taking (label, point of X) to a point of
X. Authors supply e on raw labeled pairs; registration validates that e
respects the gluing identifications and fixes the marked points, which is
exactly what makes the right-to-left fold over an address word independent
of the chosen representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .spaces import Point, TriPointedSpace, ValidationError
from .words import AddressWord, CanonicalAddress, LABELS, iter_canonical, prepend


@dataclass(frozen=True)
class Algebra:
    space: TriPointedSpace
    e: Callable[[str, Point], Point]
    name: str = "algebra"


def validate_algebra(alg: Algebra) -> None:
    """Gluing-respect and marked-point preservation, checked once at registration."""
    s, e = alg.space, alg.e
    glued = [
        (("b", s.T), ("a", s.L)),
        (("a", s.R), ("c", s.T)),
        (("c", s.L), ("b", s.R)),
    ]
    for (m1, x1), (m2, x2) in glued:
        if e(m1, x1) != e(m2, x2):
            raise ValidationError(
                f"{alg.name}: e({m1},{x1!r}) != e({m2},{x2!r}), gluing not respected"
            )
    marked = [("a", s.T, s.T), ("b", s.L, s.L), ("c", s.R, s.R)]
    for m, x, want in marked:
        if e(m, x) != want:
            raise ValidationError(f"{alg.name}: e({m},{x!r}) must be the marked point")


def fold_from(alg: Algebra, labels: str, start: Point) -> Point:
    """Apply e once per label, innermost first."""
    p = start
    for m in reversed(labels):
        p = alg.e(m, p)
    return p


def iterate_algebra(
    alg: Algebra,
    word: AddressWord,
    anchors: Optional[dict[str, Point]] = None,
) -> Point:
    """Fold a word: start at the anchor of its terminal, consume labels right to left."""
    if anchors is None:
        s = alg.space
        anchors = {"T": s.T, "L": s.L, "R": s.R}
    return fold_from(alg, word.labels, anchors[word.terminal])


def mediate_from_initial(alg: Algebra, x: CanonicalAddress) -> Point:
    """The unique structure-respecting map out of the address space, at one point.

    Well-definedness (same value for every representative of the class) is
    a consequence of the validated invariants and is tested exhaustively.
    """
    return iterate_algebra(alg, x.word)


@dataclass
class MorphismReport:
    algebra_name: str
    depth: int
    checked: int
    passed: bool
    witness: Optional[tuple[str, str]] = None  # (label+address, explanation)

    def __str__(self) -> str:
        if self.passed:
            return f"{self.algebra_name}: square commutes at depth {self.depth} ({self.checked} cases)"
        return f"{self.algebra_name}: FAIL at {self.witness[0]}: {self.witness[1]}"


def check_algebra_morphism(
    alg: Algebra,
    f: Callable[[CanonicalAddress], Point],
    sample_depth: int,
) -> MorphismReport:
    """Verify f(prepend(m, u)) == e(m, f(u)) over all addresses up to a depth."""
    checked = 0
    for u in iter_canonical(sample_depth):
        fu = f(u)
        for m in LABELS:
            left = f(prepend(m, u))
            right = alg.e(m, fu)
            checked += 1
            if left != right:
                return MorphismReport(
                    alg.name,
                    sample_depth,
                    checked,
                    False,
                    (f"{m}*{u.text}", f"f(g(...))={left!r} but e(m,f(...))={right!r}"),
                )
    return MorphismReport(alg.name, sample_depth, checked, True)


def get_algebra(name: str) -> Algebra:
    """Built-in algebras by name: gasket-tau, Y, I-e."""
    if name == "gasket-tau":
        from .geometry import gasket_space, sigma

        alg = Algebra(gasket_space(), lambda m, p: sigma(m, p), name="gasket-tau")
    elif name == "Y":
        from .counterexamples import y_algebra

        alg = y_algebra()
    elif name == "I-e":
        from .counterexamples import i_algebra

        alg = i_algebra()
    else:
        raise KeyError(f"no built-in algebra {name!r}")
    validate_algebra(alg)
    return alg
