"""Address words over the labels {a, b, c} and terminals {T, L, R}.

A word "m1...mn.d" names a point of the n-th gluing stage: n nested copy
choices followed by a corner of the innermost copy. Two words can name the
same point, either because a shorter word was padded along the chain
(T pads with a, L with b, R with c) or because the point sits on a junction
where two copies touch:

    b.T ~ a.L        a.R ~ c.T        c.L ~ b.R

applied under any common prefix. `canonicalize` picks one representative
per point; `glue_partner` returns the other same-level name when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

LABELS = "abc"
TERMINALS = "TLR"

# chain padding: embedding a corner one level down re-enters through this label
PAD = {"T": "a", "L": "b", "R": "c"}

# junction tail rewrites toward the canonical member (lexicographic-least head)
REWRITE = {("b", "T"): ("a", "L"), ("c", "T"): ("a", "R"), ("c", "L"): ("b", "R")}
REWRITE_INV = {v: k for k, v in REWRITE.items()}

# all six junction tail pairs, both directions
_PARTNER = dict(REWRITE)
_PARTNER.update(REWRITE_INV)


@dataclass(frozen=True, order=True)
class AddressWord:
    """Immutable word: label string plus terminal letter."""

    labels: str
    terminal: str

    def __post_init__(self) -> None:
        if any(m not in LABELS for m in self.labels):
            raise ValueError(f"bad label in {self.labels!r}")
        if self.terminal not in TERMINALS:
            raise ValueError(f"bad terminal {self.terminal!r}")

    @property
    def level(self) -> int:
        return len(self.labels)

    @property
    def text(self) -> str:
        return f"{self.labels}.{self.terminal}"

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True, order=True)
class CanonicalAddress:
    """An AddressWord in canonical form; the blessed constructor is canonicalize()."""

    word: AddressWord

    def __post_init__(self) -> None:
        w = self.word
        if w.labels:
            tail = (w.labels[-1], w.terminal)
            if w.labels[-1] == PAD[w.terminal]:
                raise ValueError(f"{w} carries chain padding")
            if tail in REWRITE:
                raise ValueError(f"{w} has a rewrite-source tail")

    @property
    def level(self) -> int:
        return self.word.level

    @property
    def text(self) -> str:
        return self.word.text

    def __str__(self) -> str:
        return self.text


def parse_word(text: str) -> AddressWord:
    """Parse "labels.terminal" (empty label part allowed, e.g. ".T")."""
    head, sep, tail = text.partition(".")
    if not sep or len(tail) != 1:
        raise ValueError(f"not a word: {text!r} (expected like 'abc.T' or '.L')")
    return AddressWord(head, tail)


def glue_partner(w: AddressWord) -> Optional[AddressWord]:
    """The unique other same-level word naming the same point, if any.

    The partner is found by matching the maximal suffix of shape
    m * pad(d)^k * d: only that run can match a junction pattern, because in
    each of the six patterns the repeated letter is exactly pad(terminal).
    All-padding words (the three corners at each level) have no partner.
    """
    p = PAD[w.terminal]
    k = 0
    while k < len(w.labels) and w.labels[-1 - k] == p:
        k += 1
    if k == len(w.labels):
        return None
    head = w.labels[-1 - k]
    # head != p here, so (head, terminal) is one of the six junction pairs
    m2, d2 = _PARTNER[(head, w.terminal)]
    labels = w.labels[: -(k + 1)] + m2 + PAD[d2] * k
    return AddressWord(labels, d2)


def canonicalize(w: AddressWord) -> CanonicalAddress:
    """Unique representative: strip padding, rewrite the junction tail, strip again."""
    labels, d = w.labels, w.terminal
    while labels and labels[-1] == PAD[d]:
        labels = labels[:-1]
    if labels and (labels[-1], d) in REWRITE:
        m2, d = REWRITE[(labels[-1], d)]
        labels = labels[:-1] + m2
    # rewrite targets never reintroduce padding; kept as an idempotence guard
    while labels and labels[-1] == PAD[d]:  # pragma: no cover
        labels = labels[:-1]
    return CanonicalAddress(AddressWord(labels, d))


def embed(w: AddressWord, target_level: int) -> AddressWord:
    """Pad w out to target_level; names the same point at the deeper stage."""
    if target_level < w.level:
        raise ValueError(f"cannot embed level {w.level} word into level {target_level}")
    pad = PAD[w.terminal] * (target_level - w.level)
    return AddressWord(w.labels + pad, w.terminal)


def distinguished(level: int) -> tuple[AddressWord, AddressWord, AddressWord]:
    """The three corner words at a level: (a^n.T, b^n.L, c^n.R)."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    return (
        AddressWord("a" * level, "T"),
        AddressWord("b" * level, "L"),
        AddressWord("c" * level, "R"),
    )


def prepend(m: str, x: CanonicalAddress) -> CanonicalAddress:
    """The initial-algebra structure map on addresses: glue a label on front."""
    if m not in LABELS:
        raise ValueError(f"bad label {m!r}")
    return canonicalize(AddressWord(m + x.word.labels, x.word.terminal))


# exact level-n tails that satisfy the canonical-form invariants
_CANONICAL_TAILS = (("a", "L"), ("a", "R"), ("b", "R"))


def iter_words(level: int) -> Iterator[AddressWord]:
    """All 3^n * 3 words of exactly this level."""
    def rec(prefix: str, n: int) -> Iterator[str]:
        if n == 0:
            yield prefix
            return
        for m in LABELS:
            yield from rec(prefix + m, n - 1)

    for labels in rec("", level):
        for d in TERMINALS:
            yield AddressWord(labels, d)


def iter_canonical(max_level: int) -> Iterator[CanonicalAddress]:
    """All canonical addresses of level <= max_level, level-major lexicographic.

    Count is 3 at level 0 and 3^n at each level n >= 1 (free prefix times the
    three admissible tails), i.e. (3^(n+1) + 3)/2 cumulatively.
    """
    for d in TERMINALS:
        yield CanonicalAddress(AddressWord("", d))
    for n in range(1, max_level + 1):
        def rec(prefix: str, k: int) -> Iterator[str]:
            if k == 0:
                yield prefix
                return
            for m in LABELS:
                yield from rec(prefix + m, k - 1)

        for prefix in rec("", n - 1):
            for m, d in _CANONICAL_TAILS:
                yield CanonicalAddress(AddressWord(prefix + m, d))


def count_canonical(max_level: int) -> int:
    return (3 ** (max_level + 1) + 3) // 2
