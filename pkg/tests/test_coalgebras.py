from fractions import Fraction

import pytest

from trigasket.coalgebras import (
    Coalgebra,
    finality_check,
    get_coalgebra,
    mediate_to_final,
    modulus_report,
    theta,
    unfold,
    validate_coalgebra,
)
from trigasket.counterexamples import (
    APEX,
    delta_coalgebra_alt,
    delta_point,
)
from trigasket.geometry import VERTEX, coords
from trigasket.metric import dist_G
from trigasket.spaces import ValidationError, i_space
from trigasket.words import AddressWord, canonicalize, parse_word


def canon(text):
    return canonicalize(parse_word(text))


@pytest.mark.parametrize("name", ["gasket-sigma", "delta"])
def test_builtin_coalgebras_validate(name):
    get_coalgebra(name)


def test_get_coalgebra_unknown():
    with pytest.raises(KeyError):
        get_coalgebra("nope")


def test_validate_rejects_wrong_corner_behavior():
    sp = i_space()
    bad = Coalgebra(sp, lambda p: ("a", p), name="stuck-at-a")
    with pytest.raises(ValidationError):
        validate_coalgebra(bad)


def test_unfold_trace():
    co = get_coalgebra("delta")
    labels, rest = unfold(co, delta_point(Fraction(1, 2)), 4)
    assert labels == "bccc"
    assert rest == delta_point(1)
    assert unfold(co, APEX, 3) == ("aaa", APEX)


def test_theta_requires_positive_depth():
    co = get_coalgebra("delta")
    with pytest.raises(ValueError):
        theta(co, APEX, 0)


def test_theta_on_finitely_addressed_point():
    """The trace prefix is exact; the anchored address may lag one junction step."""
    co = get_coalgebra("gasket-sigma")
    p = coords(parse_word("ba.R"))
    labels, _ = unfold(co, p, 2)
    assert labels == "ba"
    assert theta(co, p, 2) == canon("a.L")  # anchor turns ba into ba.T ~ a.L
    for n in range(3, 10):
        assert theta(co, p, n) == canon("ba.R")


def test_theta_corner_points_are_constant():
    co = get_coalgebra("gasket-sigma")
    for corner, text in ((VERTEX["T"], ".T"), (VERTEX["L"], ".L"), (VERTEX["R"], ".R")):
        for n in (1, 4, 9):
            assert theta(co, corner, n) == canon(text)


def test_theta_representative_independence_past_seam():
    """Two spellings of the seam point disagree only at the seam step itself."""
    primary = get_coalgebra("delta")
    alt = delta_coalgebra_alt()
    half = delta_point(Fraction(1, 2))
    assert theta(primary, half, 1).text == ".L"
    assert theta(alt, half, 1).text == ".R"
    # both seam-depth variants stay within the certified 2^-1 modulus
    limit = canon("b.R")
    assert dist_G(theta(primary, half, 1), limit) <= Fraction(1, 2)
    assert dist_G(theta(alt, half, 1), limit) <= Fraction(1, 2)
    for n in range(2, 12):
        a = theta(primary, half, n)
        assert a == theta(alt, half, n)
        assert a == limit


def test_limit_point_modulus():
    co = get_coalgebra("delta")
    lp = mediate_to_final(co, delta_point(Fraction(2, 7)))
    for n in range(1, 10):
        assert lp.modulus(n) == Fraction(1, 2**n)
        for m in range(n, 11):
            assert dist_G(lp.theta(n), lp.theta(m)) <= lp.modulus(n)


def test_finality_defect_is_zero():
    co = get_coalgebra("delta")
    sample = [APEX, delta_point(Fraction(1, 3)), delta_point(Fraction(2, 7))]
    rep = finality_check(co, sample, depth=10)
    assert rep.passed
    assert rep.max_violation == 0


def test_finality_rejects_corrupted_candidate():
    co = get_coalgebra("delta")
    flip = {"a": "b", "b": "c", "c": "a"}

    def bad(p, k):
        t = theta(co, p, k)
        w = t.word
        if w.level == 0:
            return t
        return canonicalize(AddressWord(flip[w.labels[0]] + w.labels[1:], w.terminal))

    # 1/3 is immune: its trace is all b's, so theta is the level-0 address
    # ".L" at every depth and the flip never fires
    immune = finality_check(co, [delta_point(Fraction(1, 3))], depth=8, theta_fn=bad)
    assert immune.passed
    # 2/5 <-> 3/5 cycles through both expanding branches, so its thetas have
    # positive level and the flip produces a genuinely different address
    rep = finality_check(
        co,
        [delta_point(Fraction(1, 2)), delta_point(Fraction(2, 5))],
        depth=8,
        theta_fn=bad,
    )
    assert not rep.passed
    assert rep.witness is not None


def test_modulus_report_short_gate():
    co = get_coalgebra("gasket-sigma")
    pts = [coords(parse_word(t)) for t in (".T", ".L", ".R", "a.L", "ba.R", "ca.R")]
    pairs = [(p, q) for i, p in enumerate(pts) for q in pts[i + 1:]]
    rep = modulus_report(co, pairs, depth=8)
    assert rep.short_ok is True
    assert all(not r.skipped for r in rep.rows)
    # duplicate spellings of one point are reported, not divided by zero
    dup = modulus_report(co, [(coords(parse_word("b.R")), coords(parse_word("c.L")))], 6)
    assert dup.rows[0].skipped


def test_modulus_report_no_verdict_without_claim():
    co = delta_coalgebra_alt()
    assert co.claimed_class != "short"
    rep = modulus_report(co, [(delta_point(0), delta_point(1))], depth=6)
    assert rep.short_ok is None
