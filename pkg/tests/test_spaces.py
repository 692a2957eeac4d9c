from fractions import Fraction

import pytest

from trigasket.spaces import (
    CONTINUOUS,
    ISOMETRIC,
    SHORT,
    MapWitness,
    TriPointedSpace,
    ValidationError,
    certify,
    discrete_space,
    dump_space,
    glue_normalize,
    i_space,
    initial_map,
    lipschitz,
    load_space,
    tensor,
    tensor_map,
    validate_space,
)


def test_validate_i_space():
    validate_space(i_space())


def test_validate_rejects_wrong_marked_distance():
    def dist(p, q):
        return Fraction(0) if p == q else Fraction(1, 2)

    broken = TriPointedSpace("broken", dist, "T", "L", "R", points=("T", "L", "R"))
    with pytest.raises(ValidationError):
        validate_space(broken)


def test_validate_rejects_asymmetry():
    def dist(p, q):
        if (p, q) == ("L", "R"):
            return Fraction(3, 4)
        return Fraction(0) if p == q else Fraction(1)

    broken = TriPointedSpace("asym", dist, "T", "L", "R", points=("T", "L", "R"))
    with pytest.raises(ValidationError):
        validate_space(broken)


def test_glue_normalize():
    base = i_space()
    assert glue_normalize("b", "T", base) == ("a", "L")
    assert glue_normalize("c", "T", base) == ("a", "R")
    assert glue_normalize("c", "L", base) == ("b", "R")
    assert glue_normalize("a", "R", base) == ("a", "R")
    assert glue_normalize("b", "B-interior", base) == ("b", "B-interior")


def test_tensor_point_count_and_marks():
    t1 = tensor(i_space())
    assert len(t1.points) == 6
    assert t1.marked == (("a", "T"), ("b", "L"), ("c", "R"))
    t2 = tensor(t1)
    assert len(t2.points) == 15
    validate_space(t2)


def test_tensor_distances():
    t1 = tensor(i_space())
    assert t1.dist(("a", "T"), ("b", "L")) == 1
    assert t1.dist(("a", "T"), ("a", "L")) == Fraction(1, 2)
    # gluing works on unnormalized names too
    assert t1.dist(("a", "L"), ("b", "T")) == 0
    assert t1.dist(("a", "R"), ("c", "T")) == 0
    assert t1.dist(("b", "R"), ("c", "L")) == 0
    # across copies the geodesic may route through either shared corner
    assert t1.dist(("b", "T"), ("c", "T")) == Fraction(1, 2)


def test_map_witness_requires_mark_preservation():
    src = i_space()

    def swap(p):
        return {"T": "T", "L": "R", "R": "L"}[p]

    with pytest.raises(ValidationError):
        MapWitness(swap, src, src, SHORT, name="swap")


def test_certify_identity_isometric():
    src = i_space()
    rep = certify(MapWitness(lambda p: p, src, src, ISOMETRIC, name="id"))
    assert rep.passed and rep.checked_pairs == 3


def test_certify_unglue_is_lipschitz_two_not_short():
    dom = tensor(i_space())
    cod = i_space()

    def unglue(p):
        return p[1]

    short = certify(MapWitness(unglue, dom, cod, SHORT, name="unglue"))
    assert short.passed is False
    lip2 = certify(MapWitness(unglue, dom, cod, lipschitz(2), name="unglue"))
    assert lip2.passed is True


def test_certify_continuous_reports_modulus_only():
    dom = tensor(i_space())
    rep = certify(MapWitness(lambda p: p[1], dom, i_space(), CONTINUOUS, name="c"))
    assert rep.passed is None
    assert rep.modulus_table  # observed eps -> delta rows


def test_certify_infinite_domain_needs_sample():
    inf = TriPointedSpace(
        "inf", lambda p, q: Fraction(0) if p == q else Fraction(1), "T", "L", "R"
    )
    w = MapWitness(lambda p: p, inf, inf, SHORT)
    with pytest.raises(ValidationError):
        certify(w)
    rep = certify(w, sample_pairs=[("T", "L"), ("L", "R")])
    assert rep.passed and rep.checked_pairs == 2


def test_tensor_map_tracks_structure():
    w = MapWitness(lambda p: p, i_space(), i_space(), ISOMETRIC, name="id")
    g = tensor_map(w)
    assert g.domain.points == g.codomain.points
    assert certify(g).passed


def test_initial_map_is_isometric_embedding():
    rep = certify(initial_map(tensor(i_space())))
    assert rep.passed and rep.checked_pairs == 3


SPACE_TEXT = """\
# two extra points on the L-R edge
points: T L R m
marked: T=T L=L R=R
T: 0 1 1 1
L: 1 0 1 1/2
R: 1 1 0 1/2
m: 1 1/2 1/2 0
"""


def test_load_space_round_trip():
    sp = load_space(SPACE_TEXT, name="edge")
    assert sp.dist("L", "m") == Fraction(1, 2)
    again = load_space(dump_space(sp), name="edge2")
    for p in sp.points:
        for q in sp.points:
            assert sp.dist(p, q) == again.dist(p, q)


def test_load_space_rejects_bad_tables():
    with pytest.raises(ValidationError):
        load_space("points: a b c\nT: 0 1 1\n")
    with pytest.raises(ValidationError):
        load_space("points: T L R\nmarked: T=T L=L R=X\nT: 0 1 1\nL: 1 0 1\nR: 1 1 0\n")
    short_row = "points: T L R\nmarked: T=T L=L R=R\nT: 0 1\nL: 1 0 1\nR: 1 1 0\n"
    with pytest.raises(ValidationError):
        load_space(short_row)
    # metric axioms are enforced, not just shape
    bad_triangle = (
        "points: T L R m\nmarked: T=T L=L R=R\n"
        "T: 0 1 1 1/8\nL: 1 0 1 1/2\nR: 1 1 0 1/2\nm: 1/8 1/2 1/2 0\n"
    )
    with pytest.raises(ValidationError):
        load_space(bad_triangle)
