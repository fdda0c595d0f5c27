from fractions import Fraction
import pytest
import hypothesis.strategies as st
from hypothesis import given, assume
from semireflex.polytope import make_hrep, enumerate_vertices, contains
from semireflex.families import FamilySpec, generate, box, make_poset
from semireflex.classify import (is_semi_reflexive_structural, is_semi_reflexive_numeric, is_reflexive,
                                 matricial_form, check_reflexive_duality, cone_facets, cone_deep_point,
                                 drop_witness, fractional_dilate_witness, classify)

F = Fraction

def segment(lo, hi):
    return make_hrep(1, [((-1,), -F(lo)), ((1,), F(hi))])

def family(tag, d):
    return generate(FamilySpec(tag, dim=d))

def test_structural():
    ok, canonical = is_semi_reflexive_structural(family('cube', 3))
    assert ok
    assert all(h.b in (0, 1) and all(x.denominator == 1 for x in h.a) for h in canonical.halfspaces)
    assert is_semi_reflexive_structural(segment(0, F(3, 2))) == (False, None)
    assert is_semi_reflexive_structural(segment(1, 2)) == (False, None)
    assert is_semi_reflexive_structural(segment(-F(1, 3), F(1, 2)))[0]
    chain = make_poset(3, [(1, 2), (2, 3)])
    assert is_semi_reflexive_structural(generate(FamilySpec('order', poset=chain)))[0]
    assert is_semi_reflexive_structural(generate(FamilySpec('chain', poset=chain)))[0]

def test_structural_rescales_facets():
    # 2x <= 1 reads as x <= 1/2, normalised normal 2
    P = make_hrep(1, [((2,), 1), ((-3,), 0)])
    ok, canonical = is_semi_reflexive_structural(P)
    assert ok
    assert sorted((h.a, h.b) for h in canonical.halfspaces) == [((-1,), 0), ((2,), 1)]

def test_structural_low_dimension():
    diagonal = make_hrep(2, [((1, -1), 0), ((-1, 1), 0), ((1, 0), 1), ((-1, 0), 0)])
    ok, canonical = is_semi_reflexive_structural(diagonal)
    assert ok and canonical.dim == 1
    stretched = make_hrep(2, [((1, -1), 0), ((-1, 1), 0), ((2, 0), 3), ((-1, 0), 0)])
    assert not is_semi_reflexive_structural(stretched)[0]
    origin = make_hrep(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    assert is_semi_reflexive_structural(origin)[0]

def test_numeric():
    assert is_semi_reflexive_numeric(family('cross', 2), 4) == (True, None)
    assert is_semi_reflexive_numeric(segment(0, F(3, 2)), 3) == (False, F(2, 3))
    with pytest.raises(ValueError):
        is_semi_reflexive_numeric(family('cube', 2), 1)

def test_empty_polytope():
    empty = make_hrep(1, [((1,), 0), ((-1,), -1)])
    with pytest.raises(ValueError):
        is_semi_reflexive_structural(empty)
    with pytest.raises(ValueError):
        classify(empty, 4)

def test_reflexive():
    assert is_reflexive(box([-1, -1], [1, 1]))
    assert is_reflexive(family('cross', 3))
    assert not is_reflexive(box([-1, F(-1, 2)], [1, F(1, 2)]))
    assert not is_reflexive(family('cube', 2))
    assert not is_reflexive(box([-1, -1], [2, 1]))

def test_matricial_form():
    A1, A2 = matricial_form(family('cube', 2))
    assert A1.tolist() == [[1, 0], [0, 1]]
    assert A2.tolist() == [[-1, 0], [0, -1]]
    A1, A2 = matricial_form(family('cross', 2))
    assert A1.shape == (4, 2) and A2.shape == (0, 2)
    with pytest.raises(ValueError):
        matricial_form(segment(0, F(3, 2)))

def test_reflexive_duality():
    report = check_reflexive_duality(box([-1, -1], [1, 1]))
    assert report.reflexive and report.semi_reflexive_pair and report.matricial and report.agree
    assert enumerate_vertices(report.dual).vertices == ((-1, 0), (0, -1), (0, 1), (1, 0))
    report = check_reflexive_duality(box([-1, F(-1, 2)], [1, F(1, 2)]))
    assert (report.reflexive, report.semi_reflexive_pair, report.matricial) == (False, False, False)
    assert report.agree
    with pytest.raises(ValueError):
        check_reflexive_duality(family('cube', 2))

def test_cone_facets():
    assert cone_facets([(1, 0), (0, 1)]) == [(0, 1), (1, 0)]
    assert cone_facets([(1, 0), (1, 1)]) == [(0, 1), (1, -1)]
    assert cone_facets([(1,)]) == [(1,)]
    with pytest.raises(ValueError):
        cone_facets([(1, 0), (2, 0)])
    with pytest.raises(ValueError):
        cone_facets([(1, 0), (-1, 0), (0, 1), (0, -1)])

def test_cone_deep_point():
    assert cone_deep_point([(1, 0), (0, 1)], F(3, 2)) == (2, 2)
    assert cone_deep_point([(1, 0), (0, 1)], 1) == (2, 2)
    assert cone_deep_point([(1, 0), (1, 1)], F(1, 10)) == (2, 1)
    assert cone_deep_point([(1, 0), (0, 1)], F(1, 2)) == (1, 1)
    assert cone_deep_point([(1, 0), (1, 1)], F(1, 2)) == (2, 1)
    assert cone_deep_point([(1,)], F(3, 2)) == (2,)
    with pytest.raises(ValueError):
        cone_deep_point([(1, 0), (0, 1)], 0)

@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=2, max_size=4),
       st.fractions(min_value=F(1, 4), max_value=3, max_denominator=4))
def test_cone_deep_point_is_deep(generators, delta):
    try:
        normals = cone_facets(generators)
    except ValueError:
        assume(False)
    x = cone_deep_point(generators, delta)
    for a in normals:
        t = sum(p * q for p, q in zip(a, x))
        assert t >= 0 and t * t >= delta * delta * sum(p * p for p in a)

def test_drop_witness():
    assert drop_witness(segment(1, 2)) == ((1,), 1)
    flat = make_hrep(2, [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), -1)])
    assert drop_witness(flat) == ((1, 2), 2)
    with pytest.raises(ValueError):
        drop_witness(family('cube', 2))

def test_drop_witness_full_dimensional():
    P = box([1, 1], [2, 3])
    x0, s0 = drop_witness(P)
    assert contains(make_hrep(2, [(h.a, s0 * h.b) for h in P.halfspaces]), x0)
    assert s0 > 0

def test_fractional_dilate_witness():
    assert fractional_dilate_witness(segment(0, F(3, 2))) == ((4,), F(8, 3))
    assert fractional_dilate_witness(family('cube', 2)) is None
    with pytest.raises(ValueError):
        fractional_dilate_witness(segment(1, 2))

def test_fractional_dilate_witness_low_dimension():
    stretched = make_hrep(2, [((1, -1), 0), ((-1, 1), 0), ((2, 0), 3), ((-1, 0), 0)])
    x0, s0 = fractional_dilate_witness(stretched)
    assert x0[0] == x0[1] and s0.denominator != 1
    origin = make_hrep(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    assert fractional_dilate_witness(origin) is None

def test_classify():
    c = classify(segment(1, 2), 3)
    assert not c.origin_in_P and c.full_dim
    assert not c.semi_reflexive_structural and c.canonical_hrep is None
    assert c.semi_reflexive_numeric == (False, 3, F(1, 4))
    assert not c.reflexive
    assert c.drop_points == [1, 2]
    assert len(c.notes) == 1

    c = classify(box([-1, -1], [1, 1]), 4)
    assert c.semi_reflexive_structural and c.reflexive and c.notes == []
    assert c.semi_reflexive_numeric == (True, 4, None)

    diagonal = make_hrep(2, [((1, -1), 0), ((-1, 1), 0), ((1, 0), 1), ((-1, 0), 0)])
    c = classify(diagonal, 4)
    assert not c.full_dim and c.semi_reflexive_structural
    assert any('affine dimension 1' in note for note in c.notes)

def test_classify_flags_short_window():
    c = classify(segment(0, F(2, 5)), 2)
    assert not c.semi_reflexive_structural and c.semi_reflexive_numeric[0]
    assert any('disagree' in note for note in c.notes)

ends = st.fractions(min_value=0, max_value=3, max_denominator=5)

@given(ends, ends)
def test_structural_matches_numeric_on_segments(a, b):
    # Every jump of a segment with the origin inside happens by s = 5
    assume(a != 0 or b != 0)
    P = segment(-a, b)
    assert is_semi_reflexive_structural(P)[0] == is_semi_reflexive_numeric(P, 6)[0]
