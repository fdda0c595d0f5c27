from fractions import Fraction
import pytest
import hypothesis.strategies as st
from hypothesis import given
from semireflex.polytope import (HalfSpace, UnboundedError, make_hrep, is_bounded, enumerate_vertices, contains,
                                 affine_dimension, is_full_dimensional, implicit_equalities, minimal_facets,
                                 span_projection, lift_point, lattice_project, polar_dual, dilate,
                                 hrep_from_vertices, bounding_box, integer_points)
from semireflex.families import FamilySpec, generate, box

def square():
    return generate(FamilySpec('cube', dim=2))

def diagonal():
    # {(t, t) : 0 <= t <= 1}
    return make_hrep(2, [((1, -1), 0), ((-1, 1), 0), ((1, 0), 1), ((-1, 0), 0)])

def vertices(P):
    return enumerate_vertices(P).vertices

def test_make_hrep():
    P = make_hrep(1, [((-1,), -1), ((1,), 2)])
    assert not P.empty and P.dim == 1 and len(P) == 2
    assert vertices(P) == ((1,), (2,))
    assert P.b == (-1, 2)
    assert make_hrep(1, [((1,), 0), ((-1,), -1)]).empty

def test_make_hrep_errors():
    with pytest.raises(UnboundedError):
        make_hrep(2, [((1, 0), 1)])
    with pytest.raises(UnboundedError):
        make_hrep(2, [((1, 0), 1), ((-1, 0), 0), ((1, 1), 3)])
    with pytest.raises(ValueError):
        make_hrep(2, [((1,), 1)])
    with pytest.raises(ValueError):
        make_hrep(0, [((1,), 1)])
    with pytest.raises(ValueError):
        HalfSpace((0, 0), 1)

def test_is_bounded():
    assert is_bounded(square())
    assert is_bounded(generate(FamilySpec('cross', dim=3)))

def test_canonical_halfspace():
    h = HalfSpace((2, 4), 3).canonical()
    assert h.a == (1, 2) and h.b == Fraction(3, 2)
    h = HalfSpace((Fraction(1, 2), Fraction(-1, 3)), 1).canonical()
    assert h.a == (3, -2) and h.b == 6

def test_vertices():
    assert vertices(square()) == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert vertices(generate(FamilySpec('simplex', dim=2))) == ((0, 0), (0, 1), (1, 0))
    P = make_hrep(2, [((-1, 0), 0), ((0, -1), 0), ((2, 1), 1)])
    assert vertices(P) == ((0, 0), (0, 1), (Fraction(1, 2), 0))

def test_contains():
    P = square()
    assert contains(P, (0, 0))
    assert not contains(P, (0, 0), strict=True)
    assert contains(P, (Fraction(1, 2), Fraction(1, 2)), strict=True)
    assert not contains(P, (2, 0))
    with pytest.raises(ValueError):
        contains(P, (0, 0, 0))

def test_minimal_facets():
    assert len(minimal_facets(square())) == 4
    assert len(minimal_facets(generate(FamilySpec('simplex', dim=2)))) == 3
    # A redundant inequality touching one vertex, and a duplicate facet
    P = make_hrep(2, [((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1), ((1, 1), 2), ((2, 0), 2)])
    facets = minimal_facets(P)
    assert len(facets) == 4
    assert all(h.b in (0, 1) for h in facets.halfspaces)
    with pytest.raises(ValueError):
        minimal_facets(diagonal())

def test_affine_dimension():
    assert affine_dimension(square()) == 2
    assert affine_dimension(diagonal()) == 1
    origin = make_hrep(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    assert affine_dimension(origin) == 0
    assert is_full_dimensional(square()) and not is_full_dimensional(diagonal())

def test_implicit_equalities():
    assert implicit_equalities(diagonal()) == [True, True, False, False]
    assert implicit_equalities(square()) == [False] * 4

def test_lattice_project():
    Q = lattice_project(diagonal())
    assert Q.dim == 1 and vertices(Q) == ((0,), (1,))
    P = make_hrep(2, [((1, 0), 2), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    assert vertices(lattice_project(P)) == ((0,), (2,))
    origin = make_hrep(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    Q = lattice_project(origin)
    assert Q.dim == 1 and vertices(Q) == ((0,),)

def test_lattice_project_errors():
    flat = make_hrep(2, [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), -1)])
    with pytest.raises(ValueError):
        lattice_project(flat)
    with pytest.raises(ValueError):
        span_projection(square())

def test_lift_point():
    Q, U_inv = span_projection(diagonal())
    assert lift_point(U_inv, (1,)) == (1, 1)
    assert lift_point(U_inv, (3,)) == (3, 3)

def test_polar_dual():
    cross = generate(FamilySpec('cross', dim=2))
    D = polar_dual(enumerate_vertices(cross))
    assert vertices(D) == ((-1, -1), (-1, 1), (1, -1), (1, 1))
    with pytest.raises(ValueError):
        polar_dual([(0, 0)])

def test_double_polar():
    P = box([-1, -1], [1, 1])
    D = polar_dual(enumerate_vertices(P))
    assert vertices(polar_dual(enumerate_vertices(D))) == vertices(P)

def test_hrep_from_vertices():
    P = hrep_from_vertices([(1, 0), (-1, 0), (0, 1), (0, -1), (0, 0)])
    assert len(P) == 4
    assert vertices(P) == ((-1, 0), (0, -1), (0, 1), (1, 0))
    with pytest.raises(ValueError):
        hrep_from_vertices([(1, 0), (0, 1), (1, 1)])

def test_dilate():
    P = dilate(square(), Fraction(3, 2))
    assert vertices(P)[-1] == (Fraction(3, 2), Fraction(3, 2))
    assert vertices(dilate(square(), 0)) == ((0, 0),)

def test_bounding_box():
    P = make_hrep(1, [((-1,), -1), ((1,), 2)])
    assert bounding_box(P, Fraction(3, 2)) == ([0], [3])
    assert bounding_box(box([-1, Fraction(-1, 2)], [1, Fraction(1, 2)])) == ([-1, -1], [1, 1])

def test_integer_points():
    assert len(integer_points(square())) == 4
    assert integer_points(square(), strict=True) == []
    assert integer_points(box([-1, -1], [1, 1]), strict=True) == [(0, 0)]
    assert len(integer_points(generate(FamilySpec('cross', dim=3)))) == 7

@given(st.lists(st.tuples(st.integers(-3, 0), st.integers(1, 3)), min_size=1, max_size=3))
def test_boxes(sides):
    lows, highs = [lo for lo, _ in sides], [hi for _, hi in sides]
    P = box(lows, highs)
    assert len(vertices(P)) == 2 ** len(sides)
    assert len(minimal_facets(P)) == 2 * len(sides)
    n = 1
    for lo, hi in sides:
        n *= hi - lo + 1
    assert len(integer_points(P)) == n
