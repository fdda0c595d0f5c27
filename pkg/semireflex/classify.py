"""
Semi-reflexivity and reflexivity of rational polytopes.

The structural test reads the minimal facet description, the numeric test
checks the floor property of the step function on [0, s_max]. The witness
constructors produce the integer points behind the two failure modes.
"""
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional
import numpy as np
from semireflex.exact_math import (to_fraction, fraction_vector, fraction_matrix, dot, rank, nullspace,
                                   is_integral, primitive_integer_vector)
from semireflex.polytope import (HalfSpace, HRep, contains, enumerate_vertices, affine_dimension,
                                 is_full_dimensional, implicit_equalities, minimal_facets, facet_vertices,
                                 span_projection, lift_point, polar_dual, is_bounded)
from semireflex.ehrhart import step_function, floor_property, drop_points

@dataclass
class Classification:
    origin_in_P: bool
    full_dim: bool
    semi_reflexive_structural: bool
    canonical_hrep: Optional[HRep]
    semi_reflexive_numeric: Optional[tuple]  # (passed, s_max, witness)
    reflexive: bool
    drop_points: list = field(default_factory=list)
    notes: list = field(default_factory=list)

@dataclass
class DualityReport:
    reflexive: bool
    semi_reflexive_pair: bool
    matricial: bool
    dual: HRep

    @property
    def agree(self):
        return self.reflexive == self.semi_reflexive_pair == self.matricial

def _origin(P):
    return (0,) * P.dim

def _check_nonempty(P):
    if P.empty:
        raise ValueError('Cannot classify an empty polytope')

def _canonical_facet(h):
    # None when the facet rules out semi-reflexivity
    if h.b < 0:
        return None
    if h.b == 0:
        return HalfSpace(primitive_integer_vector(h.a), 0)
    u = tuple(x / h.b for x in h.a)
    if not is_integral(u):
        return None
    return HalfSpace(u, 1)

def is_semi_reflexive_structural(P):
    """
    (True, canonical H-rep) when P can be written with integral normals and right-hand sides in {0, 1},
    else (False, None). Non-full-dimensional polytopes are read through their lattice projection,
    so the canonical H-rep then lives in dimension dim P.
    """
    _check_nonempty(P)
    if not contains(P, _origin(P)):
        return False, None
    Q = P
    if not is_full_dimensional(P):
        Q, _ = span_projection(P)
        if affine_dimension(P) == 0:
            return True, Q
    canonical = []
    for h in minimal_facets(Q).halfspaces:
        c = _canonical_facet(h)
        if c is None:
            return False, None
        canonical.append(c)
    return True, HRep(Q.dim, canonical)

def is_semi_reflexive_numeric(P, s_max):
    s_max = to_fraction(s_max)
    if s_max < 2:
        raise ValueError(f'Numeric check needs s_max >= 2, got {s_max}')
    return floor_property(step_function(P, s_max))

def _integral_vertices(P):
    return all(is_integral(v) for v in enumerate_vertices(P).vertices)

def is_reflexive(P):
    _check_nonempty(P)
    if not contains(P, _origin(P), strict=True):
        return False
    if not _integral_vertices(P):
        return False
    D = polar_dual(enumerate_vertices(P))
    if not is_bounded(D):
        return False
    return _integral_vertices(D)

def matricial_form(P):
    """
    Integer matrices (A1, A2) with the polytope equal to {x : A1 x <= 1, A2 x <= 0},
    read off the canonical H-rep.
    """
    ok, canonical = is_semi_reflexive_structural(P)
    if not ok:
        raise ValueError('Polytope is not semi-reflexive, it has no integer matricial form')
    rows = {1: [], 0: []}
    for h in canonical.halfspaces:
        rows[int(h.b)].append([int(x) for x in h.a])
    return tuple(np.array(rows[b], dtype=object).reshape(len(rows[b]), canonical.dim) for b in (1, 0))

def check_reflexive_duality(P):
    if not contains(P, _origin(P), strict=True):
        raise ValueError('Reflexive duality needs the origin strictly inside the polytope')
    D = polar_dual(enumerate_vertices(P))
    assert is_bounded(D), 'Polar dual of a polytope with the origin inside must be bounded'
    primal = is_semi_reflexive_structural(P)[0]
    pair = primal and is_semi_reflexive_structural(D)[0]
    if primal:
        _, A2 = matricial_form(P)
        matricial = A2.shape[0] == 0 and _integral_vertices(P)
    else:
        matricial = False
    return DualityReport(is_reflexive(P), pair, matricial, D)

# Deep points

def cone_facets(generators):
    gens = [fraction_vector(g) for g in generators]
    d = len(gens[0])
    if rank(fraction_matrix(gens)) < d:
        raise ValueError('Cone is not full-dimensional')
    normals = set()
    for combo in itertools.combinations(gens, d - 1):
        sub = fraction_matrix(combo) if combo else np.empty((0, d), dtype=object)
        if rank(sub) != d - 1:
            continue
        a = nullspace(sub)[0]
        values = [dot(a, g) for g in gens]
        if all(v >= 0 for v in values):
            normals.add(primitive_integer_vector(a))
        elif all(v <= 0 for v in values):
            normals.add(primitive_integer_vector([-x for x in a]))
    if not normals:
        raise ValueError('Cone is not pointed')
    return sorted(normals)

def _deep_enough(x, normals, delta):
    return all(dot(a, x) >= 0 and dot(a, x) ** 2 >= delta ** 2 * dot(a, a) for a in normals)

def cone_deep_point(generators, delta):
    """
    Integer point x of the cone with the ball of radius delta around x inside the cone.
    x is the smallest integral multiple of the sum of the generators that is far enough
    from every facet hyperplane, distances compared squared.
    """
    delta = to_fraction(delta)
    if delta <= 0:
        raise ValueError(f'delta must be positive, got {delta}')
    normals = cone_facets(generators)
    x0 = tuple(sum(c) for c in zip(*[fraction_vector(g) for g in generators]))
    eps2 = min(Fraction(dot(a, x0) ** 2) / dot(a, a) for a in normals)
    assert eps2 > 0, f'{x0} lies on the cone boundary'
    D = math.lcm(*[x.denominator for x in x0])
    r = delta ** 2 / (D ** 2 * eps2)
    m = math.isqrt(math.floor(r)) + 1
    x = tuple(int(D * m * c) for c in x0)
    assert _deep_enough(x, normals, delta), f'{x} is not {delta} deep in the cone'
    return x

def _lift(witness, U_inv):
    if witness is None:
        return None
    y, s0 = witness
    return lift_point(U_inv, y), s0

def drop_witness(P):
    """
    (x0, s0) with x0 in s0 P and in the relative interior of s0 P, but in no sP for s > s0:
    L_P drops right after s0. Only for polytopes without the origin.
    """
    _check_nonempty(P)
    if contains(P, _origin(P)):
        raise ValueError('Polytopes containing the origin have nondecreasing lattice counts')
    if is_full_dimensional(P):
        for h in minimal_facets(P).halfspaces:
            if h.b < 0:
                x0 = cone_deep_point(facet_vertices(P, h), Fraction(1, 2))
                return x0, dot(h.a, x0) / h.b
        raise AssertionError('Full-dimensional polytope without the origin must have a facet with b < 0')
    if any(eq and h.b != 0 for h, eq in zip(P.halfspaces, implicit_equalities(P))):
        # Affine hull misses the origin: a multiple of a relative interior point is met at one s only
        vertices = enumerate_vertices(P).vertices
        c = tuple(sum(x) / len(vertices) for x in zip(*vertices))
        D = math.lcm(*[x.denominator for x in c])
        return tuple(int(D * x) for x in c), Fraction(D)
    Q, U_inv = span_projection(P)
    return _lift(drop_witness(Q), U_inv)

def fractional_dilate_witness(P):
    """
    (x0, s0) with s0 not an integer, x0 in s0 P but not in floor(s0) P, for a polytope containing
    the origin that has a facet with b > 0 and a non-integral normalised normal. None otherwise.
    """
    _check_nonempty(P)
    if not contains(P, _origin(P)):
        raise ValueError('Fractional dilate witnesses need the origin inside the polytope')
    if not is_full_dimensional(P):
        if affine_dimension(P) == 0:
            return None
        Q, U_inv = span_projection(P)
        return _lift(fractional_dilate_witness(Q), U_inv)
    for h in minimal_facets(P).halfspaces:
        if h.b <= 0:
            continue
        u = tuple(x / h.b for x in h.a)
        if is_integral(u):
            continue
        y = cone_deep_point(facet_vertices(P, h), Fraction(3, 2))
        if dot(u, y).denominator == 1:
            j = next(j for j, x in enumerate(u) if x.denominator != 1)
            y = tuple(v + (i == j) for i, v in enumerate(y))
        return y, dot(u, y)
    return None

def classify(P, s_max):
    _check_nonempty(P)
    s_max = to_fraction(s_max)
    if s_max < 2:
        raise ValueError(f'Numeric check needs s_max >= 2, got {s_max}')
    origin = contains(P, _origin(P))
    full = is_full_dimensional(P)
    structural, canonical = is_semi_reflexive_structural(P)
    f = step_function(P, s_max)
    passed, witness = floor_property(f)
    notes = []
    if not origin:
        notes.append('origin outside the polytope, lattice counts drop')
    if not full:
        notes.append(f'affine dimension {affine_dimension(P)} < {P.dim}, classified through the lattice projection')
    if structural != passed:
        notes.append(f'structural and numeric checks disagree on [0, {s_max}]')
    return Classification(origin_in_P=origin, full_dim=full, semi_reflexive_structural=structural,
                          canonical_hrep=canonical, semi_reflexive_numeric=(passed, s_max, witness),
                          reflexive=is_reflexive(P), drop_points=drop_points(f), notes=notes)
