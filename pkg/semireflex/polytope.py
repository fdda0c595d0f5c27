"""
H- and V-representations of rational polytopes.
Boundedness and emptiness are decided with Fourier-Motzkin elimination,
vertices by solving every dim-subset of tight constraints.
"""
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import numpy as np
from semireflex.exact_math import (to_fraction, fraction_vector, fraction_matrix, dot, rank, solve_integer_system,
                                   hermite_normal_form, invert_matrix, primitive_integer_vector, primitive_scale)

class UnboundedError(ValueError):
    pass

@dataclass(frozen=True)
class HalfSpace:
    # <a, x> <= b
    a: tuple
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'a', fraction_vector(self.a))
        object.__setattr__(self, 'b', to_fraction(self.b))
        if all(x == 0 for x in self.a):
            raise ValueError(f'Half-space normal must be nonzero, got {self.a}')

    def value(self, x):
        return dot(self.a, x)

    def canonical(self):
        # Primitive integer normal, b rescaled by the same positive factor
        k = primitive_scale(self.a)
        return HalfSpace(tuple(k * x for x in self.a), k * self.b)

@dataclass(frozen=True)
class HRep:
    dim: int
    halfspaces: tuple
    empty: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'halfspaces', tuple(self.halfspaces))
        for h in self.halfspaces:
            assert len(h.a) == self.dim, f'Half-space {h} does not live in dimension {self.dim}'

    def __len__(self):
        return len(self.halfspaces)

    @property
    def A(self):
        return fraction_matrix([h.a for h in self.halfspaces])

    @property
    def b(self):
        return tuple(h.b for h in self.halfspaces)

@dataclass(frozen=True)
class VRep:
    dim: int
    vertices: tuple

    def __len__(self):
        return len(self.vertices)

def _as_halfspace(h):
    if isinstance(h, HalfSpace):
        return h
    a, b = h
    return HalfSpace(a, b)

def make_hrep(dim, halfspaces):
    """
    Validated H-representation. Contradictory constraints give an HRep flagged empty,
    an unbounded nonempty set raises UnboundedError.
    """
    if dim < 1:
        raise ValueError(f'Dimension must be positive, got {dim}')
    halfspaces = [_as_halfspace(h) for h in halfspaces]
    if not halfspaces:
        raise ValueError('Need at least one inequality')
    for i, h in enumerate(halfspaces):
        if len(h.a) != dim:
            raise ValueError(f'Inequality {i} has {len(h.a)} coefficients, expected {dim}')
    P = HRep(dim, halfspaces)
    if not is_feasible(P):
        return HRep(dim, halfspaces, empty=True)
    if not is_bounded(P):
        raise UnboundedError(f'Inequalities do not describe a bounded set in dimension {dim}')
    return P

# Fourier-Motzkin

def _normalise_row(coeffs, rhs):
    if all(c == 0 for c in coeffs):
        return coeffs, rhs
    k = primitive_scale(coeffs)
    return tuple(k * c for c in coeffs), k * rhs

def _eliminate(rows, n_vars):
    """
    Eliminate every variable from rows (coeffs, rhs, history) meaning coeffs . x <= rhs.
    Returns False as soon as a contradiction 0 <= negative appears, True if none remains.
    """
    remaining = list(range(n_vars))
    eliminated = 0
    while True:
        constant = [r for r in rows if all(c == 0 for c in r[0])]
        if any(rhs < 0 for _, rhs, _ in constant):
            return False
        rows = [r for r in rows if not all(c == 0 for c in r[0])]
        if not rows or not remaining:
            return True

        def cost(j):
            pos = sum(1 for r in rows if r[0][j] > 0)
            neg = sum(1 for r in rows if r[0][j] < 0)
            return pos * neg - pos - neg
        j = min(remaining, key=lambda j: (cost(j), j))
        remaining.remove(j)
        eliminated += 1

        pos = [r for r in rows if r[0][j] > 0]
        neg = [r for r in rows if r[0][j] < 0]
        new_rows = [r for r in rows if r[0][j] == 0]
        for (pc, pr, ph), (nc, nr, nh) in itertools.product(pos, neg):
            history = ph | nh
            # Chernikov: a combination of more than k+1 originals after k eliminations is redundant
            if len(history) > eliminated + 1:
                continue
            lp, ln = -nc[j], pc[j]
            coeffs = tuple(lp * x + ln * y for x, y in zip(pc, nc))
            coeffs, rhs = _normalise_row(coeffs, lp * pr + ln * nr)
            new_rows.append((coeffs, rhs, history))

        seen = {}
        for coeffs, rhs, history in new_rows:
            key = (coeffs, rhs)
            if key not in seen or len(history) < len(seen[key]):
                seen[key] = history
        rows = [(coeffs, rhs, history) for (coeffs, rhs), history in seen.items()]

def _system_feasible(rows, n_vars):
    rows = [(*_normalise_row(fraction_vector(a), to_fraction(b)), frozenset([i])) for i, (a, b) in enumerate(rows)]
    return _eliminate(rows, n_vars)

@lru_cache(maxsize=4096)
def is_feasible(P):
    return _system_feasible([(h.a, h.b) for h in P.halfspaces], P.dim)

@lru_cache(maxsize=4096)
def is_bounded(P):
    if not P.halfspaces or rank(P.A) < P.dim:
        return False
    cone = [(h.a, Fraction(0)) for h in P.halfspaces]
    for j in range(P.dim):
        for sign in (1, -1):
            e = [Fraction(0)] * P.dim
            e[j] = Fraction(-sign)
            # Is there a ray with sign * x_j >= 1?
            if _system_feasible(cone + [(e, Fraction(-1))], P.dim):
                return False
    return True

# Vertices

def integer_halfspaces(P):
    rows = []
    for h in P.halfspaces:
        scale = math.lcm(*[x.denominator for x in h.a], h.b.denominator)
        rows.append(([int(x * scale) for x in h.a], int(h.b * scale)))
    return rows

@lru_cache(maxsize=4096)
def _vertices(P):
    rows = integer_halfspaces(P)
    found = set()
    for combo in itertools.combinations(range(len(rows)), P.dim):
        x = solve_integer_system([rows[i][0] + [rows[i][1]] for i in combo])
        if x is None or x in found:
            continue
        if all(dot(a, x) <= b for a, b in rows):
            found.add(x)
    return tuple(sorted(found))

def enumerate_vertices(P):
    if P.empty:
        raise ValueError('Empty polytope has no vertices')
    if not is_bounded(P):
        raise UnboundedError('Cannot enumerate the vertices of an unbounded set')
    return VRep(P.dim, _vertices(P))

def contains(P, point, strict=False):
    point = fraction_vector(point)
    if len(point) != P.dim:
        raise ValueError(f'Point has dimension {len(point)}, polytope has dimension {P.dim}')
    if strict:
        return all(h.value(point) < h.b for h in P.halfspaces)
    return all(h.value(point) <= h.b for h in P.halfspaces)

def _affine_rank(points):
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return rank(fraction_matrix([[x - y for x, y in zip(p, p0)] for p in points[1:]]))

def affine_dimension(P):
    return _affine_rank(list(enumerate_vertices(P).vertices))

def is_full_dimensional(P):
    return affine_dimension(P) == P.dim

def implicit_equalities(P):
    vertices = enumerate_vertices(P).vertices
    return [all(h.value(v) == h.b for v in vertices) for h in P.halfspaces]

def minimal_facets(P):
    """
    The facet-defining inequalities of a full-dimensional polytope, one per facet,
    each with a primitive integer normal.
    """
    vertices = enumerate_vertices(P).vertices
    if _affine_rank(list(vertices)) != P.dim:
        raise ValueError('Minimal facets are only defined for full-dimensional polytopes')
    facets, seen = [], set()
    for h in P.halfspaces:
        tight = frozenset(i for i, v in enumerate(vertices) if h.value(v) == h.b)
        if len(tight) < P.dim or tight in seen:
            continue
        if _affine_rank([vertices[i] for i in sorted(tight)]) != P.dim - 1:
            continue
        seen.add(tight)
        facets.append(h.canonical())
    return HRep(P.dim, facets)

def facet_vertices(P, h):
    return [v for v in enumerate_vertices(P).vertices if h.value(v) == h.b]

def span_projection(P):
    """
    (Q, U_inv) for a polytope whose affine hull is a linear subspace of dimension k < dim.
    A unimodular U sends the span onto the first k coordinates, Q is U P read in those
    coordinates and U_inv maps points of Q back. Lattice counts of sP and sQ agree for every s.
    """
    vertices = [v for v in enumerate_vertices(P).vertices if any(x != 0 for x in v)]
    k = _affine_rank([(Fraction(0),) * P.dim] + vertices)
    if k == P.dim:
        raise ValueError('Polytope is already full-dimensional')
    if k != affine_dimension(P):
        raise ValueError('Affine hull does not pass through the origin')
    if k == 0:
        return HRep(1, [HalfSpace((1,), 0), HalfSpace((-1,), 0)]), None
    basis = [primitive_integer_vector(v) for v in vertices]
    H, U = hermite_normal_form(np.array(basis, dtype=object).T)
    for v in basis:
        image = U.dot(np.array(v, dtype=object))
        assert all(x == 0 for x in image[k:]), f'Unimodular transform left {v} outside the first {k} coordinates'
    U_inv = invert_matrix(fraction_matrix(U.tolist()))
    halfspaces = []
    for h in P.halfspaces:
        a = U_inv.T.dot(np.array(h.a, dtype=object))[:k]
        if all(x == 0 for x in a):
            assert h.b >= 0
            continue
        halfspaces.append(HalfSpace(tuple(a), h.b))
    return HRep(k, halfspaces), U_inv

def lift_point(U_inv, y):
    # Point of a projected polytope back in ambient coordinates
    n = U_inv.shape[0]
    padded = np.array(list(y) + [0] * (n - len(y)), dtype=object)
    return tuple(int(x) for x in U_inv.dot(padded))

def lattice_project(P):
    """
    Full-dimensional polytope Q in dimension dim P with the same lattice counts as P,
    for a polytope P containing the origin.
    """
    if not contains(P, [0] * P.dim):
        raise ValueError('Lattice projection needs a polytope containing the origin')
    return span_projection(P)[0]

def polar_dual(V):
    vertices = V.vertices if isinstance(V, VRep) else V
    halfspaces = [HalfSpace(v, 1) for v in vertices if any(to_fraction(x) != 0 for x in v)]
    if not halfspaces:
        raise ValueError('Polar dual of the origin is the whole space')
    return HRep(len(halfspaces[0].a), halfspaces)

def dilate(P, s):
    s = to_fraction(s)
    assert s >= 0, f'Dilation factor must be nonnegative, got {s}'
    return HRep(P.dim, [HalfSpace(h.a, s * h.b) for h in P.halfspaces], empty=P.empty)

def hrep_from_vertices(vertices):
    """
    Facets of conv(vertices) through the double polar; the origin must be strictly inside.
    """
    vertices = [fraction_vector(v) for v in vertices]
    D = polar_dual(VRep(len(vertices[0]), tuple(vertices)))
    if not is_bounded(D):
        raise ValueError('The origin is not strictly inside the convex hull')
    return minimal_facets(polar_dual(enumerate_vertices(D)))

def bounding_box(P, s=1):
    s = to_fraction(s)
    vertices = enumerate_vertices(P).vertices
    lows = [math.floor(min(0, min(s * v[j] for v in vertices))) for j in range(P.dim)]
    highs = [math.ceil(max(0, max(s * v[j] for v in vertices))) for j in range(P.dim)]
    return lows, highs

def integer_points(P, strict=False):
    lows, highs = bounding_box(P)
    ranges = [range(lo, hi + 1) for lo, hi in zip(lows, highs)]
    return [x for x in itertools.product(*ranges) if contains(P, x, strict)]
