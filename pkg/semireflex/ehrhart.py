"""
Real-parameter lattice point enumerators as exact step functions.

Every candidate integer point x contributes the set of dilations s > 0 with x in sP,
an interval with rational ends. Sweeping the intervals gives L_P(s) on [0, s_max].
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
import numpy as np
from semireflex.exact_math import to_fraction
from semireflex.polytope import (contains, bounding_box, integer_halfspaces, is_full_dimensional,
                                 implicit_equalities, lattice_project)

@dataclass(frozen=True)
class MembershipInterval:
    point: tuple
    lo: Optional[Fraction] = None  # None: no lower bound beyond s > 0
    hi: Optional[Fraction] = None  # None: +infinity
    lo_closed: bool = False
    hi_closed: bool = False
    empty: bool = False

    def __contains__(self, s):
        s = to_fraction(s)
        if self.empty or s <= 0:
            return False
        if self.lo is not None and (s < self.lo or (s == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (s > self.hi or (s == self.hi and not self.hi_closed)):
            return False
        return True

@dataclass(frozen=True)
class Piece:
    lo: Fraction
    lo_closed: bool
    hi: Fraction
    hi_closed: bool
    value: int

    def __contains__(self, s):
        return (self.lo < s or (s == self.lo and self.lo_closed)) and (s < self.hi or (s == self.hi and self.hi_closed))

@dataclass(frozen=True)
class StepFunction:
    s_max: Fraction
    pieces: tuple
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'pieces', tuple(self.pieces))
        assert self.pieces[0].lo == 0 and self.pieces[0].lo_closed
        assert self.pieces[-1].hi == self.s_max and self.pieces[-1].hi_closed
        for p, q in zip(self.pieces, self.pieces[1:]):
            assert p.hi == q.lo and p.hi_closed != q.lo_closed, f'Pieces {p} and {q} do not meet'
            assert p.value != q.value, f'Adjacent pieces {p} and {q} share a value'

    @property
    def breakpoints(self):
        return sorted({p.lo for p in self.pieces} | {p.hi for p in self.pieces})

_EMPTY = dict(lo=None, hi=None, lo_closed=False, hi_closed=False, empty=True)

def _interval(point, values, bounds, strict):
    """
    values[i] = <a_i, x>, bounds[i] = b_i, strict[i] whether constraint i is strict.
    """
    lo, lo_closed, hi, hi_closed = None, False, None, False
    for t, b, open_ in zip(values, bounds, strict):
        if b == 0:
            if (t < 0) if open_ else (t <= 0):
                continue
            return MembershipInterval(point, **_EMPTY)
        bound = Fraction(t) / b
        closed = not open_
        if b > 0:
            if lo is None or bound > lo or (bound == lo and not closed):
                lo, lo_closed = bound, closed
        else:
            if hi is None or bound < hi or (bound == hi and not closed):
                hi, hi_closed = bound, closed
    if lo is not None and lo <= 0:
        lo, lo_closed = None, False
    if hi is not None and hi <= 0:
        return MembershipInterval(point, **_EMPTY)
    if lo is not None and hi is not None and (lo > hi or (lo == hi and not (lo_closed and hi_closed))):
        return MembershipInterval(point, **_EMPTY)
    return MembershipInterval(point, lo, hi, lo_closed, hi_closed)

def membership_interval(P, x, strict=False):
    """
    The set {s > 0 : x in sP}, or x in the relative interior of sP when strict.
    """
    x = tuple(int(v) for v in x)
    values = [h.value(x) for h in P.halfspaces]
    mask = [not eq for eq in implicit_equalities(P)] if strict else [False] * len(P)
    return _interval(x, values, [h.b for h in P.halfspaces], mask)

def _prepare(P, strict):
    # Relative interiors: project when possible, otherwise keep implicit equalities non-strict
    if not strict:
        return P, [False] * len(P)
    if not is_full_dimensional(P) and contains(P, [0] * P.dim):
        P = lattice_project(P)
    return P, [not eq for eq in implicit_equalities(P)]

def _candidate_intervals(P, strict_mask, s_max):
    if P.empty:
        raise ValueError('Lattice counts of an empty polytope are not defined')
    lows, highs = bounding_box(P, s_max)
    grids = np.meshgrid(*[np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lows, highs)], indexing='ij')
    X = np.stack([g.reshape(-1) for g in grids], axis=1)
    rows = integer_halfspaces(P)
    A = np.array([a for a, _ in rows], dtype=np.int64)
    b = np.array([b for _, b in rows], dtype=np.int64)
    bound = int(np.abs(A).max()) * max(1, int(np.abs(X).max())) * P.dim
    assert bound < 2 ** 62, f'Candidate grid too large for exact int64 products ({bound})'
    T = X.dot(A.T)

    # Cheap necessary conditions before exact work
    keep = np.ones(len(X), dtype=bool)
    for i in range(len(rows)):
        if b[i] == 0:
            keep &= (T[:, i] < 0) if strict_mask[i] else (T[:, i] <= 0)
        elif b[i] > 0:
            # Python ints: floor(s_max * b_i) can exceed int64
            threshold = math.floor(s_max * int(b[i]))
            if threshold < bound:
                keep &= T[:, i] <= threshold
        else:
            keep &= T[:, i] < 0
    intervals = []
    for x, t in zip(X[keep].tolist(), T[keep].tolist()):
        I = _interval(tuple(x), t, [int(v) for v in b], strict_mask)
        if not I.empty:
            intervals.append(I)
    return intervals

def _cells(breakpoints):
    cells = []
    for i, t in enumerate(breakpoints):
        cells.append((t, True, t, True))
        if i + 1 < len(breakpoints):
            cells.append((t, False, breakpoints[i + 1], False))
    return cells

def step_function(P, s_max, strict=False):
    s_max = to_fraction(s_max)
    if s_max <= 0:
        raise ValueError(f's_max must be positive, got {s_max}')
    Q, mask = _prepare(P, strict)
    intervals = _candidate_intervals(Q, mask, s_max)

    ends = {Fraction(0), s_max}
    for I in intervals:
        ends.update(e for e in (I.lo, I.hi) if e is not None and 0 < e < s_max)
    breakpoints = sorted(ends)
    index = {t: i for i, t in enumerate(breakpoints)}
    last = 2 * (len(breakpoints) - 1)

    diff = [0] * (last + 2)
    for I in intervals:
        if I.lo is None:
            start = 1
        elif I.lo > s_max or (I.lo == s_max and not I.lo_closed):
            continue
        else:
            start = 2 * index[I.lo] + (0 if I.lo_closed else 1)
        if I.hi is None or I.hi > s_max:
            end = last
        else:
            end = 2 * index[I.hi] - (0 if I.hi_closed else 1)
        if start <= end:
            diff[start] += 1
            diff[end + 1] -= 1

    values, running = [], 0
    for d in diff[:-1]:
        running += d
        values.append(running)
    values[0] = 0 if strict else 1  # L_P(0) = 1, L_{P°}(0) = 0

    pieces = []
    for (lo, lo_closed, hi, hi_closed), value in zip(_cells(breakpoints), values):
        if pieces and pieces[-1].value == value:
            prev = pieces.pop()
            lo, lo_closed = prev.lo, prev.lo_closed
        pieces.append(Piece(lo, lo_closed, hi, hi_closed, value))
    return StepFunction(s_max, pieces, strict)

def count(P, s, strict=False):
    s = to_fraction(s)
    if s < 0:
        raise ValueError(f'Dilation must be nonnegative, got {s}')
    if s == 0:
        return 0 if strict else 1
    Q, mask = _prepare(P, strict)
    return sum(1 for I in _candidate_intervals(Q, mask, s) if s in I)

def value_at(f, s):
    s = to_fraction(s)
    for p in f.pieces:
        if s in p:
            return p.value
    raise ValueError(f'{s} outside [0, {f.s_max}]')

def _value_just_after(f, t):
    return next(p.value for p in f.pieces if p.lo <= t < p.hi)

def drop_points(f):
    drops = []
    for t in f.breakpoints:
        if 0 < t < f.s_max and value_at(f, t) > _value_just_after(f, t):
            drops.append(t)
    return drops

def is_nondecreasing(f):
    return all(p.value <= q.value for p, q in zip(f.pieces, f.pieces[1:]))

def _representative(p, lo, lo_incl, hi, hi_incl):
    # A point of piece p inside the window between lo and hi
    if p.lo_closed and (p.lo > lo or (p.lo == lo and lo_incl)):
        return p.lo
    if p.hi_closed and (p.hi < hi or (p.hi == hi and hi_incl)):
        return p.hi
    return (max(p.lo, lo) + min(p.hi, hi)) / 2

def floor_property(f):
    """
    (True, None) iff f is constant on every [k, k+1), else (False, witness).
    """
    assert not f.strict, 'Floor property is checked on the closed enumerator'
    for k in range(0, math.floor(f.s_max) + 1):
        ref = value_at(f, k)
        lo, hi = Fraction(k), min(Fraction(k + 1), f.s_max)
        hi_incl = hi < k + 1
        for p in f.pieces:
            if p.hi < lo or (p.hi == lo and not p.hi_closed):
                continue
            if p.lo > hi or (p.lo == hi and not (hi_incl and p.lo_closed)):
                continue
            if p.value != ref:
                return False, _representative(p, lo, True, hi, hi_incl)
    return True, None

def ceil_property(f):
    """
    (True, None) iff f is constant on every (k-1, k], s = 0 exempt, else (False, witness).
    """
    assert f.strict, 'Ceiling property is checked on the open enumerator'
    for k in range(1, math.ceil(f.s_max) + 1):
        lo, hi = Fraction(k - 1), min(Fraction(k), f.s_max)
        ref = value_at(f, hi)
        for p in f.pieces:
            if p.hi <= lo or p.lo > hi or (p.lo == hi and not p.lo_closed):
                continue
            if p.value != ref:
                return False, _representative(p, lo, False, hi, True)
    return True, None
