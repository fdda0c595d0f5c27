"""
Seeded corpora for the theorem checks. Every draw goes through one numpy Generator
in a fixed order, so a seed pins the whole corpus.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
import numpy as np
from semireflex.exact_math import fraction_matrix, invert_matrix
from semireflex.polytope import HalfSpace, HRep, make_hrep, hrep_from_vertices, bounding_box, UnboundedError
from semireflex.classify import cone_deep_point
from semireflex import families
from semireflex.families import FamilySpec, Poset
from semireflex.hparams import Hyperparams, validate_corpus_hps

@dataclass
class CorpusItem:
    id: str
    kind: str
    P: Optional[HRep] = None
    generators: Optional[tuple] = None
    delta: Optional[Fraction] = None
    poset: Optional[Poset] = None

def _dims(rng, hps):
    return int(rng.integers(hps.min_dim, hps.max_dim + 1))

def _normal(rng, d, bound):
    while True:
        a = tuple(int(x) for x in rng.integers(-bound, bound + 1, size=d))
        if any(a):
            return a

def _offset(rng, hps):
    q = int(rng.integers(1, hps.b_denominator + 1))
    p = int(rng.integers(-hps.b_max * q, hps.b_max * q + 1))
    return Fraction(p, q)

def _small_enough(P, hps):
    lows, highs = bounding_box(P, Fraction(hps.smax))
    return math.prod(hi - lo + 1 for lo, hi in zip(lows, highs)) <= hps.max_candidates

def _accept(d, rows, hps):
    # None for empty, unbounded or too large draws
    try:
        P = make_hrep(d, rows)
    except UnboundedError:
        return None
    if P.empty or not _small_enough(P, hps):
        return None
    return P

def random_polytope(rng, hps, construct=False):
    """
    Bounded nonempty intersection of random half-spaces with integer normals in [-bound, bound].
    Right-hand sides are rationals p/q in [-b_max, b_max] with q <= b_denominator, or 0/1 when construct.
    """
    d = _dims(rng, hps)
    for _ in range(hps.max_tries):
        m = int(rng.integers(d + 1, 2 * d + 3))
        rows = []
        for _ in range(m):
            a = _normal(rng, d, hps.bound)
            b = int(rng.integers(0, 2)) if construct else _offset(rng, hps)
            rows.append(HalfSpace(a, b))
        P = _accept(d, rows, hps)
        if P is not None:
            return P
    raise RuntimeError(f'No bounded nonempty polytope in {hps.max_tries} draws, loosen the corpus settings')

def _unimodular(rng, d):
    # Product of random elementary shears
    T = np.identity(d, dtype=object) * 1
    for _ in range(d):
        i, j = rng.choice(d, size=2, replace=False)
        E = np.identity(d, dtype=object) * 1
        E[i, j] = int(rng.integers(-1, 2))
        T = E.dot(T)
    return T

def flat_polytope(rng, hps):
    """
    A full-dimensional polytope of one dimension less placed in a rational hyperplane, then sheared.
    """
    d = max(2, _dims(rng, hps))
    inner = Hyperparams(hps)
    inner.update(min_dim=d - 1, max_dim=d - 1)
    for _ in range(hps.max_tries):
        Q = random_polytope(rng, inner)
        c = [Fraction(0), Fraction(0), Fraction(1, 2), Fraction(1)][int(rng.integers(0, 4))]
        rows = [(tuple(h.a) + (0,), h.b) for h in Q.halfspaces]
        rows += [((0,) * (d - 1) + (1,), c), ((0,) * (d - 1) + (-1,), -c)]
        T_inv = invert_matrix(fraction_matrix(_unimodular(rng, d).tolist()))
        # {T x : x in Q} = {y : <a, T^-1 y> <= b}
        rows = [(tuple(T_inv.T.dot(np.array(a, dtype=object))), b) for a, b in rows]
        P = _accept(d, rows, hps)
        if P is not None:
            return P
    raise RuntimeError(f'No flat polytope in {hps.max_tries} draws')

def integer_vertex_polytope(rng, hps):
    d = _dims(rng, hps)
    bound = min(hps.bound, 2)
    for _ in range(hps.max_tries):
        n = int(rng.integers(d + 1, 2 * d + 3))
        points = [tuple(int(x) for x in rng.integers(-bound, bound + 1, size=d)) for _ in range(n)]
        try:
            return hrep_from_vertices(points)
        except ValueError:
            continue
    raise RuntimeError(f'No integer polytope around the origin in {hps.max_tries} draws')

def random_cone(rng, hps):
    d = min(max(2, _dims(rng, hps)), 3)
    for _ in range(hps.max_tries):
        n = int(rng.integers(d, d + 3))
        gens = [_normal(rng, d, hps.bound) for _ in range(n)]
        try:
            cone_deep_point(gens, Fraction(1, 2))
        except (ValueError, AssertionError):
            continue
        return tuple(gens)
    raise RuntimeError(f'No full-dimensional cone in {hps.max_tries} draws')

DELTAS = (Fraction(3, 2), Fraction(1, 2), Fraction(1), Fraction(5, 2))

def random_corpus(hps):
    hps = validate_corpus_hps(hps)
    rng = np.random.default_rng(hps.seed)
    items = []
    w = hps.weight_construct / (hps.weight_general + hps.weight_construct)
    for i in range(hps.count):
        construct = bool(rng.random() < w)
        kind = 'construct' if construct else 'random'
        items.append(CorpusItem(f'{kind}-{i:04d}', kind, random_polytope(rng, hps, construct)))
    for i in range(hps.construct_count):
        items.append(CorpusItem(f'construct-b-{i:04d}', 'construct', random_polytope(rng, hps, construct=True)))
    for i in range(hps.flat_count):
        items.append(CorpusItem(f'flat-{i:04d}', 'flat', flat_polytope(rng, hps)))
    for i in range(hps.vertex_count):
        items.append(CorpusItem(f'vertex-{i:04d}', 'reflexive', integer_vertex_polytope(rng, hps)))
    for i in range(hps.cone_count):
        items.append(CorpusItem(f'cone-{i:04d}', 'cone', generators=random_cone(rng, hps), delta=DELTAS[i % len(DELTAS)]))
    return items

def family_corpus(hps):
    items = []
    for d in range(1, hps.family_max_dim + 1):
        for tag in ('cube', 'simplex', 'cross'):
            items.append(CorpusItem(f'{tag}-{d}', 'family', families.generate(FamilySpec(tag, dim=d))))
    for n in range(1, hps.poset_max + 1):
        for j, p in enumerate(families.all_posets(n)):
            items.append(CorpusItem(f'poset-{n}-{j:02d}', 'poset', poset=p))
            for tag in ('order', 'chain'):
                items.append(CorpusItem(f'{tag}-{n}-{j:02d}', 'family', families.generate(FamilySpec(tag, poset=p))))
    if hps.quasimetric:
        k4 = families.make_cubic_graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        items.append(CorpusItem('quasimetric-k4', 'family', families.generate(FamilySpec('quasimetric', graph=k4))))
    return items

def fixed_corpus():
    half = Fraction(1, 2)
    items = [
        CorpusItem('segment-1-2', 'random', make_hrep(1, [((-1,), -1), ((1,), 2)])),
        CorpusItem('segment-0-3_2', 'random', make_hrep(1, [((-1,), 0), ((1,), Fraction(3, 2))])),
        CorpusItem('box-1-1_2', 'reflexive', families.box([-1, -half], [1, half])),
    ]
    for d in range(1, 4):
        items.append(CorpusItem(f'centered-cube-{d}', 'reflexive', families.box([-1] * d, [1] * d)))
    return items

def build_corpus(hps):
    items = fixed_corpus() + family_corpus(hps) + random_corpus(hps)
    ids = [item.id for item in items]
    assert len(set(ids)) == len(ids), 'Duplicate corpus ids'
    return sorted(items, key=lambda item: item.id)
