import numpy as np
import pytest
from semireflex.polytope import contains, enumerate_vertices, is_full_dimensional
from semireflex.exact_math import is_integral
from semireflex.hparams import setup_hparams
from semireflex.corpus import (build_corpus, random_polytope, flat_polytope, integer_vertex_polytope, random_cone,
                               random_corpus, family_corpus)

def teeny(**kwargs):
    return setup_hparams('teeny', kwargs)

def test_corpus_is_seeded():
    a = [(item.id, item.P) for item in build_corpus(teeny())]
    b = [(item.id, item.P) for item in build_corpus(teeny())]
    assert a == b
    c = [(item.id, item.P) for item in build_corpus(teeny(seed=1))]
    assert [i for i, _ in a] == [i for i, _ in c]
    assert a != c

def test_corpus_ids():
    items = build_corpus(teeny())
    ids = [item.id for item in items]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    assert 'segment-1-2' in ids and 'cube-2' in ids and 'poset-2-01' in ids
    kinds = {item.kind for item in items}
    assert {'random', 'construct', 'flat', 'reflexive', 'cone', 'poset', 'family'} <= kinds

def test_random_polytope():
    rng = np.random.default_rng(0)
    for _ in range(5):
        P = random_polytope(rng, teeny())
        assert not P.empty and 1 <= P.dim <= 2
        P = random_polytope(rng, teeny(), construct=True)
        assert contains(P, (0,) * P.dim)
        assert all(h.b in (0, 1) for h in P.halfspaces)

def test_flat_polytope():
    rng = np.random.default_rng(3)
    for _ in range(3):
        P = flat_polytope(rng, teeny())
        assert P.dim == 2 and not is_full_dimensional(P)

def test_integer_vertex_polytope():
    rng = np.random.default_rng(5)
    for _ in range(3):
        P = integer_vertex_polytope(rng, teeny())
        assert contains(P, (0,) * P.dim, strict=True)
        assert all(is_integral(v) for v in enumerate_vertices(P).vertices)

def test_random_cone():
    rng = np.random.default_rng(7)
    gens = random_cone(rng, teeny())
    assert len(gens) >= len(gens[0]) >= 2

def test_construct_weight():
    items = random_corpus(teeny(weight_general=0.0, weight_construct=1.0, construct_count=0))
    assert {item.kind for item in items if item.id.startswith(('random', 'construct'))} == {'construct'}

def test_bad_settings():
    with pytest.raises(ValueError):
        random_corpus(teeny(count=0))
    with pytest.raises(ValueError):
        random_corpus(teeny(min_dim=3, max_dim=2))
    with pytest.raises(ValueError):
        random_corpus(teeny(weight_general=0.0, weight_construct=0.0))

def test_family_corpus():
    ids = [item.id for item in family_corpus(teeny(quasimetric=True))]
    assert 'quasimetric-k4' in ids
    assert 'order-2-00' in ids and 'chain-2-01' in ids
