"""
Example families of semi-reflexive polytopes: cubes, simplices, cross-polytopes,
order and chain polytopes of posets, and quasi-metric polytopes of cubic graphs.
"""
import itertools
import re
from dataclasses import dataclass
from typing import Optional
import networkx as nx
from semireflex.polytope import HalfSpace, make_hrep

class ParseError(ValueError):
    pass

@dataclass(frozen=True)
class Poset:
    # Elements 1..n, covers (i, j) meaning i is covered by j
    n: int
    covers: tuple

    def graph(self):
        G = nx.DiGraph()
        G.add_nodes_from(range(1, self.n + 1))
        G.add_edges_from(self.covers)
        return G

    def relations(self):
        return sorted(nx.transitive_closure_dag(self.graph()).edges())

def make_poset(n, relations):
    if n < 1:
        raise ValueError(f'Poset needs at least one element, got n={n}')
    G = nx.DiGraph()
    G.add_nodes_from(range(1, n + 1))
    for i, j in relations:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f'Relation {i}<{j} outside elements 1..{n}')
        if i == j or nx.has_path(G, j, i):
            raise ValueError(f'Relation {i}<{j} closes a cycle')
        G.add_edge(i, j)
    return Poset(n, tuple(sorted(nx.transitive_reduction(G).edges())))

@dataclass
class CubicGraph:
    # Multigraph on vertices 1..k, edge keys are the coordinates 1..d
    graph: nx.MultiGraph

    @property
    def n_edges(self):
        return self.graph.number_of_edges()

    def incident_edges(self, v):
        return sorted(key for _, _, key in self.graph.edges(v, keys=True))

def make_cubic_graph(n_vertices, edges):
    G = nx.MultiGraph()
    G.add_nodes_from(range(1, n_vertices + 1))
    for index, (u, v) in enumerate(edges, start=1):
        if not (1 <= u <= n_vertices and 1 <= v <= n_vertices):
            raise ValueError(f'Edge {u}-{v} outside vertices 1..{n_vertices}')
        if u == v:
            raise ValueError(f'Edge {u}-{v} is a loop')
        G.add_edge(u, v, key=index)
    for v, degree in sorted(G.degree()):
        if degree not in (1, 3):
            raise ValueError(f'Vertex {v} has degree {degree}, every vertex must have degree 1 or 3')
    return CubicGraph(G)

@dataclass(frozen=True)
class FamilySpec:
    tag: str
    dim: Optional[int] = None
    poset: Optional[Poset] = None
    graph: Optional[CubicGraph] = None

FAMILIES = ('cube', 'simplex', 'cross', 'order', 'chain', 'quasimetric')

def _unit(d, i, sign=1):
    return tuple(sign * (k == i) for k in range(d))

def cube(d):
    return [(_unit(d, i, -1), 0) for i in range(d)] + [(_unit(d, i), 1) for i in range(d)]

def simplex(d):
    return [(_unit(d, i, -1), 0) for i in range(d)] + [((1,) * d, 1)]

def cross(d):
    return [(signs, 1) for signs in itertools.product((-1, 1), repeat=d)]

def box(lows, highs):
    assert len(lows) == len(highs)
    d = len(lows)
    return make_hrep(d, [(_unit(d, i, -1), -lo) for i, lo in enumerate(lows)] +
                     [(_unit(d, i), hi) for i, hi in enumerate(highs)])

def maximal_chains(p):
    G = p.graph()
    minimal = [v for v in G if G.in_degree(v) == 0]
    maximal = [v for v in G if G.out_degree(v) == 0]
    chains = [(v,) for v in minimal if v in maximal]
    for source in minimal:
        if source in maximal:
            continue
        chains.extend(tuple(path) for path in nx.all_simple_paths(G, source, maximal))
    return sorted(chains)

def order(p):
    d = p.n
    rows = cube(d)
    for i, j in p.covers:
        rows.append((tuple((k == i - 1) - (k == j - 1) for k in range(d)), 0))
    return rows

def chain(p):
    d = p.n
    rows = [(_unit(d, i, -1), 0) for i in range(d)]
    for c in maximal_chains(p):
        rows.append((tuple(int(k + 1 in c) for k in range(d)), 1))
    return rows

def quasimetric(g):
    d = g.n_edges
    rows = []
    for v in sorted(g.graph.nodes):
        edges = g.incident_edges(v)
        if len(edges) != 3:
            continue
        for i in edges:
            # x_i <= x_j + x_k
            a = [0] * d
            for e in edges:
                a[e - 1] = 1 if e == i else -1
            rows.append((tuple(a), 0))
        rows.append((tuple(int(k + 1 in edges) for k in range(d)), 1))
    if not rows:
        raise ValueError('Quasi-metric polytope needs a vertex of degree 3')
    return rows

def generate(spec):
    if spec.tag in ('cube', 'simplex', 'cross'):
        if spec.dim is None or spec.dim < 1:
            raise ValueError(f'{spec.tag} needs a positive dimension, got {spec.dim}')
        d = spec.dim
        rows = dict(cube=cube, simplex=simplex, cross=cross)[spec.tag](d)
    elif spec.tag in ('order', 'chain'):
        if spec.poset is None:
            raise ValueError(f'{spec.tag} polytope needs a poset')
        d = spec.poset.n
        rows = order(spec.poset) if spec.tag == 'order' else chain(spec.poset)
    elif spec.tag == 'quasimetric':
        if spec.graph is None:
            raise ValueError('Quasi-metric polytope needs a graph')
        d = spec.graph.n_edges
        rows = quasimetric(spec.graph)
    else:
        raise ValueError(f'Unknown family {spec.tag}, expected one of {", ".join(FAMILIES)}')
    return make_hrep(d, [HalfSpace(a, b) for a, b in rows])

def all_posets(n):
    """
    Every partial order on n elements up to isomorphism, each naturally labelled.
    """
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    seen, posets = set(), []
    for mask in range(2 ** len(pairs)):
        relation = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if any((i, k) not in relation for (i, j), (j2, k) in itertools.product(relation, relation) if j == j2):
            continue
        key = min(tuple(sorted((perm[i - 1], perm[j - 1]) for i, j in relation))
                  for perm in itertools.permutations(range(1, n + 1)))
        if key in seen:
            continue
        seen.add(key)
        posets.append(make_poset(n, sorted(relation)))
    return posets

# Text formats

def _lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield lineno, line

def _header(lines, name):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(f'Empty input, expected "{name}=<k>"')
    m = re.fullmatch(rf'{name}\s*=\s*(\d+)', line)
    if not m:
        raise ParseError(f'line {lineno}: expected "{name}=<k>", got "{line}"')
    return int(m.group(1))

def parse_poset(text):
    lines = _lines(text)
    n = _header(lines, 'n')
    relations = []
    for lineno, line in lines:
        m = re.fullmatch(r'(\d+)\s*<\s*(\d+)', line)
        if not m:
            raise ParseError(f'line {lineno}: expected "i<j", got "{line}"')
        relations.append((int(m.group(1)), int(m.group(2))))
        try:
            make_poset(n, relations)
        except ValueError as e:
            raise ParseError(f'line {lineno}: {e}') from e
    try:
        return make_poset(n, relations)
    except ValueError as e:
        raise ParseError(str(e)) from e

def parse_graph(text):
    lines = _lines(text)
    n = _header(lines, 'vertices')
    edges = []
    for lineno, line in lines:
        m = re.fullmatch(r'(\d+)\s*-\s*(\d+)', line)
        if not m:
            raise ParseError(f'line {lineno}: expected "u-v", got "{line}"')
        u, v = int(m.group(1)), int(m.group(2))
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ParseError(f'line {lineno}: edge {u}-{v} is not between two distinct vertices of 1..{n}')
        edges.append((u, v))
    try:
        return make_cubic_graph(n, edges)
    except ValueError as e:
        raise ParseError(str(e)) from e
