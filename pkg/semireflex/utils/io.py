"""
File formats. Rationals are written as reduced "p/q" strings, JSON with a fixed key order,
and nothing carries a timestamp, so equal inputs give byte-identical files.
"""
import io
import json
import sys
from semireflex.exact_math import to_fraction, format_fraction
from semireflex.polytope import make_hrep, enumerate_vertices
from semireflex.ehrhart import drop_points

def parse_rational(s):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ValueError(f'Expected a rational as "p/q" or an integer, got {s!r}')
    try:
        return to_fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f'Malformed rational {s!r}') from e

def _vector(v):
    return [format_fraction(x) for x in v]

def polytope_to_dict(P, vertices=False):
    d = dict(dim=P.dim, inequalities=[dict(a=_vector(h.a), b=format_fraction(h.b)) for h in P.halfspaces])
    if P.empty:
        d['empty'] = True
    elif vertices:
        d['vertices'] = [_vector(v) for v in enumerate_vertices(P).vertices]
    return d

def polytope_from_dict(d):
    try:
        dim = d['dim']
        rows = [([parse_rational(x) for x in h['a']], parse_rational(h['b'])) for h in d['inequalities']]
    except (KeyError, TypeError) as e:
        raise ValueError(f'Polytope JSON needs "dim" and "inequalities" with "a" and "b", {e!r}') from e
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ValueError(f'"dim" must be an integer, got {dim!r}')
    return make_hrep(dim, rows)

def load_polytope(path):
    with open(path) as f:
        return polytope_from_dict(json.load(f))

def dumps(obj):
    return json.dumps(obj, indent=2) + '\n'

def write_text(text, path=None):
    if path:
        with open(path, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)

def classification_to_dict(c):
    numeric = None
    if c.semi_reflexive_numeric is not None:
        passed, s_max, witness = c.semi_reflexive_numeric
        numeric = dict(passed=passed, s_max=format_fraction(s_max),
                       witness=None if witness is None else format_fraction(witness))
    return dict(
        origin_in_P=c.origin_in_P,
        full_dim=c.full_dim,
        semi_reflexive_structural=c.semi_reflexive_structural,
        canonical_hrep=None if c.canonical_hrep is None else polytope_to_dict(c.canonical_hrep),
        semi_reflexive_numeric=numeric,
        reflexive=c.reflexive,
        drop_points=[format_fraction(s) for s in c.drop_points],
        notes=list(c.notes),
    )

# Step functions

CSV_HEADER = 'lo,lo_closed,hi,hi_closed,value'

def step_function_csv(f):
    lines = [CSV_HEADER]
    for p in f.pieces:
        lines.append(f'{format_fraction(p.lo)},{str(p.lo_closed).lower()},{format_fraction(p.hi)},{str(p.hi_closed).lower()},{p.value}')
    return '\n'.join(lines) + '\n'

def step_function_to_dict(f):
    return dict(
        s_max=format_fraction(f.s_max),
        strict=f.strict,
        pieces=[dict(lo=format_fraction(p.lo), lo_closed=p.lo_closed, hi=format_fraction(p.hi),
                     hi_closed=p.hi_closed, value=p.value) for p in f.pieces],
        drop_points=[format_fraction(s) for s in drop_points(f)],
    )

def step_function_svg(f, width=640, height=360, margin=48):
    top = max(max(p.value for p in f.pieces), 1)
    xs = lambda s: margin + float(to_fraction(s) / f.s_max) * (width - 2 * margin)
    ys = lambda v: height - margin - v / top * (height - 2 * margin)
    svg = io.StringIO()
    print(f"<svg xmlns='http://www.w3.org/2000/svg' width='{width}' height='{height}' viewBox='0 0 {width} {height}' font-family='sans-serif' font-size='10'>", file=svg)
    print(f"<line x1='{margin}' y1='{height - margin}' x2='{width - margin}' y2='{height - margin}' stroke='black'/>", file=svg)
    print(f"<line x1='{margin}' y1='{margin}' x2='{margin}' y2='{height - margin}' stroke='black'/>", file=svg)
    for v in sorted({p.value for p in f.pieces}):
        print(f"<text x='{margin - 6}' y='{ys(v) + 3:.3f}' text-anchor='end'>{v}</text>", file=svg)
    for t in f.breakpoints:
        print(f"<line x1='{xs(t):.3f}' y1='{height - margin}' x2='{xs(t):.3f}' y2='{height - margin + 4}' stroke='black'/>", file=svg)
        print(f"<text x='{xs(t):.3f}' y='{height - margin + 16}' text-anchor='middle'>{format_fraction(t)}</text>", file=svg)
    for p in f.pieces:
        y = f'{ys(p.value):.3f}'
        if p.lo != p.hi:
            print(f"<line x1='{xs(p.lo):.3f}' y1='{y}' x2='{xs(p.hi):.3f}' y2='{y}' stroke='steelblue' stroke-width='2'/>", file=svg)
        ends = [(p.lo, p.lo_closed)] + ([(p.hi, p.hi_closed)] if p.lo != p.hi else [])
        for s, closed in ends:
            fill = 'steelblue' if closed else 'white'
            print(f"<circle cx='{xs(s):.3f}' cy='{y}' r='3' fill='{fill}' stroke='steelblue'/>", file=svg)
    print("</svg>", file=svg)
    return svg.getvalue()
