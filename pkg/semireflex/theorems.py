"""
The invariant suite behind check-theorems. Each corpus item yields a list of outcomes,
one per property it is subject to; outcomes are aggregated into a report whose text
depends only on the corpus, never on evaluation order.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from tqdm.contrib.concurrent import thread_map
from semireflex.exact_math import to_fraction, dot, format_fraction
from semireflex.polytope import contains, dilate, integer_points, implicit_equalities
from semireflex.ehrhart import (step_function, count, membership_interval, value_at, drop_points,
                                is_nondecreasing, floor_property, ceil_property)
from semireflex.classify import (is_semi_reflexive_structural, is_reflexive, check_reflexive_duality,
                                 cone_deep_point, cone_facets, drop_witness, fractional_dilate_witness)
from semireflex.families import FamilySpec, generate
from semireflex.utils.logger import def_tqdm, get_threads

@dataclass(frozen=True)
class Outcome:
    name: str
    item: str
    ok: bool
    detail: str = ''
    beyond_window: bool = False

@dataclass
class Report:
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    beyond_window: list = field(default_factory=list)

    def record(self, outcome):
        passed, failed = self.counts.get(outcome.name, (0, 0))
        if outcome.beyond_window:
            self.beyond_window.append(outcome)
        if outcome.ok:
            self.counts[outcome.name] = (passed + 1, failed)
        else:
            self.counts[outcome.name] = (passed, failed + 1)
            self.failures.append(outcome)

    @property
    def n_passed(self):
        return sum(p for p, _ in self.counts.values())

    @property
    def n_failed(self):
        return sum(f for _, f in self.counts.values())

    def format(self):
        lines = [f'{name} pass={p} fail={f}' for name, (p, f) in sorted(self.counts.items())]
        for o in sorted(self.failures, key=lambda o: (o.name, o.item, o.detail)):
            lines.append(f'FAIL {o.name} item={o.item} detail={o.detail}')
        for o in sorted(self.beyond_window, key=lambda o: (o.name, o.item, o.detail)):
            if o.ok:
                lines.append(f'WINDOW {o.name} item={o.item} detail={o.detail}')
        lines.append(f'TOTAL pass={self.n_passed} fail={self.n_failed}')
        return '\n'.join(lines) + '\n'

# Brute force

def oracle_count(P, s, strict=False):
    s = to_fraction(s)
    if s == 0:
        return 0 if strict else 1
    Ps = dilate(P, s)
    points = integer_points(Ps)
    if not strict:
        return len(points)
    open_ = [h for h, eq in zip(Ps.halfspaces, implicit_equalities(P)) if not eq]
    return sum(1 for x in points if all(h.value(x) < h.b for h in open_))

# Beyond [0, smax] the constructive witnesses are checked through their membership intervals.
# Closed counts only gain points at closed left ends, so a closed right end at s0 is a drop;
# open counts change at every finite end of a witness interval.

def _fractional_confirmed(P, strict):
    x0, s0 = fractional_dilate_witness(P)
    I = membership_interval(P, x0, strict)
    return s0.denominator != 1 and I.lo == s0 and I.lo_closed != strict, s0

def _drop_confirmed(P, strict):
    x0, s0 = drop_witness(P)
    I = membership_interval(P, x0, strict)
    return I.hi == s0 and (strict or I.hi_closed), s0

def _confirmed(P, origin, strict):
    return _fractional_confirmed(P, strict) if origin else _drop_confirmed(P, strict)

def _beyond_window(name, item, confirmed, S):
    ok, s0 = confirmed
    detail = f's0={format_fraction(s0)} window=[0, {format_fraction(S)}]'
    if not ok:
        detail += ' witness fails'
    return Outcome(f'{name}_beyond_window', item, ok, detail, beyond_window=True)

# Checks on one polytope

def check_polytope(item, P, hps):
    S = to_fraction(hps.smax)
    out = []
    add = lambda name, ok, detail='': out.append(Outcome(name, item, bool(ok), detail))
    f = step_function(P, S)
    g = step_function(P, S, strict=True)
    origin = contains(P, (0,) * P.dim)
    structural, canonical = is_semi_reflexive_structural(P)

    for strict, h, name in ((False, f, 'oracle'), (True, g, 'oracle_interior')):
        bad = [s for s in map(to_fraction, hps.oracle_points) if s <= S and value_at(h, s) != oracle_count(P, s, strict)]
        add(name, not bad, f's={",".join(map(format_fraction, bad))}')

    if origin:
        add('monotone', is_nondecreasing(f))

    samples = sorted(set(f.breakpoints) | set(g.breakpoints))
    samples += [(a + b) / 2 for a, b in zip(samples, samples[1:])]
    bad = [s for s in sorted(samples) if value_at(g, s) > value_at(f, s)]
    add('nesting', not bad, f's={",".join(map(format_fraction, bad))}')

    bad = [t for t in range(0, math.floor(S) + 1) if value_at(f, t) != count(P, t)]
    add('restriction', not bad, f't={",".join(map(str, bad))}')

    passed, witness = floor_property(f)
    if structural == passed:
        add('floor', True)
    elif structural:
        add('floor', False, f'structural true but floor property fails at {format_fraction(witness)}')
    else:
        out.append(_beyond_window('floor', item, _confirmed(P, origin, strict=False), S))

    if structural:
        same = step_function(canonical, S) == f and step_function(canonical, S, strict=True) == g
        add('certificate', same, 'canonical H-rep counts differ')

    passed, witness = ceil_property(g)
    if structural == passed:
        add('interior', True)
    elif structural:
        add('interior', False, f'structural true but ceiling property fails at {format_fraction(witness)}')
    else:
        out.append(_beyond_window('interior', item, _confirmed(P, origin, strict=True), S))

    if not origin:
        if drop_points(f):
            add('drops', not floor_property(f)[0], 'drop found but floor property holds')
        else:
            out.append(_beyond_window('drops', item, _drop_confirmed(P, strict=False), S))

    if contains(P, (0,) * P.dim, strict=True):
        report = check_reflexive_duality(P)
        add('reflexive', report.agree,
            f'reflexive={report.reflexive} pair={report.semi_reflexive_pair} matricial={report.matricial}')
    else:
        add('reflexive', not is_reflexive(P), 'reflexive without the origin inside')
    return out

def check_if_part(item, P, hps):
    S = to_fraction(hps.smax)
    structural, _ = is_semi_reflexive_structural(P)
    passed, witness = floor_property(step_function(P, S))
    return [Outcome('if_part', item, structural and passed,
                    f'structural={structural} witness={None if witness is None else format_fraction(witness)}')]

def check_closed_form(item, P, hps):
    f = step_function(P, to_fraction(hps.cube_smax))
    bad = []
    for p in f.pieces:
        for s in sorted({p.lo, p.hi, (p.lo + p.hi) / 2}):
            if s not in p:
                continue
            expected = (math.floor(s) + 1) ** P.dim
            if p.value != expected or oracle_count(P, s) != expected:
                bad.append(s)
    return [Outcome('closed_form', item, not bad, f's={",".join(map(format_fraction, bad))}')]

def check_drop_exact(item, P, hps):
    drops = drop_points(step_function(P, Fraction(11, 2)))
    return [Outcome('drop_exact', item, drops == [Fraction(k) for k in range(1, 6)],
                    f'drops={",".join(map(format_fraction, drops))}')]

def check_order_chain(item, poset, hps):
    O = generate(FamilySpec('order', poset=poset))
    C = generate(FamilySpec('chain', poset=poset))
    bad = [t for t in range(hps.chain_dilations)
           if len(integer_points(dilate(O, t))) != len(integer_points(dilate(C, t)))]
    return [Outcome('order_chain', item, not bad, f't={",".join(map(str, bad))}')]

def check_deep_point(item, generators, delta):
    x = cone_deep_point(generators, delta)
    bad = [a for a in cone_facets(generators) if dot(a, x) < 0 or dot(a, x) ** 2 < delta ** 2 * dot(a, a)]
    return [Outcome('deep_point', item, not bad, f'x={x} delta={format_fraction(delta)}')]

def check_item(item, hps):
    try:
        if item.kind == 'poset':
            return check_order_chain(item.id, item.poset, hps)
        if item.kind == 'cone':
            return check_deep_point(item.id, item.generators, item.delta)
        if item.P.empty:
            return []
        out = check_polytope(item.id, item.P, hps)
        if item.kind == 'construct':
            out += check_if_part(item.id, item.P, hps)
        if item.id.startswith('cube-') and item.P.dim <= 3:
            out += check_closed_form(item.id, item.P, hps)
        if item.id == 'segment-1-2':
            out += check_drop_exact(item.id, item.P, hps)
        return out
    except (ValueError, AssertionError) as e:
        return [Outcome('error', item.id, False, f'{type(e).__name__}: {e}')]

def run_checks(items, hps, logger=None):
    threads = get_threads(hps)
    fn = partial(check_item, hps=hps)
    if threads > 1:
        results = thread_map(fn, items, max_workers=threads, desc='check-theorems', leave=False)
    else:
        results = [fn(item) for item in def_tqdm(items, desc='check-theorems')]
    report = Report()
    for outcomes in results:
        for o in outcomes:
            report.record(o)
    if logger is not None:
        logger.add_report(report)
    return report
