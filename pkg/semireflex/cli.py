"""
Command line entry point.

    semireflex generate cube 3 --out cube3.json
    semireflex ehrhart cube3.json --smax=3 --format=svg
    semireflex classify poly.json --smax=6
    semireflex dual poly.json
    semireflex vertices poly.json
    semireflex check-theorems --corpus=acceptance

Exit codes: 0 success, 2 input error, 3 theorem or consistency violation.
"""
import functools
import glob
import os
import sys
from fractions import Fraction
import fire
from semireflex.exact_math import to_fraction, format_fraction
from semireflex.polytope import contains, enumerate_vertices, polar_dual, minimal_facets
from semireflex.ehrhart import step_function
from semireflex.classify import classify
from semireflex.families import FamilySpec, FAMILIES, generate, parse_poset, parse_graph
from semireflex.hparams import setup_hparams
from semireflex.corpus import CorpusItem, build_corpus
from semireflex.theorems import run_checks
from semireflex.utils.io import (load_polytope, polytope_to_dict, classification_to_dict, step_function_csv,
                                 step_function_to_dict, step_function_svg, dumps, write_text)
from semireflex.utils.logger import print_err, init_logging

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 2, 3

def _rational(x):
    # fire hands over ints, floats or strings
    if isinstance(x, float):
        return Fraction(str(x))
    return to_fraction(x)

def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ValueError, TypeError, OSError, RuntimeError) as e:
            print_err(f'error: {e}')
            return EXIT_INPUT
    return wrapper

def _read(path):
    with open(path) as f:
        return f.read()

@_guard
def cmd_generate(family, arg=None, out=None):
    """
    Polytope JSON of an example family: cube/simplex/cross take a dimension,
    order/chain a poset file, quasimetric a graph file.
    """
    if family in ('cube', 'simplex', 'cross'):
        if arg is None or isinstance(arg, bool) or not isinstance(arg, int):
            raise ValueError(f'{family} needs an integer dimension, got {arg!r}')
        spec = FamilySpec(family, dim=arg)
    elif family in ('order', 'chain'):
        spec = FamilySpec(family, poset=parse_poset(_read(arg)))
    elif family == 'quasimetric':
        spec = FamilySpec(family, graph=parse_graph(_read(arg)))
    else:
        raise ValueError(f'Unknown family {family}, expected one of {", ".join(FAMILIES)}')
    write_text(dumps(polytope_to_dict(generate(spec))), out)
    return EXIT_OK

@_guard
def cmd_ehrhart(poly, smax=6, interior=False, format='csv', out=None):
    P = load_polytope(poly)
    f = step_function(P, _rational(smax), strict=interior)
    if format == 'csv':
        text = step_function_csv(f)
    elif format == 'json':
        text = dumps(step_function_to_dict(f))
    elif format == 'svg':
        text = step_function_svg(f)
    else:
        raise ValueError(f'Unknown format {format}, expected csv, json or svg')
    write_text(text, out)
    return EXIT_OK

@_guard
def cmd_classify(poly, smax=6, out=None):
    P = load_polytope(poly)
    c = classify(P, _rational(smax))
    write_text(dumps(classification_to_dict(c)), out)
    passed, s_max, witness = c.semi_reflexive_numeric
    if c.semi_reflexive_structural != passed:
        print_err(f'DEFECT {poly}: structural={c.semi_reflexive_structural} numeric={passed} on [0, {format_fraction(s_max)}]'
                  f' witness={None if witness is None else format_fraction(witness)}')
        return EXIT_VIOLATION
    return EXIT_OK

@_guard
def cmd_dual(poly, out=None):
    P = load_polytope(poly)
    if P.empty or not contains(P, (0,) * P.dim, strict=True):
        raise ValueError('Polar dual needs the origin strictly inside the polytope')
    D = minimal_facets(polar_dual(enumerate_vertices(P)))
    write_text(dumps(polytope_to_dict(D, vertices=True)), out)
    return EXIT_OK

@_guard
def cmd_vertices(poly, out=None):
    P = load_polytope(poly)
    if P.empty:
        raise ValueError('Empty polytope has no vertices')
    write_text(dumps(polytope_to_dict(P, vertices=True)), out)
    return EXIT_OK

def _dir_corpus(path):
    files = sorted(glob.glob(os.path.join(path, '*.json')))
    if not files:
        raise ValueError(f'No polytope JSON files in {path}')
    return [CorpusItem(os.path.splitext(os.path.basename(f))[0], 'file', load_polytope(f)) for f in files]

@_guard
def cmd_check_theorems(corpus='acceptance', dir=None, seed=None, smax=None, out=None, logdir=None, threads=None, **kwargs):
    overrides = dict(kwargs)
    for k, v in dict(seed=seed, logdir=logdir, threads=threads).items():
        if v is not None:
            overrides[k] = v
    if smax is not None:
        overrides['smax'] = format_fraction(_rational(smax))
    hps = setup_hparams(corpus if not dir else '', overrides)
    items = _dir_corpus(dir) if dir else build_corpus(hps)
    logger = init_logging(hps)
    report = run_checks(items, hps, logger)
    if logger is not None:
        logger.close()
    write_text(report.format(), out)
    return EXIT_OK if report.n_failed == 0 else EXIT_VIOLATION

COMMANDS = {
    'generate': cmd_generate,
    'ehrhart': cmd_ehrhart,
    'classify': cmd_classify,
    'dual': cmd_dual,
    'vertices': cmd_vertices,
    'check-theorems': cmd_check_theorems,
}

def _exiting(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        sys.exit(fn(*args, **kwargs))
    return wrapper

def main():
    fire.Fire({name: _exiting(fn) for name, fn in COMMANDS.items()})

if __name__ == '__main__':
    main()
