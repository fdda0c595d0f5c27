HPARAMS_REGISTRY = {}
DEFAULTS = {}

class Hyperparams(dict):
    def __getattr__(self, attr):
        try:
            return self[attr]
        except KeyError:
            raise AttributeError(attr)

    def __setattr__(self, attr, value):
        self[attr] = value

def setup_hparams(hparam_set_names, kwargs):
    H = Hyperparams()
    if not isinstance(hparam_set_names, tuple):
        hparam_set_names = hparam_set_names.split(",")
    for x in hparam_set_names:
        if x.strip() and x.strip() not in HPARAMS_REGISTRY:
            raise ValueError(f"Unknown preset {x.strip()}, expected one of {', '.join(sorted(HPARAMS_REGISTRY))}")
    hparam_sets = [HPARAMS_REGISTRY[x.strip()] for x in hparam_set_names if x.strip()] + [kwargs]
    for k, v in DEFAULTS.items():
        H.update(v)
    for hps in hparam_sets:
        for k in hps:
            if k not in H:
                raise ValueError(f"{k} not in default args")
        H.update(**hps)
    return H

def validate_corpus_hps(hps):
    if hps.count <= 0:
        raise ValueError(f'count must be positive, got {hps.count}')
    if not 1 <= hps.min_dim <= hps.max_dim:
        raise ValueError(f'Need 1 <= min_dim <= max_dim, got {hps.min_dim} and {hps.max_dim}')
    if hps.bound < 1:
        raise ValueError(f'bound must be at least 1, got {hps.bound}')
    if hps.b_max < 1 or hps.b_denominator < 1:
        raise ValueError(f'b_max and b_denominator must be at least 1, got {hps.b_max} and {hps.b_denominator}')
    weights = (hps.weight_general, hps.weight_construct)
    if min(weights) < 0 or sum(weights) <= 0:
        raise ValueError(f'Mixture weights must be nonnegative with a positive sum, got {weights}')
    for k in ('construct_count', 'vertex_count', 'cone_count', 'flat_count', 'family_max_dim', 'poset_max'):
        if hps[k] < 0:
            raise ValueError(f'{k} must be nonnegative, got {hps[k]}')
    return hps

# Teeny for testing
teeny = Hyperparams(
    count=6,
    min_dim=1,
    max_dim=2,
    bound=2,
    construct_count=3,
    vertex_count=2,
    cone_count=3,
    flat_count=2,
    family_max_dim=2,
    poset_max=2,
    quasimetric=False,
    smax='4',
)
HPARAMS_REGISTRY["teeny"] = teeny

acceptance = Hyperparams(
    seed=42,
    count=200,
    min_dim=2,
    max_dim=3,
    bound=4,
    construct_count=100,
    vertex_count=50,
    cone_count=20,
    flat_count=20,
    family_max_dim=4,
    poset_max=4,
    quasimetric=True,
    smax='6',
)
HPARAMS_REGISTRY["acceptance"] = acceptance

DEFAULTS["corpus"] = Hyperparams(
    seed=0,
    count=20,
    min_dim=1,
    max_dim=3,
    bound=4,
    b_max=2,
    b_denominator=3,
    weight_general=1.0,
    weight_construct=0.0,
    construct_count=10,
    vertex_count=5,
    cone_count=5,
    flat_count=5,
    family_max_dim=3,
    poset_max=3,
    quasimetric=False,
    max_tries=100,
)

DEFAULTS["ehrhart"] = Hyperparams(
    smax='6',
    max_candidates=200000,
    oracle_points=('0', '1/3', '1/2', '2/3', '1', '3/2', '2', '5/2', '3'),
    cube_smax='5',
    chain_dilations=5,
)

DEFAULTS["run"] = Hyperparams(
    name='',
    threads=1,
    logdir='',
)
