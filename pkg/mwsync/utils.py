import numpy as np

import mwsync.settings as mss


def spawn_generators(seed=None, count=1):
    '''
    Split a seed into independent random generators.

    Each randomized check draws from its own child stream so adding
    draws to one of them never shifts the others.

    Parameters
    ----------
    seed: int or None
        The root seed. Falls back to DEFAULT_SEED.
    count: int
        Number of generators to return

    Returns
    -------
    generators: [numpy.random.Generator, ...]
    '''
    if seed is None:
        seed = mss.DEFAULT_SEED

    children = np.random.SeedSequence(seed).spawn(count)

    return [np.random.default_rng(child) for child in children]
