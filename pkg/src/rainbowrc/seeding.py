"""Seed derivation shared by every randomized routine.

A seed is a non-negative integer. Child seeds are derived with
``numpy.random.SeedSequence([seed, *keys])`` and the streams themselves
are ``numpy.random.PCG64``. Changing either breaks golden outputs.
"""

import numpy as np

SUBSEED_RULE = "SeedSequence([seed, index]) -> PCG64"


def derive_seed(seed: int, *keys: int) -> int:
    if seed < 0 or any(k < 0 for k in keys):
        raise ValueError("seeds and derivation keys must be non-negative")
    words = np.random.SeedSequence([int(seed), *map(int, keys)]).generate_state(2, np.uint32)
    return int(words[0]) | (int(words[1]) << 32)


def make_rng(seed: int) -> np.random.Generator:
    if seed < 0:
        raise ValueError("seed must be non-negative")
    return np.random.Generator(np.random.PCG64(int(seed)))
