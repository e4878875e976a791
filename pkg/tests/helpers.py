import random

from cwcodes import Codeword, span_basis
from cwcodes.gf2 import rref


def random_code(rng: random.Random, k_max=5, n_max=24, n_min=1):
    while True:
        n = rng.randint(n_min, n_max)
        k = rng.randint(1, min(k_max, n))
        rows = [rng.getrandbits(n) for _ in range(k)]
        if len(rref(rows)) == k:
            return span_basis([Codeword(n, r) for r in rows])


def random_perm_images(rng: random.Random, n):
    img = list(range(1, n + 1))
    rng.shuffle(img)
    return tuple(img)
