import random
from itertools import chain, combinations

from kostka import root_system

# every supported (letter, rank) with rank capped
def supported_types(max_rank):
    out = []
    for letter, lo, hi in (("A", 1, None), ("B", 2, None), ("C", 2, None),
                           ("D", 4, None), ("E", 6, 8), ("F", 4, 4), ("G", 2, 2)):
        top = max_rank if hi is None else min(hi, max_rank)
        for r in range(lo, top + 1):
            out.append((letter, r))
    return out


def systems(max_rank):
    return [root_system(letter, r) for letter, r in supported_types(max_rank)]


def all_subsets(rank):
    nodes = range(1, rank + 1)
    return chain.from_iterable(combinations(nodes, k) for k in range(rank + 1))


def random_dominant(rng: random.Random, rank, top=3):
    return tuple(rng.randint(0, top) for _ in range(rank))
