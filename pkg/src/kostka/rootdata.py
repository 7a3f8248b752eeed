"""Root systems of the simple types A-G under the Bourbaki numbering.

One convention is fixed here and relied on everywhere else:
``cartan[i][j]`` is the pairing of the i-th simple root against the j-th
simple coroot.  Row i of the Cartan matrix is therefore the i-th simple
root written in fundamental-weight coordinates, and converting a weight
from fundamental-weight coordinates to simple-root coordinates is
multiplication by the inverse transpose of the Cartan matrix.

Weights are plain tuples of rationals: entry k of a fundamental-weight
vector is the pairing against the k-th simple coroot; entry j of a
root-coordinate vector is the coefficient of the j-th simple root.  Node
ids are 1-based in the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .errors import EmptyNodeSetError, UnsupportedRankError

# (lowest rank, highest rank or None for unbounded)
RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_EXCEPTIONAL_WEYL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                            ("F", 4): 1152, ("G", 2): 12}


def validate_type(letter: str, rank: int) -> str:
    letter = str(letter).upper()
    if letter not in RANK_BOUNDS:
        raise UnsupportedRankError(f"unknown type {letter!r}")
    lo, hi = RANK_BOUNDS[letter]
    if rank < lo or (hi is not None and rank > hi):
        raise UnsupportedRankError(f"type {letter} needs rank in [{lo}, {hi or 'inf'}], got {rank}")
    return letter


def _edges(letter: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Dynkin edges as (i, j, cartan[i][j], cartan[j][i]), 1-based."""
    chain = [(i, i + 1, -1, -1) for i in range(1, rank)]
    if letter == "A":
        return chain
    if letter == "B":  # last simple root short
        chain[-1] = (rank - 1, rank, -2, -1)
        return chain
    if letter == "C":  # last simple root long
        chain[-1] = (rank - 1, rank, -1, -2)
        return chain
    if letter == "D":
        return [(i, i + 1, -1, -1) for i in range(1, rank - 1)] + [(rank - 2, rank, -1, -1)]
    if letter == "E":
        edges = [(1, 3, -1, -1), (3, 4, -1, -1), (4, 5, -1, -1), (5, 6, -1, -1), (2, 4, -1, -1)]
        edges += [(i, i + 1, -1, -1) for i in range(6, rank)]
        return edges
    if letter == "F":
        return [(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
    if letter == "G":
        return [(1, 2, -1, -3)]
    raise UnsupportedRankError(letter)


class RootSystem:
    """A simple root system with its Cartan matrix and Dynkin graph."""

    def __init__(self, letter: str, rank: int, cartan: tuple[tuple[int, ...], ...]):
        self.letter = letter
        self.rank = rank
        self.cartan = cartan
        nbrs: dict[int, list[int]] = {i: [] for i in range(1, rank + 1)}
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                if i != j and cartan[i - 1][j - 1]:
                    nbrs[i].append(j)
        self._neighbors = {i: tuple(v) for i, v in nbrs.items()}
        self.inverse_transpose_cartan = linalg.invert(linalg.matrix(zip(*cartan)))
        self._positive_roots: tuple[tuple[int, ...], ...] | None = None

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._neighbors[i]

    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def __repr__(self) -> str:
        return f"RootSystem({self.letter}{self.rank})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and (self.letter, self.rank) == (other.letter, other.rank)

    def __hash__(self) -> int:
        return hash((self.letter, self.rank))


@lru_cache(maxsize=None)
def root_system(letter: str, rank: int) -> RootSystem:
    """Build the root system of the given type under the Bourbaki numbering."""
    letter = validate_type(letter, rank)
    entries = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in _edges(letter, rank):
        entries[i - 1][j - 1] = cij
        entries[j - 1][i - 1] = cji
    return RootSystem(letter, rank, tuple(tuple(row) for row in entries))


def node_set(rs: RootSystem, nodes) -> tuple[int, ...]:
    out = tuple(sorted({int(n) for n in nodes}))
    if out and (out[0] < 1 or out[-1] > rs.rank):
        raise ValueError(f"node ids must lie in 1..{rs.rank}: {out}")
    return out


def rho(rs: RootSystem) -> tuple[int, ...]:
    """Sum of the fundamental weights: the all-ones coordinate vector."""
    return (1,) * rs.rank


def fundamental_weight(rs: RootSystem, i: int) -> tuple[int, ...]:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"node {i} out of range 1..{rs.rank}")
    return tuple(int(j == i - 1) for j in range(rs.rank))


def is_dominant(w) -> bool:
    return all(x >= 0 for x in w)


def fw_to_root_coords(rs: RootSystem, w) -> linalg.Vec:
    """Simple-root coefficients of a weight given in fundamental-weight coordinates."""
    return linalg.mat_vec(rs.inverse_transpose_cartan, linalg.vector(w))


def root_coords_to_fw(rs: RootSystem, c) -> tuple:
    """Fundamental-weight coordinates of a combination of simple roots."""
    r = rs.rank
    return tuple(sum(c[j] * rs.cartan[j][k] for j in range(r)) for k in range(r))


def is_connected(rs: RootSystem, nodes) -> bool:
    """Connectivity of the induced Dynkin subgraph; the empty set is not connected."""
    nodes = node_set(rs, nodes)
    if not nodes:
        return False
    todo = [nodes[0]]
    seen = {nodes[0]}
    while todo:
        for nb in rs.neighbors(todo.pop()):
            if nb in nodes and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(nodes)


def components(rs: RootSystem, nodes) -> tuple[tuple[int, ...], ...]:
    """Connected components of the induced subgraph, ordered by smallest node."""
    nodes = node_set(rs, nodes)
    remaining = set(nodes)
    comps = []
    for n in nodes:
        if n not in remaining:
            continue
        todo = [n]
        comp = {n}
        while todo:
            for nb in rs.neighbors(todo.pop()):
                if nb in remaining and nb not in comp:
                    comp.add(nb)
                    todo.append(nb)
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def connected_subsets_containing(rs: RootSystem, i: int) -> list[tuple[int, ...]]:
    """All node sets containing i with connected induced subgraph.

    Grown from {i} by repeatedly attaching neighbours, so it never touches
    the full power set; ordered by size then lexicographically.
    """
    if not 1 <= i <= rs.rank:
        raise ValueError(f"node {i} out of range 1..{rs.rank}")
    seed = frozenset((i,))
    found = {seed}
    stack = [seed]
    while stack:
        cur = stack.pop()
        for n in cur:
            for nb in rs.neighbors(n):
                if nb not in cur:
                    grown = cur | {nb}
                    if grown not in found:
                        found.add(grown)
                        stack.append(grown)
    return sorted((tuple(sorted(s)) for s in found), key=lambda t: (len(t), t))


def sub_cartan(rs: RootSystem, nodes) -> tuple[tuple[int, ...], ...]:
    nodes = node_set(rs, nodes)
    return tuple(tuple(rs.cartan[a - 1][b - 1] for b in nodes) for a in nodes)


@dataclass(frozen=True)
class LeviFactor:
    """One simple factor of a Levi subsystem.

    ``nodes`` are the ambient node ids in ascending order; local node k of
    the factor is ``nodes[k-1]``.
    """

    letter: str
    rank: int
    nodes: tuple[int, ...]


def _relative_lengths(sub) -> list[Fraction]:
    k = len(sub)
    d: dict[int, Fraction] = {0: Fraction(1)}
    todo = [0]
    while todo:
        x = todo.pop()
        for y in range(k):
            if y not in d and sub[x][y]:
                d[y] = d[x] * Fraction(sub[y][x], sub[x][y])
                todo.append(y)
    lo = min(d.values())
    return [d[x] / lo for x in range(k)]


def _classify(rs: RootSystem, comp: tuple[int, ...]) -> tuple[str, int]:
    k = len(comp)
    if k == 1:
        return ("A", 1)
    sub = sub_cartan(rs, comp)
    bonds = [(x, y) for x in range(k) for y in range(x + 1, k) if sub[x][y]]
    top = max(sub[x][y] * sub[y][x] for x, y in bonds)
    if top == 3:
        return ("G", 2)
    if top == 2:
        d = _relative_lengths(sub)
        if k == 2:
            return ("B", 2) if d[0] > d[1] else ("C", 2)
        longs = sum(1 for v in d if v != 1)
        if longs == 1:
            return ("C", k)
        if longs == k - 1:
            return ("B", k)
        return ("F", 4)
    degree = {x: sum(1 for y in range(k) if y != x and sub[x][y]) for x in range(k)}
    branch = [x for x in range(k) if degree[x] == 3]
    if not branch:
        return ("A", k)
    arms = []
    hub = branch[0]
    for start in (y for y in range(k) if sub[hub][y] and y != hub):
        length, prev, cur = 1, hub, start
        while True:
            nxt = [y for y in range(k) if y not in (prev, cur) and sub[cur][y]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", k)
    return ("E", k)


def levi_factors(rs: RootSystem, nodes) -> tuple[LeviFactor, ...]:
    """Simple factors of the Levi subsystem on the given nodes."""
    nodes = node_set(rs, nodes)
    if not nodes:
        raise EmptyNodeSetError("Levi factorisation needs a nonempty node set")
    out = []
    for comp in components(rs, nodes):
        letter, rank = _classify(rs, comp)
        out.append(LeviFactor(letter, rank, comp))
    return tuple(out)


def positive_roots(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """All positive roots in simple-root coordinates.

    Built level by level from the simple roots: the root string of beta in
    the direction of alpha_i extends upward exactly when the string length
    below beta exceeds the pairing <beta, alpha_i_vee>.
    """
    if rs._positive_roots is None:
        r = rs.rank
        cartan = rs.cartan
        layer = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        known = set(layer)
        while layer:
            grown = []
            for beta in layer:
                for i in range(r):
                    pairing = sum(beta[j] * cartan[j][i] for j in range(r))
                    p = 0
                    down = list(beta)
                    down[i] -= 1
                    while tuple(down) in known:
                        p += 1
                        down[i] -= 1
                    if p - pairing > 0:
                        up = list(beta)
                        up[i] += 1
                        up_t = tuple(up)
                        if up_t not in known:
                            known.add(up_t)
                            grown.append(up_t)
            layer = grown
        rs._positive_roots = tuple(sorted(known))
    return rs._positive_roots


def weyl_order(letter: str, rank: int) -> int:
    letter = validate_type(letter, rank)
    if letter == "A":
        return factorial(rank + 1)
    if letter in ("B", "C"):
        return 2**rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_WEYL_ORDERS[(letter, rank)]


def parabolic_order(rs: RootSystem, nodes) -> int:
    """Order of the Weyl subgroup generated by the reflections on the given nodes."""
    nodes = node_set(rs, nodes)
    if not nodes:
        return 1
    out = 1
    for f in levi_factors(rs, nodes):
        out *= weyl_order(f.letter, f.rank)
    return out


def symmetrizer(rs: RootSystem) -> tuple[Fraction, ...]:
    """Half squared lengths of the simple roots, short roots normalised to 1."""
    d: dict[int, Fraction] = {1: Fraction(1)}
    todo = [1]
    while todo:
        i = todo.pop()
        for j in rs.neighbors(i):
            if j not in d:
                d[j] = d[i] * Fraction(rs.cartan[j - 1][i - 1], rs.cartan[i - 1][j - 1])
                todo.append(j)
    lo = min(d.values())
    return tuple(d[i] / lo for i in range(1, rs.rank + 1))
