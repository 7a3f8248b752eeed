"""The dominance cone of weight pairs and its faces.

The cone lives in pairs (lam, mu) of fundamental-weight coordinate vectors
and is cut out by 3r linear inequalities: dominance of lam, dominance of
mu, and nonnegativity of every simple-root coefficient of lam - mu.  Its
slice at a fixed dominant lam is a polytope whose vertices are computed
here by an exact linear solve over a Levi subsystem; the extremal rays of
the cone itself are enumerated per fundamental weight from the connected
Dynkin subdiagrams through that node.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

from . import linalg
from .errors import NotDominantError, NotInConeError
from .rootdata import (RootSystem, connected_subsets_containing, fundamental_weight,
                       fw_to_root_coords, is_dominant, node_set, root_coords_to_fw,
                       sub_cartan, validate_type)
from .weyl import DEFAULT_BUDGET, OrbitBudget, orbit


@dataclass(frozen=True)
class LinearForm:
    """One defining inequality, as a linear functional on (lam | mu)."""

    label: str
    coeffs: tuple


def cone_inequalities(rs: RootSystem) -> tuple[LinearForm, ...]:
    """The 3r defining inequalities of the cone, in a fixed order."""
    r = rs.rank
    zero = (Fraction(0),) * r
    forms = []
    for i in range(r):
        e = tuple(Fraction(int(j == i)) for j in range(r))
        forms.append(LinearForm(f"dom-lambda({i + 1})", e + zero))
    for i in range(r):
        e = tuple(Fraction(int(j == i)) for j in range(r))
        forms.append(LinearForm(f"dom-mu({i + 1})", zero + e))
    for j in range(r):
        row = rs.inverse_transpose_cartan[j]
        forms.append(LinearForm(f"rootcoef({j + 1})", row + tuple(-x for x in row)))
    return tuple(forms)


def slice_inequalities(rs: RootSystem, lam) -> tuple[tuple[str, Fraction, tuple], ...]:
    """The 2r inequalities of the slice polytope at lam, as (label, const, coeffs).

    A point mu belongs to the slice iff const + coeffs . mu >= 0 for all of
    them.
    """
    lam = linalg.vector(lam)
    r = rs.rank
    forms = []
    for i in range(r):
        e = tuple(Fraction(int(j == i)) for j in range(r))
        forms.append((f"dom-mu({i + 1})", Fraction(0), e))
    root_lam = fw_to_root_coords(rs, lam)
    for j in range(r):
        row = rs.inverse_transpose_cartan[j]
        forms.append((f"rootcoef({j + 1})", root_lam[j], tuple(-x for x in row)))
    return tuple(forms)


def cone_contains(rs: RootSystem, lam, mu) -> bool:
    """Membership test: both weights dominant, lam - mu nonnegative on simple roots."""
    lam = linalg.vector(lam)
    mu = linalg.vector(mu)
    if not (is_dominant(lam) and is_dominant(mu)):
        return False
    diff = tuple(a - b for a, b in zip(lam, mu))
    return all(c >= 0 for c in fw_to_root_coords(rs, diff))


@dataclass(frozen=True)
class Vertex:
    """A vertex of a slice polytope with its minimal defining node set."""

    point: linalg.Vec
    levi: tuple[int, ...]


def _levi_coefficients(rs: RootSystem, nodes, rhs) -> linalg.Vec:
    # coefficients a with sum a_k alpha_k matching the given pairings on `nodes`
    sub = sub_cartan(rs, nodes)
    return linalg.solve_unique(linalg.matrix(zip(*sub)), rhs)


def vertex(rs: RootSystem, lam, nodes) -> Vertex:
    """The slice-polytope vertex obtained by zeroing the pairings on `nodes`.

    Solves <x, alpha_i_vee> = 0 for i in `nodes` together with agreement of
    the remaining simple-root coefficients with lam; the unique solution is
    lam minus a combination of the simple roots indexed by `nodes`.  The
    returned node set is minimal: nodes whose coefficient vanishes are
    dropped.
    """
    lam = linalg.vector(lam)
    if not is_dominant(lam):
        raise NotDominantError(f"weight {lam} is not dominant")
    nodes = node_set(rs, nodes)
    if not nodes:
        return Vertex(lam, ())
    rhs = tuple(lam[n - 1] for n in nodes)
    a = _levi_coefficients(rs, nodes, rhs)
    full = [Fraction(0)] * rs.rank
    for n, coeff in zip(nodes, a):
        full[n - 1] = coeff
    drop = root_coords_to_fw(rs, full)
    point = tuple(x - y for x, y in zip(lam, drop))
    support = tuple(n for n, coeff in zip(nodes, a) if coeff)
    return Vertex(point, support)


def polytope_vertices(rs: RootSystem, lam) -> tuple[Vertex, ...]:
    """All vertices of the slice polytope at a dominant weight.

    Runs the vertex solve over every node subset and deduplicates by point;
    each vertex keeps its minimal defining node set.  Ordered by that node
    set (size, then lexicographic).
    """
    lam = linalg.vector(lam)
    if not is_dominant(lam):
        raise NotDominantError(f"weight {lam} is not dominant")
    found: dict[tuple, Vertex] = {}
    for size in range(rs.rank + 1):
        for nodes in combinations(rs.nodes(), size):
            v = vertex(rs, lam, nodes)
            found.setdefault(v.point, v)
    return tuple(sorted(found.values(), key=lambda v: (len(v.levi), v.levi)))


@dataclass(frozen=True)
class RayRecord:
    """One extremal ray of the cone.

    ``(lambda_fw, mu_fw)`` is the rational generator with lambda a
    fundamental weight; ``c_alpha`` holds the simple-root coefficients of
    lambda - mu (supported exactly on ``levi``).  ``k_primitive`` is the
    least positive scaling making the pair integral with integral root
    coefficients; ``k_det`` is the determinant of the Levi Cartan
    submatrix, which also scales onto the lattice but need not be least.
    """

    node: int
    levi: tuple[int, ...]
    lambda_fw: linalg.Vec
    mu_fw: linalg.Vec
    c_alpha: linalg.Vec
    k_primitive: int
    k_det: int


def rays_for_node(rs: RootSystem, i: int) -> tuple[RayRecord, ...]:
    """All extremal rays whose first coordinate is the i-th fundamental weight.

    One ray for the empty node set (the pair (w_i, w_i)) and one for every
    connected subdiagram containing node i, whose root coefficients are the
    i-column of the inverse transpose of the Levi Cartan submatrix.
    """
    fw = linalg.vector(fundamental_weight(rs, i))
    zero = (Fraction(0),) * rs.rank
    records = [RayRecord(i, (), fw, fw, zero, 1, 1)]
    for nodes in connected_subsets_containing(rs, i):
        rhs = tuple(int(n == i) for n in nodes)
        a = _levi_coefficients(rs, nodes, rhs)
        full = [Fraction(0)] * rs.rank
        for n, coeff in zip(nodes, a):
            full[n - 1] = coeff
        mu = tuple(x - y for x, y in zip(fw, root_coords_to_fw(rs, full)))
        k_prim = lcm(*(coeff.denominator for coeff in a))
        k_det = linalg.det(linalg.matrix(sub_cartan(rs, nodes)))
        assert k_det.denominator == 1 and k_det > 0
        records.append(RayRecord(i, nodes, fw, linalg.vector(mu), tuple(full),
                                 k_prim, int(k_det)))
    return tuple(records)


def all_rays(rs: RootSystem) -> tuple[RayRecord, ...]:
    """Every extremal ray of the cone, grouped by node in ascending order."""
    out: list[RayRecord] = []
    for i in range(1, rs.rank + 1):
        out.extend(rays_for_node(rs, i))
    return tuple(out)


def is_extremal_ray(rs: RootSystem, lam, mu) -> bool:
    """Tight-constraint test: the pair spans an extremal ray iff the
    inequalities vanishing at it cut out a one-dimensional subspace."""
    lam = linalg.vector(lam)
    mu = linalg.vector(mu)
    if not cone_contains(rs, lam, mu):
        raise NotInConeError(f"({lam}, {mu}) is not in the cone")
    point = lam + mu
    tight = [f.coeffs for f in cone_inequalities(rs)
             if sum(c * x for c, x in zip(f.coeffs, point)) == 0]
    return linalg.nullspace_dim(linalg.matrix(tight), cols=2 * rs.rank) == 1


def ray_count_formula(letter: str, rank: int) -> int:
    """Closed-form number of extremal rays for the given type and rank.

    Only the underlying graph of the Dynkin diagram matters, so A, B and C
    share one polynomial (as do G2 with A2 and F4 with A4); D and E have
    their own.
    """
    letter = validate_type(letter, rank)
    if letter == "D":
        return comb(rank, 3) + 3 * comb(rank, 2) + 2 * rank - 3
    if letter == "E":
        return comb(rank, 3) + 4 * comb(rank, 2) + rank - 8
    return comb(rank + 1, 3) + comb(rank + 1, 2) + rank  # path graphs: A, B, C, F4, G2


def fundamental_orbit_pairs(rs: RootSystem,
                            budget: OrbitBudget = DEFAULT_BUDGET) -> tuple[tuple[linalg.Vec, linalg.Vec], ...]:
    """All pairs (w_i, x) with x in the full Weyl orbit of w_i.

    These generate the extremal rays of the relaxed cone in which the
    second weight is not required to be dominant.
    """
    out = []
    for i in range(1, rs.rank + 1):
        fw = linalg.vector(fundamental_weight(rs, i))
        for x in sorted(orbit(rs, fw, rs.nodes(), budget)):
            out.append((fw, linalg.vector(x)))
    return tuple(out)
