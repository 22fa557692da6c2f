"""Exact rational polytopes: string cones/polytopes, GT and SGT polytopes,
their epsilon deformations, lattice points, vertices, and Ehrhart volumes.

H-representations keep integer data throughout (normal . x <= rhs); vertex
coordinates and Ehrhart coefficients are exact Fractions.  Facet indices are
laid out uniformly across the model polytopes: inequalities 0..N-1 are the
"F" family (lambda bounds on the string side, dual Kogan equations on the
GT/SGT side) and N..2N-1 are the "F-vee" family (string-cone facets, Kogan
equations), each in the fixed arrangement order that the face combinatorics
relies on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import (
    RootDatum,
    cartan_matrix,
    standard_word,
)


class UnboundedRegionError(ValueError):
    pass


@dataclass(frozen=True)
class Polytope:
    ambient_dim: int
    ineqs: tuple            # ((coeffs, rhs), ...) meaning coeffs . x <= rhs
    eqs: tuple = ()         # ((coeffs, rhs), ...) meaning coeffs . x == rhs
    labels: tuple = ()      # semantic tag per inequality, parallel to ineqs
    sweep_order: tuple = () # coordinate elimination order for lattice sweeps

    def label(self, idx: int) -> str:
        return self.labels[idx] if idx < len(self.labels) else ""


@dataclass(frozen=True)
class Face:
    parent: Polytope
    tight: tuple  # sorted inequality indices turned into equalities


def face(parent: Polytope, tight) -> Face:
    tight = tuple(sorted(set(tight)))
    for t in tight:
        if not 0 <= t < len(parent.ineqs):
            raise IndexError("tight index %d out of range" % t)
    return Face(parent, tight)


def face_polytope(f: Face) -> Polytope:
    extra = tuple(f.parent.ineqs[t] for t in f.tight)
    return Polytope(
        ambient_dim=f.parent.ambient_dim,
        ineqs=f.parent.ineqs,
        eqs=f.parent.eqs + extra,
        labels=f.parent.labels,
        sweep_order=f.parent.sweep_order,
    )


def dilate(p: Polytope, k: int) -> Polytope:
    return Polytope(
        p.ambient_dim,
        tuple((c, r * k) for c, r in p.ineqs),
        tuple((c, r * k) for c, r in p.eqs),
        p.labels,
        p.sweep_order,
    )


# ---------------------------------------------------------------------------
# lattice point enumeration


def _ceil_div(p: int, q: int) -> int:
    # q > 0
    return -((-p) // q)


@lru_cache(maxsize=None)
def lattice_points(p: Polytope) -> tuple:
    """All integer points, sorted.  Requires bounds derivable along the sweep
    order (true for every polytope built here and their faces)."""
    dim = p.ambient_dim
    order = p.sweep_order or tuple(range(dim - 1, -1, -1))
    pos = {v: t for t, v in enumerate(order)}
    by_step = [[] for _ in range(dim)]
    for coeffs, rhs, is_eq in itertools.chain(
        ((c, r, False) for c, r in p.ineqs), ((c, r, True) for c, r in p.eqs)
    ):
        support = [v for v in range(dim) if coeffs[v]]
        if not support:
            ok = rhs == 0 if is_eq else rhs >= 0
            if not ok:
                return ()
            continue
        step = max(pos[v] for v in support)
        var = order[step]
        rest = tuple((v, coeffs[v]) for v in support if v != var)
        by_step[step].append((coeffs[var], rest, rhs, is_eq))

    point = [0] * dim
    out = []

    def sweep(t):
        if t == dim:
            out.append(tuple(point))
            return
        var = order[t]
        lo = hi = None
        for a, rest, rhs, is_eq in by_step[t]:
            s = rhs - sum(c * point[v] for v, c in rest)
            if a > 0:
                b = s // a
                hi = b if hi is None else min(hi, b)
                if is_eq:
                    b2 = _ceil_div(s, a)
                    lo = b2 if lo is None else max(lo, b2)
            else:
                b = _ceil_div(-s, -a)
                lo = b if lo is None else max(lo, b)
                if is_eq:
                    b2 = (-s) // (-a)
                    hi = b2 if hi is None else min(hi, b2)
        if lo is None or hi is None:
            raise UnboundedRegionError(
                "no %s bound for coordinate %d; region unbounded along sweep"
                % ("lower" if lo is None else "upper", var)
            )
        for val in range(lo, hi + 1):
            point[var] = val
            sweep(t + 1)
        point[var] = 0

    sweep(0)
    return tuple(sorted(out))


def face_lattice_points(f: Face) -> tuple:
    return lattice_points(face_polytope(f))


def face_dim(f: Face) -> int:
    """Dimension of a face via its lattice points (exact for the integral
    polytopes built here); -1 signals the empty face, distinct from 0."""
    return affine_rank(face_lattice_points(f))


def intersect_faces(f: Face, g: Face) -> Face:
    if f.parent != g.parent:
        raise ValueError("faces of distinct parents")
    return face(f.parent, tuple(set(f.tight) | set(g.tight)))


def transversal(f: Face, g: Face) -> bool:
    """Nonempty intersection whose codimension is the sum of codimensions."""
    both = intersect_faces(f, g)
    d = face_dim(both)
    if d < 0:
        return False
    ambient = polytope_dim(f.parent)
    return ambient - d == (ambient - face_dim(f)) + (ambient - face_dim(g))


# ---------------------------------------------------------------------------
# vertices, facets, simplicity


@lru_cache(maxsize=None)
def vertices(p: Polytope) -> tuple:
    """All vertices, exactly, by depth-first search over tight inequality sets
    with a shared incremental elimination."""
    dim = p.ambient_dim
    rows = [tuple(Fraction(x) for x in c) + (Fraction(r),) for c, r in p.eqs]
    ineq_rows = [tuple(Fraction(x) for x in c) + (Fraction(r),) for c, r in p.ineqs]

    echelon = []  # list of (pivot_col, normalized row incl. rhs)

    def reduce_row(row):
        row = list(row)
        for piv, erow in echelon:
            f = row[piv]
            if f:
                for j in range(dim + 1):
                    row[j] -= f * erow[j]
        return row

    def add_row(row):
        """Reduce and push; returns pivot or None (dependent), raises on 0=c."""
        row = reduce_row(row)
        piv = next((j for j in range(dim) if row[j]), None)
        if piv is None:
            if row[dim]:
                return "inconsistent"
            return None
        inv = 1 / row[piv]
        echelon.append((piv, tuple(x * inv for x in row)))
        return piv

    for r in rows:
        res = add_row(r)
        if res == "inconsistent":
            return ()

    found = set()

    def solve_and_check():
        sol = [Fraction(0)] * dim
        fixed = [False] * dim
        for piv, erow in reversed(echelon):
            val = erow[dim] - sum(erow[j] * sol[j] for j in range(dim) if j != piv and fixed[j])
            # columns never pivoted stay at 0; full rank here so all are pivots
            sol[piv] = val
            fixed[piv] = True
        for c, r in p.ineqs:
            if sum(Fraction(c[j]) * sol[j] for j in range(dim)) > r:
                return
        found.add(tuple(sol))

    base_rank = len(echelon)
    if base_rank > dim:
        return ()

    def dfs(idx):
        if len(echelon) == dim:
            solve_and_check()
            return
        if len(ineq_rows) - idx < dim - len(echelon):
            return
        if idx == len(ineq_rows):
            return
        res = add_row(ineq_rows[idx])
        if res not in (None, "inconsistent"):
            dfs(idx + 1)
            echelon.pop()
        dfs(idx + 1)

    if len(echelon) == dim:
        solve_and_check()
    else:
        dfs(0)
    return tuple(sorted(found))


def affine_rank(points) -> int:
    """Dimension of the affine span (-1 for empty input)."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    rows = [[Fraction(x) - Fraction(y) for x, y in zip(q, base)] for q in pts[1:]]
    rank = 0
    ncols = len(base)
    pivots = []
    for row in rows:
        for piv, erow in pivots:
            f = row[piv]
            if f:
                row = [a - f * b for a, b in zip(row, erow)]
        piv = next((j for j in range(ncols) if row[j]), None)
        if piv is not None:
            inv = 1 / row[piv]
            pivots.append((piv, [x * inv for x in row]))
            rank += 1
            if rank == ncols:
                break
    return rank


def polytope_dim(p: Polytope) -> int:
    """Dimension via lattice points; exact for integral polytopes."""
    return affine_rank(lattice_points(p))


def _normalized_halfspace(coeffs, rhs):
    g = 0
    for x in coeffs:
        g = _gcd(g, x)
    g = _gcd(g, rhs) or 1
    return tuple(x // g for x in coeffs), rhs // g


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def facet_defining(p: Polytope) -> tuple:
    """Indices of inequalities whose tight vertex set has rank dim(P) - 1."""
    verts = vertices(p)
    amb_dim = affine_rank(verts)
    out = []
    seen_halfspaces = set()
    for idx, (c, r) in enumerate(p.ineqs):
        key = _normalized_halfspace(c, r)
        if key in seen_halfspaces:
            continue
        tight = [v for v in verts if sum(Fraction(c[j]) * v[j] for j in range(p.ambient_dim)) == r]
        if affine_rank(tight) == amb_dim - 1:
            seen_halfspaces.add(key)
            out.append(idx)
    return tuple(out)


def is_simple(p: Polytope) -> bool:
    """Every vertex lies on exactly dim(P) facet-defining inequalities."""
    verts = vertices(p)
    amb_dim = affine_rank(verts)
    facets = facet_defining(p)
    for v in verts:
        count = sum(
            1
            for idx in facets
            if sum(Fraction(p.ineqs[idx][0][j]) * v[j] for j in range(p.ambient_dim))
            == p.ineqs[idx][1]
        )
        if count != amb_dim:
            return False
    return True


def facet_normal_set(p: Polytope) -> frozenset:
    """Normalized normals of the facet-defining inequalities."""
    out = set()
    for idx in facet_defining(p):
        c, _ = p.ineqs[idx]
        g = 0
        for x in c:
            g = _gcd(g, x)
        out.add(tuple(x // g for x in c))
    return frozenset(out)


def support_value(p: Polytope, direction) -> Fraction:
    verts = vertices(p)
    if not verts:
        raise ValueError("support value of empty polytope")
    return max(sum(Fraction(d) * v[j] for j, d in enumerate(direction)) for v in verts)


# ---------------------------------------------------------------------------
# Ehrhart interpolation and volumes


def ehrhart_polynomial(p: Polytope) -> tuple:
    """Coefficients (a_0, ..., a_d) of the lattice-point count of kP as a polynomial in k,
    with d = dim(P).  Interpolated from exact counts at k = 0..d."""
    pts = lattice_points(p)
    if not pts:
        raise ValueError("Ehrhart polynomial of an empty polytope")
    d = affine_rank(pts)
    values = [(0, 1)] + [(k, len(lattice_points(dilate(p, k)))) for k in range(1, d + 1)]
    return _interpolate(values)


def _interpolate(values):
    n = len(values)
    coeffs = [Fraction(0)] * n
    for k, (xk, yk) in enumerate(values):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(values):
            if j == k:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for deg, c in enumerate(basis):
                new[deg] -= c * xj
                new[deg + 1] += c
            basis = new
            denom *= Fraction(xk - xj)
        scale = Fraction(yk) / denom
        for deg, c in enumerate(basis):
            coeffs[deg] += scale * c
    return tuple(coeffs)


def ehrhart_value(coeffs, k) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * k + c
    return total


def normalized_volume(p: Polytope) -> Fraction:
    """Lattice-normalized volume in the polytope's own dimension: the leading
    Ehrhart coefficient.  A point has volume 1."""
    coeffs = ehrhart_polynomial(p)
    return coeffs[-1]


def volume_at_dim(p: Polytope, d: int) -> Fraction:
    """Coefficient of k^d in the Ehrhart polynomial; 0 when dim(P) < d."""
    pts = lattice_points(p)
    if not pts:
        return Fraction(0)
    actual = affine_rank(pts)
    if actual > d:
        raise ValueError("polytope has dimension %d > requested %d" % (actual, d))
    if actual < d:
        return Fraction(0)
    return normalized_volume(p)


# ---------------------------------------------------------------------------
# coordinate layouts


def _tri(k: int) -> int:
    return k * (k + 1) // 2


@lru_cache(maxsize=None)
def coordinate_names(datum: RootDatum) -> tuple:
    """Names in storage order: a[j,i] is the row-j entry of level i, b[j,i]
    likewise for the auxiliary type-C rows."""
    n = datum.rank
    names = []
    if datum.family == "A":
        for r in range(1, n + 1):
            for j in range(1, r + 1):
                names.append("a[%d,%d]" % (j, r - j + 1))
    else:
        for r in range(1, n + 1):
            for j in range(1, r):
                names.append("b[%d,%d]" % (j, r - j + 1))
            for j in range(r, 0, -1):
                names.append("a[%d,%d]" % (j, r - j + 1))
    return tuple(names)


def a_pos(datum: RootDatum, j: int, i: int) -> int:
    """0-based coordinate index of a_j^{(i)}."""
    r = i + j - 1
    if datum.family == "A":
        return _tri(r - 1) + j - 1
    return (r - 1) * (r - 1) + 2 * r - j - 1


def b_pos(datum: RootDatum, j: int, i: int) -> int:
    """0-based coordinate index of b_j^{(i)} (type C, 2 <= i)."""
    r = i + j - 1
    return (r - 1) * (r - 1) + j - 1


# ---------------------------------------------------------------------------
# string cone and string polytope


@lru_cache(maxsize=None)
def string_cone_facets(datum: RootDatum) -> tuple:
    """String cone facets for the standard word, in arrangement order.

    Each entry is an integer coefficient vector v with the facet inequality
    v . x <= 0 and facet equality v . x = 0.
    """
    n = datum.rank
    big_n = datum.num_positive_roots
    out = []
    if datum.family == "A":
        for r in range(1, n + 1):
            base = _tri(r - 1)
            for m in range(1, r + 1):
                vec = [0] * big_n
                if m == 1:
                    vec[base + r - 1] = -1          # a_r^{(1)} >= 0
                else:
                    vec[base + r - m + 1] = 1       # a_{r-m+2}^{(m-1)}
                    vec[base + r - m] = -1          # <= a_{r-m+1}^{(m)}
                out.append(tuple(vec))
    else:
        for r in range(1, n + 1):
            base = (r - 1) * (r - 1)
            size = 2 * r - 1
            for m in range(1, size + 1):
                vec = [0] * big_n
                if m == size:
                    vec[base + size - 1] = -1       # last chain entry >= 0
                else:
                    vec[base + m] = 1               # next chain entry
                    vec[base + m - 1] = -1          # <= previous
                out.append(tuple(vec))
    return tuple(out)


def string_lambda_facet(datum: RootDatum, word, j: int):
    """Facet j (1-based) of the string polytope for any reduced word of w_0:
    coefficient vector v and weight-coefficient vector u with the inequality
    v . x <= u . lam and facet equality v . x = u . lam."""
    c = cartan_matrix(datum)
    big_n = len(word)
    vec = [0] * big_n
    vec[j - 1] = 1
    ij = word[j - 1]
    for k in range(j + 1, big_n + 1):
        vec[k - 1] = c[ij - 1][word[k - 1] - 1]
    lam_vec = tuple(1 if t == ij else 0 for t in range(1, datum.rank + 1))
    return tuple(vec), lam_vec


def string_polytope(datum: RootDatum, lam) -> Polytope:
    """String polytope for the standard word: lambda-bound facets F_1..F_N
    first, cone facets Fv_1..Fv_N after."""
    word = standard_word(datum)
    big_n = datum.num_positive_roots
    ineqs = []
    labels = []
    for j in range(1, big_n + 1):
        vec, lam_vec = string_lambda_facet(datum, word, j)
        rhs = sum(lv * l for lv, l in zip(lam_vec, lam))
        ineqs.append((vec, rhs))
        labels.append("F%d" % j)
    for k, vec in enumerate(string_cone_facets(datum), start=1):
        ineqs.append((vec, 0))
        labels.append("Fv%d" % k)
    return Polytope(
        ambient_dim=big_n,
        ineqs=tuple(ineqs),
        labels=tuple(labels),
        sweep_order=tuple(range(big_n - 1, -1, -1)),
    )


def string_cone(datum: RootDatum) -> Polytope:
    big_n = datum.num_positive_roots
    ineqs = tuple((vec, 0) for vec in string_cone_facets(datum))
    labels = tuple("Fv%d" % k for k in range(1, big_n + 1))
    return Polytope(big_n, ineqs, labels=labels, sweep_order=tuple(range(big_n - 1, -1, -1)))


# ---------------------------------------------------------------------------
# epsilon profiles


@dataclass(frozen=True)
class EpsilonProfile:
    """Deformation offsets.  Type A stores (eps_1, ..., eps_n) with
    0 = eps_1 <= ... <= eps_n; type C stores (eps_2, ..., eps_n) and
    (eps'_1, ..., eps'_n) with 0 = eps'_1 <= eps_2 <= eps'_2 <= ... <= eps'_n."""

    family: str
    eps: tuple
    eps_prime: tuple = ()

    def __post_init__(self):
        if self.family == "A":
            chain = list(self.eps)
            if not chain or chain[0] != 0:
                raise ValueError("type A profile must start with eps_1 = 0")
            if any(a > b for a, b in zip(chain, chain[1:])):
                raise ValueError("profile violates the chain order")
        else:
            if not self.eps_prime or self.eps_prime[0] != 0:
                raise ValueError("type C profile must have eps'_1 = 0")
            chain = []
            for k in range(len(self.eps_prime)):
                if k > 0:
                    chain.append(self.eps[k - 1])
                chain.append(self.eps_prime[k])
            if any(a > b for a, b in zip(chain, chain[1:])):
                raise ValueError("profile violates the chain order")

    def is_strict(self) -> bool:
        if self.family == "A":
            chain = list(self.eps)
        else:
            chain = []
            for k in range(len(self.eps_prime)):
                if k > 0:
                    chain.append(self.eps[k - 1])
                chain.append(self.eps_prime[k])
        return all(a < b for a, b in zip(chain, chain[1:]))

    def max_entry(self) -> int:
        return max(list(self.eps) + list(self.eps_prime) + [0])


def zero_profile(datum: RootDatum) -> EpsilonProfile:
    n = datum.rank
    if datum.family == "A":
        return EpsilonProfile("A", (0,) * n)
    return EpsilonProfile("C", (0,) * (n - 1), (0,) * n)


def default_strict_profile(datum: RootDatum) -> EpsilonProfile:
    n = datum.rank
    if datum.family == "A":
        return EpsilonProfile("A", tuple(range(n)))
    return EpsilonProfile(
        "C",
        tuple(2 * i - 3 for i in range(2, n + 1)),
        tuple(2 * i - 2 for i in range(1, n + 1)),
    )


def default_regular_lambda(datum: RootDatum, profile: EpsilonProfile) -> tuple:
    """Dominant regular weight coarse enough to keep the deformed polytope in
    the generic normal-fan chamber."""
    c = max(1, datum.num_positive_roots * profile.max_entry())
    return (c,) * datum.rank


# ---------------------------------------------------------------------------
# GT and SGT polytopes (possibly deformed)


def _gt_const(lam, k: int, n: int) -> int:
    # a_k^{(0)} = lambda_k + ... + lambda_n, with a_{n+1}^{(0)} = 0
    return sum(lam[k - 1 : n])


def _sgt_const(lam, k: int, n: int) -> int:
    # b_k^{(1)} = lambda_1 + ... + lambda_{n-k+1}, with b_{n+1}^{(1)} = 0
    return sum(lam[0 : n - k + 1])


def _gt_facet_specs(datum: RootDatum):
    """(F_descriptors, Fv_descriptors); each descriptor is (terms, const_fn,
    eps_index) with terms a list of (coordinate index, coefficient), the
    inequality reading terms . x <= const_fn(lam) + eps[eps_index]."""
    n = datum.rank
    f_specs = []
    for r in range(1, n + 1):
        lvl = n - r + 1
        for m in range(1, r + 1):
            j = r - m + 1
            # a_j^{(lvl)} >= a_{j+1}^{(lvl-1)}
            if lvl - 1 == 0:
                terms = [(a_pos(datum, j, 1), -1)]
                const = (lambda jj: (lambda lam: -_gt_const(lam, jj, n)))(j + 1)
            else:
                terms = [(a_pos(datum, j + 1, lvl - 1), 1), (a_pos(datum, j, lvl), -1)]
                const = lambda lam: 0
            f_specs.append((terms, const, None))
    fv_specs = []
    for r in range(1, n + 1):
        lvl = n - r  # rows (lvl, lvl+1)
        for m in range(1, r + 1):
            # a_m^{(lvl)} + eps_{lvl+1} >= a_m^{(lvl+1)}
            if lvl == 0:
                terms = [(a_pos(datum, m, 1), 1)]
                const = (lambda mm: (lambda lam: _gt_const(lam, mm, n)))(m)
            else:
                terms = [(a_pos(datum, m, lvl + 1), 1), (a_pos(datum, m, lvl), -1)]
                const = lambda lam: 0
            fv_specs.append((terms, const, lvl + 1))
    return f_specs, fv_specs


def _sgt_facet_specs(datum: RootDatum):
    n = datum.rank

    def bvar(j, i):
        """(terms, const_fn) for b_j^{(i)}: variable, lambda constant, or 0."""
        if i == 1:
            return [], (lambda jj: (lambda lam: _sgt_const(lam, jj, n)))(j)
        if j == n - i + 2:
            return [], lambda lam: 0
        return [(b_pos(datum, j, i), 1)], lambda lam: 0

    f_specs = []
    for r in range(1, n + 1):
        lvl = n - r + 1
        for k in range(1, r + 1):
            # a_k^{(lvl)} + eps_{lvl+1} >= b_k^{(lvl+1)}; for k = r the right
            # side is the fixed zero and the facet is the plain a_r^{(lvl)} >= 0
            if k == r:
                f_specs.append(([(a_pos(datum, r, lvl), -1)], lambda lam: 0, None))
            else:
                terms, cf = bvar(k, lvl + 1)
                terms = terms + [(a_pos(datum, k, lvl), -1)]
                f_specs.append((terms, _negate(cf), ("e", lvl + 1)))
        for k in range(r, 1, -1):
            # a_{k-1}^{(lvl)} >= b_k^{(lvl)}
            terms, cf = bvar(k, lvl)
            terms = terms + [(a_pos(datum, k - 1, lvl), -1)]
            f_specs.append((terms, _negate(cf), None))
    fv_specs = []
    for r in range(1, n + 1):
        lvl = n - r + 1
        for k in range(2, r + 1):
            # b_{k-1}^{(lvl+1)} >= a_k^{(lvl)}
            terms, cf = bvar(k - 1, lvl + 1)
            terms = [(a_pos(datum, k, lvl), 1)] + [(v, -c) for v, c in terms]
            fv_specs.append((terms, cf, None))
    # the first block has no type-one entries, so the loop above starts the
    # arrangement with block r = 1 contributing only its type-two equation
    fv_specs2 = []
    idx = 0
    for r in range(1, n + 1):
        lvl = n - r + 1
        block = []
        for k in range(2, r + 1):
            block.append(fv_specs[idx])
            idx += 1
        for k in range(r, 0, -1):
            # b_k^{(lvl)} + eps'_{lvl} >= a_k^{(lvl)}
            terms, cf = bvar(k, lvl)
            terms = [(a_pos(datum, k, lvl), 1)] + [(v, -c) for v, c in terms]
            block.append((terms, cf, ("ep", lvl)))
        fv_specs2.extend(block)
    return f_specs, fv_specs2


def _negate(cf):
    return lambda lam: -cf(lam)


def _eps_value(profile: EpsilonProfile, key) -> int:
    if key is None:
        return 0
    if profile.family == "A":
        return profile.eps[key - 1]
    kind, i = key
    if kind == "e":
        return profile.eps[i - 2]
    return profile.eps_prime[i - 1]


def _interlacing_polytope(datum: RootDatum, lam, profile: EpsilonProfile) -> Polytope:
    n = datum.rank
    big_n = datum.num_positive_roots
    if datum.family == "A":
        f_specs, fv_specs = _gt_facet_specs(datum)
        order = [a_pos(datum, j, i) for i in range(1, n + 1) for j in range(1, n - i + 2)]
    else:
        f_specs, fv_specs = _sgt_facet_specs(datum)
        order = []
        for i in range(1, n + 1):
            order.extend(a_pos(datum, j, i) for j in range(1, n - i + 2))
            if i < n:
                order.extend(b_pos(datum, j, i + 1) for j in range(1, n - i + 1))
    ineqs = []
    labels = []
    for fam, specs in (("F", f_specs), ("Fv", fv_specs)):
        for k, (terms, const_fn, eps_key) in enumerate(specs, start=1):
            vec = [0] * big_n
            for v, c in terms:
                vec[v] += c
            rhs = const_fn(lam) + _eps_value(profile, eps_key)
            ineqs.append((tuple(vec), rhs))
            labels.append("%s%d" % (fam, k))
    return Polytope(big_n, tuple(ineqs), labels=tuple(labels), sweep_order=tuple(order))


def gt_polytope(datum: RootDatum, lam) -> Polytope:
    if datum.family != "A":
        raise ValueError("GT polytope requires type A")
    return _interlacing_polytope(datum, lam, zero_profile(datum))


def sgt_polytope(datum: RootDatum, lam) -> Polytope:
    if datum.family != "C":
        raise ValueError("SGT polytope requires type C")
    return _interlacing_polytope(datum, lam, zero_profile(datum))


def deformed_polytope(datum: RootDatum, lam, profile: EpsilonProfile) -> Polytope:
    """GT or SGT polytope with Kogan-side inequalities relaxed by the profile;
    the zero profile reproduces the undeformed polytope exactly."""
    if profile.family != datum.family:
        raise ValueError("profile family does not match the root datum")
    return _interlacing_polytope(datum, lam, profile)


def model_polytope(datum: RootDatum, lam) -> Polytope:
    return gt_polytope(datum, lam) if datum.family == "A" else sgt_polytope(datum, lam)


def polytope_to_json(p: Polytope) -> dict:
    return {
        "ambient_dim": p.ambient_dim,
        "inequalities": [[list(c), r] for c, r in p.ineqs],
        "labels": {str(i): lab for i, lab in enumerate(p.labels)},
    }
