"""Exact discrete information measures (all in bits, log base 2)."""

from __future__ import annotations

import math
from itertools import combinations

from .distribution import JointDistribution, _as_vars

# Values this close to zero are treated as exactly zero, so the many
# "= 0" identities hold under floating point.
ZERO_TOL = 1e-12


def clip_zero(value: float, tol: float = ZERO_TOL) -> float:
    return 0.0 if abs(value) < tol else value


def _check_disjoint(*groups):
    seen = set()
    for g in groups:
        for v in g:
            if v in seen:
                raise ValueError(f"variable sets overlap on {v!r}")
            seen.add(v)


def entropy(dist: JointDistribution, vars) -> float:
    """H(vars): -sum p log2 p over the marginal; 0*log 0 := 0."""
    vs = _as_vars(vars)
    if not vs:
        raise ValueError("entropy needs a nonempty variable set")
    pmf = dist.marginal_mass(vs)
    h = -sum(p * math.log2(p) for p in pmf.values() if p > 0.0)
    return max(clip_zero(h), 0.0)


def conditional_entropy(dist: JointDistribution, target, given) -> float:
    """H(target | given) = sum_g p(g) H(target | given=g)."""
    t = _as_vars(target)
    g = _as_vars(given)
    if not t:
        raise ValueError("conditional_entropy needs a nonempty target")
    _check_disjoint(t, g)
    if not g:
        return entropy(dist, t)
    joint = dist.marginal_mass(t + g)
    pg: dict[tuple, float] = {}
    for state, p in joint.items():
        key = state[len(t):]
        pg[key] = pg.get(key, 0.0) + p
    h = 0.0
    for state, p in joint.items():
        if p > 0.0:
            h += p * math.log2(pg[state[len(t):]] / p)
    return max(clip_zero(h), 0.0)


def mutual_information(dist: JointDistribution, x, y) -> float:
    """I(X;Y) = sum p(x,y) log2( p(x,y) / (p(x) p(y)) ); symmetric, >= 0."""
    xs = _as_vars(x)
    ys = _as_vars(y)
    if not xs or not ys:
        raise ValueError("mutual_information needs nonempty variable sets")
    _check_disjoint(xs, ys)
    joint = dist.marginal_mass(xs + ys)
    px: dict[tuple, float] = {}
    py: dict[tuple, float] = {}
    for state, p in joint.items():
        kx, ky = state[: len(xs)], state[len(xs):]
        px[kx] = px.get(kx, 0.0) + p
        py[ky] = py.get(ky, 0.0) + p
    mi = 0.0
    for state, p in joint.items():
        if p > 0.0:
            kx, ky = state[: len(xs)], state[len(xs):]
            mi += p * math.log2(p / (px[kx] * py[ky]))
    return max(clip_zero(mi), 0.0)


def conditional_mutual_information(dist: JointDistribution, x, y, z) -> float:
    """I(X;Y|Z) = sum_z p(z) I(X;Y | Z=z); empty Z reduces to I(X;Y)."""
    xs = _as_vars(x)
    ys = _as_vars(y)
    zs = _as_vars(z)
    _check_disjoint(xs, ys, zs)
    if not zs:
        return mutual_information(dist, xs, ys)
    if not xs or not ys:
        raise ValueError("conditional_mutual_information needs nonempty X and Y")
    joint = dist.marginal_mass(xs + ys + zs)
    nx, ny = len(xs), len(ys)
    pz: dict[tuple, float] = {}
    pxz: dict[tuple, float] = {}
    pyz: dict[tuple, float] = {}
    for state, p in joint.items():
        kz = state[nx + ny:]
        pz[kz] = pz.get(kz, 0.0) + p
        kxz = state[:nx] + kz
        pxz[kxz] = pxz.get(kxz, 0.0) + p
        kyz = state[nx:nx + ny] + kz
        pyz[kyz] = pyz.get(kyz, 0.0) + p
    cmi = 0.0
    for state, p in joint.items():
        if p > 0.0:
            kz = state[nx + ny:]
            kxz = state[:nx] + kz
            kyz = state[nx:nx + ny] + kz
            cmi += p * math.log2(p * pz[kz] / (pxz[kxz] * pyz[kyz]))
    return max(clip_zero(cmi), 0.0)


def _conditional_interaction(dist, groups, cond) -> float:
    if len(groups) == 2:
        return conditional_mutual_information(dist, groups[0], groups[1], cond)
    head, tail = groups[:-1], groups[-1]
    return (_conditional_interaction(dist, head, cond + tail)
            - _conditional_interaction(dist, head, cond))


def interaction_information(dist: JointDistribution, groups) -> float:
    """Signed k-way interaction (multi-information among groups).

    For two groups this is plain MI.  For k > 2 it follows the recursion
    I(G1;...;Gk) = I(G1;...;G_{k-1} | Gk) - I(G1;...;G_{k-1}), with the
    conditioning distributed over every term, so the 3-way case is
    I(x;y;z) = I(x;y|z) - I(x;y).  Positive values indicate synergy,
    negative values redundancy.
    """
    gs = [_as_vars(g) for g in groups]
    if len(gs) < 2:
        raise ValueError("interaction_information needs at least two groups")
    for g in gs:
        if not g:
            raise ValueError("groups must be nonempty")
    _check_disjoint(*gs)
    return clip_zero(_conditional_interaction(dist, gs, ()))


def total_correlation(dist: JointDistribution, vars) -> float:
    """C(f1;...;fm) = sum_i H(f_i) - H(f1,...,fm); >= 0."""
    vs = _as_vars(vars)
    if len(vs) < 2:
        raise ValueError("total_correlation needs at least two variables")
    tc = sum(entropy(dist, v) for v in vs) - entropy(dist, vs)
    return max(clip_zero(tc), 0.0)


MAX_DECOMPOSITION_VARS = 12


def joint_mi_by_decomposition(dist: JointDistribution, vars, target) -> float:
    """I({x1..xm};C) as the sum of interaction terms over all subsets.

    Sums I(s1;...;sk;C) over every nonempty subset {s1..sk} of `vars`.
    Combinatorial in len(vars); serves as an oracle for the direct joint
    MI computation.
    """
    vs = _as_vars(vars)
    ts = _as_vars(target)
    if len(vs) > MAX_DECOMPOSITION_VARS:
        raise ValueError(
            f"decomposition limited to {MAX_DECOMPOSITION_VARS} variables, got {len(vs)}")
    if not vs:
        raise ValueError("vars must be nonempty")
    _check_disjoint(vs, ts)
    total = 0.0
    for k in range(1, len(vs) + 1):
        for subset in combinations(vs, k):
            groups = [(v,) for v in subset] + [ts]
            total += interaction_information(dist, groups)
    return clip_zero(total)
