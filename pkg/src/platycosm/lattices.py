"""Certified enumeration on positive-definite rational Gram matrices.

All searches use dual-Gram coefficient bounds: whenever a vector of squared
norm at most d exists, its i-th coefficient relative to the target differs
by at most sqrt(d * (G^-1)_ii), so the enumerated box provably contains
every candidate.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import BoundNotCertified, NotPositiveDefinite
from .linalg import (
    frac,
    gram_inner,
    gram_norm,
    mat,
    mat_det,
    mat_inv,
    mat_vec,
    sqrt_upper,
    vec_sub,
)

_ENUM_CAP = 4_000_000


def leading_minors(G):
    out = []
    for k in range(1, len(G) + 1):
        out.append(mat_det(tuple(row[:k] for row in G[:k])))
    return out


def is_positive_definite(G) -> bool:
    rows = len(G)
    if any(len(r) != rows for r in G):
        return False
    if any(G[i][j] != G[j][i] for i in range(rows) for j in range(rows)):
        return False
    return all(m > 0 for m in leading_minors(G))


def check_positive_definite(G):
    if not is_positive_definite(G):
        raise NotPositiveDefinite(f"matrix {G!r} is not a symmetric positive-definite Gram matrix")


def _coefficient_windows(G, Ginv, target, bound):
    """Integer ranges per coordinate containing every x with |x - target|^2_G <= bound."""
    n = len(G)
    windows = []
    size = 1
    for i in range(n):
        s = sqrt_upper(frac(bound) * Ginv[i][i])
        lo = target[i] - s
        hi = target[i] + s
        lo_i = -((-lo.numerator) // lo.denominator)  # ceil
        hi_i = hi.numerator // hi.denominator  # floor
        windows.append(range(lo_i, hi_i + 1))
        size *= max(0, hi_i - lo_i + 1)
    if size > _ENUM_CAP:
        raise BoundNotCertified(f"enumeration box of size {size} exceeds cap")
    return windows


def closest_vectors(G, target, *, exclude_target=False, Ginv=None):
    """Minimal |x - target|^2_G over integer x, with every minimizer.

    Returns (min_norm, [coefficient tuples]).  When exclude_target is set the
    exact lattice point equal to target (if integral) is skipped, which turns
    the routine into a shortest-vector search for target = 0.
    """
    n = len(G)
    Ginv = Ginv or mat_inv(G)
    rounded = tuple(
        (t + Fraction(1, 2)).numerator // (t + Fraction(1, 2)).denominator for t in target
    )
    candidates = [rounded]
    if exclude_target:
        # seed with the cheapest basis step so the bound is finite
        candidates = [tuple(rounded[j] + (1 if j == i else 0) for j in range(n)) for i in range(n)]
        candidates += [tuple(rounded[j] - (1 if j == i else 0) for j in range(n)) for i in range(n)]
    best = None
    for c in candidates:
        diff = vec_sub(tuple(map(Fraction, c)), target)
        if exclude_target and not any(diff):
            continue
        nrm = gram_norm(G, diff)
        if best is None or nrm < best:
            best = nrm
    windows = _coefficient_windows(G, Ginv, target, best)
    minimizers = []
    for c in product(*windows):
        diff = vec_sub(tuple(map(Fraction, c)), target)
        if exclude_target and not any(diff):
            continue
        nrm = gram_norm(G, diff)
        if nrm < best:
            best = nrm
            minimizers = [c]
        elif nrm == best:
            minimizers.append(c)
    return best, minimizers


def shortest_vectors(G):
    """Squared norm and all shortest nonzero lattice vectors."""
    n = len(G)
    return closest_vectors(G, (Fraction(0),) * n, exclude_target=True)


def coset_minimum_mod2(G, parity):
    """Minimal squared norm over the coset parity + 2L, with all minimizers.

    parity is a 0/1 tuple; minimizers are returned as integer vectors in the
    coset itself.
    """
    # |p + 2k|^2 = 4 |k - (-p/2)|^2
    target = tuple(Fraction(-e, 2) for e in parity)
    nrm, ks = closest_vectors(G, target)
    vecs = [tuple(e + 2 * k for e, k in zip(parity, kv)) for kv in ks]
    return 4 * nrm, vecs


def vectors_with_norm(G, value):
    """All integer vectors of a given squared norm."""
    n = len(G)
    Ginv = mat_inv(G)
    windows = _coefficient_windows(G, Ginv, (Fraction(0),) * n, value)
    out = []
    for c in product(*windows):
        if not any(c):
            continue
        if gram_norm(G, tuple(map(Fraction, c))) == value:
            out.append(c)
    return out


def automorphisms(G):
    """All integer matrices U with U^T G U = G (columns = images of the basis)."""
    n = len(G)
    cands = {}
    for i in range(n):
        key = G[i][i]
        if key not in cands:
            cands[key] = vectors_with_norm(G, key)
    mats = []

    def extend(cols):
        i = len(cols)
        if i == n:
            U = tuple(zip(*cols))
            if abs(mat_det(mat(U))) == 1:
                mats.append(tuple(tuple(int(x) for x in row) for row in U))
            return
        for v in cands[G[i][i]]:
            vf = tuple(map(Fraction, v))
            if all(gram_inner(G, tuple(map(Fraction, cols[j])), vf) == G[j][i] for j in range(i)):
                extend(cols + [v])

    extend([])
    return mats


def rotation_orders(G):
    """Orders of the elements of the integer point group of a lattice."""
    n = len(G)
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    orders = set()
    for U in automorphisms(G):
        M = U
        k = 1
        while M != ident:
            M = tuple(
                tuple(sum(M[i][t] * U[t][j] for t in range(n)) for j in range(n))
                for i in range(n)
            )
            k += 1
            if k > 12:
                raise BoundNotCertified("point-group element of unexpected order")
        orders.add(k)
    return orders


# ----------------------------------------------------------------------
# 2D superbase reduction with basis tracking.


def reduce2_superbase(G2):
    """Obtuse superbase of a 2D lattice, tracking coordinates in the input basis.

    Returns (vectors, conorms): vectors = (v0, v1, v2) integer coordinate
    tuples summing to zero, conorms[k] = -v_i . v_j for {i,j,k} = {0,1,2},
    all conorms >= 0.
    """
    check_positive_definite(G2)
    vs = [(-1, -1), (1, 0), (0, 1)]

    def inner(a, b):
        af = tuple(map(Fraction, a))
        bf = tuple(map(Fraction, b))
        return gram_inner(G2, af, bf)

    def conorms(v):
        return [
            -inner(v[1], v[2]),
            -inner(v[0], v[2]),
            -inner(v[0], v[1]),
        ]

    for _ in range(10_000):
        cs = conorms(vs)
        neg = [k for k in range(3) if cs[k] < 0]
        if not neg:
            return tuple(tuple(v) for v in vs), tuple(cs)
        k = min(neg, key=lambda t: (cs[t], t))
        i, j = [t for t in range(3) if t != k]
        # flip v_j and absorb it into v_k; conorm at k gains 2*eps, others lose
        vs = [list(v) for v in vs]
        vk = [a + 2 * b for a, b in zip(vs[k], vs[j])]
        vj = [-b for b in vs[j]]
        vs[k], vs[j] = vk, vj
        vs = [tuple(v) for v in vs]
    raise BoundNotCertified("2D superbase reduction failed to terminate")
