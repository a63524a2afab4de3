"""Small exact-rational and integer linear algebra helpers.

Vectors are tuples of Fraction, matrices tuples of row tuples.  Everything
here is dimension-generic but only ever used for n <= 4.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Vec = tuple
Mat = tuple


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(*xs) -> Vec:
    return tuple(frac(x) for x in xs)


def mat(rows) -> Mat:
    return tuple(tuple(frac(x) for x in r) for r in rows)


def zeros(n) -> Vec:
    return (Fraction(0),) * n


def identity(n) -> Mat:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    c = frac(c)
    return tuple(c * a for a in u)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(A, v):
    return tuple(dot(row, v) for row in A)


def mat_t(A):
    return tuple(zip(*A))


def mat_mul(A, B):
    Bt = mat_t(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def gram_norm(G, v):
    return dot(v, mat_vec(G, v))


def gram_inner(G, u, v):
    return dot(u, mat_vec(G, v))


def mat_det(A):
    n = len(A)
    M = [list(row) for row in A]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] * inv
            if f:
                for k in range(c, n):
                    M[r][k] -= f * M[c][k]
    return det


def mat_inv(A):
    n = len(A)
    M = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return tuple(tuple(row[n:]) for row in M)


def solve(A, b):
    """One solution of Ax=b plus a nullspace basis, or None if inconsistent.

    A is m x n over Q; returns (particular, nullspace) with tuples of length n.
    """
    m, n = len(A), len(A[0]) if A else 0
    M = [list(row) + [bi] for row, bi in zip(A, b)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i][n] != 0:
            return None
    part = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        part[c] = M[i][n]
    free = [c for c in range(n) if c not in pivots]
    null = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -M[i][f]
        null.append(tuple(v))
    return tuple(part), tuple(null)


def kernel_basis(A):
    sol = solve(A, [Fraction(0)] * len(A))
    return sol[1]


def column_space_basis(A):
    """Independent columns of A, as vectors."""
    cols = list(mat_t(A))
    out = []
    for c in cols:
        test = out + [c]
        if matrix_rank(test) > len(out):
            out.append(c)
    return tuple(out)


def matrix_rank(rows):
    M = [list(r) for r in rows]
    m = len(M)
    if m == 0:
        return 0
    n = len(M[0])
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][c]
        M[rank] = [x * inv for x in M[rank]]
        for i in range(m):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


# ----------------------------------------------------------------------
# Integer lattice routines (row convention).


def hnf_rows(rows):
    """Row Hermite normal form of an integer matrix; returns nonzero rows."""
    M = [list(map(int, r)) for r in rows]
    if not M:
        return []
    m, n = len(M), len(M[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        # clear the column below by gcd steps
        for i in range(r + 1, m):
            while M[i][c]:
                q = M[r][c] // M[i][c]
                M[r] = [a - q * b for a, b in zip(M[r], M[i])]
                M[r], M[i] = M[i], M[r]
        if M[r][c] < 0:
            M[r] = [-a for a in M[r]]
        for i in range(r):
            q = M[i][c] // M[r][c]
            if q:
                M[i] = [a - q * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return [row for row in M[:r]]


def hnf_rows_transform(rows):
    """Row HNF with the unimodular transform: returns (H, U) with U @ rows = H.

    Zero rows of H sit at the bottom; the matching rows of U form a basis of
    the integer left-kernel.
    """
    M = [list(map(int, r)) for r in rows]
    m = len(M)
    n = len(M[0]) if M else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, m):
            while M[i][c]:
                q = M[r][c] // M[i][c]
                M[r] = [a - q * b for a, b in zip(M[r], M[i])]
                U[r] = [a - q * b for a, b in zip(U[r], U[i])]
                M[r], M[i] = M[i], M[r]
                U[r], U[i] = U[i], U[r]
        if M[r][c] < 0:
            M[r] = [-a for a in M[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = M[i][c] // M[r][c]
            if q:
                M[i] = [a - q * b for a, b in zip(M[i], M[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
        if r == m:
            break
    return M, U


def integer_kernel(rows):
    """Basis of {x integer : x @ rows = 0} (left kernel of an integer matrix)."""
    M, U = hnf_rows_transform(rows)
    return [U[i] for i in range(len(M)) if not any(M[i])]


def smith_invariants(rows):
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix.

    Min-pivot variant: each outer pass either finishes the corner or strictly
    shrinks the smallest absolute value in the working submatrix.
    """
    M = [list(map(int, r)) for r in rows]
    if not M or not M[0]:
        return []
    m, n = len(M), len(M[0])
    out = []
    t = 0
    while t < min(m, n):
        entries = [
            (abs(M[i][j]), i, j)
            for i in range(t, m)
            for j in range(t, n)
            if M[i][j]
        ]
        if not entries:
            break
        _, pi, pj = min(entries)
        M[t], M[pi] = M[pi], M[t]
        for row in M:
            row[t], row[pj] = row[pj], row[t]
        p = M[t][t]
        dirty = False
        for i in range(t + 1, m):
            q = M[i][t] // p
            if q:
                M[i] = [a - q * b for a, b in zip(M[i], M[t])]
            if M[i][t]:
                dirty = True
        for j in range(t + 1, n):
            q = M[t][j] // p
            if q:
                for row in M:
                    row[j] -= q * row[t]
            if M[t][j]:
                dirty = True
        if dirty:
            continue
        d = abs(p)
        bad = next(
            (
                i
                for i in range(t + 1, m)
                for j in range(t + 1, n)
                if M[i][j] % d
            ),
            None,
        )
        if bad is not None:
            M[t] = [a + b for a, b in zip(M[t], M[bad])]
            continue
        out.append(d)
        t += 1
    return out


def lattice_basis_from_generators(gens, dim=None):
    """Basis of the lattice generated by rational vectors (HNF over a common denominator)."""
    gens = [tuple(frac(x) for x in g) for g in gens if any(frac(x) for x in g)]
    if not gens:
        return []
    n = dim or len(gens[0])
    den = 1
    for g in gens:
        for x in g:
            den = den * x.denominator // gcd(den, x.denominator)
    rows = [[int(x * den) for x in g] for g in gens]
    basis = hnf_rows(rows)
    return [tuple(Fraction(a, den) for a in row) for row in basis]


def lattice_contains(basis, v):
    """Whether v lies in the lattice spanned by basis (integer coefficients)."""
    if not any(v):
        return True
    if not basis:
        return False
    sol = solve(mat_t(basis), v)
    if sol is None:
        return False
    part, null = sol
    if null:  # basis rows independent in our usage, but stay safe
        # project away free directions: any representation works iff some integer one exists;
        # with independent generators null is empty, so just fail loudly otherwise
        raise ValueError("lattice_contains requires an independent basis")
    return all(x.denominator == 1 for x in part)


def lattice_index(basis_big, basis_small):
    """Index of the second lattice in the first (both bases, small subset of big)."""
    coords = []
    for v in basis_small:
        sol = solve(mat_t(basis_big), v)
        part, _ = sol
        assert all(x.denominator == 1 for x in part)
        coords.append([int(x) for x in part])
    d = mat_det(mat(coords))
    return abs(int(d))


# ----------------------------------------------------------------------
# Rational square-root bounds (for certified geometric estimates).

_SCALE = 1 << 64


def sqrt_lower(q: Fraction) -> Fraction:
    """A rational r with r*r <= q, tight to ~2^-32."""
    q = frac(q)
    if q < 0:
        raise ValueError("negative")
    s = isqrt((q.numerator * _SCALE * _SCALE) // q.denominator)
    return Fraction(s, _SCALE)


def sqrt_upper(q: Fraction) -> Fraction:
    """A rational r with r*r >= q, tight to ~2^-32."""
    q = frac(q)
    if q < 0:
        raise ValueError("negative")
    s = isqrt((q.numerator * _SCALE * _SCALE + q.denominator - 1) // q.denominator) + 1
    return Fraction(s, _SCALE)
