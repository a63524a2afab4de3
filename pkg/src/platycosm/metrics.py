"""Systole, injectivity radius, diameter, and their brute-force oracles.

Closed forms are per-type; the systole oracle enumerates displacement minima
over point-group cosets with certified translate bounds, and the diameter
oracle samples the quotient metric on a grid of the translation cell,
returning an exact lower bound plus a Lipschitz-corrected upper bound.
The diameter is exact for seven types and an orbit-lattice lower bound for
c22, -a1, -a2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm

import numpy as np

from .conorms import conorms_from_gram, covering_radius_sq
from .cosmos import PlatycosmDescriptor, naming_gram, translation_basis
from .errors import BoundNotCertified, InvalidParameters
from .groups import (
    SpaceGroup,
    _axis_vectors,
    _minimal_coset_norm,
    point_group,
    standard_generators,
    translation_subgroup,
)
from .lattices import shortest_vectors
from .linalg import (
    frac,
    gram_inner,
    gram_norm,
    identity,
    mat,
    mat_inv,
    mat_t,
    mat_vec,
    sqrt_lower,
    sqrt_upper,
    vec_sub,
)
from .voronoi import covering_radius_oracle as _cell_covering_radius


def covering_radius_oracle(gram) -> Fraction:
    """Exact circumradius^2 of the Voronoi cell (see :mod:`platycosm.voronoi`)."""
    return _cell_covering_radius(gram)


@dataclass(frozen=True)
class OracleConfig:
    grid_divisor: int = 8          # grid spacing = systole length / divisor
    max_grid_points: int = 40_000  # per axis product cap before giving up


@dataclass(frozen=True)
class MetricReport:
    systole_sq: Fraction
    injectivity_radius_sq: Fraction
    diameter_sq: Fraction
    diameter_kind: str  # "exact" | "orbit_lattice_bound"
    systole_witness: str
    diameter_witness: str


BOUND_TYPES = ("c22", "-a1", "-a2")


def _min_with_witness(pairs):
    best = min(v for v, _ in pairs)
    names = [n for v, n in pairs if v == best]
    return best, names[0]


def systole_sq(desc: PlatycosmDescriptor, with_witness=False):
    """Squared length of the shortest closed geodesic, per-type closed form."""
    p = desc.params
    tag = desc.tag
    if tag == "c1":
        from .conorms import minimal_vonorm
        from .cosmos import naming_diagram

        val, name = minimal_vonorm(naming_diagram(desc)), "minimal vonorm"
        return (val, name) if with_witness else val
    if tag == "c2":
        pairs = [
            (p["B"] + p["C"], "B+C"),
            (p["C"] + p["A"], "C+A"),
            (p["A"] + p["B"], "A+B"),
            (p["D"], "D"),
        ]
    elif tag in ("c3", "c6"):
        pairs = [(2 * p["A"], "2A"), (p["D"], "D")]
    elif tag == "c4":
        pairs = [(p["A"], "A"), (p["D"], "D")]
    elif tag == "c22":
        pairs = [(p["A"], "A"), (p["B"], "B"), (p["C"], "C")]
    elif tag == "+a1":
        pairs = [
            (p["A"] + p["B"], "A+B"),
            (p["B"] + p["C"], "B+C"),
            (p["A"] + p["C"], "A+C"),
            (p["D"], "D"),
        ]
    elif tag == "-a1":
        pairs = [
            (p["A"] + p["B"], "A+B"),
            (p["A"] + p["C"], "A+C"),
            (p["B"] + p["C"] + p["D"], "B+C+D"),
            (4 * p["D"], "4D"),
            (4 * (p["B"] + p["C"]), "4(B+C)"),
        ]
    elif tag == "+a2":
        pairs = [(p["A"], "A"), (p["B"], "B"), (p["D"], "D")]
    elif tag == "-a2":
        pairs = [(p["A"], "A"), (p["B"], "B"), (4 * p["D"], "4D")]
    else:
        raise InvalidParameters(tag)
    val, name = _min_with_witness(pairs)
    return (val, name) if with_witness else val


def injectivity_radius_sq(desc) -> Fraction:
    return systole_sq(desc) / 4


def systole_oracle(desc: PlatycosmDescriptor, cfg: OracleConfig | None = None) -> Fraction:
    """Minimal displacement over all nonidentity elements, by certified enumeration.

    Translations contribute the shortest vector of T; a coset (L, t) moves
    points by at least the minimal norm in the fixed-space projection of its
    translate set, which is a closest-vector problem in dimension <= 2.
    """
    sg = standard_generators(desc)
    gram = sg.frame
    t_basis = translation_subgroup(sg)
    G_T = mat([[gram_inner(gram, u, v) for v in t_basis] for u in t_basis])
    best, _ = shortest_vectors(G_T)
    for L, rep in point_group(sg).items():
        if L == identity(3):
            continue
        offset, lat = _axis_vectors(sg, rep, t_basis, gram)
        nrm, _ = _minimal_coset_norm(gram, offset, lat)
        best = min(best, nrm)
    return best


# ----------------------------------------------------------------------
# Diameter closed forms.


def _c22_orbit_bounds(p):
    A, B, C = p["A"], p["B"], p["C"]
    alpha = A + (B + C) ** 2 / max(B, C)
    beta = B + (C + A) ** 2 / max(C, A)
    gamma = C + (A + B) ** 2 / max(A, B)
    m = min(A, B, C)
    delta = A + B + C + m * m * max(1 / A + 1 / B + 1 / C - 2 / m, Fraction(0))
    return alpha, beta, gamma, delta


def c22_alpha_beta_gamma_delta(desc):
    if desc.tag != "c22":
        raise InvalidParameters("orbit bounds alpha..delta concern c22")
    return _c22_orbit_bounds(desc.params)


def minus_a2_orbit_bounds(desc):
    """4R^2 of the three -a2 orbit-lattice shapes: alpha, beta, delta on (A, B, D).

    The shapes are the screw-axis and glide-axis analogues of the didicosm
    orbit lattices plus the face-centered one; all three are validated against
    the exact Voronoi-cell oracle (see the orbit-lattice tests).
    """
    if desc.tag != "-a2":
        raise InvalidParameters("these orbit bounds concern -a2")
    p = {"A": desc.params["A"], "B": desc.params["B"], "C": desc.params["D"]}
    alpha, beta, _, delta = _c22_orbit_bounds(p)
    return alpha, beta, delta


def minus_a1_forms(A, B, C, D):
    """The five expressions I..V for the first orbit lattice of -a1."""
    A, B, C, D = map(frac, (A, B, C, D))
    omega = A * B + B * C + C * A
    I = A + B + 4 * D + (A + B) * (D - C) ** 2 / omega
    II = A + B + 4 * C + (A + B + 4 * C) * (D - C) ** 2 / omega
    III = 2 * B + 2 * C + D + (B + C) ** 2 / D + (B + C) * (B - A) ** 2 / omega
    IV = 2 * A + 2 * C + D + (A + C) ** 2 / D + (A + C) * (B - A) ** 2 / omega
    V = A + B + 2 * C + C * C / D
    return I, II, III, IV, V


def minus_a1_orbit_4r2(A, B, C, D):
    """4R^2 of the first -a1 orbit lattice: max(min(I,II,III,IV), min(I,V))."""
    I, II, III, IV, V = minus_a1_forms(A, B, C, D)
    return max(min(I, II, III, IV), min(I, V))


def minus_a1_orbit_4r2_minform(A, B, C, D):
    """The equivalent min-of-four form: min(I, max(II,V), max(III,V), max(IV,V))."""
    I, II, III, IV, V = minus_a1_forms(A, B, C, D)
    return min(I, max(II, V), max(III, V), max(IV, V))


def diameter_sq(desc: PlatycosmDescriptor, with_witness=False):
    """Squared diameter: exact closed form, or the orbit-lattice lower bound."""
    p = desc.params
    tag = desc.tag
    kind = "exact"
    if tag == "c1":
        from .cosmos import naming_diagram

        val, wit = covering_radius_sq(naming_diagram(desc)), "covering radius of T"
    elif tag in ("c2", "+a1"):
        A, B, C = p["A"], p["B"], p["C"]
        omega = A * B + B * C + C * A
        val = (B + C) * (C + A) * (A + B) / (4 * omega) + p["D"] / 4
        wit = "base covering radius + D/4"
    elif tag in ("c3", "c6"):
        val, wit = Fraction(2, 3) * p["A"] + p["D"] / 4, "2A/3 + D/4"
    elif tag == "c4":
        val, wit = p["A"] / 2 + p["D"] / 4, "A/2 + D/4"
    elif tag == "+a2":
        val, wit = (p["A"] + p["B"] + p["D"]) / 4, "(A+B+D)/4"
    elif tag == "c22":
        alpha, beta, gamma, _ = _c22_orbit_bounds(p)
        val, wit = max(alpha, beta, gamma) / 4, "max(alpha,beta,gamma)/4"
        kind = "orbit_lattice_bound"
    elif tag == "-a2":
        alpha, beta, _ = minus_a2_orbit_bounds(desc)
        val, wit = max(alpha, beta) / 4, "max(alpha,beta)/4"
        kind = "orbit_lattice_bound"
    elif tag == "-a1":
        A, B, C, D = p["A"], p["B"], p["C"], p["D"]
        val = max(minus_a1_orbit_4r2(A, B, C, D), minus_a1_orbit_4r2(A, C, B, D)) / 4
        wit = "orbit-lattice R0^2"
        kind = "orbit_lattice_bound"
    else:
        raise InvalidParameters(tag)
    return (val, kind, wit) if with_witness else val


def metric_report(desc: PlatycosmDescriptor) -> MetricReport:
    sys_sq, sys_wit = systole_sq(desc, with_witness=True)
    diam, kind, wit = diameter_sq(desc, with_witness=True)
    return MetricReport(
        systole_sq=sys_sq,
        injectivity_radius_sq=sys_sq / 4,
        diameter_sq=diam,
        diameter_kind=kind,
        systole_witness=sys_wit,
        diameter_witness=wit,
    )


# ----------------------------------------------------------------------
# Orbit lattices (validation data for the bound formulas).


def orbit_lattice_of_point(sg: SpaceGroup, point):
    """Gram matrix of the orbit lattice through a point, or None.

    The orbit is point + (union of cosets d_rep + T); it is a lattice iff the
    finitely many coset offsets d_rep form a subgroup of R^3/T.
    """
    from .linalg import lattice_basis_from_generators, lattice_contains

    point = tuple(frac(x) for x in point)
    reps = point_group(sg)
    t_basis = translation_subgroup(sg)
    offsets = [vec_sub(rep(point), point) for rep in reps.values()]

    def in_offsets_mod_t(v):
        return any(lattice_contains(t_basis, vec_sub(v, d)) for d in offsets)

    for i, di in enumerate(offsets):
        if not in_offsets_mod_t(tuple(-x for x in di)):
            return None
        for dj in offsets[i:]:
            if not in_offsets_mod_t(tuple(a + b for a, b in zip(di, dj))):
                return None
    lat = lattice_basis_from_generators(list(offsets) + list(t_basis), dim=3)
    assert len(lat) == 3
    gram = sg.frame
    return mat([[gram_inner(gram, u, v) for v in lat] for u in lat])


def orbit_lattice_covering_radii(desc, denominators=(2,)):
    """Covering radii (squared) of the distinct orbit-lattice shapes on a grid."""
    sg = standard_generators(desc)
    radii = []
    seen = set()
    pts = set()
    for den in denominators:
        for a in range(den):
            for b in range(den):
                for c in range(den):
                    pts.add((Fraction(a, den), Fraction(b, den), Fraction(c, den)))
    for pt in sorted(pts):
        g = orbit_lattice_of_point(sg, pt)
        if g is None:
            continue
        key = tuple(sorted(conorms_from_gram(g).values))
        if key in seen:
            continue
        seen.add(key)
        radii.append(covering_radius_oracle(g))
    return sorted(radii)


# ----------------------------------------------------------------------
# Sampled diameter oracle.


def diameter_oracle(desc: PlatycosmDescriptor, cfg: OracleConfig | None = None):
    """Interval [lower, upper] bracketing the squared diameter.

    Both points of a candidate pair run over an n^3 grid of the translation
    cell.  In grid units every coset map is q -> A q + b with A integral, so
    the quotient distance of a pair depends only on (kp - A kq) mod n, and a
    per-coset table of minima over a certified translate window makes the
    pairwise maximum exact.  Any point of the manifold is within half a
    grid-subcell diagonal of a sample, which gives the Lipschitz upper bound.
    """
    cfg = cfg or OracleConfig()
    sg = standard_generators(desc)
    gram = sg.frame
    t_basis = translation_subgroup(sg)
    G_T = mat([[gram_inner(gram, u, v) for v in t_basis] for u in t_basis])
    sys_len_lo = sqrt_lower(systole_sq(desc))
    # common subdivision: cell edge / n <= systole length / divisor on every axis
    n = 1
    for i in range(3):
        edge = sqrt_upper(G_T[i][i])
        n = max(n, ceil(edge * cfg.grid_divisor / sys_len_lo))
    if n**3 > cfg.max_grid_points:
        raise BoundNotCertified(f"grid {n}^3 too large for the configured cap")
    covrad = covering_radius_sq(conorms_from_gram(G_T))
    Ginv_T = mat_inv(G_T)

    # coset maps in T-coordinates: q -> A q + b with A integral
    Bmat = mat_t(t_basis)  # columns are the basis vectors
    Binv = mat_inv(Bmat)
    maps = []
    for rep in point_group(sg).values():
        A = mat_mul_int(Binv, mat_mul_int(mat(rep.linear), Bmat))
        b = mat_vec(Binv, rep.translation)
        maps.append((A, b))

    den = lcm(n, *(x.denominator for _, b in maps for x in b))
    gden = lcm(*(x.denominator for row in G_T for x in row))
    GT_int = np.array([[int(x * gden) for x in row] for row in G_T], dtype=np.int64)
    step = den // n

    # certified translate window for y/den in [0, 1)^3
    slack = [sqrt_upper(covrad * Ginv_T[i][i]) for i in range(3)]
    lam_range = [
        range(-int(ceil(s)), int(ceil(1 + s)) + 1) for s in slack
    ]
    lams = [
        np.array([l0, l1, l2], dtype=np.int64) * den
        for l0 in lam_range[0]
        for l1 in lam_range[1]
        for l2 in lam_range[2]
    ]

    ks = np.arange(n, dtype=np.int64)
    kx, ky, kz = np.meshgrid(ks, ks, ks, indexing="ij")
    K = np.stack([kx.ravel(), ky.ravel(), kz.ravel()], axis=1)  # (N,3) grid coords
    N = K.shape[0]

    # largest value fed to the quadratic form, for the exactness guard
    max_coord = den * (2 + max(int(ceil(s)) for s in slack))
    guard = 9 * int(np.abs(GT_int).max()) * max_coord * max_coord
    if guard > 2**61:
        raise BoundNotCertified("integer range too close to overflow for int64")

    tables = []
    int_A = []
    for A, b in maps:
        # y(m) = m*step - b*den  (mod den), for m in [0, n)^3
        boff = np.array([int(x * den) for x in b], dtype=np.int64)
        Y = np.mod(K * step - boff, den)  # (N,3)
        best = None
        for lam in lams:
            D = Y - lam
            vals = np.einsum("ij,jk,ik->i", D, GT_int, D)
            best = vals if best is None else np.minimum(best, vals)
        tables.append(best)
        int_A.append(np.array([[int(x) for x in row] for row in A], dtype=np.int64))

    # pairwise quotient distances: index (kp - A kq) mod n into each table
    best_pair = np.full((N, N), np.iinfo(np.int64).max, dtype=np.int64)
    chunk = max(1, (1 << 21) // N)
    for tab, Ai in zip(tables, int_A):
        KA = K @ Ai.T
        for start in range(0, N, chunk):
            kq = KA[start : start + chunk]  # (c,3)
            ix = np.mod(K[:, None, :] - kq[None, :, :], n)  # (N,c,3)
            lin = (ix[..., 0] * n + ix[..., 1]) * n + ix[..., 2]
            vals = tab[lin.reshape(-1)].reshape(N, kq.shape[0])
            view = best_pair[:, start : start + kq.shape[0]]
            np.minimum(view, vals, out=view)
    lower = Fraction(int(best_pair.max()), gden * den * den)
    # Lipschitz correction: half the longest grid-subcell diagonal, per point
    half_diag = Fraction(0)
    for signs in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)):
        v = tuple(Fraction(s, n) for s in signs)
        half_diag = max(half_diag, sqrt_upper(gram_norm(G_T, v)) / 2)
    upper_len = sqrt_upper(lower) + 2 * half_diag
    return lower, upper_len * upper_len


def mat_mul_int(A, B):
    """Product of rational matrices that must come out integral."""
    from .linalg import mat_mul

    M = mat_mul(A, B)
    assert all(x.denominator == 1 for row in M for x in row)
    return M


def oracle_matches(desc, cfg=None) -> bool:
    """Whether the closed-form metric data is consistent with both oracles."""
    if systole_oracle(desc) != systole_sq(desc):
        return False
    lower, upper = diameter_oracle(desc, cfg)
    d = diameter_sq(desc)
    if desc.tag in BOUND_TYPES:
        return lower <= d
    return lower <= d <= upper
