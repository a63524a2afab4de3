"""Exact affine-isometry engine for the platycosm space groups.

Groups live in the lattice-adapted frames of :mod:`platycosm.cosmos`, so
linear parts are integer matrices, translations are rational vectors, and
every check (isometry, fixed points, relations, recognition) is exact.
Frames are declared positively oriented; that convention is what makes the
dextral/sinistral flag of the metachiral helicosms well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .conorms import (
    ConormDiagram2,
    ConormDiagram3,
    conorms_from_gram,
    reduce3,
)
from .cosmos import (
    PARAM_NAMES,
    PlatycosmDescriptor,
    TYPES,
    canonicalize,
    naming_gram,
    translation_basis,
    volume_sq,
)
from .errors import (
    DoesNotNormalize,
    FrameMismatch,
    HasFixedPoint,
    InvalidParameters,
    NotAHomomorphism,
    NotCocompact,
    Unrecognized,
)
from .lattices import reduce2_superbase
from .linalg import (
    frac,
    gram_inner,
    gram_norm,
    identity,
    integer_kernel,
    kernel_basis,
    lattice_basis_from_generators,
    lattice_contains,
    mat,
    mat_det,
    mat_inv,
    mat_add,
    mat_mul,
    mat_sub,
    mat_t,
    mat_vec,
    matrix_rank,
    smith_invariants,
    solve,
    vec_add,
    vec_neg,
    vec_sub,
    zeros,
)

# ----------------------------------------------------------------------
# Affine isometries.


@dataclass(frozen=True)
class AffineIsometry:
    """x -> linear @ x + translation, in a fixed Gram frame."""

    linear: tuple
    translation: tuple
    frame: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "linear", mat(self.linear))
        object.__setattr__(self, "translation", tuple(frac(t) for t in self.translation))

    def __call__(self, point):
        return vec_add(mat_vec(self.linear, point), self.translation)

    def is_identity(self):
        return self.linear == identity(len(self.linear)) and not any(self.translation)


def _check_frames(a: AffineIsometry, b: AffineIsometry):
    if a.frame is not None and b.frame is not None and a.frame != b.frame:
        raise FrameMismatch("isometries live in different Gram frames")
    return a.frame or b.frame


def compose(a: AffineIsometry, b: AffineIsometry) -> AffineIsometry:
    """a after b."""
    fr = _check_frames(a, b)
    return AffineIsometry(
        mat_mul(a.linear, b.linear),
        vec_add(mat_vec(a.linear, b.translation), a.translation),
        fr,
    )


def inverse(a: AffineIsometry) -> AffineIsometry:
    li = mat_inv(a.linear)
    return AffineIsometry(li, vec_neg(mat_vec(li, a.translation)), a.frame)


def conjugate(g: AffineIsometry, by: AffineIsometry) -> AffineIsometry:
    """g^by = by . g . by^-1."""
    return compose(compose(by, g), inverse(by))


def commutator(a: AffineIsometry, b: AffineIsometry) -> AffineIsometry:
    """[a, b] = a^-1 b^-1 a b."""
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def affine_identity(frame=None, n=3):
    return AffineIsometry(identity(n), zeros(n), frame)


def same_map(a: AffineIsometry, b: AffineIsometry) -> bool:
    return a.linear == b.linear and a.translation == b.translation


def is_isometry(g: AffineIsometry, gram) -> bool:
    L = g.linear
    return mat_mul(mat_t(L), mat_mul(mat(gram), L)) == mat(gram)


def linear_order(L, cap=12):
    M = L
    for k in range(1, cap + 1):
        if M == identity(len(L)):
            return k
        M = mat_mul(M, L)
    return None


@dataclass(frozen=True)
class SpaceGroup:
    """Finitely many affine-isometry generators over a Gram frame."""

    frame: tuple
    generators: tuple
    names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "frame", mat(self.frame))
        gens = tuple(
            AffineIsometry(g.linear, g.translation, self.frame) for g in self.generators
        )
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if not is_isometry(g, self.frame):
                raise InvalidParameters("generator does not preserve the frame Gram matrix")
            if any(x.denominator != 1 for row in g.linear for x in row):
                raise InvalidParameters("generator linear parts must be integral in the frame")
            if linear_order(g.linear) is None:
                raise InvalidParameters("generator linear part has order > 12")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"g{i}" for i in range(len(gens))))

    def gen(self, name) -> AffineIsometry:
        return self.generators[self.names.index(name)]


# ----------------------------------------------------------------------
# Presentations (generators and relator words).

Word = tuple  # of (name, exponent)


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple


def _w(*pairs) -> Word:
    return tuple(pairs)


PRESENTATIONS = {
    "c1": Presentation(
        ("X", "Y", "Z"),
        (
            _w(("X", -1), ("Y", -1), ("X", 1), ("Y", 1)),
            _w(("Y", -1), ("Z", -1), ("Y", 1), ("Z", 1)),
            _w(("Z", -1), ("X", -1), ("Z", 1), ("X", 1)),
        ),
    ),
    # Z conjugates the base translations: relators say Z X Z^-1 = image.
    "c2": Presentation(
        ("X", "Y", "Z"),
        (
            _w(("X", -1), ("Y", -1), ("X", 1), ("Y", 1)),
            _w(("Z", 1), ("X", 1), ("Z", -1), ("X", 1)),
            _w(("Z", 1), ("Y", 1), ("Z", -1), ("Y", 1)),
        ),
    ),
    "c3": Presentation(
        ("X", "Y", "Z"),
        (
            _w(("X", -1), ("Y", -1), ("X", 1), ("Y", 1)),
            _w(("Z", 1), ("X", 1), ("Z", -1), ("Y", -1)),
            _w(("Z", 1), ("Y", 1), ("Z", -1), ("Y", 1), ("X", 1)),
        ),
    ),
    "c4": Presentation(
        ("X", "Y", "Z"),
        (
            _w(("X", -1), ("Y", -1), ("X", 1), ("Y", 1)),
            _w(("Z", 1), ("X", 1), ("Z", -1), ("Y", -1)),
            _w(("Z", 1), ("Y", 1), ("Z", -1), ("X", 1)),
        ),
    ),
    "c6": Presentation(
        ("X", "Y", "Z"),
        (
            _w(("X", -1), ("Y", -1), ("X", 1), ("Y", 1)),
            _w(("Z", 1), ("X", 1), ("Z", -1), ("Y", -1), ("X", -1)),
            _w(("Z", 1), ("X", 1), ("Y", 1), ("Z", -1), ("Y", -1)),
        ),
    ),
    "c22": Presentation(
        ("X", "Y"),
        (
            _w(("X", -1), ("Y", 2), ("X", 1), ("Y", 2)),
            _w(("Y", -1), ("X", 2), ("Y", 1), ("X", 2)),
        ),
    ),
    "+a1": Presentation(
        ("W", "X", "Z"),
        (
            _w(("X", 1), ("Z", 1), ("X", -1), ("Z", 1)),
            _w(("W", 1), ("Z", 1), ("W", -1), ("Z", 1)),
            _w(("X", -1), ("W", -1), ("X", 1), ("W", 1)),
        ),
    ),
    "-a1": Presentation(
        ("W", "X", "Z"),
        (
            _w(("X", 1), ("Z", 1), ("X", -1), ("Z", 1)),
            _w(("W", 1), ("Z", 1), ("W", -1), ("Z", 1)),
            _w(("X", -1), ("W", -1), ("X", 1), ("W", 1), ("Z", -1)),
        ),
    ),
    "+a2": Presentation(
        ("W", "X", "Z"),
        (
            _w(("W", 1), ("Z", 1), ("W", -1), ("Z", 1)),
            _w(("X", 1), ("Z", 1), ("X", -1), ("Z", 1)),
            _w(("W", 1), ("X", 1), ("W", -1), ("X", 1)),
        ),
    ),
    "-a2": Presentation(
        ("W", "X", "Z"),
        (
            _w(("W", 1), ("Z", 1), ("W", -1), ("Z", 1)),
            _w(("X", 1), ("Z", 1), ("X", -1), ("Z", 1)),
            _w(("W", 1), ("X", 1), ("W", -1), ("Z", -1), ("X", 1)),
        ),
    ),
}

#: Derived generator words (evaluated, not free): c22's third screw.
DERIVED_GENERATORS = {"c22": {"Z": _w(("X", -1), ("Y", -1))}}


def evaluate_word(sg_or_map, word: Word) -> AffineIsometry:
    if isinstance(sg_or_map, SpaceGroup):
        lookup = {n: g for n, g in zip(sg_or_map.names, sg_or_map.generators)}
        frame = sg_or_map.frame
    else:
        lookup = sg_or_map
        frame = next(iter(lookup.values())).frame
    out = affine_identity(frame, n=len(next(iter(lookup.values())).linear))
    for name, exp in word:
        g = lookup[name]
        step = g if exp > 0 else inverse(g)
        for _ in range(abs(exp)):
            out = compose(out, step)
    return out


# ----------------------------------------------------------------------
# Standard generators per type.

_SIGMA_BASAL = ((1, 0, 0), (0, 1, 0), (0, 0, -1))
_ROT = {
    2: ((-1, 0, 0), (0, -1, 0), (0, 0, 1)),
    3: ((0, -1, 0), (1, -1, 0), (0, 0, 1)),
    4: ((0, -1, 0), (1, 0, 0), (0, 0, 1)),
    6: ((1, -1, 0), (1, 0, 0), (0, 0, 1)),
}


def _rot_for(desc, order):
    L = _ROT[order]
    if desc.chirality == "sinistral":
        L = tuple(tuple(int(x) for x in row) for row in mat_inv(mat(L)))
    return L


def standard_generators(desc: PlatycosmDescriptor) -> SpaceGroup:
    """The defining screw/glide generators of each type, in its naming frame."""
    g = naming_gram(desc)
    tag = desc.tag
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    I3 = identity(3)
    if tag == "c1":
        gens = [AffineIsometry(I3, e) for e in (e1, e2, e3)]
        return SpaceGroup(g, tuple(gens), ("X", "Y", "Z"))
    if tag in ("c2", "c3", "c4", "c6"):
        order = int(tag[1])
        # the mirror swap X <-> Y keeps the type presentation valid for the
        # sinistral rotation sense
        ex, ey = (e2, e1) if desc.chirality == "sinistral" else (e1, e2)
        gens = (
            AffineIsometry(I3, ex),
            AffineIsometry(I3, ey),
            AffineIsometry(_rot_for(desc, order), e3),
        )
        return SpaceGroup(g, gens, ("X", "Y", "Z"))
    if tag == "c22":
        X = AffineIsometry(((1, 0, 0), (0, -1, 0), (0, 0, -1)), e1)
        Y = AffineIsometry(((-1, 0, 0), (0, 1, 0), (0, 0, -1)), (0, 1, 1))
        return SpaceGroup(g, (X, Y), ("X", "Y"))
    if tag == "+a1":
        W = AffineIsometry(_SIGMA_BASAL, (-1, -1, 0))
        X = AffineIsometry(_SIGMA_BASAL, e1)
        Z = AffineIsometry(I3, e3)
        return SpaceGroup(g, (W, X, Z), ("W", "X", "Z"))
    if tag == "-a1":
        W = AffineIsometry(_SIGMA_BASAL, (-1, -1, -1))
        X = AffineIsometry(_SIGMA_BASAL, e1)
        Z = AffineIsometry(I3, (0, 0, 2))
        return SpaceGroup(g, (W, X, Z), ("W", "X", "Z"))
    if tag == "+a2":
        W = AffineIsometry(((-1, 0, 0), (0, 1, 0), (0, 0, -1)), e2)
        X = AffineIsometry(_SIGMA_BASAL, e1)
        Z = AffineIsometry(I3, e3)
        return SpaceGroup(g, (W, X, Z), ("W", "X", "Z"))
    if tag == "-a2":
        W = AffineIsometry(((-1, 0, 0), (0, 1, 0), (0, 0, -1)), e2)
        X = AffineIsometry(_SIGMA_BASAL, (1, 0, 1))
        Z = AffineIsometry(I3, (0, 0, 2))
        return SpaceGroup(g, (W, X, Z), ("W", "X", "Z"))
    raise InvalidParameters(tag)


def verify_relations(desc: PlatycosmDescriptor) -> bool:
    """Every Table-style relator evaluates to the identity on the standard generators."""
    sg = standard_generators(desc)
    pres = PRESENTATIONS[desc.tag]
    return all(evaluate_word(sg, rel).is_identity() for rel in pres.relators)


# ----------------------------------------------------------------------
# Point group, translation subgroup, fixed points.


@lru_cache(maxsize=None)
def point_group(sg: SpaceGroup):
    """Map linear part -> a representative element, by BFS over generator words."""
    reps = {identity(3): affine_identity(sg.frame)}
    frontier = [affine_identity(sg.frame)]
    steps = list(sg.generators) + [inverse(g) for g in sg.generators]
    while frontier:
        nxt = []
        for h in frontier:
            for s in steps:
                e = compose(h, s)
                if e.linear not in reps:
                    reps[e.linear] = e
                    nxt.append(e)
        frontier = nxt
        if len(reps) > 48:
            raise Unrecognized("point group does not close within crystallographic bounds")
    return reps


@lru_cache(maxsize=None)
def translation_subgroup(sg: SpaceGroup):
    """Basis of the lattice of pure translations (Reidemeister-Schreier kernel).

    The Schreier generators t_p g t_(p.Lg)^-1 over all point-group cosets p and
    generators g generate the kernel of the point-group quotient exactly, so no
    word-length bound is involved; completeness shows up as |Gamma : T| equal
    to the point-group order.
    """
    reps = point_group(sg)
    vecs = []
    for rep in reps.values():
        for g in sg.generators:
            w = compose(rep, g)
            other = reps[w.linear]
            t = compose(w, inverse(other))
            assert t.linear == identity(3)
            if any(t.translation):
                vecs.append(t.translation)
    basis = lattice_basis_from_generators(vecs, dim=3)
    if len(basis) < 3:
        raise NotCocompact("translation lattice has rank < 3")
    return tuple(basis)


def fixed_space(L):
    """Basis of ker(L - I) over Q."""
    return kernel_basis(mat_sub(mat(L), identity(len(L))))


def _orth_projector(gram, basis):
    """Gram-orthogonal projector onto the span of the basis vectors."""
    if not basis:
        n = len(gram)
        return tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    B = mat_t(basis)  # columns
    BtGB = mat([[gram_inner(gram, u, v) for v in basis] for u in basis])
    inv = mat_inv(BtGB)
    BtG = mat_mul(mat_t(B), mat(gram))
    return mat_mul(B, mat_mul(inv, BtG))


def has_fixed_point(g: AffineIsometry, t_basis) -> bool:
    """Whether some lattice translate of g fixes a point: t in Im(L - I) + T, exactly."""
    LmI = mat_sub(mat(g.linear), identity(3))
    image = [v for v in mat_t(LmI) if any(v)]
    # reduce modulo the image subspace, then test lattice membership of the rest
    gens = list(t_basis)
    span = [list(v) for v in image]
    # quotient coordinates: rows of a basis of the annihilator of the image
    ann = kernel_basis(mat(span)) if span else identity(3)
    if not ann:
        return True  # image is everything
    proj = mat(ann)  # each row is a functional vanishing on Im(L - I)
    target = mat_vec(proj, g.translation)
    proj_lattice = [mat_vec(proj, v) for v in gens]
    basis = lattice_basis_from_generators(proj_lattice, dim=len(ann))
    if not basis:
        return not any(target)
    sol = solve(mat_t(basis), target)
    if sol is None:
        return False
    part, null = sol
    assert not null
    return all(x.denominator == 1 for x in part)


def fixed_point_free(sg: SpaceGroup) -> bool:
    t = translation_subgroup(sg)
    for L, rep in point_group(sg).items():
        if L == identity(3):
            continue
        if has_fixed_point(rep, t):
            return False
    return True


# ----------------------------------------------------------------------
# Homology and sign homomorphisms.


def homology(desc: PlatycosmDescriptor):
    """Invariant factors of H1: (torsion list, free rank)."""
    pres = PRESENTATIONS[desc.tag]
    n = len(pres.generators)
    rows = []
    for rel in pres.relators:
        row = [0] * n
        for name, exp in rel:
            row[pres.generators.index(name)] += exp
        rows.append(row)
    divisors = smith_invariants(rows)
    torsion = [d for d in divisors if d > 1]
    free = n - len(divisors)
    return torsion, free


def homology_string(desc) -> str:
    torsion, free = homology(desc)
    parts = [str(d) for d in torsion] + (["inf"] * free)
    return ".".join(parts) if parts else "0"


def sign_homomorphisms(desc: PlatycosmDescriptor):
    """All surjective homomorphisms from the fundamental group onto {+1, -1}."""
    pres = PRESENTATIONS[desc.tag]
    n = len(pres.generators)
    out = []
    for bits in range(1, 1 << n):
        h = {g: (-1 if bits >> i & 1 else 1) for i, g in enumerate(pres.generators)}
        ok = True
        for rel in pres.relators:
            s = 1
            for name, exp in rel:
                s *= h[name] ** abs(exp)
            if s != 1:
                ok = False
                break
        if ok:
            out.append(h)
    return out


def kernel_subgroup(desc: PlatycosmDescriptor, h: dict) -> SpaceGroup:
    """Index-2 subgroup: positives, products of two negatives, squares of negatives."""
    pres = PRESENTATIONS[desc.tag]
    if set(h) != set(pres.generators) or not all(v in (1, -1) for v in h.values()):
        raise NotAHomomorphism("signs must be +-1 per presentation generator")
    if all(v == 1 for v in h.values()):
        raise NotAHomomorphism("the trivial assignment does not define a double cover")
    for rel in pres.relators:
        s = 1
        for name, exp in rel:
            s *= h[name] ** abs(exp)
        if s != 1:
            raise NotAHomomorphism("sign assignment violates a relator")
    sg = standard_generators(desc)
    pos = [sg.gen(n) for n in pres.generators if h[n] == 1]
    neg = [sg.gen(n) for n in pres.generators if h[n] == -1]
    # Reidemeister-Schreier generators for the transversal {1, n}:
    # positives, their n-conjugates, and the mixed products with n
    n0 = neg[0]
    gens = list(pos)
    gens += [conjugate(g, n0) for g in pos]
    gens += [compose(n0, g) for g in neg]
    gens += [compose(g, inverse(n0)) for g in neg]
    return SpaceGroup(sg.frame, tuple(gens))


# ----------------------------------------------------------------------
# Recognition.


def _point_group_structure(reps):
    linears = list(reps)
    orders = sorted(linear_order(L) for L in linears)
    orientable = all(mat_det(mat(L)) == 1 for L in linears)
    return orders, orientable


def _vector_lattice_in_line(basis3, direction_basis):
    """Generator of (lattice spanned by basis3) intersected with a rational line."""
    inter = _lattice_subspace_intersection(basis3, direction_basis)
    assert len(inter) == 1
    return inter[0]


def _lattice_subspace_intersection(basis, subspace):
    """Basis of the sublattice of span_Z(basis) lying in span_Q(subspace)."""
    if not subspace:
        return []
    # constraints: annihilator functionals of the subspace
    ann = kernel_basis(mat([list(v) for v in subspace]))
    if not ann:
        return list(basis)
    rows = []
    den = 1
    for b in basis:
        row = [sum(a * x for a, x in zip(f, b)) for f in ann]
        rows.append(row)
        for x in row:
            den = lcm(den, x.denominator)
    int_rows = [[int(x * den) for x in row] for row in rows]
    coeffs = integer_kernel(int_rows)
    vecs = []
    for c in coeffs:
        v = zeros(len(basis[0]))
        for ci, b in zip(c, basis):
            v = vec_add(v, tuple(frac(ci) * x for x in b))
        vecs.append(v)
    return lattice_basis_from_generators(vecs, dim=len(basis[0]))


def _axis_vectors(sg, rep, t_basis, gram):
    """Screw/glide vector data of a coset: (offset, lattice basis) inside fix(L)."""
    fix = fixed_space(rep.linear)
    P = _orth_projector(gram, fix)
    offset = mat_vec(P, rep.translation)
    lat = lattice_basis_from_generators([mat_vec(P, b) for b in t_basis], dim=3)
    return offset, lat


def _minimal_coset_norm(gram, offset, lat_basis):
    """Minimal |offset + lambda|^2 over the (possibly lower-rank) lattice."""
    if not lat_basis:
        return gram_norm(gram, offset), offset
    G2 = mat([[gram_inner(gram, u, v) for v in lat_basis] for u in lat_basis])
    # target coefficients: solve offset = sum c_i b_i + orthogonal part (none here)
    sol = solve(mat_t(lat_basis), offset)
    assert sol is not None, "coset offset must lie in the projected-lattice span"
    target = tuple(-x for x in sol[0])
    from .lattices import closest_vectors

    nrm, ks = closest_vectors(G2, target)
    v = offset
    for ki, b in zip(ks[0], lat_basis):
        v = vec_add(v, tuple(frac(ki) * x for x in b))
    assert gram_norm(gram, v) == nrm
    return nrm, v


def naming_lattice_of(sg: SpaceGroup):
    """Basis of the lattice generated by translation, screw and glide vectors."""
    t_basis = translation_subgroup(sg)
    gens = list(t_basis)
    for L, rep in point_group(sg).items():
        if L == identity(3):
            continue
        offset, lat = _axis_vectors(sg, rep, t_basis, sg.frame)
        gens.append(offset)
        gens.extend(lat)
    return tuple(lattice_basis_from_generators(gens, dim=3))


def _rotation_sense(L, screw_vec):
    """Sign of det[v, Lv, s] for v off the axis; the frame is positively oriented."""
    for v in ((Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))):
        d = mat_det(mat_t((v, mat_vec(mat(L), v), screw_vec)))
        if d != 0:
            return 1 if d > 0 else -1
    raise Unrecognized("degenerate rotation data")


def _conorms2_of(gram, basis2):
    G2 = mat([[gram_inner(gram, u, v) for v in basis2] for u in basis2])
    _, cs = reduce2_superbase(G2)
    return tuple(sorted(cs, reverse=True))


def recognize(sg: SpaceGroup) -> PlatycosmDescriptor:
    """Classify a fixed-point-free cocompact group back to its descriptor.

    Pipeline: point group from linear-part closure; translation lattice by
    Schreier generators; fixed-point check per nontrivial coset; type from
    (point-group structure, orientability, |N/T|); naming lattice from the
    minimal screw/glide vectors; parameters per the type's schema.
    """
    reps = point_group(sg)
    t_basis = translation_subgroup(sg)
    gram = sg.frame
    for L, rep in reps.items():
        if L != identity(3) and has_fixed_point(rep, t_basis):
            raise HasFixedPoint("a nonidentity coset fixes a point")
    orders, orientable = _point_group_structure(reps)
    n_basis = naming_lattice_of(sg)
    from .linalg import lattice_index

    nt_index = lattice_index(n_basis, t_basis)

    def lat_gram(basis):
        return mat([[gram_inner(gram, u, v) for v in basis] for u in basis])

    if len(reps) == 1:
        diag = conorms_from_gram(lat_gram(t_basis))
        return canonicalize(_c1_descriptor(diag))

    if orientable and sorted(orders) == [1, 2, 2, 2]:
        # didicosm: three half-turn screws
        params = []
        for L, rep in reps.items():
            if L == identity(3):
                continue
            offset, lat = _axis_vectors(sg, rep, t_basis, gram)
            nrm, _ = _minimal_coset_norm(gram, offset, lat)
            params.append(nrm)
        a, b, c = sorted(params, reverse=True)
        return PlatycosmDescriptor("c22", {"A": a, "B": b, "C": c})

    if orientable:
        order = max(orders)
        rot = next(
            rep for L, rep in reps.items() if linear_order(L) == order and L != identity(3)
        )
        fix = fixed_space(rot.linear)
        if len(fix) != 1:
            raise Unrecognized("cyclic point group without a rotation axis")
        offset, lat = _axis_vectors(sg, rot, t_basis, gram)
        d_norm, screw = _minimal_coset_norm(gram, offset, lat)
        base_basis = _lattice_subspace_intersection(
            t_basis, kernel_basis(mat([list(mat_vec(mat(gram), fix[0]))]))
        )
        if len(base_basis) != 2:
            raise NotCocompact("no rank-2 base lattice under the screw")
        cs = _conorms2_of(gram, base_basis)
        if order == 2:
            return PlatycosmDescriptor(
                "c2", {"D": d_norm, "A": cs[0], "B": cs[1], "C": cs[2]}
            )
        chir = "dextral" if _rotation_sense(rot.linear, screw) > 0 else "sinistral"
        if order in (3, 6):
            if not (cs[0] == cs[1] == cs[2]):
                raise Unrecognized("hexagonal base expected")
            return PlatycosmDescriptor(f"c{order}", {"D": d_norm, "A": cs[0]}, chir)
        if order == 4:
            if not (cs[0] == cs[1] and cs[2] == 0):
                raise Unrecognized("square base expected")
            return PlatycosmDescriptor("c4", {"D": d_norm, "A": cs[0]}, chir)
        raise Unrecognized(f"unexpected rotation order {order}")

    if len(reps) == 2:
        # amphicosms: point group generated by one reflection
        sigma = next(rep for L, rep in reps.items() if L != identity(3))
        mirror = fixed_space(sigma.linear)
        if len(mirror) != 2:
            raise Unrecognized("amphicosm holonomy must be a reflection")
        tag = "+a1" if nt_index == 2 else "-a1"
        if nt_index not in (2, 4):
            raise Unrecognized(f"|N/T| = {nt_index} is impossible for an amphicosm")
        # vertical direction: the (-1)-eigenvector of sigma
        vert = _minus_one_eigenspace(sigma.linear)
        z = _vector_lattice_in_line(n_basis, vert)
        d_norm = gram_norm(gram, z)
        base = _lattice_subspace_intersection(n_basis, mirror)
        a, b, c = _amphicosm_base_params(sg, sigma, t_basis, gram, base)
        return canonicalize(
            PlatycosmDescriptor(tag, {"D": d_norm, "A": a, "B": b, "C": c})
        )

    # amphidicosms: point group of order 4 with two reflections and a half turn
    if len(reps) != 4:
        raise Unrecognized("unexpected point group")
    rot = next(
        (rep for L, rep in reps.items() if L != identity(3) and mat_det(mat(L)) == 1), None
    )
    if rot is None:
        raise Unrecognized("amphidicosm holonomy needs a half turn")
    tag = "+a2" if nt_index == 4 else "-a2"
    if nt_index not in (4, 8):
        raise Unrecognized(f"|N/T| = {nt_index} is impossible for an amphidicosm")
    axis = fixed_space(rot.linear)
    if len(axis) != 1:
        raise Unrecognized("half turn without an axis")
    y = _vector_lattice_in_line(n_basis, axis)
    offset, lat = _axis_vectors(sg, rot, t_basis, gram)
    b_norm, _ = _minimal_coset_norm(gram, offset, lat)
    sigmas = [rep for L, rep in reps.items() if mat_det(mat(L)) == -1]
    perp_dirs = [_minus_one_eigenspace(s.linear) for s in sigmas]
    glide_sets = [_glide_vector_data(sg, s, t_basis, gram) for s in sigmas]
    a_norm = d_norm = None
    for dirs in perp_dirs:
        v = _vector_lattice_in_line(n_basis, dirs)
        is_glide = any(_in_affine_lattice(v, off, lat) for off, lat in glide_sets)
        nrm = gram_norm(gram, v)
        if is_glide:
            if a_norm is not None:
                raise Unrecognized("both perpendicular directions look like glides")
            a_norm = nrm
        else:
            if d_norm is not None:
                raise Unrecognized("no glide direction found")
            d_norm = nrm
    if a_norm is None or d_norm is None:
        raise Unrecognized("could not separate the glide and translation directions")
    return PlatycosmDescriptor(tag, {"D": d_norm, "A": a_norm, "B": b_norm})


def _minus_one_eigenspace(L):
    return kernel_basis(mat_add(mat(L), identity(len(L))))


def _glide_vector_data(sg, sigma, t_basis, gram):
    """(offset, lattice basis) of the in-mirror glide vectors of a reflection coset."""
    mirror = fixed_space(sigma.linear)
    P = _orth_projector(gram, mirror)
    offset = mat_vec(P, sigma.translation)
    lat = lattice_basis_from_generators([mat_vec(P, b) for b in t_basis], dim=3)
    return offset, lat


def _in_affine_lattice(v, offset, lat_basis):
    w = vec_sub(v, offset)
    if not lat_basis:
        return not any(w)
    sol = solve(mat_t(lat_basis), w)
    if sol is None:
        return False
    part, null = sol
    return not null and all(x.denominator == 1 for x in part)


def _amphicosm_base_params(sg, sigma, t_basis, gram, base_basis):
    """(A, B, C) of an amphicosm: A pairs the two glide classes mod 2*base."""
    off, lat = _glide_vector_data(sg, sigma, t_basis, gram)
    # coordinates in the base lattice
    def coords(v):
        sol = solve(mat_t(base_basis), v)
        assert sol is not None and not sol[1]
        return sol[0]

    glide_off = coords(off)
    assert all(x.denominator == 1 for x in glide_off)
    H = set()
    lat_coords = [coords(b) for b in lat]
    for u0 in range(2):
        for u1 in range(2):
            v = (u0 * lat_coords[0][0] + u1 * lat_coords[1][0],
                 u0 * lat_coords[0][1] + u1 * lat_coords[1][1])
            H.add((int(v[0]) % 2, int(v[1]) % 2))
    glide_classes = {((int(glide_off[0]) + h0) % 2, (int(glide_off[1]) + h1) % 2) for h0, h1 in H}
    translation_classes = {h for h in H if h != (0, 0)}
    if len(glide_classes) != 2 or len(translation_classes) != 1:
        raise Unrecognized("amphicosm parity classes are malformed")
    G2 = mat([[gram_inner(gram, u, v) for v in base_basis] for u in base_basis])
    vs, cs = reduce2_superbase(G2)
    labels = []
    for v in vs:
        labels.append((v[0] % 2, v[1] % 2))
    trans = translation_classes.pop()
    try:
        yi = labels.index(trans)
    except ValueError:
        raise Unrecognized("no superbase vector in the translation class")
    a = cs[yi]
    b, c = sorted((cs[(yi + 1) % 3], cs[(yi + 2) % 3]), reverse=True)
    return a, b, c


def _c1_descriptor(diag: ConormDiagram3) -> PlatycosmDescriptor:
    from .conorms import canonical_form, canonical_g_placement

    d = ConormDiagram3(canonical_form(diag), reduced=True)
    pl = canonical_g_placement(d)
    a, b, c, dd, e, f = pl.letters(d)
    return PlatycosmDescriptor("c1", {"A": a, "B": b, "C": c, "D": dd, "E": e, "F": f})


# ----------------------------------------------------------------------
# Double covers.


def _h_key(desc, h):
    """Table-style sign pattern: (h(X), h(WX), h(Z)) for amphis, plain for the rest."""
    if desc.tag in ("+a1", "-a1", "+a2", "-a2"):
        return (h["X"], h["W"] * h["X"], h["Z"])
    return None


def bracket_colon(u, v, w):
    """[u]:v w  ->  (A, (B, C)) with A distinguished."""
    lo, hi = sorted((frac(v), frac(w)))
    return hi - lo, tuple(sorted((2 * lo, 2 * lo + 4 * frac(u)), reverse=True))


def bracket_plain(u, v, w):
    """[u] v w  ->  unordered triple of base conorms."""
    lo, hi = sorted((frac(v), frac(w)))
    return tuple(sorted((hi - lo, 2 * lo, 2 * lo + 4 * frac(u)), reverse=True))


def four_forms(A, B, C, D):
    """Conorm data (base triple, top triple) of the orientable cover of -a1."""
    A, B, C, D = map(frac, (A, B, C, D))
    if B >= C + D:
        return ((2 * C, 2 * C + 4 * A, B - C - D), (2 * D, 2 * D, 0))
    if C >= B + D:
        return ((2 * B, 2 * B + 4 * A, C - B - D), (2 * D, 2 * D, 0))
    if D >= B + C:
        return ((2 * C, 2 * C, D - B - C), (2 * B, 2 * B, 4 * A))
    return (
        (C + D - B, B + D - C, B + C - D),
        (C + D - B, B + D - C, B + C - D + 4 * A),
    )


def _c1_from_conorm_data(base, top):
    d = ConormDiagram3((top[0], top[1], top[2], base[2], base[1], base[0], 0))
    return _c1_descriptor(reduce3(d))


def cover_table_entry(desc: PlatycosmDescriptor, h: dict):
    """The closed-form double-cover descriptor for one sign homomorphism."""
    p = desc.params
    tag = desc.tag
    if tag == "c1":
        return None  # type c1; parameters are the kernel sublattice's conorms
    if tag == "c2":
        sx, sy, sz = h["X"], h["Y"], h["Z"]
        if (sx, sy) == (1, 1):
            return _c1_from_conorm_data((p["A"], p["B"], p["C"]), (4 * p["D"], 0, 0))
        if (sx, sy) == (-1, 1):
            base = bracket_plain(p["A"], p["B"], p["C"])
        elif (sx, sy) == (1, -1):
            base = bracket_plain(p["B"], p["A"], p["C"])
        else:
            base = bracket_plain(p["C"], p["A"], p["B"])
        return PlatycosmDescriptor(
            "c2", {"D": p["D"], "A": base[0], "B": base[1], "C": base[2]}
        )
    if tag == "c3":
        return PlatycosmDescriptor(
            "c3", {"D": 4 * p["D"], "A": p["A"]}, _flip(desc.chirality)
        )
    if tag == "c6":
        return PlatycosmDescriptor("c3", {"D": 4 * p["D"], "A": p["A"]}, desc.chirality)
    if tag == "c4":
        if (h["X"], h["Y"]) == (1, 1):
            return PlatycosmDescriptor(
                "c2", {"D": 4 * p["D"], "A": p["A"], "B": p["A"], "C": Fraction(0)}
            )
        return PlatycosmDescriptor(
            "c4", {"D": p["D"], "A": 2 * p["A"]}, desc.chirality
        )
    if tag == "c22":
        pos = next(n for n in ("X", "Y", "Z") if _c22_sign(h, n) == 1)
        axis = {"X": "A", "Y": "B", "Z": "C"}[pos]
        others = sorted((4 * p[k] for k in "ABC" if k != axis), reverse=True)
        return PlatycosmDescriptor(
            "c2", {"D": p[axis], "A": others[0], "B": others[1], "C": Fraction(0)}
        )
    key = _h_key(desc, h)
    if tag == "+a1":
        if key == (-1, 1, 1):
            base = bracket_plain(p["A"], p["B"], p["C"])
            return _c1_from_conorm_data(base, (p["D"], 0, 0))
        if key == (1, -1, 1):
            a, (b, c) = bracket_colon(p["B"], p["A"], p["C"])
            return PlatycosmDescriptor("+a1", {"D": p["D"], "A": a, "B": b, "C": c})
        if key == (-1, -1, 1):
            a, (b, c) = bracket_colon(p["C"], p["A"], p["B"])
            return PlatycosmDescriptor("+a1", {"D": p["D"], "A": a, "B": b, "C": c})
        if key[1] == 1:
            return canonicalize(
                PlatycosmDescriptor(
                    "+a1", {"D": 4 * p["D"], "A": p["A"], "B": p["B"], "C": p["C"]}
                )
            )
        return canonicalize(
            PlatycosmDescriptor(
                "-a1", {"D": p["D"], "A": p["A"], "B": p["B"], "C": p["C"]}
            )
        )
    if tag == "-a1":
        if key == (-1, 1, 1):
            base, top = four_forms(p["A"], p["B"], p["C"], p["D"])
            return _c1_from_conorm_data(base, top)
        if key == (1, -1, 1):
            a, (b, c) = bracket_colon(p["B"], p["A"], p["C"])
        else:
            a, (b, c) = bracket_colon(p["C"], p["A"], p["B"])
        return PlatycosmDescriptor("+a1", {"D": 4 * p["D"], "A": a, "B": b, "C": c})
    if tag == "+a2":
        if key == (-1, 1, 1):
            return canonicalize(
                PlatycosmDescriptor(
                    "+a1",
                    {"D": 4 * p["A"], "A": p["B"], "B": p["D"], "C": Fraction(0)},
                )
            )
        if key == (1, -1, 1):
            return canonicalize(
                PlatycosmDescriptor(
                    "+a1", {"D": p["D"], "A": p["A"], "B": 4 * p["B"], "C": Fraction(0)}
                )
            )
        if key == (-1, -1, 1):
            return PlatycosmDescriptor(
                "c2", {"D": p["B"], "A": 4 * p["A"], "B": p["D"], "C": Fraction(0)}
            ).canonical()
        if key[1] == 1:
            return PlatycosmDescriptor(
                "+a2", {"D": 4 * p["D"], "A": p["A"], "B": p["B"]}
            )
        return PlatycosmDescriptor("-a2", {"D": p["D"], "A": p["A"], "B": p["B"]})
    if tag == "-a2":
        if key == (-1, 1, 1):
            a, (b, c) = bracket_colon(0, p["B"], p["D"])
            return PlatycosmDescriptor("+a1", {"D": 4 * p["A"], "A": a, "B": b, "C": c})
        if key == (1, -1, 1):
            return canonicalize(
                PlatycosmDescriptor(
                    "+a1", {"D": 4 * p["D"], "A": p["A"], "B": 4 * p["B"], "C": Fraction(0)}
                )
            )
        return PlatycosmDescriptor(
            "c2", {"D": p["B"], "A": 4 * p["A"], "B": 4 * p["D"], "C": Fraction(0)}
        ).canonical()
    raise InvalidParameters(tag)


def _flip(chir):
    return {"dextral": "sinistral", "sinistral": "dextral"}.get(chir)


def _c22_sign(h, name):
    if name == "Z":
        return h["X"] * h["Y"]
    return h[name]


def double_covers(desc: PlatycosmDescriptor):
    """Every double cover: (sign homomorphism, recognized cover descriptor).

    Each cover is recognized independently from its kernel subgroup, checked
    against the closed-form table entry, and its volume is asserted to be
    four times the base volume.
    """
    out = []
    base_vol = volume_sq(desc)
    for h in sign_homomorphisms(desc):
        ker = kernel_subgroup(desc, h)
        cover = recognize(ker)
        expected = cover_table_entry(desc, h)
        if expected is not None:
            expected = canonicalize(expected)
            if (cover.tag, cover.params) != (expected.tag, expected.params):
                raise Unrecognized(
                    f"double cover of {desc.tag} at {h} is {cover}, table says {expected}"
                )
            if expected.chirality is not None and cover.chirality != expected.chirality:
                raise Unrecognized("double-cover chirality mismatch")
        else:
            if cover.tag != "c1":
                raise Unrecognized("index-2 sublattice must stay a torocosm")
        if volume_sq(cover) != 4 * base_vol:
            raise Unrecognized("a double cover must have four times the squared volume")
        out.append((h, cover))
    return out


# ----------------------------------------------------------------------
# Automorphisms.


def _group_equals(sg: SpaceGroup, gens) -> bool:
    """Whether the listed elements of sg generate all of it (exact test)."""
    sub = SpaceGroup(sg.frame, tuple(gens))
    try:
        if set(point_group(sub)) != set(point_group(sg)):
            return False
        t_sub = translation_subgroup(sub)
    except NotCocompact:
        return False
    t_full = translation_subgroup(sg)
    return all(lattice_contains(t_sub, v) for v in t_full) and all(
        lattice_contains(t_full, v) for v in t_sub
    )


def _images_as_elements(desc, images):
    sg = standard_generators(desc)
    pres = PRESENTATIONS[desc.tag]
    elems = {}
    for name in pres.generators:
        if name not in images:
            raise InvalidParameters(f"missing image for generator {name}")
        elems[name] = evaluate_word(sg, images[name])
    derived = DERIVED_GENERATORS.get(desc.tag, {})
    for name, word in derived.items():
        if name in images:
            expected = evaluate_word(elems, word)
            given = evaluate_word(sg, images[name])
            if expected != given:
                raise InvalidParameters(f"image of derived generator {name} is inconsistent")
    return sg, pres, elems


def is_automorphism(desc: PlatycosmDescriptor, images: dict) -> bool:
    """Relators map to the identity and the images generate the group.

    The generation test is exact: the image subgroup has the same point group
    and the same translation lattice iff it is the whole group.
    """
    try:
        sg, pres, elems = _images_as_elements(desc, images)
    except InvalidParameters:
        return False
    for rel in pres.relators:
        if not evaluate_word(elems, rel).is_identity():
            return False
    return _group_equals(sg, [elems[n] for n in pres.generators])


def affine_realization(desc: PlatycosmDescriptor, images: dict) -> AffineIsometry:
    """The affine map n with n g n^-1 = image(g) for every generator."""
    sg, pres, elems = _images_as_elements(desc, images)
    names = list(pres.generators)
    rows = []
    rhs = []
    for name in names:
        g = sg.gen(name)
        m = elems[name]
        # P L - M P = 0 (9 equations), P t + (I - M) p = s (3 equations)
        for i in range(3):
            for j in range(3):
                row = [Fraction(0)] * 12
                for k in range(3):
                    row[3 * i + k] += g.linear[k][j]
                    row[3 * k + j] -= m.linear[i][k]
                rows.append(row)
                rhs.append(Fraction(0))
        for i in range(3):
            row = [Fraction(0)] * 12
            for k in range(3):
                row[3 * i + k] += g.translation[k]
                row[9 + k] -= m.linear[i][k]
            row[9 + i] += 1
            rows.append(row)
            rhs.append(m.translation[i])
    sol = solve(mat(rows), tuple(rhs))
    if sol is None:
        raise Unrecognized("automorphism is not affinely realizable")
    part, null = sol

    def build(v):
        P = tuple(tuple(v[3 * i + j] for j in range(3)) for i in range(3))
        p = tuple(v[9 + k] for k in range(3))
        return P, p

    candidates = [part]
    for nv in null:
        candidates.append(tuple(a + b for a, b in zip(part, nv)))
    if len(null) >= 2:
        acc = part
        for nv in null:
            acc = tuple(a + b for a, b in zip(acc, nv))
        candidates.append(acc)
    for v in candidates:
        P, p = build(v)
        if mat_det(P) != 0:
            n = AffineIsometry(P, p)
            for name in names:
                if not same_map(
                    compose(compose(n, sg.gen(name)), inverse(n)), elems[name]
                ):
                    break
            else:
                return n
    raise Unrecognized("no invertible affine realization found")


def _member(sg: SpaceGroup, g: AffineIsometry) -> bool:
    reps = point_group(sg)
    if g.linear not in reps:
        return False
    t = compose(g, inverse(reps[g.linear]))
    return lattice_contains(translation_subgroup(sg), t.translation)


def normalizes(sg: SpaceGroup, n: AffineIsometry) -> bool:
    return all(_member(sg, conjugate(g, n)) for g in sg.generators) and all(
        _member(sg, conjugate(g, inverse(n))) for g in sg.generators
    )


def is_inner(desc: PlatycosmDescriptor, n: AffineIsometry) -> bool:
    """Whether an affine normalizer element is in Gamma . Z (Z = Betti translations)."""
    sg = standard_generators(desc)
    if not normalizes(sg, n):
        raise DoesNotNormalize("the map does not normalize the group")
    reps = point_group(sg)
    key = mat(n.linear)
    if key not in reps:
        return False
    m = compose(n, inverse(reps[key]))
    assert m.linear == identity(3)
    v = m.translation
    # common fixed space of the point group
    rows = []
    for L in reps:
        for row in mat_sub(mat(L), identity(3)):
            rows.append(row)
    vg = kernel_basis(mat(rows)) if rows else ()
    t_basis = translation_subgroup(sg)
    if not vg:
        return lattice_contains(t_basis, v)
    ann = kernel_basis(mat([list(b) for b in vg]))
    if not ann:
        return True
    proj = mat(ann)
    target = mat_vec(proj, v)
    proj_lat = lattice_basis_from_generators(
        [mat_vec(proj, b) for b in t_basis], dim=len(ann)
    )
    if not proj_lat:
        return not any(target)
    sol = solve(mat_t(proj_lat), target)
    if sol is None:
        return False
    part, null = sol
    return not null and all(x.denominator == 1 for x in part)


# Table-style rigidly isometric automorphisms, as generator-image words.
RIGID_AUTOMORPHISMS = {
    "c1": (
        {"X": _w(("X", -1)), "Y": _w(("Y", -1)), "Z": _w(("Z", -1))},
    ),
    "c2": (
        {"X": _w(("X", 1)), "Y": _w(("Y", 1)), "Z": _w(("X", 1), ("Z", 1))},
        {"X": _w(("X", 1)), "Y": _w(("Y", 1)), "Z": _w(("Y", 1), ("Z", 1))},
        {"X": _w(("X", 1)), "Y": _w(("Y", 1)), "Z": _w(("Z", -1))},
    ),
    "c3": (
        {"X": _w(("X", 1)), "Y": _w(("Y", 1)), "Z": _w(("X", 1), ("Z", 1))},
        {"X": _w(("X", -1)), "Y": _w(("Y", -1)), "Z": _w(("Z", 1))},
        {"X": _w(("Y", 1)), "Y": _w(("X", 1)), "Z": _w(("Z", -1))},
    ),
    "c4": (
        {"X": _w(("X", 1)), "Y": _w(("Y", 1)), "Z": _w(("X", 1), ("Z", 1))},
        {"X": _w(("Y", 1)), "Y": _w(("X", 1)), "Z": _w(("Z", -1))},
    ),
    "c6": (
        {"X": _w(("Y", 1)), "Y": _w(("X", 1)), "Z": _w(("Z", -1))},
    ),
    "c22": (
        {"X": _w(("X", 1)), "Y": _w(("Y", 1), ("X", 2)), "Z": _w(("Z", 1), ("X", 2))},
        {"X": _w(("X", 1), ("Y", 2)), "Y": _w(("Y", 1)), "Z": _w(("Z", 1), ("Y", 2))},
        {"X": _w(("X", 1), ("Z", 2)), "Y": _w(("Y", 1), ("Z", 2)), "Z": _w(("Z", 1))},
        {"X": _w(("Y", 1), ("Z", -1)), "Y": _w(("Z", 1), ("X", -1)), "Z": _w(("X", 1), ("Y", -1))},
    ),
    "+a1": (
        {"W": _w(("W", 1), ("Z", 1)), "X": _w(("X", 1), ("Z", 1)), "Z": _w(("Z", -1))},
    ),
    "-a1": (
        {"W": _w(("W", 1), ("Z", 1)), "X": _w(("X", 1), ("Z", 1)), "Z": _w(("Z", -1))},
    ),
    "+a2": (
        {"W": _w(("W", 1), ("Z", 1)), "X": _w(("X", 1), ("Z", 1)), "Z": _w(("Z", 1))},
        {"W": _w(("W", -1)), "X": _w(("X", 1)), "Z": _w(("Z", 1))},
        {"W": _w(("W", 1)), "X": _w(("X", -1)), "Z": _w(("Z", 1))},
    ),
    "-a2": (
        {"W": _w(("W", 1), ("Z", 1)), "X": _w(("X", 1), ("Z", 1)), "Z": _w(("Z", 1))},
        {"W": _w(("W", -1)), "X": _w(("X", 1)), "Z": _w(("Z", 1))},
        {"W": _w(("W", 1)), "X": _w(("X", -1)), "Z": _w(("Z", 1))},
    ),
}


def _c22_word_images(perm_or_map):
    """Images dict for c22 from a triple of words for (X, Y, Z)."""
    x, y, z = perm_or_map
    return {"X": x, "Y": y, "Z": z}


def c22_outer_relations_check(params=None) -> bool:
    """theta_1..3, phi are commuting involutions mod inner with the stated S3 action."""
    params = params or {"A": 1, "B": 2, "C": 3}
    desc = PlatycosmDescriptor("c22", params)
    sg = standard_generators(desc)
    theta = [
        AffineIsometry(identity(3), e)
        for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    ]
    phi = affine_realization(
        desc,
        _c22_word_images(
            (
                _w(("Y", 1), ("Z", -1)),
                _w(("Z", 1), ("X", -1)),
                _w(("X", 1), ("Y", -1)),
            )
        ),
    )
    maps = theta + [phi]
    for mp in maps:
        if not normalizes(sg, mp):
            return False
        if is_inner(desc, mp):
            return False
        if not is_inner(desc, compose(mp, mp)):
            return False
    for i in range(4):
        for j in range(i + 1, 4):
            comm = compose(
                compose(maps[i], maps[j]),
                inverse(compose(maps[j], maps[i])),
            )
            if not is_inner(desc, comm):
                return False
    # S3: even permutations of (X,Y,Z), odd permutations of the inverses
    pi_even = affine_realization(
        desc, _c22_word_images((_w(("Y", 1)), _w(("Z", 1)), _w(("X", 1))))
    )
    pi_odd = affine_realization(
        desc, _c22_word_images((_w(("Y", -1)), _w(("X", -1)), _w(("Z", -1))))
    )
    # even pi: theta_1 -> theta_2 and phi -> phi, all modulo inner
    t1_conj = compose(compose(pi_even, theta[0]), inverse(pi_even))
    if not is_inner(desc, compose(t1_conj, inverse(theta[1]))):
        return False
    phi_conj = compose(compose(pi_even, phi), inverse(pi_even))
    if not is_inner(desc, compose(phi_conj, inverse(phi))):
        return False
    # odd pi: theta_1 <-> theta_2 and phi -> theta1 theta2 theta3 phi
    t1_odd = compose(compose(pi_odd, theta[0]), inverse(pi_odd))
    if not is_inner(desc, compose(t1_odd, inverse(theta[1]))):
        return False
    phi_odd = compose(compose(pi_odd, phi), inverse(pi_odd))
    ttt_phi = compose(compose(theta[0], compose(theta[1], theta[2])), phi)
    if not is_inner(desc, compose(phi_odd, inverse(ttt_phi))):
        return False
    if is_inner(desc, compose(phi_odd, inverse(phi))):
        return False
    return True


def c22_translation_innerness(desc, coeffs) -> bool:
    """Translation by alpha x + beta y + gamma z is inner iff all even."""
    n = AffineIsometry(identity(3), tuple(map(Fraction, coeffs)))
    return is_inner(desc, n)


# ----------------------------------------------------------------------
# Splitting and Barlow properties.


def helicosm_splitting_holds(desc) -> bool:
    """T = <N z> + T' with z the minimal screw vector, as a direct sum."""
    if desc.tag not in ("c2", "c3", "c4", "c6"):
        raise InvalidParameters("splitting concerns the helicosms")
    sg = standard_generators(desc)
    t_basis = translation_subgroup(sg)
    order = int(desc.tag[1])
    reps = point_group(sg)
    rot = next(rep for L, rep in reps.items() if linear_order(L) == order)
    offset, lat = _axis_vectors(sg, rot, t_basis, sg.frame)
    _, screw = _minimal_coset_norm(sg.frame, offset, lat)
    nz = tuple(order * x for x in screw)
    axis = fixed_space(rot.linear)
    ann = kernel_basis(mat([list(mat_vec(mat(sg.frame), axis[0]))]))
    base = _lattice_subspace_intersection(t_basis, ann)
    join = lattice_basis_from_generators([nz] + list(base), dim=3)
    return (
        len(base) == 2
        and all(lattice_contains(join, v) for v in t_basis)
        and all(lattice_contains(t_basis, v) for v in join)
    )


def barlow_orders_ok(gram2) -> bool:
    from .lattices import rotation_orders

    return rotation_orders(gram2) <= {1, 2, 3, 4, 6}


# ----------------------------------------------------------------------
# JSON wire format.


def spacegroup_to_json(sg: SpaceGroup) -> dict:
    from .serialize import frac_str

    return {
        "frame": [[frac_str(x) for x in row] for row in sg.frame],
        "generators": [
            {
                "linear": [[int(x) for x in row] for row in g.linear],
                "translation": [frac_str(x) for x in g.translation],
            }
            for g in sg.generators
        ],
    }


def spacegroup_from_json(data: dict) -> SpaceGroup:
    from .serialize import parse_frac

    frame = mat([[parse_frac(x) for x in row] for row in data["frame"]])
    gens = tuple(
        AffineIsometry(
            mat(g["linear"]), tuple(parse_frac(x) for x in g["translation"])
        )
        for g in data["generators"]
    )
    return SpaceGroup(frame, gens)
