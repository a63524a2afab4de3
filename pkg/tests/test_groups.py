from fractions import Fraction as F

import pytest

from platycosm.conorms import conorms_from_gram, lattices_isometric
from platycosm.cosmos import PlatycosmDescriptor, TAGS, naming_diagram, volume_sq
from platycosm.errors import (
    DoesNotNormalize,
    FrameMismatch,
    HasFixedPoint,
    NotAHomomorphism,
)
from platycosm.groups import (
    RIGID_AUTOMORPHISMS,
    AffineIsometry,
    SpaceGroup,
    _w,
    affine_realization,
    barlow_orders_ok,
    c22_outer_relations_check,
    c22_translation_innerness,
    compose,
    cover_table_entry,
    double_covers,
    evaluate_word,
    fixed_point_free,
    has_fixed_point,
    helicosm_splitting_holds,
    homology,
    homology_string,
    identity,
    inverse,
    is_automorphism,
    is_inner,
    kernel_subgroup,
    point_group,
    recognize,
    sign_homomorphisms,
    spacegroup_from_json,
    spacegroup_to_json,
    standard_generators,
    translation_subgroup,
    verify_relations,
)
from platycosm.sampling import random_descriptor

TABLE_H1 = {
    "c1": ([], 3),
    "c2": ([2, 2], 1),
    "c3": ([3], 1),
    "c4": ([2], 1),
    "c6": ([], 1),
    "c22": ([4, 4], 0),
    "+a1": ([2], 2),
    "-a1": ([], 2),
    "+a2": ([2, 2], 1),
    "-a2": ([4], 1),
}

COVER_COUNTS = {
    "c1": 7, "c2": 7, "c3": 1, "c4": 3, "c6": 1,
    "c22": 3, "+a1": 7, "-a1": 3, "+a2": 7, "-a2": 3,
}


def _desc(tag, rng):
    return random_descriptor(tag, rng)


def test_compose_inverse_identity(rng):
    d = _desc("c2", rng)
    sg = standard_generators(d)
    z = sg.gen("Z")
    assert compose(z, inverse(z)).is_identity()
    zz = compose(z, z)
    assert zz.linear == identity(3) and zz.translation == (0, 0, 2)
    d4 = PlatycosmDescriptor("c4", dict(D=1, A=1), "dextral")
    z4 = standard_generators(d4).gen("Z")
    p = z4
    for _ in range(3):
        p = compose(p, z4)
    assert p.linear == identity(3) and p.translation == (0, 0, 4)


def test_frame_mismatch():
    a = standard_generators(PlatycosmDescriptor("c22", dict(A=1, B=1, C=1))).gen("X")
    b = standard_generators(PlatycosmDescriptor("c22", dict(A=2, B=1, C=1))).gen("X")
    with pytest.raises(FrameMismatch):
        compose(a, b)


def test_relations_all_types(rng):
    for tag in TAGS:
        for _ in range(5):
            assert verify_relations(_desc(tag, rng))


def test_homology_table(rng):
    for tag in TAGS:
        assert homology(_desc(tag, rng)) == (TABLE_H1[tag][0], TABLE_H1[tag][1]), tag
    assert homology_string(PlatycosmDescriptor("c22", dict(A=1, B=1, C=1))) == "4.4"
    assert homology_string(PlatycosmDescriptor("-a2", dict(D=1, A=1, B=1))) == "4.inf"


def test_fixed_point_basics():
    # pure half turn fixes its axis
    g = AffineIsometry(((-1, 0, 0), (0, -1, 0), (0, 0, 1)), (0, 0, 0))
    t = ((F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1)))
    assert has_fixed_point(g, t)
    screw = AffineIsometry(((-1, 0, 0), (0, -1, 0), (0, 0, 1)), (0, 0, F(1, 2)))
    assert not has_fixed_point(screw, t)


def test_negative_control_rotation_group():
    # hex lattice + pure order-3 rotation: a space group with fixed points
    gram = ((2, -1, 0), (-1, 2, 0), (0, 0, 1))
    rot = AffineIsometry(((0, -1, 0), (1, -1, 0), (0, 0, 1)), (0, 0, 0))
    t1 = AffineIsometry(identity(3), (1, 0, 0))
    t2 = AffineIsometry(identity(3), (0, 1, 0))
    t3 = AffineIsometry(identity(3), (0, 0, 1))
    sg = SpaceGroup(gram, (rot, t1, t2, t3))
    assert not fixed_point_free(sg)
    with pytest.raises(HasFixedPoint):
        recognize(sg)


def test_recognition_round_trip(rng):
    for tag in TAGS:
        for _ in range(5):
            d = _desc(tag, rng)
            assert recognize(standard_generators(d)) == d.canonical()


def test_recognize_international_33_unit_cell():
    # the two non-translation generators of the no. 33 group over Z^3
    gram = identity(3)
    g1 = AffineIsometry(((-1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, F(1, 2), F(1, 2)))
    g2 = AffineIsometry(((1, 0, 0), (0, -1, 0), (0, 0, 1)), (F(1, 2), 0, 0))
    ts = [AffineIsometry(identity(3), e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    sg = SpaceGroup(gram, (g1, g2, *ts))
    d = recognize(sg)
    assert d.tag == "-a2"
    assert d.params == {"A": F(1, 4), "B": F(1, 4), "D": F(1, 4)}


def test_recognize_arbitrary_frame(rng):
    # a dicosm handed over in a sheared basis of its naming lattice
    d = PlatycosmDescriptor("c2", dict(D=2, A=3, B=2, C=1))
    # change of basis U: x' = x, y' = x + y, z' = z
    gram = ((4, 3, 0), (3, 5, 0), (0, 0, 2))
    # conjugated generators: translations x', y'-x'.. keep it simple: rebuild
    x = AffineIsometry(identity(3), (1, 0, 0))
    y = AffineIsometry(identity(3), (-1, 1, 0))
    z = AffineIsometry(((-1, 0, 0), (0, -1, 0), (0, 0, 1)), (0, 0, 1))
    # in the sheared frame the half turn keeps the same matrix form since
    # it negates the whole base plane
    sg = SpaceGroup(gram, (x, y, z))
    got = recognize(sg)
    assert got == d.canonical()


def test_sign_homomorphism_counts(rng):
    for tag, n in COVER_COUNTS.items():
        d = _desc(tag, rng)
        homs = sign_homomorphisms(d)
        assert len(homs) == n, tag
        torsion, rank = homology(d)
        r = rank + sum(1 for t in torsion if t % 2 == 0)
        assert n == 2**r - 1


def test_kernel_subgroup_errors():
    d = PlatycosmDescriptor("c22", dict(A=1, B=1, C=1))
    with pytest.raises(NotAHomomorphism):
        kernel_subgroup(d, {"X": 1, "Y": 1})
    d3 = PlatycosmDescriptor("c3", dict(D=1, A=1), "dextral")
    with pytest.raises(NotAHomomorphism):
        kernel_subgroup(d3, {"X": -1, "Y": -1, "Z": 1})


def test_kernel_is_index_two(rng):
    d = _desc("c2", rng)
    h = sign_homomorphisms(d)[0]
    ker = kernel_subgroup(d, h)
    sg = standard_generators(d)
    from platycosm.linalg import lattice_index

    full_order = len(point_group(sg))
    ker_order = len(point_group(ker))
    t_idx = lattice_index(translation_subgroup(sg), translation_subgroup(ker))
    assert (full_order // ker_order) * t_idx == 2


def test_double_cover_table_spot_checks():
    d = PlatycosmDescriptor("c4", dict(D=1, A=1), "dextral")
    covers = {tuple(h[k] for k in "XYZ"): c for h, c in double_covers(d)}
    assert covers[(1, 1, -1)].tag == "c2"
    assert covers[(1, 1, -1)].params == {"D": 4, "A": 1, "B": 1, "C": 0}
    assert covers[(-1, -1, 1)].tag == "c4"
    assert covers[(-1, -1, 1)].params == {"D": 1, "A": 2}
    d = PlatycosmDescriptor("c6", dict(D=1, A=1), "dextral")
    (h, c), = double_covers(d)
    assert c.tag == "c3" and c.params == {"D": 4, "A": 1}
    d = PlatycosmDescriptor("c22", dict(A=1, B=2, C=3))
    kinds = sorted((c.params["D"], c.params["A"], c.params["B"]) for _, c in double_covers(d))
    assert kinds == [(1, 12, 8), (2, 12, 4), (3, 8, 4)]


def test_double_covers_quadruple_volume(rng):
    for tag in TAGS:
        d = _desc(tag, rng)
        for h, c in double_covers(d):
            assert volume_sq(c) == 4 * volume_sq(d)


def test_cover_chirality_rules():
    for chir in ("dextral", "sinistral"):
        d = PlatycosmDescriptor("c3", dict(D=1, A=2), chir)
        (_, c), = double_covers(d)
        assert c.chirality != chir  # the period-3 cover flips
        d = PlatycosmDescriptor("c6", dict(D=1, A=2), chir)
        (_, c), = double_covers(d)
        assert c.chirality == chir  # the hexacosm cover keeps its sense


def test_minus_a1_four_forms_all_branches(rng):
    for params in (
        dict(D=1, A=1, B=10, C=1),   # B >= C + D
        dict(D=1, A=1, B=1, C=10),   # C >= B + D
        dict(D=10, A=1, B=1, C=1),   # D >= B + C
        dict(D=1, A=1, B=2, C=2),    # generic
    ):
        d = PlatycosmDescriptor("-a1", params)
        covers = [c for _, c in double_covers(d) if c.tag == "c1"]
        assert len(covers) == 1


def test_is_automorphism_examples():
    d = PlatycosmDescriptor("c22", dict(A=1, B=2, C=3))
    phi = {"X": _w(("Y", 1), ("Z", -1)), "Y": _w(("Z", 1), ("X", -1)), "Z": _w(("X", 1), ("Y", -1))}
    assert is_automorphism(d, phi)
    ident = {"X": _w(("X", 1)), "Y": _w(("Y", 1))}
    assert is_automorphism(d, ident)
    c1 = PlatycosmDescriptor("c1", dict(A=0, B=0, C=0, D=1, E=1, F=1))
    bad = {"X": _w(("X", 1)), "Y": _w(("Y", 1)), "Z": _w(("Z", 2))}
    assert not is_automorphism(c1, bad)  # index-2 image, fails generation


def test_rigid_automorphism_table(rng):
    for tag, maps in RIGID_AUTOMORPHISMS.items():
        for _ in range(3):
            d = _desc(tag, rng)
            sg = standard_generators(d)
            for images in maps:
                assert is_automorphism(d, images), (tag, images)
                n = affine_realization(d, images)
                L = n.linear
                from platycosm.linalg import mat, mat_mul, mat_t

                assert mat_mul(mat_t(L), mat_mul(mat(sg.frame), L)) == mat(sg.frame)


def test_c22_innerness_parity(rng):
    d = PlatycosmDescriptor("c22", dict(A=1, B=2, C=3))
    assert not c22_translation_innerness(d, (1, 0, 0))
    assert c22_translation_innerness(d, (2, 0, 0))
    for _ in range(10):
        coeffs = [rng.randint(-3, 3) for _ in range(3)]
        expect = all(c % 2 == 0 for c in coeffs)
        assert c22_translation_innerness(d, coeffs) == expect


def test_c22_outer_relations():
    assert c22_outer_relations_check()
    assert c22_outer_relations_check({"A": 2, "B": 3, "C": 5})


def test_is_inner_requires_normalizing():
    d = PlatycosmDescriptor("c22", dict(A=1, B=2, C=3))
    bad = AffineIsometry(identity(3), (F(1, 3), 0, 0))
    with pytest.raises(DoesNotNormalize):
        is_inner(d, bad)


def test_conjugation_by_generators_is_inner(rng):
    for tag in ("c2", "c22", "-a1", "+a2"):
        d = _desc(tag, rng)
        sg = standard_generators(d)
        for g in sg.generators:
            assert is_inner(d, g)


def test_splitting_lemma(rng):
    for tag in ("c2", "c3", "c4", "c6"):
        for _ in range(5):
            assert helicosm_splitting_holds(_desc(tag, rng))


def test_barlow(rng):
    from platycosm.sampling import random_gram2
    from platycosm.lattices import rotation_orders

    for _ in range(25):
        assert barlow_orders_ok(random_gram2(rng))
    assert 6 in rotation_orders(((2, -1), (-1, 2)))


def test_spacegroup_json_round_trip(rng):
    d = _desc("-a1", rng)
    sg = standard_generators(d)
    again = spacegroup_from_json(spacegroup_to_json(sg))
    assert again.frame == sg.frame
    assert [g.linear for g in again.generators] == [g.linear for g in sg.generators]
    assert [g.translation for g in again.generators] == [g.translation for g in sg.generators]
    assert recognize(again) == d.canonical()
