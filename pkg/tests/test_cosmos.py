from fractions import Fraction as F

import pytest

from platycosm.cosmos import (
    PlatycosmDescriptor,
    TAGS,
    TYPES,
    classify_basal_vector,
    dictionary,
    flatland_catalog,
    infinite_catalog,
    naming_gram,
    seifert_fibrations,
    surface_families,
    translation_lattice,
    volume_sq,
)
from platycosm.errors import InvalidParameters, NotPrimitive
from platycosm.groups import point_group, standard_generators
from platycosm.linalg import mat_det
from platycosm.sampling import random_descriptor


def test_type_census():
    assert len(TAGS) == 10
    assert sum(1 for t in TYPES.values() if not t.orientable) == 4
    metachiral = [t for t in TAGS if t in ("c3", "c4", "c6")]
    assert len(metachiral) == 3
    # oriented types: each chiral non-metachiral gives one, metachiral two
    oriented = 6 + 3
    assert oriented == 9
    orders = [TYPES[t].point_group_order for t in TAGS]
    assert orders == [1, 2, 3, 4, 6, 4, 2, 2, 4, 4]


def test_parameter_validation():
    with pytest.raises(InvalidParameters):
        PlatycosmDescriptor("c22", dict(A=0, B=1, C=1))
    with pytest.raises(InvalidParameters):
        PlatycosmDescriptor("c2", dict(D=1, A=0, B=0, C=1))
    with pytest.raises(InvalidParameters):
        PlatycosmDescriptor("c3", dict(D=1, A=1))  # chirality required
    with pytest.raises(InvalidParameters):
        PlatycosmDescriptor("c2", dict(D=1, A=1, B=1, C=1), "dextral")
    PlatycosmDescriptor("c2", dict(D=1, A=1, B=1, C=0))  # boundary zero fine


def test_naming_lattices():
    d = PlatycosmDescriptor("-a2", dict(D=3, A=1, B=2))
    assert naming_gram(d) == ((1, 0, 0), (0, 2, 0), (0, 0, 3))
    d = PlatycosmDescriptor("+a1", dict(D=2, A=1, B=1, C=1))
    assert naming_gram(d) == ((2, -1, 0), (-1, 2, 0), (0, 0, 2))
    d = PlatycosmDescriptor("c22", dict(A=1, B=1, C=1))
    assert naming_gram(d) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_translation_indices():
    expected = {"c1": 1, "c2": 2, "c3": 3, "c4": 4, "c6": 6,
                "c22": 8, "+a1": 2, "-a1": 4, "+a2": 4, "-a2": 8}
    rng = __import__("random").Random(5)
    for tag, idx in expected.items():
        d = random_descriptor(tag, rng)
        assert translation_lattice(d)[1] == idx


def test_volume_closed_forms():
    assert volume_sq(PlatycosmDescriptor("c22", dict(A=1, B=1, C=1))) == 4
    assert volume_sq(PlatycosmDescriptor("+a1", dict(D=1, A=1, B=1, C=1))) == 3
    assert volume_sq(PlatycosmDescriptor("-a1", dict(D=1, A=1, B=1, C=1))) == 12
    assert volume_sq(PlatycosmDescriptor("+a2", dict(D=2, A=3, B=5))) == 30
    assert volume_sq(PlatycosmDescriptor("-a2", dict(D=2, A=3, B=5))) == 120


def test_volume_equals_det_over_group_order(rng):
    for tag in TAGS:
        for _ in range(10):
            d = random_descriptor(tag, rng)
            tg, _ = translation_lattice(d)
            order = len(point_group(standard_generators(d)))
            assert volume_sq(d) * order * order == mat_det(tg)


def test_seifert_table():
    assert seifert_fibrations("c4").fibrations == ((1, "444"),)
    assert seifert_fibrations("c22").fibrations == ((3, "22x"),)
    assert seifert_fibrations("+a2").fibrations == ((1, "22*"), (1, "**"), (1, "xx"))
    assert seifert_fibrations("c2").fibrations == ((1, "2222"), ("inf", "xx"))
    assert seifert_fibrations("c1").fibrations == (("inf", "o"),)


def test_surface_families_table():
    fams = surface_families("c3")
    assert len(fams) == 1 and fams[0].geometry == "circle" and fams[0].member == "2T"
    assert fams[0].multiplicity == 1 and fams[0].orientation == "basal"
    fams = surface_families("c22")
    assert len(fams) == 1 and fams[0].multiplicity == 3
    assert str(fams[0]) == "[∓1sK (2T) ∓1sK]^3"
    fams = surface_families("-a2")
    assert [f.orientation for f in fams] == ["basal", "perpendal", "perpendal"]
    assert str(fams[0]) == "[-1gT (2T) -1sK]^1"
    assert str(fams[2]) == "[∓1sK (2T) ∓1gT]^1"
    # multiplicity superscripts per row
    mults = {t: [f.multiplicity for f in surface_families(t)] for t in TAGS}
    assert mults["c1"] == ["inf"]
    assert mults["c2"] == [1, "inf"]
    assert mults["+a1"] == [1, "inf", "inf"]
    assert mults["+a2"] == [1, 1, 1]


def test_classify_basal_vector():
    d = PlatycosmDescriptor("+a1", dict(D=1, A=1, B=1, C=1))
    assert classify_basal_vector(d, (1, 0)) == "(2K)"
    assert classify_basal_vector(d, (0, 1)) == "(2T)"
    assert classify_basal_vector(d, (1, 2)) == "(2K)"
    assert classify_basal_vector(d, (1, 1)) == "(2K)"
    assert classify_basal_vector(d, (2, 1)) == "(2T)"
    with pytest.raises(NotPrimitive):
        classify_basal_vector(d, (2, 4))
    with pytest.raises(InvalidParameters):
        classify_basal_vector(PlatycosmDescriptor("c22", dict(A=1, B=1, C=1)), (1, 0))


def test_dictionary_rows():
    rec = dictionary("c22")
    assert rec.common == "Hantzsche-Wendt space"
    assert rec.wolf == "G6"
    assert rec.international == ((19, "P2_12_12_1"),)
    rec = dictionary("-a1")
    assert rec.international == ((9, "Cc"),)
    rec = dictionary("c3")
    assert rec.international == ((144, "P3_1"), (145, "P3_2"))


def test_infinite_catalog():
    cat = infinite_catalog()
    assert len(cat) == 8
    by_tag = {r.tag: r for r in cat}
    assert by_tag["+KMS"].wolf == "K1"
    assert by_tag["-KMS"].wolf == "K3"
    assert by_tag["CPS"].parameters == ("A", "theta")
    assert by_tag["EUC"].wolf == "E"


def test_flatland_catalog():
    cat = flatland_catalog()
    assert len(cat["orbifolds"]) == 17
    assert "xx" in cat["orbifolds"] and "o" in cat["orbifolds"]
    assert len(cat["infinite"]) == 3
