from fractions import Fraction as F

import pytest

from platycosm.bravo import (
    BRAVO_CLASSES,
    ORBIFOLD_ORDER,
    bravais_class,
    bravo_class,
    classify2d,
    platycosm_bravais_types,
    voronoi_type,
)
from platycosm.conorms import ConormDiagram3, ConormDiagram2, conorms_from_gram, realize_gram
from platycosm.errors import DegenerateDiagram
from platycosm.lattices import automorphisms
from platycosm.sampling import random_patterned_diagram, random_reduced_diagram
from platycosm.voronoi import voronoi_cell

# one representative diagram per BraVo letter, in the fixed position order
# [p01, p02, p03, p12, p13, p23, q]
LETTER_REPRESENTATIVES = {
    "A": (2, 4, 6, 5, 3, 1, 0),
    "B": (1, 2, 4, 3, 2, 1, 0),
    "C": (1, 2, 3, 3, 2, 1, 0),
    "D": (3, 3, 4, 2, 1, 1, 0),
    "E": (1, 1, 3, 2, 1, 1, 0),
    "F": (1, 1, 2, 2, 1, 1, 0),
    "G": (2, 2, 2, 1, 1, 1, 0),
    "H": (1, 1, 1, 1, 1, 1, 0),
    "I": (5, 1, 4, 2, 3, 0, 0),
    "J": (5, 1, 2, 2, 1, 0, 0),
    "K": (5, 1, 4, 1, 3, 0, 0),
    "L": (5, 1, 2, 1, 2, 0, 0),
    "M": (5, 1, 1, 1, 1, 0, 0),
    "N": (1, 2, 3, 0, 0, 0, 4),
    "O": (1, 1, 2, 0, 0, 0, 3),
    "P": (1, 1, 1, 0, 0, 0, 2),
    "Q": (1, 1, 2, 0, 0, 0, 2),
    "R": (1, 1, 1, 0, 0, 0, 1),
    "S": (3, 2, 4, 1, 0, 0, 0),
    "T": (2, 2, 4, 1, 0, 0, 0),
    "U": (1, 1, 4, 1, 0, 0, 0),
    "V": (1, 2, 3, 0, 0, 0, 0),
    "W": (1, 1, 2, 0, 0, 0, 0),
    "X": (1, 1, 1, 0, 0, 0, 0),
}


def _diag(values):
    return ConormDiagram3(values, reduced=True)


def test_letter_representatives_classify():
    for letter, values in LETTER_REPRESENTATIVES.items():
        assert bravo_class(_diag(values)).letter == letter


def test_catalog_counts():
    per_type = {}
    for cls in BRAVO_CLASSES.values():
        per_type.setdefault(cls.voronoi, set()).add(cls.letter)
    assert {k: len(v) for k, v in per_type.items()} == {
        "tO": 8, "hD": 5, "rD": 5, "hP": 3, "rC": 3
    }
    assert len(BRAVO_CLASSES) == 24
    assert len({c.bravais.name for c in BRAVO_CLASSES.values()}) == 14


def test_bravais_table_rows():
    assert bravais_class(BRAVO_CLASSES["B"]).name == "base-centered Monoclinic"
    assert bravais_class(BRAVO_CLASSES["R"]).name == "face-centered Cubic (fcc)"
    assert bravais_class(BRAVO_CLASSES["R"]).symmetry_factor == 24
    assert bravais_class(BRAVO_CLASSES["V"]).name == "Orthorhombic"
    assert bravais_class(BRAVO_CLASSES["V"]).symmetry_factor == 4
    # rows share a class exactly as in the correspondence table
    same = lambda *ls: len({BRAVO_CLASSES[l].bravais for l in ls}) == 1
    assert same("B", "D", "J", "K", "O")
    assert same("C", "L", "Q")
    assert same("F", "M")
    assert same("G", "P")


def test_unit_cubic_and_bcc():
    assert bravo_class(_diag((1, 1, 1, 0, 0, 0, 0))).letter == "X"
    assert bravo_class(_diag((1, 1, 1, 1, 1, 1, 0))).letter == "H"
    assert bravo_class(conorms_from_gram([[1, 0, 0], [0, 1, 0], [0, 0, 2]])).letter == "W"


def test_point_group_orders_per_class():
    for letter, values in LETTER_REPRESENTATIVES.items():
        cls = BRAVO_CLASSES[letter]
        g = realize_gram(_diag(values))
        order = len(automorphisms(g))
        assert order == ORBIFOLD_ORDER[cls.orbifold] == 2 * cls.bravais.symmetry_factor, letter


def test_voronoi_type_against_oracle(rng):
    for _ in range(40):
        d = random_patterned_diagram(rng) if rng.random() < 0.5 else random_reduced_diagram(rng)
        cell = voronoi_cell(realize_gram(d))
        assert cell.cell_type() == voronoi_type(d)


def test_degenerate_diagrams_rejected():
    with pytest.raises(DegenerateDiagram):
        voronoi_type(ConormDiagram3((1, 1, 0, 0, 0, 0, 0), reduced=True))


def test_classify2d_table_rows():
    assert classify2d(ConormDiagram2((1, 2, 3), reduced=True)).shape == "generic"
    assert classify2d(ConormDiagram2((1, 2, 3), reduced=True)).voronoi == "hexagonal"
    assert classify2d(ConormDiagram2((1, 2, 3), reduced=True)).delaunay == "scalene triangle"
    r = classify2d(ConormDiagram2((2, 2, 1), reduced=True))
    assert (r.shape, r.delaunay, r.rhombic_order) == ("rhombic", "isosceles triangle", "A>B")
    r = classify2d(ConormDiagram2((1, 1, 2), reduced=True))
    assert (r.shape, r.rhombic_order) == ("rhombic", "A<B")
    assert classify2d(ConormDiagram2((1, 1, 1), reduced=True)).shape == "hexagonal"
    assert classify2d(ConormDiagram2((1, 2, 0), reduced=True)).shape == "rectangular"
    sq = classify2d(ConormDiagram2((1, 1, 0), reduced=True))
    assert (sq.shape, sq.voronoi, sq.delaunay) == ("square", "rectangular", "square")
    with pytest.raises(DegenerateDiagram):
        classify2d(ConormDiagram2((1, 0, 0), reduced=True))


def test_platycosm_bravais_type_counts():
    counts = {t: len(platycosm_bravais_types(t)) for t in
              ("c1", "c2", "c3", "c4", "c6", "c22", "+a1", "-a1", "+a2", "-a2")}
    assert counts == {"c1": 14, "c2": 5, "c3": 1, "c4": 1, "c6": 1,
                      "c22": 3, "+a1": 5, "-a1": 5, "+a2": 1, "-a2": 1}
    assert sum(counts.values()) == 37
    assert platycosm_bravais_types("c2")[-1] == "c2^D_{A A}"
    assert platycosm_bravais_types("c22") == ["c22^{A B C}", "c22^{A A B}", "c22^{A A A}"]
