from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from platycosm import fano
from platycosm.conorms import (
    ConormDiagram2,
    ConormDiagram3,
    canonical_form,
    conorms_from_gram,
    conorms_from_vonorms,
    covering_radius_sq,
    determinant,
    dual_conorms,
    edge_length_sq,
    lattices_isometric,
    minimal_vonorm,
    putative_conorms,
    reduce2,
    reduce2_trace,
    reduce3,
    reduce3_trace,
    realize_gram,
    second_determinant,
    superbase_from_gram,
    vonorm_oracle,
    vonorms,
)
from platycosm.errors import NotPositiveDefinite
from platycosm.linalg import mat, mat_det
from platycosm.sampling import random_gram3, random_reduced_diagram
from platycosm.voronoi import edge_length_classes, voronoi_cell

WORKED_GRAM = [[2, 1, 1], [1, 3, 1], [1, 1, 4]]


def test_superbase_identity_gram():
    sb = superbase_from_gram([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert sb.gram == mat([[1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1], [-1, -1, -1, 3]])


def test_superbase_worked_example_row():
    sb = superbase_from_gram(WORKED_GRAM)
    assert sb.gram[3] == (F(-4), F(-5), F(-6), F(15))


def test_superbase_rejects_degenerate():
    with pytest.raises(NotPositiveDefinite):
        superbase_from_gram([[1, 0, 0], [0, 1, 0], [0, 0, 0]])


def test_putative_conorms_worked_example():
    d = putative_conorms(superbase_from_gram(WORKED_GRAM))
    assert d.values == (F(4), F(5), F(6), F(-1), F(-1), F(-1), F(0))
    assert not d.reduced


def test_putative_conorms_orthonormal():
    d = putative_conorms(superbase_from_gram([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert d.values == (F(1), F(1), F(1), F(0), F(0), F(0), F(0))


def test_reduce3_worked_example():
    d = reduce3(conorm_of_worked())
    assert sorted(d.values, reverse=True) == [3, 2, 1, 1, 0, 0, 0]
    assert fano.is_line(d.zeros())
    assert vonorms(d).values == (F(2), F(3), F(4), F(3), F(4), F(5), F(7))
    assert determinant(d) == 17


def conorm_of_worked():
    return putative_conorms(superbase_from_gram(WORKED_GRAM))


def test_reduce3_already_reduced_fixed():
    d = reduce3(conorm_of_worked())
    assert reduce3(d) is d


def test_reduce3_orthogonal_unchanged():
    d = ConormDiagram3((2, 3, 5, 0, 0, 0, 0))
    assert reduce3(d).values == d.values


def test_reduce2_golden_chain():
    trace = reduce2_trace(ConormDiagram2((-3, 5, 10)))
    assert trace == [(F(-3), F(5), F(10)), (F(3), F(-1), F(4)), (F(1), F(1), F(2))]
    assert reduce2(ConormDiagram2((3, -1, 4))).values == (1, 1, 2)
    assert reduce2(ConormDiagram2((1, 1, 2))).values == (1, 1, 2)


def test_reduce3_step_measure():
    trace = reduce3_trace(conorm_of_worked())
    totals = [sum(t) for t in trace]
    assert all(a > b for a, b in zip(totals, totals[1:]))


def test_vonorm_identities():
    # all-equal diagram: every vonorm is 4a
    d = ConormDiagram3((F(3, 2),) * 7)
    assert set(vonorms(d).values) == {6}
    # orthonormal: {1,1,1,2,2,2,3}
    d = ConormDiagram3((1, 1, 1, 0, 0, 0, 0))
    assert sorted(vonorms(d).values) == [1, 1, 1, 2, 2, 2, 3]


def test_conorms_from_vonorms_roundtrip_worked():
    d = reduce3(conorm_of_worked())
    back = conorms_from_vonorms(vonorms(d))
    assert back.values == d.values
    v = vonorms(ConormDiagram3((1, 1, 1, 0, 0, 0, 0)))
    assert sorted(conorms_from_vonorms(v).values, reverse=True) == [1, 1, 1, 0, 0, 0, 0]


def test_determinants_worked():
    d = reduce3(conorm_of_worked())
    assert determinant(d) == mat_det(mat(WORKED_GRAM)) == 17
    assert second_determinant(d) == 0
    assert second_determinant(ConormDiagram3((1, 1, 1, 0, 0, 0, 0))) == 0


def test_determinant_g0_closed_form(rng):
    # with G=0 the 28-triangle sum equals the displayed 7-term polynomial
    for _ in range(50):
        a, b, c, dd, e, f = [F(rng.randint(0, 6)) for _ in range(6)]
        d = ConormDiagram3((dd, e, f, c, b, a, 0))
        expect = (
            (a + dd) * (b * e + c * f)
            + (b + e) * (c * f + a * dd)
            + (c + f) * (a * dd + b * e)
            + dd * b * c
            + a * e * c
            + a * b * f
            + dd * e * f
        )
        assert determinant(d) == expect


def test_second_determinant_g0_closed_form(rng):
    for _ in range(50):
        a, b, c, dd, e, f = [F(rng.randint(1, 6)) for _ in range(6)]
        d = ConormDiagram3((dd, e, f, c, b, a, 0))
        expect = (
            a * dd * (b + e) * (c + f)
            + b * e * (c + f) * (a + dd)
            + c * f * (a + dd) * (b + e)
        )
        assert second_determinant(d) == expect


def test_covering_radius_golden():
    assert covering_radius_sq(ConormDiagram3((1, 1, 1, 0, 0, 0, 0))) == F(3, 4)
    assert covering_radius_sq(reduce3(conorm_of_worked())) == F(7, 4)
    # diag(A,B,C) box: (A+B+C)/4
    assert covering_radius_sq(ConormDiagram3((2, 3, 5, 0, 0, 0, 0))) == F(10, 4)


def test_edge_length_golden_and_scaling():
    cubic = ConormDiagram3((1, 1, 1, 0, 0, 0, 0))
    for i in range(3):
        assert edge_length_sq(cubic, i) == 1
    for i in range(3, 7):
        assert edge_length_sq(cubic, i) == 0
    d = reduce3(conorm_of_worked())
    for i in range(7):
        assert edge_length_sq(d.scale(3), i) == 3 * edge_length_sq(d, i)
        if d.values[i] == 0:
            assert edge_length_sq(d, i) == 0


def test_edge_lengths_match_polytope(rng):
    for _ in range(25):
        d = random_reduced_diagram(rng)
        cell = voronoi_cell(realize_gram(d))
        from_cell = sorted(edge_length_classes(cell).values())
        from_formula = sorted(
            edge_length_sq(d, i) for i in range(7) if d.values[i] != 0
        )
        assert from_cell == from_formula


def test_dual_golden():
    cubic = ConormDiagram3((1, 1, 1, 0, 0, 0, 0), reduced=True)
    assert lattices_isometric(dual_conorms(cubic), cubic)
    box = ConormDiagram3((2, 3, 5, 0, 0, 0, 0), reduced=True)
    dual = dual_conorms(box)
    assert sorted(v for v in dual.values if v) == [F(1, 5), F(1, 3), F(1, 2)]


def test_dual_involution(rng):
    for _ in range(30):
        d = random_reduced_diagram(rng)
        dd = dual_conorms(d)
        assert determinant(dd) == 1 / determinant(d)
        assert lattices_isometric(dual_conorms(dd), d)


def test_minimal_vonorm():
    assert minimal_vonorm(ConormDiagram3((1, 1, 1, 0, 0, 0, 0))) == 1
    d = reduce3(conorm_of_worked())
    assert minimal_vonorm(d) == 2
    assert minimal_vonorm(d.scale(5)) == 10


def test_lattices_isometric():
    d = reduce3(conorm_of_worked())
    relabeled = ConormDiagram3(
        fano.apply_collineation(fano.COLLINEATIONS[37], d.values), reduced=True
    )
    assert lattices_isometric(d, relabeled)
    cubic = ConormDiagram3((1, 1, 1, 0, 0, 0, 0), reduced=True)
    assert not lattices_isometric(cubic, cubic.scale(2))
    # same lattice in another basis: change of basis on the worked Gram
    other = conorms_from_gram([[2, 3, 1], [3, 7, 2], [1, 2, 4]])  # U^T G U for unimodular U
    # (built from U = [[1,1,0],[0,1,0],[0,0,1]] acting on the worked Gram)
    assert lattices_isometric(d, other)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=6, max_size=6))
def test_reduction_preserves_determinant_hypothesis(entries):
    from hypothesis import assume
    from platycosm.lattices import is_positive_definite

    d_, e_, f_ = entries[0], entries[1], entries[2]
    g = mat(
        [
            [abs(entries[3]) + 8, d_, e_],
            [d_, abs(entries[4]) + 8, f_],
            [e_, f_, abs(entries[5]) + 8],
        ]
    )
    assume(is_positive_definite(g))
    put = putative_conorms(superbase_from_gram(g))
    red = reduce3(put)
    assert determinant(put) == determinant(red) == mat_det(g)
    assert all(v >= 0 for v in red.values) and any(v == 0 for v in red.values)
    assert vonorms(red).values == vonorm_oracle(g).values


def test_canonical_form_is_invariant(rng):
    for _ in range(10):
        d = random_reduced_diagram(rng)
        for k in (3, 50, 101):
            relabeled = ConormDiagram3(
                fano.apply_collineation(fano.COLLINEATIONS[k], d.values), reduced=True
            )
            assert canonical_form(relabeled) == canonical_form(d)
