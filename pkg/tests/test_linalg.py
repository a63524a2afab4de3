from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from platycosm.linalg import (
    hnf_rows,
    integer_kernel,
    lattice_basis_from_generators,
    lattice_contains,
    lattice_index,
    mat,
    mat_det,
    mat_inv,
    mat_mul,
    smith_invariants,
    solve,
    sqrt_lower,
    sqrt_upper,
)


def test_smith_known_values():
    assert smith_invariants([[0, 4], [4, 0]]) == [4, 4]
    assert smith_invariants([[2, 0], [0, 2]]) == [2, 2]
    assert smith_invariants([[1, -1, 0], [1, 2, 0]]) == [1, 3]
    assert smith_invariants([[0, 0, 2], [0, 2, -1]]) == [1, 4]
    assert smith_invariants([[0, 0, 0]]) == []


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=9, max_size=9))
def test_smith_divisibility_and_det(entries):
    rows = [entries[0:3], entries[3:6], entries[6:9]]
    divs = smith_invariants(rows)
    for a, b in zip(divs, divs[1:]):
        assert b % a == 0
    d = mat_det(mat(rows))
    prod = 1
    for x in divs:
        prod *= x
    if len(divs) == 3:
        assert prod == abs(d)
    else:
        assert d == 0


def test_hnf_and_lattice_membership():
    basis = lattice_basis_from_generators([(2, 0, 0), (0, 2, 0), (1, 1, 1)])
    assert len(basis) == 3
    assert lattice_contains(basis, (F(1), F(1), F(1)))
    assert lattice_contains(basis, (F(3), F(1), F(1)))
    assert not lattice_contains(basis, (F(1), F(0), F(0)))
    assert lattice_index(basis, [(2, 0, 0), (0, 2, 0), (0, 0, 2)]) == 2
    assert lattice_index(basis, [(4, 0, 0), (0, 2, 0), (0, 0, 2)]) == 4


def test_integer_kernel():
    # left kernel of the transpose = solutions of A c = 0
    A = [[2, 4], [1, 2], [0, 0]]  # columns c with 2c0+4c1=0, c0+2c1=0
    ker = integer_kernel([[2, 1, 0], [4, 2, 0]])
    assert len(ker) == 1
    c = ker[0]
    assert 2 * c[0] + 4 * c[1] == 0 and c[0] + 2 * c[1] == 0
    assert abs(c[0]) == 2 and abs(c[1]) == 1  # saturated, not (4, -2)


def test_solve_consistency():
    A = mat([[1, 2], [2, 4]])
    sol = solve(A, (F(1), F(2)))
    part, null = sol
    assert len(null) == 1
    assert solve(A, (F(1), F(3))) is None


def test_sqrt_bounds():
    for q in (F(2), F(3), F(1, 7), F(48, 5)):
        lo, hi = sqrt_lower(q), sqrt_upper(q)
        assert lo * lo <= q <= hi * hi
        assert hi - lo < F(1, 10**6)
