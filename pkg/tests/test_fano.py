from itertools import combinations

from platycosm import fano


def test_incidence_counts():
    assert len(fano.LINES) == 7
    assert len(fano.TRIANGLES) == 28
    for i in range(7):
        assert len(fano.LINES_THROUGH[i]) == 3
    for i, j in combinations(range(7), 2):
        assert sum(1 for l in fano.LINES if i in l and j in l) == 1


def test_normative_lines():
    # the fixed table from the external-interface contract
    names = fano.POSITIONS
    expected = [
        {"p01", "p23", "q"},
        {"p02", "p13", "q"},
        {"p03", "p12", "q"},
        {"p01", "p02", "p12"},
        {"p01", "p03", "p13"},
        {"p02", "p03", "p23"},
        {"p12", "p13", "p23"},
    ]
    got = [{names[i] for i in l} for l in fano.LINES]
    for e in expected:
        assert e in got


def test_collineations_form_group_of_168():
    assert len(set(fano.COLLINEATIONS)) == 168
    perms = set(fano.COLLINEATIONS)
    p, q = fano.COLLINEATIONS[5], fano.COLLINEATIONS[77]
    composed = tuple(p[q[i]] for i in range(7))
    assert composed in perms


def test_collineations_preserve_lines():
    for perm in fano.COLLINEATIONS[:20]:
        for line in fano.LINES:
            assert fano.is_line({perm[i] for i in line})


def test_vonorm_support_is_line_complement():
    for ci in range(7):
        support = set(fano.VONORM_SUPPORT[ci])
        assert len(support) == 4
        assert fano.is_line(set(range(7)) - support)
