"""Combinatorics of the 7-point projective plane that indexes 3D conorms.

Positions 0..6 carry the labels p01, p02, p03, p12, p13, p23, q and are
identified with the nonzero vectors of F_2^3 in the fixed order
(100), (010), (001), (110), (101), (011), (111).  Lines are the triples of
characters summing to zero.  This table is normative for every conorm and
vonorm computation in the package: position p_ij pairs superbase vectors
v_i, v_j, and the vonorm of the coset with parity character chi is the sum
of the conorms at positions whose character pairs nontrivially with chi.
"""

from __future__ import annotations

from itertools import combinations, product

POSITIONS = ("p01", "p02", "p03", "p12", "p13", "p23", "q")
CHARS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1))
CHAR_INDEX = {c: i for i, c in enumerate(CHARS)}


def _xor(a, b):
    return tuple(x ^ y for x, y in zip(a, b))


_line_set = frozenset(
    frozenset((i, j, CHAR_INDEX[_xor(CHARS[i], CHARS[j])]))
    for i, j in combinations(range(7), 2)
)
LINES = tuple(sorted(_line_set, key=sorted))
LINES_THROUGH = tuple(tuple(l for l in LINES if i in l) for i in range(7))
TRIANGLES = tuple(t for t in combinations(range(7), 3) if frozenset(t) not in _line_set)

assert len(LINES) == 7 and len(TRIANGLES) == 28


def is_line(points) -> bool:
    return frozenset(points) in _line_set


def third_point(i: int, j: int) -> int:
    """The third point on the line through two distinct points."""
    return CHAR_INDEX[_xor(CHARS[i], CHARS[j])]


def _det_mod2(cols) -> int:
    (a, b, c) = cols
    d = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    return d % 2


def _collineations():
    vecs = [v for v in product((0, 1), repeat=3) if any(v)]
    perms = []
    for cols in product(vecs, repeat=3):
        if not _det_mod2(cols):
            continue
        # image of char (x,y,z) is x*col0 + y*col1 + z*col2 over F2
        perm = []
        for ch in CHARS:
            img = (0, 0, 0)
            for bit, col in zip(ch, cols):
                if bit:
                    img = _xor(img, col)
            perm.append(CHAR_INDEX[img])
        perms.append(tuple(perm))
    return tuple(perms)


COLLINEATIONS = _collineations()
assert len(COLLINEATIONS) == 168


def apply_collineation(perm, values):
    """Transport a 7-tuple of values along a position permutation."""
    out = [None] * 7
    for i, v in enumerate(values):
        out[perm[i]] = v
    return tuple(out)


# Positions contributing to the vonorm of the coset with character CHARS[ci]:
# those whose own character pairs to 1 with it (equivalently, off the polar line).
VONORM_SUPPORT = tuple(
    tuple(p for p in range(7) if sum(x * y for x, y in zip(CHARS[p], CHARS[ci])) % 2)
    for ci in range(7)
)


def colines(g: int):
    """The four lines avoiding a point; each meets every line through it once."""
    return tuple(l for l in LINES if g not in l)


def pairs_through(g: int):
    """The three point-pairs collinear with g, as sorted tuples."""
    return tuple(tuple(sorted(l - {g})) for l in LINES_THROUGH[g])
