"""Lattice classification: Voronoi cell type (5), BraVo class (24), Bravais class (14).

The classifiers work on reduced conorm diagrams.  A diagram's zero set
determines the cell type; the value pattern, read through a G-placement and
quotiented by the allowed relabelings (exactly the collineations preserving
the zero configuration), determines the BraVo letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import fano
from .conorms import ConormDiagram2, ConormDiagram3, all_g_placements, determinant
from .errors import DegenerateDiagram

VORONOI_CELL_TYPES = ("tO", "hD", "rD", "hP", "rC")


@dataclass(frozen=True)
class BravaisClass:
    name: str
    symmetry_factor: int


@dataclass(frozen=True)
class BravoClass:
    letter: str
    voronoi: str
    orbifold: str
    bravais: BravaisClass


_BRAVAIS = {
    "Triclinic": 1,
    "base-centered Monoclinic": 2,
    "body-centered Orthorhombic": 4,
    "face-centered Orthorhombic": 4,
    "body-centered Tetragonal": 8,
    "Rhombohedral (or Trigonal)": 6,
    "body-centered Cubic (bcc)": 24,
    "face-centered Cubic (fcc)": 24,
    "primitive Monocline": 2,
    "base-centered Orthorhombic": 4,
    "Hexagonal": 12,
    "Orthorhombic": 4,
    "primitive Tetragonal": 8,
    "primitive Cubic": 24,
}

_LETTERS = [
    ("A", "tO", "x", "Triclinic"),
    ("B", "tO", "2*", "base-centered Monoclinic"),
    ("C", "tO", "*222", "body-centered Orthorhombic"),
    ("D", "tO", "2*", "base-centered Monoclinic"),
    ("E", "tO", "*222", "face-centered Orthorhombic"),
    ("F", "tO", "*422", "body-centered Tetragonal"),
    ("G", "tO", "2*3", "Rhombohedral (or Trigonal)"),
    ("H", "tO", "*432", "body-centered Cubic (bcc)"),
    ("I", "hD", "x", "Triclinic"),
    ("J", "hD", "2*", "base-centered Monoclinic"),
    ("K", "hD", "2*", "base-centered Monoclinic"),
    ("L", "hD", "*222", "body-centered Orthorhombic"),
    ("M", "hD", "*422", "body-centered Tetragonal"),
    ("N", "rD", "x", "Triclinic"),
    ("O", "rD", "2*", "base-centered Monoclinic"),
    ("P", "rD", "2*3", "Rhombohedral (or Trigonal)"),
    ("Q", "rD", "*222", "body-centered Orthorhombic"),
    ("R", "rD", "*432", "face-centered Cubic (fcc)"),
    ("S", "hP", "2*", "primitive Monocline"),
    ("T", "hP", "*222", "base-centered Orthorhombic"),
    ("U", "hP", "*622", "Hexagonal"),
    ("V", "rC", "*222", "Orthorhombic"),
    ("W", "rC", "*422", "primitive Tetragonal"),
    ("X", "rC", "*432", "primitive Cubic"),
]

BRAVO_CLASSES = {
    letter: BravoClass(letter, cell, orb, BravaisClass(name, _BRAVAIS[name]))
    for letter, cell, orb, name in _LETTERS
}

#: Orders of the point groups named by the orbifold symbols used above.
ORBIFOLD_ORDER = {"x": 2, "2*": 4, "*222": 8, "*422": 16, "2*3": 12, "*432": 48, "*622": 24}


def voronoi_type(d: ConormDiagram3) -> str:
    """Topological type of the Voronoi cell from the zero pattern of a reduced diagram."""
    if not d.reduced:
        raise ValueError("voronoi_type needs a reduced diagram")
    zeros = d.zeros()
    nonzeros = [i for i in range(7) if i not in zeros]
    if len(zeros) >= 5 or determinant(d) == 0:
        raise DegenerateDiagram(f"{len(zeros)} zero conorms: rank-deficient lattice")
    if len(zeros) == 1:
        return "tO"
    if len(zeros) == 2:
        return "hD"
    if len(zeros) == 3:
        return "rD" if fano.is_line(zeros) else "hP"
    # four zeros: the three nonzero conorms must form a triangle
    if fano.is_line(nonzeros):
        raise DegenerateDiagram("nonzero conorms are collinear: zero determinant")
    return "rC"


def _to_letter_class(letter):
    return BRAVO_CLASSES[letter]


def _classify_tO(d):
    # columns of (bottom, top) values over every valid placement x column order
    arrangements = []
    for pl in all_g_placements(d):
        cols = [(d.values[b], d.values[t]) for b, t in pl.columns]
        for perm in permutations(cols):
            arrangements.append(perm)

    def exists(pred):
        return any(pred(a) for a in arrangements)

    vals = [v for i, v in enumerate(d.values) if v != 0]
    if len(set(vals)) == 1:
        return "H"
    if exists(lambda a: a[0] == a[1] == a[2]):
        return "G"
    if exists(lambda a: a[0] == a[1] and a[0][0] == a[0][1] and a[2][0] == a[2][1]):
        return "F"
    if exists(lambda a: a[0] == a[1] and a[0][0] == a[0][1]):
        return "E"
    if exists(lambda a: all(c[0] == c[1] for c in a)):
        return "C"
    if exists(lambda a: a[0] == a[1]):
        return "D"
    if exists(lambda a: a[0][0] == a[0][1] and a[1][0] == a[1][1]):
        return "B"
    return "A"


def _classify_hD(d):
    z1, z2 = d.zeros()
    gamma = fano.third_point(z1, z2)
    rest = [i for i in range(7) if i not in (z1, z2, gamma)]
    # rows of the 2x2 array are the pairs collinear with gamma
    row1 = next(
        tuple(sorted(l - {gamma})) for l in fano.LINES_THROUGH[gamma] if not (l & {z1, z2})
    )
    p1, p2 = row1
    q1 = fano.third_point(z1, p1)
    q2 = fano.third_point(z1, p2)
    v = d.values
    tops = (v[p1], v[p2])
    bots = (v[q1], v[q2])
    cols_equal = tops[0] == bots[0] and tops[1] == bots[1]
    diag_equal = tops[0] == bots[1] and tops[1] == bots[0]
    row_const = (tops[0] == tops[1], bots[0] == bots[1])
    if all(row_const) and cols_equal:
        return "M"
    if all(row_const):
        return "L"
    if cols_equal or diag_equal:
        return "J"
    if any(row_const):
        return "K"
    return "I"


def _classify_rD(d):
    off = [d.values[i] for i in range(7) if d.values[i] != 0]
    counts = sorted((off.count(x) for x in set(off)), reverse=True)
    if counts == [4]:
        return "R"
    if counts == [3, 1]:
        return "P"
    if counts == [2, 2]:
        return "Q"
    if counts == [2, 1, 1]:
        return "O"
    return "N"


def _classify_hP(d):
    zeros = d.zeros()
    side_points = set()
    for za, zb in permutations(zeros, 2):
        side_points.add(fano.third_point(za, zb))
    (dpos,) = [i for i in range(7) if i not in zeros and i not in side_points]
    sides = sorted(d.values[p] for p in side_points)
    if sides[0] == sides[2]:
        return "U"
    if sides[0] == sides[1] or sides[1] == sides[2]:
        return "T"
    return "S"


def _classify_rC(d):
    vals = sorted(v for v in d.values if v != 0)
    if vals[0] == vals[2]:
        return "X"
    if vals[0] == vals[1] or vals[1] == vals[2]:
        return "W"
    return "V"


def bravo_class(d: ConormDiagram3) -> BravoClass:
    """The unique BraVo letter whose zero/equality pattern matches the diagram."""
    cell = voronoi_type(d)
    letter = {
        "tO": _classify_tO,
        "hD": _classify_hD,
        "rD": _classify_rD,
        "hP": _classify_hP,
        "rC": _classify_rC,
    }[cell](d)
    return _to_letter_class(letter)


def bravais_class(b: BravoClass) -> BravaisClass:
    return b.bravais


@dataclass(frozen=True)
class Lattice2Class:
    shape: str      # generic | rhombic | hexagonal | rectangular | square
    voronoi: str    # hexagonal | rectangular
    delaunay: str   # scalene triangle | isosceles triangle | equilateral triangle | rectangle | square
    rhombic_order: str | None = None  # "A>B" or "A<B" for the rhombic split


def classify2d(d: ConormDiagram2) -> Lattice2Class:
    """Shape, Voronoi and Delaunay types of a reduced 2D diagram."""
    vals = sorted(d.values, reverse=True)
    if any(v < 0 for v in vals):
        raise ValueError("classify2d needs a reduced diagram")
    zeros = sum(1 for v in vals if v == 0)
    if zeros >= 2:
        raise DegenerateDiagram("2D lattice with two zero conorms is degenerate")
    if zeros == 1:
        if vals[0] == vals[1]:
            return Lattice2Class("square", "rectangular", "square")
        return Lattice2Class("rectangular", "rectangular", "rectangle")
    if vals[0] == vals[2]:
        return Lattice2Class("hexagonal", "hexagonal", "equilateral triangle")
    if vals[0] == vals[1] or vals[1] == vals[2]:
        a, b = (vals[0], vals[2]) if vals[0] == vals[1] else (vals[1], vals[0])
        order = "A>B" if a > b else "A<B"
        return Lattice2Class("rhombic", "hexagonal", "isosceles triangle", rhombic_order=order)
    return Lattice2Class("generic", "hexagonal", "scalene triangle")


#: Parameter-pattern chains of Bravais types per platycosm.
PLATYCOSM_BRAVAIS_TYPES = {
    "c1": [
        "c1 (Triclinic)", "c1 (base-centered Monoclinic)", "c1 (body-centered Orthorhombic)",
        "c1 (face-centered Orthorhombic)", "c1 (body-centered Tetragonal)",
        "c1 (Rhombohedral (or Trigonal))", "c1 (body-centered Cubic (bcc))",
        "c1 (face-centered Cubic (fcc))", "c1 (primitive Monocline)",
        "c1 (base-centered Orthorhombic)", "c1 (Hexagonal)", "c1 (Orthorhombic)",
        "c1 (primitive Tetragonal)", "c1 (primitive Cubic)",
    ],
    "c2": ["c2^D_{A B C}", "c2^D_{A A B}", "c2^D_{A A A}", "c2^D_{A B}", "c2^D_{A A}"],
    "c3": ["c3^D_{A A A}"],
    "c4": ["c4^D_{A A}"],
    "c6": ["c6^D_{A A A}"],
    "c22": ["c22^{A B C}", "c22^{A A B}", "c22^{A A A}"],
    "+a1": ["+a1^D_{A:B C}", "+a1^D_{A:B B}", "+a1^D_{:B C}", "+a1^D_{:B B}", "+a1^D_{A:B}"],
    "-a1": ["-a1^D_{A:B C}", "-a1^D_{A:B B}", "-a1^D_{:B C}", "-a1^D_{:B B}", "-a1^D_{A:B}"],
    "+a2": ["+a2^D_{A:B}"],
    "-a2": ["-a2^D_{A:B}"],
}


def platycosm_bravais_types(tag: str):
    return list(PLATYCOSM_BRAVAIS_TYPES[tag])
