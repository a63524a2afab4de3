"""The ten compact platycosm types: parameters, lattices, volumes, catalogs.

Each type fixes a coordinate frame once: helicosms use a 2D superbase of the
base lattice with the screw direction as the third coordinate; c22 and the
amphidicosms use the orthogonal directions x, y, z; the amphicosms use
(x, y, z) with the naming-lattice Gram written in those coordinates.  All
generators and lattices elsewhere in the package are expressed in these
frames, which keeps linear parts integral and all arithmetic exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .conorms import ConormDiagram3, canonical_form, conorms_from_gram
from .errors import InvalidParameters, NotPrimitive
from .linalg import frac, mat, mat_det

TAGS = ("c1", "c2", "c3", "c4", "c6", "c22", "+a1", "-a1", "+a2", "-a2")

PARAM_NAMES = {
    "c1": ("A", "B", "C", "D", "E", "F"),
    "c2": ("D", "A", "B", "C"),
    "c3": ("D", "A"),
    "c4": ("D", "A"),
    "c6": ("D", "A"),
    "c22": ("A", "B", "C"),
    "+a1": ("D", "A", "B", "C"),
    "-a1": ("D", "A", "B", "C"),
    "+a2": ("D", "A", "B"),
    "-a2": ("D", "A", "B"),
}


@dataclass(frozen=True)
class NameRecord:
    systematic: str
    common: str | None
    wolf: str
    international: tuple          # (number, name) pairs; two for the metachiral types
    cdht: str
    generators: tuple             # non-translation generators, unit-cell coordinates


@dataclass(frozen=True)
class PlatycosmType:
    tag: str
    orientable: bool
    point_group_orbifold: str
    point_group_order: int
    names: NameRecord


_NAMES = {
    "c1": NameRecord("torocosm", "3-torus", "G1", ((1, "P1"),), "(o)", ()),
    "c2": NameRecord(
        "dicosm", "half turn space", "G2",
        ((4, "P2_1"),), "(2_1 2_1 2_1 2_1) = (x̄x̄)", ("(-x, -y, z+1/2)",),
    ),
    "c3": NameRecord(
        "tricosm", "one-third turn space", "G3",
        ((144, "P3_1"), (145, "P3_2")), "(3_1 3_1 3_1)", ("(-x-y, x, z+1/3)",),
    ),
    "c4": NameRecord(
        "tetracosm", "quarter turn space", "G4",
        ((76, "P4_1"), (78, "P4_3")), "(4_1 4_1 2_1)", ("(-y, x, z+1/4)",),
    ),
    "c6": NameRecord(
        "hexacosm", "one-sixth turn space", "G5",
        ((169, "P6_1"), (170, "P6_5")), "(6_1 3_1 2_1)", ("(x+y, -x, z+1/6)",),
    ),
    "c22": NameRecord(
        "didicosm", "Hantzsche-Wendt space", "G6",
        ((19, "P2_12_12_1"),), "(2_1 2_1 x̄)",
        ("(-x, y+1/2, -z+1/2)", "(x+1/2, -y, -z)"),
    ),
    "+a1": NameRecord(
        "first amphicosm", "Klein bottle times circle", "B1",
        ((7, "Pc"),), "(ō_0) = (*:*:) = (xx_0)", ("(x+1/2, y, -z)",),
    ),
    "-a1": NameRecord(
        "second amphicosm", None, "B2",
        ((9, "Cc"),), "(ō_1) = (*:x) = (xx_1)", ("(x+1/2, z, y)",),
    ),
    "+a2": NameRecord(
        "first amphidicosm", None, "B3",
        ((29, "Pca2_1"),), "(2_1 2_1 *:) = (*̄:*̄:) = (x̄x_0)",
        ("(-x, y, z+1/2)", "(x+1/2, -y, z)"),
    ),
    "-a2": NameRecord(
        "second amphidicosm", None, "B4",
        ((33, "Pa2_1"),), "(2_1 2_1 x) = (*:x̄) = (x̄x_1)",
        ("(-x, y+1/2, z+1/2)", "(x+1/2, -y, z)"),
    ),
}

_POINT_GROUPS = {
    "c1": ("1", 1), "c2": ("22", 2), "c3": ("33", 3), "c4": ("44", 4), "c6": ("66", 6),
    "c22": ("222", 4), "+a1": ("*", 2), "-a1": ("x", 2), "+a2": ("*22", 4), "-a2": ("22x", 4),
}
# Orbifold symbols follow the fibered point-group notation used for the
# chiral/achiral split; orders are the sizes of the holonomy groups.

TYPES = {
    tag: PlatycosmType(
        tag=tag,
        orientable=not tag.endswith(("a1", "a2")),
        point_group_orbifold=_POINT_GROUPS[tag][0],
        point_group_order=_POINT_GROUPS[tag][1],
        names=_NAMES[tag],
    )
    for tag in TAGS
}


@dataclass(frozen=True)
class PlatycosmDescriptor:
    """A platycosm type tag plus its exact parameters and chirality flag."""

    tag: str
    params: dict
    chirality: str | None = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise InvalidParameters(f"unknown platycosm type {self.tag!r}")
        names = PARAM_NAMES[self.tag]
        got = set(self.params)
        if got != set(names):
            raise InvalidParameters(f"{self.tag} needs parameters {names}, got {sorted(got)}")
        object.__setattr__(
            self, "params", {k: frac(v) for k, v in self.params.items()}
        )
        _validate_params(self.tag, self.params)
        if self.tag in ("c3", "c4", "c6"):
            if self.chirality not in ("dextral", "sinistral"):
                raise InvalidParameters("helicosms of period > 2 need a chirality flag")
        elif self.chirality is not None:
            raise InvalidParameters(f"{self.tag} carries no chirality")

    def __getitem__(self, k):
        return self.params[k]

    def type(self) -> PlatycosmType:
        return TYPES[self.tag]

    def canonical(self) -> "PlatycosmDescriptor":
        return canonicalize(self)

    def __hash__(self):
        return hash((self.tag, tuple(sorted(self.params.items())), self.chirality))

    def __eq__(self, other):
        return (
            isinstance(other, PlatycosmDescriptor)
            and self.tag == other.tag
            and self.params == other.params
            and self.chirality == other.chirality
        )


def _validate_params(tag, p):
    if any(v < 0 for v in p.values()):
        raise InvalidParameters("parameters are squared lengths and must be non-negative")
    if tag == "c1":
        d = ConormDiagram3(
            (p["D"], p["E"], p["F"], p["C"], p["B"], p["A"], 0)
        )
        from .conorms import determinant  # local to avoid cycle at import time

        if determinant(d) <= 0:
            raise InvalidParameters("c1 conorms describe a degenerate lattice")
    elif tag == "c2":
        if p["D"] <= 0:
            raise InvalidParameters("screw norm D must be positive")
        if sum(1 for k in "ABC" if p[k] == 0) > 1:
            raise InvalidParameters("at most one base conorm of c2 may vanish")
    elif tag in ("c3", "c4", "c6"):
        if p["D"] <= 0 or p["A"] <= 0:
            raise InvalidParameters("helicosm parameters D, A must be positive")
    elif tag == "c22":
        if any(p[k] <= 0 for k in "ABC"):
            raise InvalidParameters("didicosm screw norms must be positive")
    elif tag in ("+a1", "-a1"):
        if p["D"] <= 0:
            raise InvalidParameters("vertical norm D must be positive")
        if sum(1 for k in "ABC" if p[k] == 0) > 1:
            raise InvalidParameters("at most one base conorm of an amphicosm may vanish")
    else:  # amphidicosms
        if any(p[k] <= 0 for k in "ABD"):
            raise InvalidParameters("amphidicosm parameters A, B, D must be positive")


def canonicalize(desc: PlatycosmDescriptor) -> PlatycosmDescriptor:
    """Sort the parameters that the type leaves unordered."""
    p = dict(desc.params)
    if desc.tag == "c1":
        vals = canonical_form(naming_diagram(desc))
        # canonical_form is minimal over collineations; read letters back off a
        # placement of that canonical tuple
        d = ConormDiagram3(vals, reduced=True)
        from .conorms import canonical_g_placement

        pl = canonical_g_placement(d)
        a, b, c, dd, e, f = pl.letters(d)
        p = {"A": a, "B": b, "C": c, "D": dd, "E": e, "F": f}
    elif desc.tag == "c2":
        a, b, c = sorted((p["A"], p["B"], p["C"]), reverse=True)
        p.update({"A": a, "B": b, "C": c})
    elif desc.tag == "c22":
        a, b, c = sorted((p["A"], p["B"], p["C"]), reverse=True)
        p.update({"A": a, "B": b, "C": c})
    elif desc.tag in ("+a1", "-a1"):
        b, c = sorted((p["B"], p["C"]), reverse=True)
        p.update({"B": b, "C": c})
    return PlatycosmDescriptor(desc.tag, p, desc.chirality)


# ----------------------------------------------------------------------
# Frames and lattices.


def base_gram2(desc):
    """Gram matrix of the 2D base lattice in the frame's first two coordinates."""
    p = desc.params
    if desc.tag in ("c2", "+a1", "-a1"):
        a, b, c = p["A"], p["B"], p["C"]
        return mat([[a + c, -c], [-c, b + c]])
    if desc.tag in ("c3", "c6"):
        a = p["A"]
        return mat([[2 * a, -a], [-a, 2 * a]])
    if desc.tag == "c4":
        a = p["A"]
        return mat([[a, 0], [0, a]])
    raise InvalidParameters(f"{desc.tag} has no distinguished 2D base lattice")


def naming_gram(desc):
    """Gram matrix of the naming lattice N in the type's frame."""
    p = desc.params
    tag = desc.tag
    if tag == "c1":
        from .conorms import realize_gram

        return realize_gram(naming_diagram(desc))
    if tag in ("c2", "c3", "c4", "c6", "+a1", "-a1"):
        g2 = base_gram2(desc)
        return mat(
            [
                [g2[0][0], g2[0][1], 0],
                [g2[1][0], g2[1][1], 0],
                [0, 0, p["D"]],
            ]
        )
    if tag == "c22":
        return mat([[p["A"], 0, 0], [0, p["B"], 0], [0, 0, p["C"]]])
    # amphidicosms: x (glide), y (screw), z
    return mat([[p["A"], 0, 0], [0, p["B"], 0], [0, 0, p["D"]]])


def naming_diagram(desc) -> ConormDiagram3:
    """Reduced conorm diagram of the naming lattice."""
    if desc.tag == "c1":
        p = desc.params
        d = ConormDiagram3((p["D"], p["E"], p["F"], p["C"], p["B"], p["A"], 0))
        from .conorms import reduce3

        return reduce3(d)
    return conorms_from_gram(naming_gram(desc))


#: Basis of the translation lattice T inside the naming frame, per type.
_T_BASIS = {
    "c1": [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
    "c2": [(1, 0, 0), (0, 1, 0), (0, 0, 2)],
    "c3": [(1, 0, 0), (0, 1, 0), (0, 0, 3)],
    "c4": [(1, 0, 0), (0, 1, 0), (0, 0, 4)],
    "c6": [(1, 0, 0), (0, 1, 0), (0, 0, 6)],
    "c22": [(2, 0, 0), (0, 2, 0), (0, 0, 2)],
    "+a1": [(2, 0, 0), (0, 1, 0), (0, 0, 1)],
    "-a1": [(2, 0, 0), (0, 1, 1), (0, 0, 2)],
    "+a2": [(2, 0, 0), (0, 2, 0), (0, 0, 1)],
    "-a2": [(2, 0, 0), (0, 2, 0), (0, 0, 2)],
}


def translation_basis(desc):
    return tuple(tuple(Fraction(x) for x in row) for row in _T_BASIS[desc.tag])


def translation_gram(desc):
    B = translation_basis(desc)
    G = naming_gram(desc)
    from .linalg import gram_inner

    return mat([[gram_inner(G, u, v) for v in B] for u in B])


def translation_lattice(desc):
    """(Gram of T, index |N/T|)."""
    B = translation_basis(desc)
    idx = abs(int(mat_det(mat(B))))
    return translation_gram(desc), idx


def volume_sq(desc) -> Fraction:
    """Squared Riemannian volume, as a closed form per type."""
    p = desc.params
    tag = desc.tag
    if tag == "c1":
        from .conorms import determinant

        return determinant(naming_diagram(desc))
    if tag in ("c2", "c3", "c4", "c6"):
        if tag == "c2":
            det2 = p["A"] * p["B"] + p["A"] * p["C"] + p["B"] * p["C"]
        elif tag == "c4":
            det2 = p["A"] * p["A"]
        else:
            det2 = 3 * p["A"] * p["A"]
        return p["D"] * det2
    if tag == "c22":
        return 4 * p["A"] * p["B"] * p["C"]
    if tag in ("+a1", "-a1"):
        omega = p["A"] * p["B"] + p["A"] * p["C"] + p["B"] * p["C"]
        return (1 if tag == "+a1" else 4) * p["D"] * omega
    if tag == "+a2":
        return p["A"] * p["B"] * p["D"]
    return 4 * p["A"] * p["B"] * p["D"]


# ----------------------------------------------------------------------
# Catalogs.


@dataclass(frozen=True)
class SeifertData:
    fibrations: tuple  # (multiplicity 1|3|"inf", base orbifold symbol)


SEIFERT = {
    "c1": SeifertData((("inf", "o"),)),
    "c2": SeifertData(((1, "2222"), ("inf", "xx"))),
    "c3": SeifertData(((1, "333"),)),
    "c4": SeifertData(((1, "444"),)),
    "c6": SeifertData(((1, "632"),)),
    "c22": SeifertData(((3, "22x"),)),
    "+a1": SeifertData(((1, "o"), ("inf", "**"), ("inf", "xx"))),
    "-a1": SeifertData(((1, "o"), ("inf", "*x"), ("inf", "xx"))),
    "+a2": SeifertData(((1, "22*"), (1, "**"), (1, "xx"))),
    "-a2": SeifertData(((1, "22x"), (1, "*x"), (1, "xx"))),
}


def seifert_fibrations(tag: str) -> SeifertData:
    return SEIFERT[tag]


@dataclass(frozen=True)
class IntervalEnd:
    sign: str        # "+1" | "-1" | "-+1" (ambiguous)
    mechanism: str   # "g" | "s" | "gs"
    surface: str     # "T" | "K"

    def __str__(self):
        s = {"+1": "+1", "-1": "-1", "-+1": "∓1"}[self.sign]
        return f"{s}{self.mechanism}{self.surface}"


@dataclass(frozen=True)
class SurfaceFamily:
    geometry: str            # "circle" | "interval"
    member: str              # "2T" | "2K"
    ends: tuple              # () for circles, (IntervalEnd, IntervalEnd) for intervals
    multiplicity: object     # 1 | 3 | "inf"
    orientation: str         # "basal" | "perpendal" | "unsplit"

    def __str__(self):
        mult = {"inf": "^inf", 1: "^1", 3: "^3"}[self.multiplicity]
        if self.geometry == "circle":
            return f"({self.member}){mult}"
        a, b = self.ends
        return f"[{a} ({self.member}) {b}]{mult}"


def _circle(member, mult, orient):
    return SurfaceFamily("circle", member, (), mult, orient)


def _interval(end1, member, end2, mult, orient):
    return SurfaceFamily("interval", member, (end1, end2), mult, orient)


_E = IntervalEnd

SURFACE_FAMILIES = {
    "c1": (_circle("2T", "inf", "unsplit"),),
    "c2": (
        _circle("2T", 1, "basal"),
        _interval(_E("+1", "s", "K"), "2T", _E("+1", "s", "K"), "inf", "perpendal"),
    ),
    "c3": (_circle("2T", 1, "basal"),),
    "c4": (_circle("2T", 1, "basal"),),
    "c6": (_circle("2T", 1, "basal"),),
    "c22": (
        _interval(_E("-+1", "s", "K"), "2T", _E("-+1", "s", "K"), 3, "unsplit"),
    ),
    "+a1": (
        _interval(_E("+1", "g", "T"), "2T", _E("+1", "g", "T"), 1, "basal"),
        _circle("2K", "inf", "perpendal"),
        _circle("2T", "inf", "perpendal"),
    ),
    "-a1": (
        _interval(_E("-1", "g", "T"), "2T", _E("-1", "g", "T"), 1, "basal"),
        _circle("2K", "inf", "perpendal"),
        _circle("2T", "inf", "perpendal"),
    ),
    "+a2": (
        _interval(_E("+1", "gs", "K"), "2K", _E("+1", "gs", "K"), 1, "basal"),
        _circle("2K", 1, "perpendal"),
        _interval(_E("-+1", "s", "K"), "2T", _E("-+1", "g", "T"), 1, "perpendal"),
    ),
    "-a2": (
        _interval(_E("-1", "g", "T"), "2T", _E("-1", "s", "K"), 1, "basal"),
        _circle("2K", 1, "perpendal"),
        _interval(_E("-+1", "s", "K"), "2T", _E("-+1", "g", "T"), 1, "perpendal"),
    ),
}


def surface_families(desc_or_tag):
    tag = desc_or_tag if isinstance(desc_or_tag, str) else desc_or_tag.tag
    return SURFACE_FAMILIES[tag]


def classify_basal_vector(desc, mn):
    """Whether the perpendal family over a primitive base vector is (2K) or (2T).

    For the amphicosms, base vectors congruent mod 2 to a glide vector give
    Klein-bottle circles, the translation class gives torus circles.
    """
    if desc.tag not in ("+a1", "-a1"):
        raise InvalidParameters("basal vector classification applies to the amphicosms")
    m, n = mn
    if gcd(m, n) != 1:
        raise NotPrimitive(f"({m},{n}) is not primitive")
    # frame base vectors: x=(1,0), y=(0,1); glide classes are x and w=-x-y=(1,1);
    # translation class is y=(0,1)
    return "(2T)" if (m % 2, n % 2) == (0, 1) else "(2K)"


def dictionary(tag: str) -> NameRecord:
    return TYPES[tag].names


@dataclass(frozen=True)
class InfinitePlatycosm:
    tag: str
    name: str
    parameters: tuple
    wolf: str
    recipe: str


INFINITE_PLATYCOSMS = (
    InfinitePlatycosm("EUC", "Euclidean Space", (), "E", "all of 3-space; trivial group"),
    InfinitePlatycosm(
        "CPS", "Circular Product space", ("A", "theta"), "S1^theta",
        "screw motion of angle theta along a vector of norm A",
    ),
    InfinitePlatycosm(
        "CMS", "Circular Möbius space", ("A",), "S2",
        "glide reflection along a vector of norm A",
    ),
    InfinitePlatycosm(
        "TPS", "Toroidal Product space", ("A", "B", "C"), "T1",
        "planar translation lattice with superbase conorms A, B, C",
    ),
    InfinitePlatycosm(
        "TMS", "Toroidal Möbius space", ("A", "B:C"), "T2",
        "translations along v0, v1 replaced by glide reflections in the base plane",
    ),
    InfinitePlatycosm(
        "KPS", "Kleinian Product space", ("A;B",), "K2",
        "translation of norm A plus a perpendicular glide of norm B, mirror orthogonal to the base plane",
    ),
    InfinitePlatycosm(
        "+KMS", "chiral Kleinian Möbius space", ("A;B",), "K1",
        "the KPS glide composed with reflection in the base plane (a screw motion)",
    ),
    InfinitePlatycosm(
        "-KMS", "achiral Kleinian Möbius space", ("A;B",), "K3",
        "the KPS translation composed with reflection in the base plane (a glide)",
    ),
)


def infinite_catalog():
    return INFINITE_PLATYCOSMS


FLATLAND = {
    "compact": (("torus T_{A B C}", "o"), ("Klein bottle K^A_B", "xx")),
    "infinite": (
        ("Euclidean Plane R^2", "EUC2"),
        ("Cylinder C_A", "CYL"),
        ("Möbius Cylinder M_B", "MOB"),
    ),
    "orbifolds": (
        "*632", "632", "*442", "4*2", "442", "*333", "3*3", "333",
        "*2222", "2*22", "22*", "22x", "2222", "**", "*x", "xx", "o",
    ),
}


def flatland_catalog():
    return FLATLAND


#: Census of the 219 crystallographic space groups by parameter count,
#: with the platycosm sub-census.
SPACE_GROUP_CENSUS = {
    "total": 219,
    "chiral": 54,
    "metachiral": 11,
    "oriented_types": 219 + 11,
    "point_groups": 32,
    "by_parameters": {1: 35, 2: 110, 3: 59, 4: 13, 6: 2},
    "platycosms": {
        "total": 10,
        "chiral": 6,
        "metachiral": 3,
        "oriented_types": 9,
        "by_parameters": {2: ("c3", "c4", "c6"), 3: ("c22", "+a2", "-a2"), 4: ("c2", "+a1", "-a1"), 6: ("c1",)},
        "point_groups": 8,
    },
}
