"""Conorm and vonorm calculus for 2- and 3-dimensional lattices.

A 3D lattice is described by seven rationals on the Fano positions fixed in
:mod:`platycosm.fano`.  Reduction turns any putative diagram (from an
arbitrary superbase) into the canonical non-negative one; the closed-form
lattice invariants (determinants, covering radius, Voronoi edge lengths,
dual conorms) are all polynomial in the reduced values.

Everything here is exact rational; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import fano
from .errors import (
    AmbiguousPlacement,
    InconsistentVonorms,
    NonTermination,
    NotPositiveDefinite,
    ZeroDeterminant,
)
from .lattices import check_positive_definite, coset_minimum_mod2
from .linalg import frac, mat, mat_det


@dataclass(frozen=True)
class ConormDiagram3:
    """Seven conorms in the fixed order [p01, p02, p03, p12, p13, p23, q]."""

    values: tuple
    reduced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(frac(v) for v in self.values))
        if len(self.values) != 7:
            raise ValueError("a 3D conorm diagram has exactly 7 values")
        if self.reduced:
            if any(v < 0 for v in self.values) or not any(v == 0 for v in self.values):
                raise ValueError("reduced diagrams are non-negative with at least one zero")

    def __getitem__(self, i):
        return self.values[i]

    def zeros(self):
        return tuple(i for i, v in enumerate(self.values) if v == 0)

    def scale(self, c):
        return ConormDiagram3(tuple(frac(c) * v for v in self.values), reduced=self.reduced)


@dataclass(frozen=True)
class VonormDiagram3:
    """Seven vonorms indexed by the nontrivial cosets of L/2L, in character order."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(frac(v) for v in self.values))
        if len(self.values) != 7:
            raise ValueError("a vonorm diagram has exactly 7 values")

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class ConormDiagram2:
    values: tuple
    reduced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(frac(v) for v in self.values))
        if len(self.values) != 3:
            raise ValueError("a 2D conorm diagram has exactly 3 values")
        if self.reduced and any(v < 0 for v in self.values):
            raise ValueError("reduced 2D diagrams are non-negative")

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class Superbase3:
    """4x4 Gram matrix of four vectors that generate the lattice and sum to zero."""

    gram: tuple

    def __post_init__(self):
        g = mat(self.gram)
        object.__setattr__(self, "gram", g)
        if len(g) != 4 or any(len(r) != 4 for r in g):
            raise ValueError("superbase Gram is 4x4")
        if any(sum(row) != 0 for row in g):
            raise ValueError("superbase rows must sum to zero")


def superbase_from_gram(g) -> Superbase3:
    """Extend a basis Gram matrix by v0 = -v1-v2-v3 (rows and columns sum to 0)."""
    g = mat(g)
    check_positive_definite(g)
    rows = []
    for i in range(3):
        rows.append(tuple(g[i]) + (-sum(g[i]),))
    last = tuple(-sum(g[i]) for i in range(3))
    rows.append(last + (-sum(last),))
    return Superbase3(tuple(rows))


def putative_conorms(s: Superbase3) -> ConormDiagram3:
    """p_ij = -v_i . v_j on the fixed Fano positions; q is set to 0, not marked reduced.

    The superbase rows here are ordered (v1, v2, v3, v0).
    """
    g = s.gram
    idx = {"p01": (3, 0), "p02": (3, 1), "p03": (3, 2), "p12": (0, 1), "p13": (0, 2), "p23": (1, 2)}
    vals = []
    for name in fano.POSITIONS:
        if name == "q":
            vals.append(Fraction(0))
        else:
            i, j = idx[name]
            vals.append(-g[i][j])
    return ConormDiagram3(tuple(vals), reduced=False)


def conorms_from_gram(g) -> ConormDiagram3:
    return reduce3(putative_conorms(superbase_from_gram(g)))


def _working_line(values):
    """Line through the most negative conorm and a zero, lex-first by positions."""
    negs = [i for i, v in enumerate(values) if v < 0]
    if not negs:
        return None
    n = min(negs, key=lambda i: (values[i], i))
    options = []
    for line in fano.LINES_THROUGH[n]:
        if any(values[p] == 0 for p in line):
            options.append(tuple(sorted(line)))
    if not options:
        raise NonTermination("no working line: diagram does not describe a lattice")
    return min(options)


def reduce3_trace(d: ConormDiagram3):
    """All intermediate diagrams of the 3D reduction, ending with the reduced one."""
    values = tuple(d.values)
    den = lcm(*(v.denominator for v in values)) if any(values) else 1
    total = sum(values)
    # each step lowers the conorm total by eps >= 1/den, and the total stays positive
    cap = int(total * den) + 8 if total > 0 else 8
    trace = [values]
    for _ in range(max(cap, 8)):
        line = _working_line(values)
        if line is None:
            return trace
        eps = -min(values[p] for p in line)
        assert eps > 0
        new = tuple(
            v + eps if i in line else v - eps for i, v in enumerate(values)
        )
        assert sum(new) == sum(values) - eps, "conorm total must drop by eps"
        values = new
        trace.append(values)
    raise NonTermination("3D conorm reduction exceeded its certified step bound")


def reduce3(d: ConormDiagram3) -> ConormDiagram3:
    """Canonical non-negative conorms of the lattice described by any putative diagram."""
    if d.reduced:
        return d
    final = reduce3_trace(d)[-1]
    return ConormDiagram3(final, reduced=True)


def reduce2_trace(d: ConormDiagram2):
    values = tuple(d.values)
    den = lcm(*(v.denominator for v in values)) if any(values) else 1
    total = sum(values)
    cap = int(total * den) + 8 if total > 0 else 8
    trace = [values]
    for _ in range(max(cap, 8)):
        negs = [i for i, v in enumerate(values) if v < 0]
        if not negs:
            return trace
        k = min(negs, key=lambda i: (values[i], i))
        eps = -values[k]
        values = tuple(v + 2 * eps if i == k else v - 2 * eps for i, v in enumerate(values))
        trace.append(values)
    raise NonTermination("2D conorm reduction exceeded its certified step bound")


def reduce2(d: ConormDiagram2) -> ConormDiagram2:
    if d.reduced:
        return d
    return ConormDiagram2(reduce2_trace(d)[-1], reduced=True)


def vonorms(d: ConormDiagram3) -> VonormDiagram3:
    """Vonorm of each coset: the sum of the four conorms off the polar line."""
    return VonormDiagram3(
        tuple(sum(d.values[p] for p in fano.VONORM_SUPPORT[ci]) for ci in range(7))
    )


def conorms_from_vonorms(v: VonormDiagram3) -> ConormDiagram3:
    """Invert the vonorm map: p(x) = S - (sum of vonorms of lines through x)/2.

    Serves as the independent oracle for reduce3; raises if the round trip fails.
    """
    S = frac(sum(v.values)) / 4
    vals = []
    for x in range(7):
        # vonorm diagram is indexed by cosets; the vonorm "of a line" is the
        # vonorm of the coset polar to it, so lines through x correspond to
        # cosets whose character pairs to zero... equivalently, x contributes
        # to the vonorms of the four cosets with <char_x, chi> = 1.
        through = [ci for ci in range(7) if x not in fano.VONORM_SUPPORT[ci]]
        assert len(through) == 3
        vals.append(S - frac(sum(v.values[ci] for ci in through)) / 2)
    d = ConormDiagram3(tuple(vals), reduced=False)
    if vonorms(d).values != v.values:
        raise InconsistentVonorms("vonorm inversion failed the round trip")
    return d


def determinant(d: ConormDiagram3) -> Fraction:
    """Sum of the conorm products over the 28 non-collinear point triples."""
    return sum(
        (d.values[a] * d.values[b] * d.values[c] for a, b, c in fano.TRIANGLES),
        Fraction(0),
    )


def second_determinant(d: ConormDiagram3) -> Fraction:
    """Sum of the 4-fold conorm products over the 28 triangle complements."""
    total = Fraction(0)
    for t in fano.TRIANGLES:
        rest = [i for i in range(7) if i not in t]
        p = Fraction(1)
        for i in rest:
            p *= d.values[i]
        total += p
    return total


def minimal_vonorm(d: ConormDiagram3) -> Fraction:
    return min(vonorms(d).values)


@dataclass(frozen=True)
class GPlacement:
    """A choice of zero position G plus the co-line that fixes the A,B,C labels.

    columns[i] = (bottom, top) position indices; bottoms lie on one line, and
    each column is collinear with g.  Letter order: A,B,C = bottoms,
    D,E,F = tops, G = g.
    """

    g: int
    columns: tuple

    def letters(self, d: ConormDiagram3):
        a, b, c = (d.values[col[0]] for col in self.columns)
        dd, e, f = (d.values[col[1]] for col in self.columns)
        return (a, b, c, dd, e, f)


def all_g_placements(d: ConormDiagram3):
    """Every valid (zero choice, co-line) labeling of a reduced diagram."""
    if any(v < 0 for v in d.values) or not d.zeros():
        raise ValueError("placement requires non-negative conorms with a zero")
    out = []
    for g in d.zeros():
        pairs = fano.pairs_through(g)
        for coline in fano.colines(g):
            cols = []
            for p, q_ in pairs:
                if p in coline:
                    cols.append((p, q_))
                else:
                    assert q_ in coline
                    cols.append((q_, p))
            cols.sort(key=lambda c: c[0])
            out.append(GPlacement(g=g, columns=tuple(cols)))
    return out


def canonical_g_placement(d: ConormDiagram3) -> GPlacement:
    """Deterministic placement: minimal (A..F) value tuple, then minimal positions."""
    placements = all_g_placements(d)
    return min(placements, key=lambda pl: (pl.letters(d), pl.g, pl.columns))


def _placement_invariant(d, fn, description):
    results = {fn(pl) for pl in all_g_placements(d)}
    if len(results) != 1:
        raise AmbiguousPlacement(f"{description} differs across G placements: {sorted(results)}")
    return results.pop()


def covering_radius_sq(d: ConormDiagram3) -> Fraction:
    """Squared covering radius: 4R^2 = A+..+F - (D' + 4 min(BECF, CFAD, ADBE)) / D."""
    delta = determinant(d)
    if delta == 0:
        raise ZeroDeterminant("degenerate diagram")
    dprime = second_determinant(d)

    def value(pl):
        a, b, c, dd, e, f = pl.letters(d)
        m = min(b * e * c * f, c * f * a * dd, a * dd * b * e)
        four_r2 = a + b + c + dd + e + f - (dprime + 4 * m) / delta
        return four_r2 / 4

    return _placement_invariant(d, value, "covering radius")


def edge_length_sq(d: ConormDiagram3, position: int) -> Fraction:
    """Squared length of the Voronoi-cell edges marked by one conorm.

    Equals x^2 * (dDelta/dx) / Delta for the conorm x at the given position;
    vanishes exactly when x does and scales linearly with the diagram.
    """
    delta = determinant(d)
    if delta == 0:
        raise ZeroDeterminant("degenerate diagram")
    x = d.values[position]
    partial = Fraction(0)
    for t in fano.TRIANGLES:
        if position in t:
            p = Fraction(1)
            for i in t:
                if i != position:
                    p *= d.values[i]
            partial += p
    return x * x * partial / delta


def dual_conorms(d: ConormDiagram3) -> ConormDiagram3:
    """Conorms of the dual lattice, by the closed-form identities over Delta."""
    delta = determinant(d)
    if delta == 0:
        raise ZeroDeterminant("degenerate diagram")

    def build(pl):
        a, b, c, dd, e, f = pl.letters(d)
        m = min(a * dd, b * e, c * f)
        vals = [Fraction(0)] * 7
        (pa, pd), (pb, pe), (pc, pf) = pl.columns
        vals[pa] = (a * dd - m) / delta
        vals[pb] = (b * e - m) / delta
        vals[pc] = (c * f - m) / delta
        vals[pd] = (a * e + a * f + e * f + m) / delta
        vals[pe] = (b * dd + b * f + dd * f + m) / delta
        vals[pf] = (c * dd + c * e + dd * e + m) / delta
        vals[pl.g] = (a * b + a * c + b * c + m) / delta
        return ConormDiagram3(tuple(vals), reduced=True)

    results = [build(pl) for pl in all_g_placements(d)]
    canon = {canonical_form(r) for r in results}
    if len(canon) != 1:
        raise AmbiguousPlacement("dual conorms differ across G placements")
    return results[0]


def canonical_form(d: ConormDiagram3) -> tuple:
    """Minimal relabeling of the values under the 168 collineations."""
    return min(fano.apply_collineation(perm, d.values) for perm in fano.COLLINEATIONS)


def lattices_isometric(d1: ConormDiagram3, d2: ConormDiagram3) -> bool:
    """Whether two reduced diagrams describe isometric lattices."""
    return canonical_form(d1) == canonical_form(d2)


def realize_gram(d: ConormDiagram3):
    """A basis Gram matrix of a lattice whose conorm diagram is d (needs a zero)."""
    zs = d.zeros()
    if not zs:
        raise ValueError("realization needs a zero conorm position")
    q = fano.POSITIONS.index("q")
    if q in zs:
        vals = d.values
    else:
        perm = next(p for p in fano.COLLINEATIONS if p[zs[0]] == q)
        vals = fano.apply_collineation(perm, d.values)
    p = {name: vals[i] for i, name in enumerate(fano.POSITIONS)}
    n1 = p["p01"] + p["p12"] + p["p13"]
    n2 = p["p02"] + p["p12"] + p["p23"]
    n3 = p["p03"] + p["p13"] + p["p23"]
    g = mat(
        [
            [n1, -p["p12"], -p["p13"]],
            [-p["p12"], n2, -p["p23"]],
            [-p["p13"], -p["p23"], n3],
        ]
    )
    if mat_det(g) <= 0:
        raise NotPositiveDefinite("diagram does not describe a positive-definite lattice")
    return g


def vonorm_oracle(g) -> VonormDiagram3:
    """Brute-force coset minima of L/2L for a basis Gram matrix (certified enumeration)."""
    vals = []
    for ci in range(7):
        nrm, _ = coset_minimum_mod2(g, fano.CHARS[ci])
        vals.append(nrm)
    return VonormDiagram3(tuple(vals))
