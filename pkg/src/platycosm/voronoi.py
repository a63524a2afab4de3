"""Exact Voronoi cells of 3D lattices by half-space intersection.

The cell of the origin is cut out by the planes x.Gv = N(v)/2 over the
Voronoi vectors v, i.e. the norm-minimal vectors of the nontrivial cosets
of L/2L.  Vertices come from triples of planes; face and vertex counts
identify the five topological cell types, and the circumradius is the
covering radius of the lattice.  Everything is exact rational; this module
is the independent oracle for the closed-form conorm identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import fano
from .errors import ZeroDeterminant
from .lattices import check_positive_definite, coset_minimum_mod2
from .linalg import gram_norm, mat, mat_vec, solve, vec_sub

#: (faces, vertices) -> cell type tag
CELL_SIGNATURES = {
    (14, 24): "tO",
    (12, 18): "hD",
    (12, 14): "rD",
    (8, 12): "hP",
    (6, 8): "rC",
}


def voronoi_vectors(G):
    """All norm-minimal vectors of the seven cosets of L/2L, both signs."""
    out = set()
    for ci in range(7):
        _, vs = coset_minimum_mod2(G, fano.CHARS[ci])
        for v in vs:
            out.add(v)
            out.add(tuple(-x for x in v))
    return sorted(out)


@dataclass(frozen=True)
class VoronoiCell:
    gram: tuple
    vertices: tuple           # exact rational points, basis coordinates
    facets: tuple             # (lattice vector, tuple of vertex indices)
    circumradius_sq: Fraction

    @property
    def face_count(self):
        return len(self.facets)

    @property
    def vertex_count(self):
        return len(self.vertices)

    def signature(self):
        return (self.face_count, self.vertex_count)

    def cell_type(self):
        return CELL_SIGNATURES.get(self.signature())

    def edges(self):
        """Vertex index pairs sharing two facets, with the facet vectors."""
        on_facet = {}
        for fi, (_, vids) in enumerate(self.facets):
            for vid in vids:
                on_facet.setdefault(vid, set()).add(fi)
        out = []
        for a, b in combinations(range(len(self.vertices)), 2):
            common = on_facet[a] & on_facet[b]
            if len(common) == 2:
                out.append((a, b, tuple(sorted(common))))
        return out


def voronoi_cell(G) -> VoronoiCell:
    G = mat(G)
    check_positive_definite(G)
    relevant = voronoi_vectors(G)
    planes = []
    for v in relevant:
        vf = tuple(map(Fraction, v))
        normal = mat_vec(G, vf)  # constraint x . normal <= rhs
        rhs = gram_norm(G, vf) / 2
        planes.append((v, normal, rhs))
    vertices = []
    for trip in combinations(planes, 3):
        A = tuple(p[1] for p in trip)
        b = tuple(p[2] for p in trip)
        sol = solve(A, b)
        if sol is None or sol[1]:
            continue
        x = sol[0]
        if all(sum(n_i * x_i for n_i, x_i in zip(normal, x)) <= rhs for _, normal, rhs in planes):
            if x not in vertices:
                vertices.append(x)
    vertices.sort()
    facets = []
    for v, normal, rhs in planes:
        ids = tuple(
            i
            for i, x in enumerate(vertices)
            if sum(n_i * x_i for n_i, x_i in zip(normal, x)) == rhs
        )
        if len(ids) >= 3:
            facets.append((v, ids))
    if not vertices:
        raise ZeroDeterminant("lattice has no bounded Voronoi cell")
    circ = max(gram_norm(G, x) for x in vertices)
    return VoronoiCell(
        gram=G, vertices=tuple(vertices), facets=tuple(facets), circumradius_sq=circ
    )


def covering_radius_oracle(G) -> Fraction:
    """Exact covering radius squared: the circumradius of the Voronoi cell."""
    return voronoi_cell(G).circumradius_sq


def edge_length_classes(cell: VoronoiCell):
    """Squared edge length per parallel edge class (direction up to sign)."""
    G = cell.gram
    classes = {}
    for a, b, _ in cell.edges():
        d = vec_sub(cell.vertices[a], cell.vertices[b])
        # normalize direction to a canonical representative up to sign/scale
        nz = next(x for x in d if x != 0)
        d_norm = tuple(x / nz for x in d)
        ln = gram_norm(G, vec_sub(cell.vertices[a], cell.vertices[b]))
        classes.setdefault(d_norm, set()).add(ln)
    for d_norm, lens in classes.items():
        assert len(lens) == 1, "edges of one parallel class must share their length"
    return {d_norm: lens.pop() for d_norm, lens in classes.items()}
