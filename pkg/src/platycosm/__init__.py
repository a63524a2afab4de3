"""Exact arithmetic for flat 3-manifolds and their lattices.

Submodules:

- conorms:  conorm/vonorm calculus and reduction for 2D and 3D lattices
- voronoi:  exact half-space Voronoi cells (the geometric oracle)
- bravo:    Voronoi / BraVo / Bravais lattice classification
- cosmos:   the ten compact platycosm types, parameters and catalogs
- groups:   affine space-group engine, homology, covers, recognition
- metrics:  systole, diameter, and their brute-force oracles
- cli:      the `cosm` command-line front end
"""

from .conorms import (
    ConormDiagram2,
    ConormDiagram3,
    Superbase3,
    VonormDiagram3,
    conorms_from_gram,
    conorms_from_vonorms,
    covering_radius_sq,
    determinant,
    dual_conorms,
    lattices_isometric,
    minimal_vonorm,
    putative_conorms,
    reduce2,
    reduce3,
    second_determinant,
    superbase_from_gram,
    vonorms,
)
from .cosmos import PlatycosmDescriptor, TAGS, TYPES, volume_sq
from .groups import (
    AffineIsometry,
    SpaceGroup,
    double_covers,
    homology,
    recognize,
    standard_generators,
    verify_relations,
)
from .metrics import MetricReport, OracleConfig, diameter_sq, metric_report, systole_sq

__all__ = [n for n in dir() if not n.startswith("_")]
