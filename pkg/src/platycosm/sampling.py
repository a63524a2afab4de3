"""Random draws of Gram matrices, reduced diagrams, and platycosm descriptors.

Used by the property/acceptance suites and the survey scripts; everything is
driven by a caller-supplied random.Random so runs are reproducible.
"""

from __future__ import annotations

from fractions import Fraction

from .conorms import ConormDiagram3, conorms_from_gram, reduce3
from .cosmos import PlatycosmDescriptor, TAGS
from .lattices import is_positive_definite
from .linalg import mat


def random_gram3(rng, lo=-10, hi=10):
    """A random symmetric positive-definite integer Gram matrix, entries in [lo, hi]."""
    while True:
        a = rng.randint(1, hi)
        b = rng.randint(1, hi)
        c = rng.randint(1, hi)
        d = rng.randint(lo, hi)
        e = rng.randint(lo, hi)
        f = rng.randint(lo, hi)
        g = mat([[a, d, e], [d, b, f], [e, f, c]])
        if is_positive_definite(g):
            return g


def random_gram2(rng, lo=-10, hi=10):
    while True:
        a = rng.randint(1, hi)
        b = rng.randint(1, hi)
        c = rng.randint(lo, hi)
        g = mat([[a, c], [c, b]])
        if is_positive_definite(g):
            return g


def random_reduced_diagram(rng) -> ConormDiagram3:
    return conorms_from_gram(random_gram3(rng))


def random_patterned_diagram(rng) -> ConormDiagram3:
    """Reduced diagrams with forced equalities/zeros, to hit the rare classes."""
    from . import fano

    pool = [Fraction(rng.randint(1, 4)) for _ in range(3)]
    vals = [pool[rng.randrange(3)] if rng.random() < 0.8 else Fraction(0) for _ in range(6)]
    vals.append(Fraction(0))
    perm = fano.COLLINEATIONS[rng.randrange(len(fano.COLLINEATIONS))]
    d = ConormDiagram3(fano.apply_collineation(perm, tuple(vals)))
    from .conorms import determinant

    if determinant(d) <= 0:
        return random_patterned_diagram(rng)
    return reduce3(d)


def random_fraction(rng, max_num=8, max_den=3, allow_zero=False):
    if allow_zero and rng.random() < 0.2:
        return Fraction(0)
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_descriptor(tag: str, rng, small=False) -> PlatycosmDescriptor:
    hi = 4 if small else 8
    q = lambda **kw: random_fraction(rng, max_num=hi, **kw)
    chir = rng.choice(["dextral", "sinistral"]) if tag in ("c3", "c4", "c6") else None
    if tag == "c1":
        d = random_reduced_diagram(rng)
        from .groups import _c1_descriptor

        return _c1_descriptor(d)
    if tag == "c2":
        return PlatycosmDescriptor(
            tag, {"D": q(), "A": q(), "B": q(), "C": q(allow_zero=True)}
        )
    if tag in ("c3", "c4", "c6"):
        return PlatycosmDescriptor(tag, {"D": q(), "A": q()}, chir)
    if tag == "c22":
        return PlatycosmDescriptor(tag, {"A": q(), "B": q(), "C": q()})
    if tag in ("+a1", "-a1"):
        return PlatycosmDescriptor(
            tag, {"D": q(), "A": q(allow_zero=True), "B": q(), "C": q()}
        )
    if tag in ("+a2", "-a2"):
        return PlatycosmDescriptor(tag, {"D": q(), "A": q(), "B": q()})
    raise ValueError(tag)


def random_descriptors(rng, per_type=1, small=False):
    out = []
    for tag in TAGS:
        for _ in range(per_type):
            out.append(random_descriptor(tag, rng, small=small))
    return out
