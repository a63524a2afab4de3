"""Exact JSON wire formats: rationals as "p/q" strings, never floats."""

from __future__ import annotations

from fractions import Fraction

from .conorms import ConormDiagram2, ConormDiagram3
from .cosmos import PARAM_NAMES, PlatycosmDescriptor
from .linalg import mat


def frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(s.strip())


def diagram3_to_json(d: ConormDiagram3):
    return [frac_str(v) for v in d.values]


def diagram3_from_json(vals, reduced=False) -> ConormDiagram3:
    return ConormDiagram3(tuple(parse_frac(v) for v in vals), reduced=reduced)


def diagram2_to_json(d: ConormDiagram2):
    return [frac_str(v) for v in d.values]


def gram_to_json(g):
    return [[frac_str(x) for x in row] for row in g]


def gram_from_json(rows):
    return mat([[parse_frac(x) for x in row] for row in rows])


def descriptor_to_json(desc: PlatycosmDescriptor):
    return {
        "type": desc.tag,
        "params": {k: frac_str(v) for k, v in desc.params.items()},
        "chirality": desc.chirality,
    }


def descriptor_from_json(data) -> PlatycosmDescriptor:
    return PlatycosmDescriptor(
        data["type"],
        {k: parse_frac(v) for k, v in data["params"].items()},
        data.get("chirality"),
    )


def parse_params(text: str, tag: str, lengths=False):
    """Parse "D=1,A=2/3" style parameter lists; --lengths squares the values."""
    out = {}
    for item in text.split(","):
        if not item.strip():
            continue
        k, _, v = item.partition("=")
        val = parse_frac(v)
        out[k.strip()] = val * val if lengths else val
    missing = set(PARAM_NAMES[tag]) - set(out)
    if missing:
        raise ValueError(f"{tag} needs parameters {sorted(missing)}")
    return out
