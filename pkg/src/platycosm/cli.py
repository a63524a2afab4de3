"""Batch command-line front end: exact JSON (or aligned text) in and out.

Exit codes: 0 success, 1 domain error, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bravo, conorms, cosmos, groups, metrics, serialize
from .errors import PlatycosmError

JSON_KW = dict(indent=2, sort_keys=True, ensure_ascii=False)


class ParseError(Exception):
    pass


def _load_json_arg(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e


def _emit(args, payload, text_lines=None):
    if args.format == "json":
        print(json.dumps(payload, **JSON_KW))
    else:
        for line in text_lines or _default_text(payload):
            print(line)


def _default_text(payload, prefix=""):
    lines = []
    if isinstance(payload, dict):
        for k in sorted(payload):
            v = payload[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{prefix}{k}:")
                lines += _default_text(v, prefix + "  ")
            else:
                lines.append(f"{prefix}{k}: {_maybe_decimal(v)}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                lines += _default_text(v, prefix + "  ")
                lines.append("")
            else:
                lines.append(f"{prefix}- {_maybe_decimal(v)}")
    else:
        lines.append(f"{prefix}{_maybe_decimal(payload)}")
    return lines


def _maybe_decimal(v):
    if isinstance(v, str) and "/" in v:
        try:
            f = Fraction(v)
            return f"{v} (~{float(f):.6g})"
        except (ValueError, ZeroDivisionError):
            return v
    return v


def _descriptor_from_args(args):
    params = serialize.parse_params(args.params, args.type, lengths=args.lengths)
    return cosmos.PlatycosmDescriptor(args.type, params, getattr(args, "chirality", None))


def cmd_reduce(args):
    if args.gram:
        g = serialize.gram_from_json(_load_json_arg(args.gram))
        d = conorms.reduce3(conorms.putative_conorms(conorms.superbase_from_gram(g)))
        payload = {
            "conorms": serialize.diagram3_to_json(d),
            "vonorms": [serialize.frac_str(v) for v in conorms.vonorms(d).values],
            "determinant": serialize.frac_str(conorms.determinant(d)),
        }
        if args.oracle:
            vo = conorms.vonorm_oracle(g)
            if vo.values != conorms.vonorms(d).values:
                raise PlatycosmError("oracle mismatch: reduced vonorms differ from coset minima")
            payload["oracle"] = "vonorms-checked"
    elif args.conorms:
        vals = [serialize.parse_frac(v) for v in _load_json_arg(args.conorms)]
        if args.lengths:
            vals = [v * v for v in vals]
        if len(vals) == 7:
            d = conorms.reduce3(conorms.ConormDiagram3(tuple(vals)))
            payload = {
                "conorms": serialize.diagram3_to_json(d),
                "vonorms": [serialize.frac_str(v) for v in conorms.vonorms(d).values],
                "determinant": serialize.frac_str(conorms.determinant(d)),
            }
        elif len(vals) == 3:
            d2 = conorms.reduce2(conorms.ConormDiagram2(tuple(vals)))
            payload = {"conorms": serialize.diagram2_to_json(d2)}
        else:
            raise ParseError("--conorms takes 7 values (3D) or 3 values (2D)")
    else:
        raise ParseError("reduce needs --gram or --conorms")
    if args.lengths:
        payload["input_convention"] = "lengths (squared on ingestion)"
    _emit(args, payload)


def cmd_classify(args):
    g = serialize.gram_from_json(_load_json_arg(args.gram))
    d = conorms.conorms_from_gram(g)
    cls = bravo.bravo_class(d)
    payload = {
        "voronoi_type": cls.voronoi,
        "bravo_letter": cls.letter,
        "bravais_name": cls.bravais.name,
        "symmetry_factor": cls.bravais.symmetry_factor,
        "point_group_orbifold": cls.orbifold,
    }
    if args.oracle:
        from .voronoi import voronoi_cell

        cell = voronoi_cell(conorms.realize_gram(d))
        if cell.cell_type() != cls.voronoi:
            raise PlatycosmError("oracle mismatch: polytope signature disagrees with the classifier")
        payload["oracle"] = f"cell signature {cell.signature()} checked"
    _emit(args, payload)


def cmd_info(args):
    tag = args.type
    rec = cosmos.dictionary(tag)
    t = cosmos.TYPES[tag]
    seifert = cosmos.seifert_fibrations(tag)
    payload = {
        "type": tag,
        "systematic_name": rec.systematic,
        "common_name": rec.common,
        "orientable": t.orientable,
        "point_group": {"orbifold": t.point_group_orbifold, "order": t.point_group_order},
        "seifert_fibrations": [
            {"multiplicity": str(m), "base_orbifold": b} for m, b in seifert.fibrations
        ],
        "surface_families": [str(f) for f in cosmos.surface_families(tag)],
        "bravais_types": bravo.platycosm_bravais_types(tag),
    }
    _emit(args, payload)


def cmd_invariants(args):
    desc = _descriptor_from_args(args)
    rep = metrics.metric_report(desc)
    torsion, free = groups.homology(desc)
    payload = {
        "type": desc.tag,
        "params": {k: serialize.frac_str(v) for k, v in desc.params.items()},
        "chirality": desc.chirality,
        "volume_sq": serialize.frac_str(cosmos.volume_sq(desc)),
        "homology": groups.homology_string(desc),
        "homology_torsion": torsion,
        "homology_rank": free,
        "systole_sq": serialize.frac_str(rep.systole_sq),
        "injectivity_radius_sq": serialize.frac_str(rep.injectivity_radius_sq),
        "diameter_sq": serialize.frac_str(rep.diameter_sq),
        "diameter_kind": rep.diameter_kind,
        "witness": {"systole": rep.systole_witness, "diameter": rep.diameter_witness},
    }
    if args.lengths:
        payload["input_convention"] = "lengths (squared on ingestion)"
    if args.oracle:
        cfg = metrics.OracleConfig(grid_divisor=args.grid)
        if metrics.systole_oracle(desc) != rep.systole_sq:
            raise PlatycosmError("oracle mismatch: systole enumeration disagrees")
        lower, upper = metrics.diameter_oracle(desc, cfg)
        ok = (
            lower <= rep.diameter_sq
            if rep.diameter_kind == "orbit_lattice_bound"
            else lower <= rep.diameter_sq <= upper
        )
        if not ok:
            raise PlatycosmError("oracle mismatch: diameter outside the sampled interval")
        payload["oracle"] = {
            "systole": "checked",
            "diameter_interval": [serialize.frac_str(lower), serialize.frac_str(upper)],
        }
    _emit(args, payload)


def cmd_covers(args):
    desc = _descriptor_from_args(args)
    covers = groups.double_covers(desc)
    payload = {
        "type": desc.tag,
        "count": len(covers),
        "covers": [
            {
                "signs": {k: ("+" if v == 1 else "-") for k, v in h.items()},
                "cover": serialize.descriptor_to_json(c),
            }
            for h, c in covers
        ],
    }
    _emit(args, payload)


def cmd_recognize(args):
    with open(args.input, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    sg = groups.spacegroup_from_json(data)
    desc = groups.recognize(sg)
    _emit(args, serialize.descriptor_to_json(desc))


def cmd_dict(args):
    if args.infinite:
        payload = [
            {
                "tag": r.tag,
                "name": r.name,
                "parameters": list(r.parameters),
                "wolf": r.wolf,
                "recipe": r.recipe,
            }
            for r in cosmos.infinite_catalog()
        ]
        lines = [f"{r.tag:5s} {r.name}  [Wolf {r.wolf}]" for r in cosmos.infinite_catalog()]
        _emit(args, payload, lines)
        return
    if args.flatland:
        payload = cosmos.flatland_catalog()
        _emit(args, payload)
        return
    tags = [args.type] if args.type else list(cosmos.TAGS)
    payload = []
    lines = []
    for tag in tags:
        rec = cosmos.dictionary(tag)
        intl = " / ".join(f"{n}. {name}" for n, name in rec.international)
        payload.append(
            {
                "type": tag,
                "systematic": rec.systematic,
                "common": rec.common,
                "wolf": rec.wolf,
                "international": intl,
                "cdht": rec.cdht,
                "generators": list(rec.generators),
            }
        )
        common = f" ({rec.common})" if rec.common else ""
        lines.append(f"{tag:4s} {rec.systematic}{common} / Wolf {rec.wolf} / intl {intl} / CDHT {rec.cdht}")
    if args.type:
        payload = payload[0]
    _emit(args, payload, lines)


def build_parser():
    p = argparse.ArgumentParser(
        prog="cosm",
        description="Exact invariants of flat 3-manifolds and their lattices.",
    )
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, aliases=()):
        sp = sub.add_parser(name, aliases=list(aliases))
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--lengths", action="store_true",
                        help="interpret numeric inputs as lengths and square them")
        sp.add_argument("--oracle", action="store_true",
                        help="cross-check results against the brute-force oracles")
        sp.add_argument("--grid", type=int, default=8,
                        help="diameter-oracle resolution (systole length / N)")
        return sp

    sp = add("reduce", cmd_reduce)
    sp.add_argument("--gram", help="3x3 Gram matrix, JSON rows of p/q strings")
    sp.add_argument("--conorms", help="7 (3D) or 3 (2D) conorm values, JSON array")

    sp = add("classify-lattice", cmd_classify)
    sp.add_argument("--gram", required=True)

    sp = add("cosm-info", cmd_info, aliases=("info",))
    sp.add_argument("--type", required=True, choices=cosmos.TAGS)

    sp = add("cosm-invariants", cmd_invariants, aliases=("invariants",))
    sp.add_argument("--type", required=True, choices=cosmos.TAGS)
    sp.add_argument("--params", required=True, help='e.g. "D=1,A=2/3"')
    sp.add_argument("--chirality", choices=("dextral", "sinistral"))

    sp = add("cosm-covers", cmd_covers, aliases=("covers",))
    sp.add_argument("--type", required=True, choices=cosmos.TAGS)
    sp.add_argument("--params", required=True)
    sp.add_argument("--chirality", choices=("dextral", "sinistral"))

    sp = add("cosm-recognize", cmd_recognize, aliases=("recognize",))
    sp.add_argument("--input", required=True, help="space-group JSON file")

    sp = add("dict", cmd_dict)
    sp.add_argument("--type", choices=cosmos.TAGS)
    sp.add_argument("--infinite", action="store_true")
    sp.add_argument("--flatland", action="store_true")

    return p


def _merge_dash_types(argv):
    """Let `--type -a2` parse: fold type values starting with '-' into --type=."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--type":
            val = next(it, None)
            if val is None:
                out.append(tok)
            else:
                out.append(f"--type={val}")
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_dash_types(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    # helicosms of period > 2 default to dextral on the command line
    if getattr(args, "type", None) in ("c3", "c4", "c6") and not getattr(args, "chirality", None):
        args.chirality = "dextral"
    try:
        args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except PlatycosmError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
