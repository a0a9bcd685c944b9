"""
Command-line interface.

Exit status: 0 on success, 1 on a domain error (one-line diagnostic on
stderr), 2 on malformed input.  ``--json`` switches any subcommand to JSON
output carrying a ``schema`` version field.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import perm as P
from .chirality import chirality, intersection_cover
from .genwords import canonical_form, normalize, parse_tokens
from .gl2 import classify_gl, classify_pgl, parse_matrix
from .hypermap import (
    OMap,
    apply_operation,
    apply_operation_u,
    from_json,
    info,
    isomorphism,
    to_json,
    umap_info,
    umap_isomorphism,
)
from .regular import enumerate_classes, format_class_table, operation_orbits, parse_group, parse_pair

SCHEMA = 1


class Malformed(Exception):
    pass


def _parse(fn, *args):
    try:
        return fn(*args)
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        raise Malformed(str(exc)) from exc


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **data}, sort_keys=True))
    else:
        print(text)


def _read_map(path: str):
    with open(path) as fh:
        data = json.load(fh)
    if "map" in data and "kind" not in data:
        data = data["map"]
    return from_json(data)


def _info_dict(mi) -> dict:
    return {"type": list(mi.type), "counts": list(mi.counts), "euler": mi.euler,
            "genus": mi.genus, "orientable": mi.orientable}


def cmd_classify(args):
    A = _parse(parse_matrix, args.matrix)
    label = classify_pgl(A) if args.projective else classify_gl(A)
    _emit(args, str(label), {"group": label.group, "class": label.name,
                             "order": label.order if label.periodic else "infinite"})


def cmd_canon(args):
    A = _parse(parse_matrix, args.matrix)
    w = canonical_form(A, projective=args.projective)
    _emit(args, str(w), {"word": str(w), "sign": w.sign, "eta": w.eta})


def cmd_op_apply(args):
    M = _parse(_read_map, args.map)
    toks, lower = _parse(parse_tokens, args.word)
    oriented = isinstance(M, OMap)
    if lower is not None and lower == oriented:
        raise ValueError("word case does not match the hypermap kind "
                         "(uppercase for oriented, lowercase for unoriented)")
    w = normalize(toks, projective=not oriented)
    if oriented:
        R = apply_operation(M, w)
        mi = info(R)
    else:
        R = apply_operation_u(M, w)
        mi = umap_info(R)
    data = to_json(R)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh)
            fh.write("\n")
    if args.json:
        _emit(args, "", {"map": data, "info": _info_dict(mi)})
    else:
        if not args.out:
            print(json.dumps(data))
        print(mi)


def cmd_map_info(args):
    if args.map:
        M = _parse(_read_map, args.map)
    else:
        if args.rho0 is None or args.rho2 is None:
            raise Malformed("give --map or both --rho0 and --rho2")
        n = args.darts
        M = _parse(lambda: OMap(P.parse_cycles(args.rho0, n or _degree(args)),
                                P.parse_cycles(args.rho2, n or _degree(args))))
    mi = info(M) if isinstance(M, OMap) else umap_info(M)
    _emit(args, str(mi), _info_dict(mi))


def _degree(args) -> int:
    return max(len(P.parse_cycles(args.rho0)), len(P.parse_cycles(args.rho2)))


def cmd_iso(args):
    M1 = _parse(_read_map, args.map)
    M2 = _parse(_read_map, args.other)
    if type(M1) is not type(M2):
        raise ValueError("cannot compare oriented with unoriented hypermaps")
    phi = isomorphism(M1, M2) if isinstance(M1, OMap) else umap_isomorphism(M1, M2)
    text = f"isomorphic={'true' if phi else 'false'}"
    if phi:
        text += " witness=" + ",".join(str(x + 1) for x in phi)
    _emit(args, text, {"isomorphic": phi is not None,
                       "witness": None if phi is None else [x + 1 for x in phi]})


def _split_ops(text: str) -> list[str]:
    if "," in text or ";" in text:
        return [s.strip() for s in text.replace(";", ",").split(",") if s.strip()]
    return text.split()


def _classes_and_orbits(args, ops):
    G = _parse(parse_group, args.group)
    words = [_parse(normalize, op, False) for op in ops]
    classes = enumerate_classes(G, bound=args.bound, threads=args.threads)
    blocks = operation_orbits(G, classes, words) if words else None
    return G, classes, blocks


def _class_dicts(classes):
    return [{"id": i, "type": list(c.type), "genus": c.genus, "size": c.size, "pair": str(c.pair)}
            for i, c in enumerate(classes)]


def _block_lines(blocks):
    return [f"orbit\t{i}\t{len(b)}\t" + ",".join(map(str, b)) for i, b in enumerate(blocks)]


def cmd_enumerate(args):
    ops = _split_ops(args.orbits) if args.orbits else []
    _, classes, blocks = _classes_and_orbits(args, ops)
    text = format_class_table(classes)
    if blocks is not None:
        text += "\n" + "\n".join(_block_lines(blocks))
    _emit(args, text, {"classes": _class_dicts(classes), "orbits": blocks})


def cmd_orbits(args):
    _, classes, blocks = _classes_and_orbits(args, args.op or [])
    if blocks is None:
        blocks = [[i] for i in range(len(classes))]
    _emit(args, "\n".join(_block_lines(blocks)),
          {"classes": _class_dicts(classes), "orbits": blocks})


def cmd_chirality(args):
    G = _parse(parse_group, args.group)
    pair = _parse(parse_pair, args.pair, G.degree)
    w = _parse(normalize, args.word, False)
    if args.cover:
        G, pair = intersection_cover(G, pair, w, args.cover)
    r = chirality(G, pair, w)
    _emit(args, "\n".join(r.lines()), r.to_dict())


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperop", description="Operations on hypermaps.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    p = add("classify", cmd_classify, "conjugacy class and order of a matrix")
    p.add_argument("--matrix", required=True, help="'a,b;c,d'")
    p.add_argument("--projective", action="store_true", help="classify in PGL2(Z)")

    p = add("canon", cmd_canon, "canonical word of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--projective", action="store_true")

    p = add("op-apply", cmd_op_apply, "apply an operation to a hypermap file")
    p.add_argument("--word", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--out")

    p = add("map-info", cmd_map_info, "type, counts, Euler characteristic and genus")
    p.add_argument("--map")
    p.add_argument("--rho0", help="cycle notation")
    p.add_argument("--rho2", help="cycle notation")
    p.add_argument("--darts", type=int)

    p = add("iso", cmd_iso, "test two hypermaps for isomorphism")
    p.add_argument("--map", required=True)
    p.add_argument("--other", required=True)

    for name, fn, help in (("enumerate", cmd_enumerate, "orientably regular hypermaps of a group"),
                           ("orbits", cmd_orbits, "orbits of operations on regular hypermaps")):
        p = add(name, fn, help)
        p.add_argument("--group", required=True, help="A5, S4, C7, D6, or JSON")
        p.add_argument("--bound", type=int, default=120, help="largest group order enumerated")
        p.add_argument("--threads", type=int, default=1)
        if name == "enumerate":
            p.add_argument("--orbits", help="operations, e.g. 'X Y T' or 'X T, Y'")
        else:
            p.add_argument("--op", action="append", help="operation word (repeatable)")

    p = add("chirality", cmd_chirality, "generalised chirality groups")
    p.add_argument("--group", required=True)
    p.add_argument("--pair", required=True, help="'<cycles of g2>;<cycles of g0>'")
    p.add_argument("--word", required=True)
    p.add_argument("--cover", type=int, help="first pass to the cover for the first N images")
    return ap


_VALUE_OPTS = {"--matrix", "--word", "--pair", "--op", "--orbits"}


def _glue_values(argv: list[str]) -> list[str]:
    # values such as "-2,-3;1,2" or "-I T" would otherwise be read as options
    out = []
    it = iter(argv)
    for a in it:
        if a in _VALUE_OPTS:
            v = next(it, None)
            out.append(a if v is None else f"{a}={v}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        args.fn(args)
    except Malformed as exc:
        print(f"hyperop: malformed input: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"hyperop: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
