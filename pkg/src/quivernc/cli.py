"""Command-line surface.

Verbs: roots, ar, enumerate, map, table, verify.  The quiver argument is a
file path or inline DSL text.  All data output uses canonical orderings so
repeated runs are byte-identical.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap or
type error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import cluster as clus
from . import ncmap, replab, tors, verify
from .errors import NotFiniteTypeError, OracleCapError, QuiverSyntaxError
from .quiver import Quiver, coxeter_element_word, parse_quiver, positive_roots
from .weyl import (
    c_sorting_word,
    is_c_sortable,
    reduced_word,
    reflection,
    weyl_group,
    word_to_element,
)

USAGE_ERROR, CAP_ERROR = 2, 3


def _load_quiver(arg: str) -> Quiver:
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_quiver(fh.read())
    if "vertices" in arg:
        return parse_quiver(arg)
    raise QuiverSyntaxError(f"no such file and not inline DSL: {arg!r}")


def _root_str(r) -> str:
    return "[" + ",".join(str(x) for x in r) + "]"


def _set_str(s) -> str:
    return "+".join(_root_str(r) for r in sorted(s)) if s else "0"


def _cc_str(x: clus.CCIndec) -> str:
    return f"P{x.shift}[1]" if x.is_shift else "M" + _root_str(x.root)


def _ct_str(t) -> str:
    return "+".join(_cc_str(x) for x in sorted(t, key=clus.CCIndec.sort_key))


def _word_str(word) -> str:
    return "e" if not word else ".".join(f"s{v}" for v in word)


def _nc_str(q: Quiver, w) -> str:
    """Reflections render as s[root coords], other elements as reduced words."""
    root = next((r for r in positive_roots(q) if reflection(q, r) == w), None)
    if root is not None:
        return "s" + _root_str(root)
    return _word_str(reduced_word(q, w))


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def cmd_roots(q: Quiver, args) -> int:
    roots = positive_roots(q)
    if args.format == "json":
        print(_json([list(r) for r in roots]))
    else:
        for r in roots:
            print(_root_str(r))
    return 0


def cmd_ar(q: Quiver, args) -> int:
    if args.format == "dot":
        print(replab.ar_dot(q))
    elif args.format == "json":
        print(_json([[list(a), list(b)] for a, b in replab.ar_quiver(q)]))
    else:
        for a, b in replab.ar_quiver(q):
            print(f"{_root_str(a)}\t{_root_str(b)}")
    return 0


def _enumerate_rows(q: Quiver, what: str) -> list:
    if what == "torsion":
        return [sorted(t) for t in tors.enumerate_torsion_classes(q)]
    if what == "support-tilting":
        return [sorted(c) for c in tors.enumerate_support_tilting(q)]
    if what == "clusters":
        return [
            sorted(t, key=clus.CCIndec.sort_key)
            for t in clus.cluster_tilting_objects(q)
        ]
    if what == "nc":
        return [
            ncmap.nc_of_torsion(q, t) for t in tors.enumerate_torsion_classes(q)
        ]
    if what == "sortables":
        cword = coxeter_element_word(q)
        words = [
            c_sorting_word(q, w, cword)
            for w in weyl_group(q)
            if is_c_sortable(q, w, cword)
        ]
        return sorted(words, key=lambda w: (len(w), w))
    if what == "exceptional":
        return [list(s) for s in ncmap.complete_exceptional_sequences(q)]
    raise ValueError(f"unknown enumeration {what!r}")


def cmd_enumerate(q: Quiver, args) -> int:
    rows = _enumerate_rows(q, args.what)
    if args.format == "json":
        if args.what == "clusters":
            print(_json([[x.to_obj() for x in row] for row in rows]))
        elif args.what == "nc":
            print(_json([{"word": list(reduced_word(q, w)),
                          "matrix": [list(r) for r in w.mat]} for w in rows]))
        elif args.what == "sortables":
            print(_json([list(w) for w in rows]))
        else:
            print(_json([[list(r) for r in row] for row in rows]))
    else:
        for row in rows:
            if args.what == "clusters":
                print("+".join(_cc_str(x) for x in row))
            elif args.what == "nc":
                print(_nc_str(q, row))
            elif args.what == "sortables":
                print(_word_str(row))
            else:
                print("+".join(_root_str(r) for r in row) if row else "0")
    print(f"# {len(rows)} rows", file=sys.stderr)
    return 0


_CHAIN = ("cluster", "support", "torsion", "wide", "nc")


def _parse_object(q: Quiver, kind: str, text: str):
    obj = json.loads(text)
    if kind in ("support", "torsion", "wide"):
        return frozenset(tuple(r) for r in obj)
    if kind == "cluster":
        out = []
        for item in obj["summands"]:
            if "shift" in item:
                out.append(clus.cc_shift(item["shift"]))
            else:
                out.append(clus.cc_rep(tuple(item["rep"])))
        return frozenset(out)
    if kind in ("nc", "sortable"):
        return word_to_element(q, tuple(obj["word"]))
    raise ValueError(f"unknown object kind {kind!r}")


def _emit_object(q: Quiver, kind: str, obj) -> str:
    if kind in ("support", "torsion", "wide"):
        return _json([list(r) for r in sorted(obj)])
    if kind == "cluster":
        return _json(
            {"summands": [x.to_obj() for x in sorted(obj, key=clus.CCIndec.sort_key)]}
        )
    if kind in ("nc", "sortable"):
        return _json(
            {"word": list(reduced_word(q, obj)), "matrix": [list(r) for r in obj.mat]}
        )
    raise ValueError(f"unknown object kind {kind!r}")


def _map_step(q: Quiver, src: str, dst: str, obj):
    if (src, dst) == ("cluster", "support"):
        return clus.support_tilting_of(obj)
    if (src, dst) == ("support", "cluster"):
        return clus.complete_support_tilting(q, obj)
    if (src, dst) == ("support", "torsion"):
        return tors.gen(q, obj)
    if (src, dst) == ("torsion", "support"):
        return tors.ext_projectives(q, obj)
    if (src, dst) == ("torsion", "wide"):
        return tors.a_of(q, obj)
    if (src, dst) == ("wide", "torsion"):
        return tors.gen(q, obj)
    if (src, dst) == ("wide", "nc"):
        return ncmap.cox_of_wide(q, obj)
    if (src, dst) == ("nc", "wide"):
        for t in tors.enumerate_torsion_classes(q):
            wide = tors.a_of(q, t)
            if ncmap.cox_of_wide(q, wide) == obj:
                return wide
        raise ValueError("group element is not a noncrossing partition of this quiver")
    if (src, dst) == ("torsion", "sortable"):
        return ncmap.sortable_of_torsion(q, obj)
    if (src, dst) == ("sortable", "torsion"):
        return ncmap.torsion_of_sortable(q, obj)
    raise ValueError(f"no direct map from {src} to {dst}")


def _map_object(q: Quiver, src: str, dst: str, obj):
    if src == dst:
        return obj
    if "sortable" in (src, dst):
        if src == "sortable":
            return _map_object(q, "torsion", dst, _map_step(q, "sortable", "torsion", obj))
        obj = _map_object(q, src, "torsion", obj)
        return _map_step(q, "torsion", "sortable", obj)
    i, j = _CHAIN.index(src), _CHAIN.index(dst)
    step = 1 if j > i else -1
    while i != j:
        obj = _map_step(q, _CHAIN[i], _CHAIN[i + step], obj)
        i += step
    return obj


def cmd_map(q: Quiver, args) -> int:
    obj = _parse_object(q, args.src, args.object)
    out = _map_object(q, args.src, args.dst, obj)
    print(_emit_object(q, args.dst, out))
    return 0


def cmd_table(q: Quiver, args) -> int:
    """One row per torsion class: the full correspondence chain.

    Roots in the text table carry their AR-quiver position as [coords]#k.
    """
    if q.n > 4:
        raise OracleCapError("table is capped at rank 4")
    cword = coxeter_element_word(q)
    ar_pos = {r: i + 1 for i, r in enumerate(replab.ar_linear_order(q))}

    def root_at(r) -> str:
        return f"{_root_str(r)}#{ar_pos[r]}"

    def set_at(s) -> str:
        return "+".join(root_at(r) for r in sorted(s)) if s else "0"

    def ct_at(t) -> str:
        return "+".join(
            f"P{x.shift}[1]" if x.is_shift else "M" + root_at(x.root)
            for x in sorted(t, key=clus.CCIndec.sort_key)
        )

    rows = []
    for t in tors.enumerate_torsion_classes(q):
        c = tors.ext_projectives(q, t)
        ct = clus.complete_support_tilting(q, c)
        wide = tors.a_of(q, t)
        nc = ncmap.nc_of_torsion(q, t)
        w = ncmap.sortable_of_torsion(q, t)
        rows.append((ct, c, t, wide, nc, w))
    if args.format == "json":
        print(
            _json(
                {
                    "ar_order": [list(r) for r in replab.ar_linear_order(q)],
                    "rows": [
                        {
                            "cluster_tilting": [x.to_obj() for x in sorted(ct, key=clus.CCIndec.sort_key)],
                            "support_tilting": [list(r) for r in sorted(c)],
                            "torsion_class": [list(r) for r in sorted(t)],
                            "wide_subcategory": [list(r) for r in sorted(wide)],
                            "nc_word": list(reduced_word(q, nc)),
                            "nc_matrix": [list(r) for r in nc.mat],
                            "sortable_word": list(c_sorting_word(q, w, cword)),
                        }
                        for ct, c, t, wide, nc, w in rows
                    ],
                }
            )
        )
    else:
        print("cluster_tilting\tsupport_tilting\ttorsion_class\twide_subcategory\tnc\tsortable")
        for ct, c, t, wide, nc, w in rows:
            print(
                "\t".join(
                    [
                        ct_at(ct),
                        set_at(c),
                        set_at(t),
                        set_at(wide),
                        _nc_str(q, nc),
                        _word_str(c_sorting_word(q, w, cword)),
                    ]
                )
            )
    return 0


def cmd_verify(q: Quiver, args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    threads = int(os.environ.get("QUIVERNC_THREADS", "1"))
    if threads > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {
                name: pool.submit(verify.SUITES[name], q, args.seed, args.cap)
                for name in names
            }
            reports = [futures[name].result() for name in names]
    else:
        reports = [verify.SUITES[name](q, args.seed, args.cap) for name in names]
    failed = False
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        print(
            f"{rep.suite}: {status} ({rep.instances} instances,"
            f" {len(rep.failures)} failures, {rep.wall_time:.2f}s)"
        )
        for payload in rep.failures:
            print(f"  counterexample: {payload}")
        if args.format == "json":
            print(rep.to_json())
        failed = failed or not rep.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivernc",
        description="Torsion classes, clusters, noncrossing partitions and "
        "their bijections for finite-type quivers.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("quiver", help="path to a quiver file, or inline DSL")
        p.add_argument("--format", choices=("tsv", "json", "dot"), default="tsv")
        return p

    add("roots", help="positive roots in canonical order")
    add("ar", help="Auslander-Reiten quiver (tsv, json or dot)")
    p = add("enumerate", help="enumerate objects of one kind")
    p.add_argument(
        "--what",
        required=True,
        choices=("torsion", "support-tilting", "clusters", "nc", "sortables", "exceptional"),
    )
    p = add("map", help="map an object across the bijection chain")
    p.add_argument("--from", dest="src", required=True,
                   choices=("cluster", "support", "torsion", "wide", "nc", "sortable"))
    p.add_argument("--to", dest="dst", required=True,
                   choices=("cluster", "support", "torsion", "wide", "nc", "sortable"))
    p.add_argument("--object", required=True, help="JSON encoding of the source object")
    add("table", help="the full correspondence table, one row per torsion class")
    p = add("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        default="all",
        choices=tuple(verify.SUITES) + ("all",),
    )
    p.add_argument("--seed", type=int, default=0, help="seed for random stability coefficients")
    p.add_argument("--cap", type=int, default=12, help="oracle total-dimension cap")
    return parser


COMMANDS = {
    "roots": cmd_roots,
    "ar": cmd_ar,
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "table": cmd_table,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        q = _load_quiver(args.quiver)
        return COMMANDS[args.verb](q, args)
    except (NotFiniteTypeError, OracleCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP_ERROR
    except (QuiverSyntaxError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
