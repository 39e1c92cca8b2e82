"""csspectra command line: deterministic JSON/TSV output.

Exit codes: 0 success, 1 verdict Obstructed or NoObstruction (or a table1 mismatch),
2 input error,
3 internal assertion (e.g. an index that is not an integer).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from .knot2 import ORIENTATIONS, ConstraintError, KnotSyntaxError, UnsupportedKnot, format_knot, knot_spectrum, parse_knot
from .obstruct import (
    NO_OBSTRUCTION, OBSTRUCTED, RULES, Brieskorn, MirrorBrieskorn, NotFound, TableError, YSyntaxError,
    check_embedding_negative_definite, check_ribbon_obstruction, check_seifert_hypersurface, format_y,
    load_table, parse_y, q_rigidity, rigid_spectrum,
)
from .seifert import InvalidSeifertData, NotPairwiseCoprime
from .spectra import NonIntegral, NonRational, NotCoprime, lens_spectrum, seifert_record

SCHEMA_VERSION = "1.0"

INPUT_ERRORS = (
    NotPairwiseCoprime, InvalidSeifertData, NotCoprime, KnotSyntaxError, ConstraintError,
    UnsupportedKnot, YSyntaxError, TableError, NotFound, ValueError, OSError,
)
INTERNAL_ERRORS = (NonIntegral, NonRational, AssertionError)


class InputError(Exception):
    def __init__(self, kind: str, message: str, offset=None):
        super().__init__(message)
        self.kind = kind
        self.offset = offset


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError("UsageError", message)


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError("UsageError", f"expected comma separated integers, got {text!r}") from None


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _statement(rule: str) -> str:
    if rule.startswith("lookup:"):
        return f"known invariant table entry {rule[len('lookup:'):]}"
    return RULES.get(rule, rule)


def envelope(command: str, inputs: dict, result, citations=()) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "citations": [{"rule": c, "statement": _statement(c)} for c in citations],
    }


def tsv(header, rows) -> str:
    out = ["\t".join(header)]
    out.extend("\t".join(str(x) for x in row) for row in rows)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- commands

def cmd_seifert(args):
    a = _ints(args.a)
    rec = seifert_record(a, args.orientation)
    comps = [{
        "rotation": list(r.component.l),
        "holonomy_sign": r.component.holonomy_sign,
        "e": r.component.e,
        "cs": str(r.cs),
        "index": r.index,
        "topology": r.component.topology,
    } for r in rec.components]
    result = {
        "normalized_multiplicities": list(rec.data.a),
        "seifert_invariant": {"b": rec.data.b, "b_i": list(rec.data.bs)},
        "components": comps,
        "spectrum": rec.spectrum.strings(),
        "nu": str(rec.nu),
        "l_total": rec.l_total,
        "casson_abs": rec.casson_abs,
        "r_invariant": str(rec.r_invariant),
    }
    inputs = {"a": list(a), "orientation": args.orientation}
    text = tsv(("rotation", "e", "cs", "index", "topology"),
               [(",".join(map(str, c["rotation"])), c["e"], c["cs"], c["index"], c["topology"]) for c in comps])
    return envelope("seifert", inputs, result), text, 0


def cmd_lens(args):
    spec = lens_spectrum(args.p, args.q)
    result = {"spectrum": spec.strings(), "kind": spec.kind.value}
    return envelope("lens", {"p": args.p, "q": args.q}, result), tsv(("value",), [(v,) for v in spec.strings()]), 0


def cmd_knot(args):
    k = parse_knot(args.expr)
    res = knot_spectrum(k, args.j, args.orientation)
    inputs = {"expr": format_knot(k), "j": args.j, "orientation": args.orientation}
    text = tsv(("value",), [(v,) for v in res.spectrum.strings()])
    return envelope("knot", inputs, res.to_json()), text, 0


def _verdict_exit(status: str) -> int:
    return 1 if status in (OBSTRUCTED, NO_OBSTRUCTION) else 0


def _verdict_tsv(by: dict) -> str:
    return tsv(("orientation", "status", "citations"),
               [(o, v.status, ",".join(v.citations)) for o, v in by.items()])


def cmd_obstruct(args):
    table = load_table(args.table)
    y = parse_y(args.y)
    inputs = {"y": format_y(y), "table_version": table.version}
    what = args.what
    if what == "hypersurface":
        if not args.knot:
            raise InputError("UsageError", "obstruct hypersurface needs --knot")
        k = parse_knot(args.knot)
        inputs.update(knot=format_knot(k), orientation=args.orientation)
        res = check_seifert_hypersurface(y, k, table, args.orientation)
        v = res["verdict"]
        result = dict(v.to_json(), by_orientation={o: x.to_json() for o, x in res["by_orientation"].items()})
        return envelope("obstruct hypersurface", inputs, result, v.citations), _verdict_tsv(res["by_orientation"]), _verdict_exit(v.status)
    if what == "ribbon":
        v = check_ribbon_obstruction(y, table)
        return envelope("obstruct ribbon", inputs, v.to_json(), v.citations), _verdict_tsv({"-": v}), _verdict_exit(v.status)
    if what == "embed":
        if not isinstance(y, (Brieskorn, MirrorBrieskorn)):
            raise InputError("UsageError", "obstruct embed needs a single brieskorn descriptor")
        inputs["connected_rep_space"] = args.connected_rep_space
        v = check_embedding_negative_definite(y, args.connected_rep_space)
        return envelope("obstruct embed", inputs, v.to_json(), v.citations), _verdict_tsv({"-": v}), _verdict_exit(v.status)
    if what == "rigid":
        spec = rigid_spectrum(y, table)
        result = {"spectrum": None if spec is None else spec.strings()}
        vals = [] if spec is None else [(s,) for s in spec.strings()]
        return envelope("obstruct rigid", inputs, result, ["rigid-image"] if spec else []), tsv(("value",), vals), 0
    if what == "qrigid":
        q = q_rigidity(y, table)
        result = {"q": None if q is None else str(q)}
        return envelope("obstruct qrigid", inputs, result, ["q-rigidity"] if q else []), tsv(("q",), [(result["q"] or "none",)]), 0
    if what == "lookup":
        entry = table.lookup(y)
        return envelope("obstruct lookup", inputs, entry.to_json()), tsv(("id",), [(entry.id,)]), 0
    raise InputError("UsageError", f"unknown obstruct check {what!r}")


def read_golden(path=None) -> dict:
    if path is None:
        text = resources.files("csspectra.data").joinpath("table1_2357.tsv").read_text()
    else:
        text = Path(path).read_text()
    rows = {}
    for n, line in enumerate(text.splitlines()[1:], start=2):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise InputError("GoldenFormatError", f"line {n}: expected 4 tab separated fields")
        try:
            rows[parts[0]] = (int(parts[1]), int(parts[2]), parts[3])
        except ValueError:
            raise InputError("GoldenFormatError", f"line {n}: non-integer field") from None
    return rows


def table1_rows() -> dict:
    rec = seifert_record((2, 3, 5, 7))
    out = {}
    for r in rec.components:
        if r.cs.denominator and 840 % r.cs.denominator:
            raise AssertionError(f"cs value {r.cs} is not over 840")
        num = r.cs.numerator * (840 // r.cs.denominator)
        out[",".join(map(str, r.component.l))] = (num, r.index, r.component.topology)
    return out


def cmd_table1(args):
    golden = read_golden(args.golden)
    computed = table1_rows()
    rows, diff = [], []
    for key in sorted(set(golden) | set(computed), key=lambda s: tuple(map(int, s.split(",")))):
        g, c = golden.get(key), computed.get(key)
        ok = g == c
        rows.append({"rotation": key, "computed": None if c is None else list(c),
                     "golden": None if g is None else list(g), "match": ok})
        if not ok:
            diff.append(f"{key}: golden {g} computed {c}")
    matched = sum(r["match"] for r in rows)
    result = {"matched": matched, "total": len(rows), "identical": not diff, "rows": rows, "diff": diff}
    text = tsv(("rotation", "cs_numerator", "index", "topology", "match"),
               [(r["rotation"], *(r["computed"] or ("-", "-", "-")), "yes" if r["match"] else "no") for r in rows])
    inputs = {"golden": "packaged" if args.golden is None else str(args.golden)}
    return envelope("table1", inputs, result), text, 0 if not diff else 1


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="csspectra", description="Chern-Simons spectra and 2-knot obstructions")
    p.add_argument("--version", action="version", version=f"csspectra {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "tsv"), default="json")

    sp = sub.add_parser("seifert", help="flat SU(2) components and invariants of Sigma(a)")
    sp.add_argument("--a", required=True, help="multiplicities, e.g. 2,3,5")
    sp.add_argument("--orientation", choices=ORIENTATIONS, default="raw")
    fmt(sp)
    sp.set_defaults(func=cmd_seifert)

    sp = sub.add_parser("lens", help="spectrum of the lens space L(p,q)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_lens)

    sp = sub.add_parser("knot", help="Im cs_{K,j} of a 2-knot expression")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--j", type=int, default=1)
    sp.add_argument("--orientation", choices=ORIENTATIONS, default="raw")
    fmt(sp)
    sp.set_defaults(func=cmd_knot)

    sp = sub.add_parser("obstruct", help="obstruction verdicts and table queries")
    sp.add_argument("what", choices=("hypersurface", "ribbon", "embed", "rigid", "qrigid", "lookup"))
    sp.add_argument("--y", required=True, help='e.g. "mirror-brieskorn(2,3,11)"')
    sp.add_argument("--knot")
    sp.add_argument("--orientation", choices=ORIENTATIONS, default="raw")
    sp.add_argument("--connected-rep-space", action="store_true",
                    help="assert R(X_{j,c}) is connected for some j")
    sp.add_argument("--table", help="invariant table path (default: $CS_SPECTRUM_TABLE or packaged)")
    fmt(sp)
    sp.set_defaults(func=cmd_obstruct)

    sp = sub.add_parser("table1", help="regenerate the Sigma(2,3,5,7) table and diff it against the golden copy")
    sp.add_argument("--golden", help="golden TSV path (default: packaged copy)")
    fmt(sp)
    sp.set_defaults(func=cmd_table1)
    return p


def _error_object(kind: str, message: str, offset=None) -> dict:
    err = {"type": kind, "message": message}
    if offset is not None:
        err["offset"] = offset
    return {"schema_version": SCHEMA_VERSION, "error": err}


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        env, text, code = args.func(args)
    except InputError as exc:
        stdout.write(dump_json(_error_object(exc.kind, str(exc), exc.offset)))
        return 2
    except INTERNAL_ERRORS as exc:
        stdout.write(dump_json(_error_object(type(exc).__name__, str(exc))))
        return 3
    except INPUT_ERRORS as exc:
        stdout.write(dump_json(_error_object(type(exc).__name__, str(exc), getattr(exc, "offset", None))))
        return 2
    stdout.write(text if args.format == "tsv" else dump_json(env))
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
