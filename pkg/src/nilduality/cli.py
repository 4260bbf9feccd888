"""
Command-line front end.

    nilduality orbits C 4 --filter ms
    nilduality dual mbv "4"
    nilduality verify --max-rank 6

Partitions are comma lists ("3,1"); "-" is the empty partition. Exit codes:
0 on success, 1 on a usage or input error, 2 when ``verify`` finds a
failing check.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import characters, collapses, duality, orbits, verify
from .errors import OrbitError
from .orbits import Family, OrbitFilter
from .partition import Partition

__all__ = ["main", "SCHEMAS"]

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2

_PARTITION_SCHEMA = {"type": "string", "pattern": r"^(-|[1-9][0-9]*(,[1-9][0-9]*)*)$"}
_HALFINT_SCHEMA = {"type": "string", "pattern": r"^(0|[1-9][0-9]*(/2)?)$"}
_CHAR_SCHEMA = {"type": "array", "items": _HALFINT_SCHEMA}

SCHEMAS: dict[str, dict] = {
    "orbits": {
        "type": "object",
        "required": ["family", "size", "filter", "orbits"],
        "properties": {
            "family": {"enum": ["A", "B", "C", "D"]},
            "size": {"type": "integer", "minimum": 0},
            "filter": {"enum": ["all", "special", "metaplectic_special"]},
            "orbits": {"type": "array", "items": _PARTITION_SCHEMA},
        },
        "additionalProperties": False,
    },
    "char": {
        "type": "object",
        "required": ["partition", "rank", "entries", "metaplectic_integral"],
        "properties": {
            "partition": _PARTITION_SCHEMA,
            "rank": {"type": "integer", "minimum": 0},
            "entries": _CHAR_SCHEMA,
            "metaplectic_integral": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
    "poset": {
        "type": "object",
        "required": ["family", "size", "filter", "nodes", "edges"],
        "properties": {
            "family": {"enum": ["A", "B", "C", "D"]},
            "size": {"type": "integer", "minimum": 0},
            "filter": {"enum": ["all", "special", "metaplectic_special"]},
            "nodes": {"type": "array", "items": _PARTITION_SCHEMA},
            "edges": {
                "type": "array",
                "items": {"type": "array", "items": _PARTITION_SCHEMA, "minItems": 2, "maxItems": 2},
            },
        },
        "additionalProperties": False,
    },
    "verify": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["check", "params", "instances", "failures", "witnesses", "elapsed_ms"],
            "properties": {
                "check": {"type": "string", "pattern": r"^C([1-9]|1[0-4])$"},
                "params": {
                    "type": "object",
                    "required": ["max_n", "a_offset"],
                    "properties": {
                        "max_n": {"type": "integer", "minimum": 1},
                        "a_offset": {"type": "integer", "minimum": 0},
                    },
                },
                "instances": {"type": "integer", "minimum": 0},
                "failures": {"type": "integer", "minimum": 0},
                "witnesses": {
                    "type": "array",
                    "items": {"type": "object", "required": ["input"], "properties": {"input": {"type": "object"}}},
                },
                "elapsed_ms": {"type": "integer", "minimum": 0},
            },
        },
    },
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family(text: str) -> Family:
    try:
        return Family(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"family must be one of A, B, C, D, not {text!r}") from None


def _filter(text: str) -> OrbitFilter:
    try:
        return OrbitFilter.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"filter must be all, sp or ms, not {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilduality", description="Combinatorics of classical nilpotent orbits and their dualities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("orbits", help="list nilpotent orbits of a family and size")
    p.add_argument("family", type=_family)
    p.add_argument("size", type=int)
    p.add_argument("--filter", type=_filter, default=OrbitFilter.ALL)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("dual", help="apply a duality map")
    p.add_argument("map", choices=["dls", "dsp", "dbv", "mls", "msp", "mbv"])
    p.add_argument("args", nargs="+", metavar="[family] partition")

    p = sub.add_parser("collapse", help="B/C/D-collapse of a partition")
    p.add_argument("family", type=_family)
    p.add_argument("partition", type=_partition)

    p = sub.add_parser("char", help="infinitesimal character of an orbit")
    p.add_argument("partition", type=_partition)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("lift", help="stable-range theta lift of an orbit or a character")
    p.add_argument("what", choices=["orbit", "char"])
    p.add_argument("value")
    p.add_argument("--a", type=int, required=True)

    p = sub.add_parser("pairing", help="row pairing of a type-C orbit")
    p.add_argument("partition", type=_partition)

    p = sub.add_parser("attach", help="character and orbit attached to a type-C orbit")
    p.add_argument("partition", type=_partition)

    p = sub.add_parser("verify", help="run the exhaustive checks C1..C14")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--a-offset", type=int, default=verify.DEFAULT_A_OFFSET)
    p.add_argument("--check", action="append", choices=[c for c in verify.CHECK_IDS], metavar="C1..C14")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("poset", help="Hasse diagram of dominance order on an orbit set")
    p.add_argument("family", type=_family)
    p.add_argument("size", type=int)
    p.add_argument("--filter", type=_filter, default=OrbitFilter.ALL)
    p.add_argument("--format", choices=["dot", "json"], required=True)
    return parser


def _emit(out, payload) -> None:
    out.write(json.dumps(payload, indent=2) + "\n")


def _cmd_orbits(args, out):
    found = orbits.enumerate_orbits(args.family, args.size, args.filter)
    if args.format == "json":
        _emit(out, {"family": args.family.value, "size": args.size, "filter": args.filter.value,
                    "orbits": [str(p) for p in found]})
    else:
        for p in found:
            out.write(f"{p}\n")
    return EXIT_OK


def _cmd_dual(args, out):
    needs_family = args.map in ("dls", "dsp", "dbv")
    if len(args.args) != (2 if needs_family else 1):
        want = "<family> <partition>" if needs_family else "<partition>"
        raise UsageError(f"dual {args.map} expects {want}")
    p = _parse_partition(args.args[-1])
    if needs_family:
        family = _parse_family(args.args[0])
        if args.map == "dls":
            result = duality.d_LS(p, family)
        elif args.map == "dsp":
            result = duality.d_SP(p, family)
        else:
            result = duality.d_BV(p, duality.DualPair.langlands(family, p.size))
    else:
        result = {"mls": duality.md_LS, "msp": duality.md_SP, "mbv": duality.md_BV}[args.map](p)
    out.write(f"{result}\n")
    return EXIT_OK


def _cmd_collapse(args, out):
    out.write(f"{collapses.collapse(args.partition, args.family)}\n")
    return EXIT_OK


def _cmd_char(args, out):
    chi = characters.infinitesimal_character(args.partition, args.rank)
    if args.format == "json":
        _emit(out, {"partition": str(args.partition), "rank": args.rank,
                    "entries": [str(e) for e in chi.entries],
                    "metaplectic_integral": characters.is_metaplectic_integral(chi)})
    else:
        out.write(f"{chi}\n")
    return EXIT_OK


def _cmd_lift(args, out):
    if args.what == "orbit":
        result = duality.theta_lift_orbit(_parse_partition(args.value), args.a)
    else:
        try:
            chi = characters.InfChar.parse(args.value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        result = characters.theta_lift_character(chi, args.a)
    out.write(f"{result}\n")
    return EXIT_OK


def _join(values) -> str:
    return ",".join(map(str, values)) if values else "-"


def _cmd_pairing(args, out):
    rp = characters.row_pairing(args.partition)
    out.write(f"distinct_even: {_join(rp.distinct_even)}\n")
    out.write(f"paired: {_join(rp.paired)}\n")
    out.write(f"core_columns: {_join(rp.core_columns)}\n")
    out.write(f"core: {rp.core()}\n")
    return EXIT_OK


def _cmd_attach(args, out):
    chi, orbit = characters.unipotent_attachment(args.partition)
    out.write(f"character: {chi}\n")
    out.write(f"orbit: {orbit}\n")
    return EXIT_OK


def _cmd_verify(args, out):
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    reports = verify.run_all(args.max_rank, args.a_offset, args.check, jobs=args.jobs)
    if args.format == "json":
        _emit(out, [r.to_dict() for r in reports])
    else:
        out.write(f"{'check':<6}{'instances':>10}{'failures':>10}{'ms':>8}  status\n")
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            out.write(f"{r.id:<6}{r.instances:>10}{r.failures:>10}{int(r.elapsed * 1000):>8}  {status}\n")
            for w in r.witnesses:
                out.write(f"      witness: {json.dumps(w)}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _dot_id(p: Partition) -> str:
    return f'"{p}"'


def _cmd_poset(args, out):
    nodes = orbits.enumerate_orbits(args.family, args.size, args.filter)
    edges = orbits.hasse_edges(nodes)
    if args.format == "json":
        _emit(out, {"family": args.family.value, "size": args.size, "filter": args.filter.value,
                    "nodes": [str(p) for p in nodes], "edges": [[str(p), str(q)] for p, q in edges]})
        return EXIT_OK
    out.write(f'digraph "{args.family.value}{args.size}" {{\n')
    out.write("  rankdir=BT;\n")
    for p in nodes:
        out.write(f"  {_dot_id(p)} [label={_dot_id(p)}];\n")
    for p, q in edges:
        out.write(f"  {_dot_id(p)} -> {_dot_id(q)};\n")
    out.write("}\n")
    return EXIT_OK


def _parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_family(text: str) -> Family:
    try:
        return _family(text)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(str(exc)) from None


_COMMANDS = {
    "orbits": _cmd_orbits,
    "dual": _cmd_dual,
    "collapse": _cmd_collapse,
    "char": _cmd_char,
    "lift": _cmd_lift,
    "pairing": _cmd_pairing,
    "attach": _cmd_attach,
    "verify": _cmd_verify,
    "poset": _cmd_poset,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"nilduality: usage error: {exc}\n")
    except (OrbitError, ValueError) as exc:
        err.write(f"nilduality: {type(exc).__name__}: {exc}\n")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
