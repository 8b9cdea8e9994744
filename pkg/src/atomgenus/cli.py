"""Command-line front end.

Verbs: planar, genus, rp2, klein, bracket, genfun, genfun-tilde, weight,
convert, check, random.  Inputs are framed chord diagrams (inline via
``--chord`` or one per line via ``--chord-file``) or framed 4-valent graphs
(``--graph`` file in the ``v.../e:...`` format, converted through a rotating
circuit).

Exit codes: 0 success (and "true" for boolean verbs); 1 boolean verb
answered "false" or a check suite found violations; 2 malformed input or an
enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random as random_module
import sys

from . import genus as genus_mod
from . import invariants, suites
from .chords import DiagramError, FramedChordDiagram, parse, serialize
from .enumeration import random_diagram
from .graphs import (
    GraphError,
    chord_diagram_of,
    parse_graph,
    random_framed_graph,
    rotating_circuit,
    serialize_graph,
)

OK, FALSE, INPUT_ERROR = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int = INPUT_ERROR):
        super().__init__(message)
        self.code = code


def _diagrams_from_args(args) -> list[FramedChordDiagram]:
    sources = [
        s for s in (args.chord, getattr(args, "chord_file", None), args.graph) if s
    ]
    if len(sources) != 1:
        raise CliError("provide exactly one of --chord, --chord-file, --graph")
    try:
        if args.chord is not None:
            return [parse(args.chord)]
        if getattr(args, "chord_file", None):
            with open(args.chord_file) as fh:
                lines = [ln for ln in fh if ln.split("#", 1)[0].strip()]
            return [parse(ln) for ln in lines]
        with open(args.graph) as fh:
            g = parse_graph(fh.read())
        circuit = rotating_circuit(g, variant=getattr(args, "variant", 0))
        return [chord_diagram_of(g, circuit)]
    except FileNotFoundError as e:
        raise CliError(str(e)) from e
    except (DiagramError, GraphError, ValueError) as e:
        raise CliError(str(e)) from e


def _threads(args) -> int | None:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("ATOMGENUS_THREADS")
    return int(env) if env and env.isdigit() else None


def _emit(args, text_line: str, json_obj) -> None:
    if args.json:
        print(json.dumps(json_obj, sort_keys=True))
    else:
        print(text_line)


def cmd_planar(args) -> int:
    code = OK
    for d in _diagrams_from_args(args):
        ok = genus_mod.is_planar(d)
        _emit(args, f"planar: {str(ok).lower()}", {"diagram": serialize(d), "planar": ok})
        if not ok:
            code = FALSE
    return code


def cmd_genus(args) -> int:
    for d in _diagrams_from_args(args):
        report = genus_mod.genus_spectrum(
            d, threshold=args.threshold, threads=_threads(args)
        )
        if args.json:
            print(json.dumps(report.to_json(), sort_keys=True))
        else:
            kind = "genus" if report.orientable else "crosscap"
            print(
                f"k={report.k} {'orientable' if report.orientable else 'non-orientable'} "
                f"rank sum {report.min_rank_sum}..{report.max_rank_sum} "
                f"{kind} {report.min_genus_or_crosscap}..{report.max_genus_or_crosscap} "
                f"surfaces: {', '.join(report.surfaces)}"
            )
    return OK


def _boolean_surface(args, fn, name: str) -> int:
    code = OK
    for d in _diagrams_from_args(args):
        ok, witness = fn(d)
        obj = {"diagram": serialize(d), name: ok}
        if ok:
            obj["witness"] = list(witness)
        _emit(args, f"{name}: {str(ok).lower()}", obj)
        if not ok:
            code = FALSE
    return code


def cmd_rp2(args) -> int:
    return _boolean_surface(args, genus_mod.embeds_in_rp2, "rp2")


def cmd_klein(args) -> int:
    return _boolean_surface(args, genus_mod.embeds_in_klein, "klein")


def _poly_verb(args, compute, note=None) -> int:
    for d in _diagrams_from_args(args):
        try:
            poly = compute(d)
        except ValueError as e:
            raise CliError(str(e)) from e
        obj = {"diagram": serialize(d), "poly": poly.to_json()}
        line = str(poly)
        if note:
            extra = note(d)
            if extra:
                obj["note"] = extra
                line = f"{line}  # {extra}"
        _emit(args, line, obj)
    return OK


def cmd_bracket(args) -> int:
    return _poly_verb(args, invariants.kauffman_bracket)


def cmd_genfun(args) -> int:
    return _poly_verb(args, lambda d: invariants.gen_fun_f(d, exponent=args.exponent))


def cmd_genfun_tilde(args) -> int:
    def note(d):
        return "extension: diagram has negative chords" if d.negatives else None

    return _poly_verb(
        args,
        lambda d: invariants.gen_fun_f_tilde(
            d, good_only=args.good_only, max_chords=args.max_chords
        ),
        note,
    )


def cmd_weight(args) -> int:
    return _poly_verb(
        args, lambda d: invariants.weight_system_gl(d, max_chords=args.max_chords)
    )


def cmd_convert(args) -> int:
    try:
        with open(args.graph) as fh:
            g = parse_graph(fh.read())
        circuit = rotating_circuit(g, variant=args.variant)
        d = chord_diagram_of(g, circuit)
    except FileNotFoundError as e:
        raise CliError(str(e)) from e
    except (GraphError, ValueError) as e:
        raise CliError(str(e)) from e
    if args.json:
        print(
            json.dumps(
                {
                    "diagram": serialize(d),
                    "circuit": [list(step) for step in circuit.steps],
                },
                sort_keys=True,
            )
        )
    else:
        print(serialize(d))
        print(
            "# circuit: "
            + " ".join(f"h{a}->h{b}" for a, b in circuit.steps)
        )
    return OK


def cmd_check(args) -> int:
    kwargs = {}
    if args.suite == "soboleva":
        kwargs = {
            "max_exhaustive_k": args.max_k,
            "random_cases": args.random_cases,
            "seed": args.seed or 0,
            "threads": _threads(args),
        }
    elif args.suite == "fourterm":
        kwargs = {"max_plain_k": args.max_k, "max_generalized_k": min(args.max_k, 5)}
    elif args.suite == "degree":
        kwargs = {"max_k": args.max_k}
    elif args.suite == "multiplicativity":
        kwargs = {"pairs": args.random_cases, "seed": args.seed or 0}
    result = suites.SUITES[args.suite](**kwargs)
    if args.json:
        print(
            json.dumps(
                {
                    "suite": result.name,
                    "cases": result.cases,
                    "violations": result.violations,
                },
                sort_keys=True,
            )
        )
    else:
        print(result.summary())
        for v in result.violations[:20]:
            print(f"  {v}")
    return OK if result.ok else FALSE


def cmd_random(args) -> int:
    rng = random_module.Random(args.seed)
    if args.kind == "chord":
        d = random_diagram(args.size, rng)
        print(serialize(d))
    else:
        g = random_framed_graph(max(1, args.size), rng)
        print(serialize_graph(g), end="")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="atomgenus",
        description="Surface spectrum and polynomial invariants of framed "
        "chord diagrams and framed 4-valent graphs.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def add_input(sp, graphs=True):
        sp.add_argument("--chord", help="inline framed chord diagram, e.g. '1 2 1 2 ; ++'")
        sp.add_argument("--chord-file", help="file with one diagram per line")
        if graphs:
            sp.add_argument("--graph", help="framed 4-valent graph file")
            sp.add_argument(
                "--variant", type=int, default=0, help="rotating circuit variant seed"
            )
        else:
            sp.set_defaults(graph=None)
        sp.add_argument("--json", action="store_true", help="JSON output")

    sp = sub.add_parser("planar", help="sphere embeddability (d-diagram test)")
    add_input(sp)
    sp.set_defaults(fn=cmd_planar)

    sp = sub.add_parser("genus", help="min/max surface spectrum over splittings")
    add_input(sp)
    sp.add_argument(
        "--threshold",
        type=int,
        default=genus_mod.EXHAUSTIVE_THRESHOLD,
        help="max k for exhaustive splitting enumeration",
    )
    sp.add_argument("--threads", type=int, help="worker processes for enumeration")
    sp.set_defaults(fn=cmd_genus)

    sp = sub.add_parser("rp2", help="projective-plane embeddability")
    add_input(sp)
    sp.set_defaults(fn=cmd_rp2)

    sp = sub.add_parser("klein", help="Klein-bottle embeddability")
    add_input(sp)
    sp.set_defaults(fn=cmd_klein)

    sp = sub.add_parser("bracket", help="Kauffman bracket state sum")
    add_input(sp)
    sp.set_defaults(fn=cmd_bracket)

    sp = sub.add_parser("genfun", help="genus generating function f")
    add_input(sp)
    sp.add_argument(
        "--exponent",
        choices=("circles", "genus"),
        default="circles",
        help="monomial exponent: state circle count (default) or k+2-genus",
    )
    sp.set_defaults(fn=cmd_genfun)

    sp = sub.add_parser("genfun-tilde", help="endpoint-assignment generating function")
    add_input(sp)
    sp.add_argument("--good-only", action="store_true", help="good assignments only")
    sp.add_argument(
        "--max-chords",
        type=int,
        default=invariants.ASSIGNMENT_CAP,
        help="enumeration cap override",
    )
    sp.set_defaults(fn=cmd_genfun_tilde)

    sp = sub.add_parser("weight", help="gl(n) weight-system polynomial")
    add_input(sp)
    sp.add_argument(
        "--max-chords",
        type=int,
        default=invariants.ASSIGNMENT_CAP,
        help="enumeration cap override",
    )
    sp.set_defaults(fn=cmd_weight)

    sp = sub.add_parser("convert", help="graph file -> chord diagram text")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--variant", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_convert)

    sp = sub.add_parser("check", help="run a property suite")
    sp.add_argument("suite", choices=sorted(suites.SUITES))
    sp.add_argument("--max-k", type=int, default=5)
    sp.add_argument("--random-cases", type=int, default=200)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--threads", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("random", help="seeded random diagram or graph")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--size", type=int, default=6, help="chords or vertices")
    sp.add_argument("--kind", choices=("chord", "graph"), default="chord")
    sp.set_defaults(fn=cmd_random)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
