"""Command-line front end: edge-list/CNF file I/O, subcommands, JSON witness
serialization, and scriptable exit codes (0 accept, 1 reject, 2 error,
3 inconclusive).

Output is byte-identical across runs: keys are sorted, nothing is
timestamped, and the optional QUASIMONO_THREADS override is accepted but
never affects results (the implementation is sequential)."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import asdict, is_dataclass

from . import __version__
from .flaws import FlawWitness
from .generators import (
    GeneratorParameterError,
    complete,
    complete_bipartite,
    crossover_prehole,
    cycle,
    fan_prehole,
    fixture,
    fixture_names,
    moebius_ladder,
    parse_dimacs,
    path,
    prism,
    random_graph,
    reduce_nae3sat,
)
from .graphs import Graph, GraphInputError, SizeError, make_graph
from .oracle import (
    INCONCLUSIVE,
    oracle_is_prehole,
    oracle_odd_chordal,
    oracle_quasi,
    oracle_quasimonotone,
    predicate_library,
)
from .prehole_search import verify_prehole
from .recognizer import Verdict, recognize

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_ERROR = 2
EXIT_INCONCLUSIVE = 3


# ---------------------------------------------------------------------------
# Edge-list file format: '#' comments, "n m" header, then m lines "u v"
# with 0 <= u < v < n, no duplicates.
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [
        ln.strip() for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise GraphInputError("empty edge-list file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphInputError(f"bad header line: {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphInputError(f"header promises {m} edges, found {len(lines) - 1}")
    seen = set()
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphInputError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < v < n):
            raise GraphInputError(f"edge ({u},{v}) violates 0 <= u < v < n")
        if (u, v) in seen:
            raise GraphInputError(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        edges.append((u, v))
    return make_graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON witness serialization
# ---------------------------------------------------------------------------


def _jsonable(obj):
    from .graphs import Bipartition, CycleWitness
    from .splitting import RingDecomposition

    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, Bipartition):
        return {"L": sorted(obj.L), "R": sorted(obj.R)}
    if isinstance(obj, RingDecomposition):
        return {
            "k": obj.k,
            "anchor_hole": list(obj.anchor_hole),
            "blocks": [sorted(b) for b in obj.blocks],
        }
    if isinstance(obj, CycleWitness):
        return {
            "kind": obj.kind,
            "vertices": list(obj.vertices),
            "bipartition": _jsonable(obj.bipartition),
        }
    if isinstance(obj, FlawWitness):
        return {
            "kind": obj.kind,
            "vertices": list(obj.vertices),
            "bipartition": _jsonable(obj.bipartition),
            "iso": list(obj.iso),
        }
    if is_dataclass(obj):
        return {k: _jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj)!r}")


def verdict_json(v: Verdict, input_bytes: bytes) -> str:
    payload = {
        "verdict": "accept" if v.accepted else "reject",
        "reason": v.reason,
        "witness": _jsonable(v.witness),
        "ring": _jsonable(v.ring),
        "components": [
            {
                "vertices": list(c.vertices),
                "verdict": "accept" if c.accepted else "reject",
                "reason": c.reason,
                "witness": _jsonable(c.witness),
                "ring": _jsonable(c.ring),
            }
            for c in v.components
        ],
        "tool_version": __version__,
        "input_sha256": hashlib.sha256(input_bytes).hexdigest(),
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _read(path_arg: str) -> bytes:
    with open(path_arg, "rb") as fh:
        return fh.read()


def cmd_recognize(args) -> int:
    raw = _read(args.file)
    g = parse_edge_list(raw.decode())
    verdict = recognize(g, max_small_prehole=args.max_prehole)
    if args.json:
        sys.stdout.write(verdict_json(verdict, raw))
    else:
        word = "accept" if verdict.accepted else "reject"
        sys.stdout.write(f"{word} {verdict.reason}\n")
    return EXIT_ACCEPT if verdict.accepted else EXIT_REJECT


def cmd_oracle(args) -> int:
    raw = _read(args.file)
    g = parse_edge_list(raw.decode())
    mode = args.mode
    if mode == "quasimonotone":
        ok = oracle_quasimonotone(g)
    elif mode == "oddchordal":
        ok = oracle_odd_chordal(g)
    elif mode == "isprehole":
        decision = oracle_is_prehole(g)
        if decision.status == INCONCLUSIVE:
            sys.stdout.write("inconclusive\n")
            return EXIT_INCONCLUSIVE
        ok = decision.status == "prehole"
        if ok:
            b = decision.bipartition
            sys.stdout.write(
                f"prehole L={','.join(map(str, sorted(b.L)))} "
                f"R={','.join(map(str, sorted(b.R)))}\n")
        else:
            sys.stdout.write("not-prehole\n")
        return EXIT_ACCEPT if ok else EXIT_REJECT
    elif mode.startswith("quasi:"):
        name = mode.split(":", 1)[1]
        lib = predicate_library()
        if name not in lib:
            raise GraphInputError(
                f"unknown predicate {name!r}; have {sorted(lib)}")
        ok = oracle_quasi(g, lib[name])
    else:
        raise GraphInputError(f"unknown oracle mode {mode!r}")
    sys.stdout.write(("true" if ok else "false") + "\n")
    return EXIT_ACCEPT if ok else EXIT_REJECT


_FAMILIES = {
    "cycle": (1, lambda p: cycle(p[0])),
    "path": (1, lambda p: path(p[0])),
    "complete": (1, lambda p: complete(p[0])),
    "complete-bipartite": (2, lambda p: complete_bipartite(p[0], p[1])),
    "prism": (1, lambda p: prism(p[0])),
    "moebius": (1, lambda p: moebius_ladder(p[0])),
    "fan": (1, lambda p: fan_prehole(p[0])),
    "crossover": (1, lambda p: crossover_prehole(p[0])),
}


def cmd_gen(args) -> int:
    name = args.family
    if name == "random":
        if len(args.params) != 2:
            raise GeneratorParameterError("random needs: n p (plus --seed)")
        g = random_graph(int(args.params[0]), float(args.params[1]), args.seed)
    elif name in _FAMILIES:
        arity, build = _FAMILIES[name]
        if len(args.params) != arity:
            raise GeneratorParameterError(f"{name} needs {arity} parameter(s)")
        g = build([int(x) for x in args.params])
    elif name in fixture_names():
        if args.params:
            raise GeneratorParameterError(f"fixture {name} takes no parameters")
        g = fixture(name)
    else:
        raise GeneratorParameterError(
            f"unknown family {name!r}; families: "
            f"{sorted(_FAMILIES) + ['random'] + list(fixture_names())}")
    text = serialize_edge_list(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_ACCEPT


def cmd_reduce(args) -> int:
    raw = _read(args.cnf)
    f = parse_dimacs(raw.decode())
    g, layout = reduce_nae3sat(f)
    with open(args.out, "w") as fh:
        fh.write(serialize_edge_list(g))
    sidecar = {
        "num_vars": layout.num_vars,
        "num_clauses": layout.num_clauses,
        "tac": [dict(sorted(t.items())) for t in layout.tac],
        "stc": [dict(sorted(s.items())) for s in layout.stc],
        "linkage": [list(e) for e in layout.linkage],
        "f_edges": [list(e) for e in layout.f_edges],
    }
    with open(args.out + ".layout.json", "w") as fh:
        json.dump(sidecar, fh, sort_keys=True, indent=2)
        fh.write("\n")
    return EXIT_ACCEPT


def cmd_verify(args) -> int:
    raw = _read(args.file)
    g = parse_edge_list(raw.decode())
    try:
        cycle_vs = [int(x) for x in args.cycle.split(",")]
    except ValueError as exc:
        raise GraphInputError(f"bad cycle spec: {exc}")
    witness = verify_prehole(g, cycle_vs)
    if witness is None:
        sys.stdout.write("not-prehole\n")
        return EXIT_REJECT
    b = witness.bipartition
    sys.stdout.write(
        f"prehole length={len(witness.vertices)} "
        f"L={','.join(map(str, sorted(b.L)))} "
        f"R={','.join(map(str, sorted(b.R)))}\n")
    return EXIT_ACCEPT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasimono",
        description=(
            "Quasimonotone graph toolkit.  Exit codes: 0 accept/true, "
            "1 reject/false, 2 input or format error, 3 inconclusive.  The "
            "environment variable QUASIMONO_THREADS is accepted for "
            "compatibility and never changes any output."),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="run the polynomial recognizer")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-prehole", dest="max_prehole", type=int, default=12,
                   help="small-prehole sweep bound (even, >= 12)")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("oracle", help="exponential definition-level oracles")
    p.add_argument("file")
    p.add_argument("--mode", default="quasimonotone",
                   help="quasimonotone | oddchordal | isprehole | quasi:<predicate>")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generator family as an edge list")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="NAE3SAT to prehole reduction")
    p.add_argument("cnf")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check a cycle for prehole-ness")
    p.add_argument("file")
    p.add_argument("--cycle", required=True, help="comma-separated vertices")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    os.environ.get("QUASIMONO_THREADS")  # accepted, never output-affecting
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphInputError, SizeError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
