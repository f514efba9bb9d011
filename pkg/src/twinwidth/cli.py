"""Command line front end.

Reports are JSON objects on stdout carrying ``"schema": 1``. Exit codes:
0 success, 1 invalid input or failed validation (JSON error on stderr),
2 resource limit reached or inconclusive search.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, families, formats, gadgets, oracle, synth
from .decomp import StrongTreeDecomposition, TreeDecomposition, block_cut_tree, validate_std, validate_td
from .errors import InconclusiveError, ResourceLimitError, TwinWidthError
from .sequence import ContractionSequence, check_respects, verify_width

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ids(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    return p.read_text()


def _graph(args):
    return formats.parse_gr(_read(args.graph))


def _emit(args, report: dict) -> None:
    report = {"schema": SCHEMA, **report}
    text = json.dumps(report, sort_keys=True)
    print(text)
    if getattr(args, "report", None):
        Path(args.report).write_text(text + "\n")


def _write_seq(path: str | None, seq: ContractionSequence, comments=()) -> None:
    if path:
        Path(path).write_text(formats.format_sequence(seq, comments))


def _respect_fields(g, seq, respect):
    if respect:
        rep = check_respects(g, seq, respect)
        return {"respected": rep.respects, "complete": rep.complete}
    return {"respected": None, "complete": len(seq) == max(len(g) - 1, 0)}


# ---------------------------------------------------------------- commands
def cmd_solve_exact(args) -> int:
    g = _graph(args)
    respect = _ids(args.respect) or None
    threads = args.threads if args.threads is not None else oracle.default_threads()
    if args.max_d is not None:
        dec = oracle.decide_tww_le(g, args.max_d, respect=respect, budget=args.budget, threads=threads)
        if dec.inconclusive:
            raise InconclusiveError(f"budget of {args.budget} nodes exhausted")
        report = {"max_d": args.max_d, "decision": dec.value, "nodes": dec.nodes}
        if dec.value:
            report["width"] = verify_width(g, dec.witness).width
            _write_seq(args.out, dec.witness)
        _emit(args, report)
        return 0
    limit = args.limit if args.limit is not None else (oracle.RESPECT_LIMIT if respect else oracle.PLAIN_LIMIT)
    width, seq = oracle.exact_tww(g, respect=respect, limit=limit, budget=args.budget, threads=threads)
    _write_seq(args.out, seq, [f"width {width}"])
    _emit(args, {"width": width, "steps": len(seq), **_respect_fields(g, seq, respect)})
    return 0


def cmd_verify(args) -> int:
    g = _graph(args)
    seq = formats.parse_sequence(_read(args.seq), len(g))
    respect = _ids(args.respect)
    rep = verify_width(g, seq)
    _emit(args, {"width": rep.width, "steps": len(seq), **_respect_fields(g, seq, respect)})
    return 0


def _decomp(args, kind):
    if not args.decomp:
        raise UsageError("--decomp is required for this strategy")
    td, ann = formats.parse_td(_read(args.decomp))
    if args.root is not None:
        td = type(td)(td.bags, td.edges, root=args.root)
    if kind is not None and not isinstance(td, kind):
        raise UsageError(f"expected a {'std' if kind is StrongTreeDecomposition else 'td'} decomposition file")
    return td, ann


def cmd_synth(args) -> int:
    g = _graph(args)
    limit = args.parts_exact_limit
    if args.strategy == "strong-tree":
        std, _ = _decomp(args, StrongTreeDecomposition)
        seq = synth.strong_tree_contract(g, std, limit=limit)
        bound = bounds.evaluate("thm1", k=max(std.width, 1))
    elif args.strategy == "blocks":
        if len(g.components()) > 1:
            raise UsageError("the blocks strategy needs a connected graph")
        seq = synth.compose_blocks(g, limit=limit)
        bct = block_cut_tree(g)
        worst = 0
        for b in bct.blocks:
            sub = g.induced(b)
            worst = max(worst, verify_width(sub, oracle.best_sequence(sub, limit=limit)).width)
        bound = bounds.evaluate("thm2_upper", t=worst)
    else:
        td, _ = _decomp(args, TreeDecomposition)
        seq, _ = synth.adhesion_pipeline(g, td)
        bound = bounds.evaluate("thm6", k=max(td.adhesion, 1), w=td.width)
    width = verify_width(g, seq).width
    _write_seq(args.out, seq, [f"width {width}"])
    _emit(args, {"strategy": args.strategy, "achieved_width": width, "bound": bound.cap,
                 "bound_formula": bound.formula, "heuristic_used": seq.heuristic, "steps": len(seq)})
    return 0


def cmd_gadget(args) -> int:
    g = _graph(args)
    if args.kind == "pendant":
        out = gadgets.build_pendant_hat(g)
    else:
        td, ann = _decomp(args, TreeDecomposition)
        if args.sidecar:
            side = formats.parse_annotations(_read(args.sidecar))
            ann.separators.update(side.separators)
        node = args.node if args.node is not None else td.root
        seps = ann.all_separators(node)
        if args.kind == "tilde":
            out = gadgets.build_tilde(g, td, node)
        elif args.kind == "hat":
            out = gadgets.build_hat(g, td, node, seps)
        else:
            out = gadgets.build_red_torso(g, td, node, seps)
    text = formats.format_gr(out, [f"gadget {args.kind}"])
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


_BOUND_PARAMS = ("a", "k", "t", "w", "d", "n", "delta")


def cmd_bounds(args) -> int:
    params = {p: getattr(args, p) for p in _BOUND_PARAMS if getattr(args, p) is not None}
    _emit(args, bounds.evaluate(args.name, **params).as_dict())
    return 0


def cmd_gen(args) -> int:
    params = {k: v for k, v in vars(args).items()
              if k in ("q", "n", "p", "seed", "spine", "legs", "depth", "rows", "cols") and v is not None}
    if args.blocks:
        params["blocks"] = args.blocks.split(",")
        if args.attach:
            params["attach"] = [int(x) - 1 for x in args.attach.split(",")]
    g, dec = families.generate(args.family, **params)
    text = formats.format_gr(g, [f"family {args.family}"])
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.emit_decomp:
        if not isinstance(dec, (TreeDecomposition, StrongTreeDecomposition)):
            raise UsageError(f"family {args.family} has no companion decomposition")
        Path(args.emit_decomp).write_text(formats.format_td(dec, len(g)))
    return 0


def cmd_decompose_blocks(args) -> int:
    g = _graph(args)
    bct = block_cut_tree(g)
    _emit(args, {
        "blocks": [sorted(v + 1 for v in b) for b in bct.blocks],
        "cut_vertices": sorted(v + 1 for v in bct.cut_vertices),
        "incidences": [{"block": i, "cut_vertex": c + 1} for i, c in bct.edges],
    })
    return 0


def cmd_validate(args) -> int:
    g = _graph(args)
    td, _ = _decomp(args, None)
    bad = validate_std(g, td) if isinstance(td, StrongTreeDecomposition) else validate_td(g, td)
    _emit(args, {"valid": not bad, "width": td.width,
                 "violations": [{"kind": v.kind, "detail": v.detail} for v in bad]})
    return 0 if not bad else 1


# ---------------------------------------------------------------- wiring
def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twinwidth", description="Twin-width contraction sequences from graph decompositions.")
    p.add_argument("--report", help="also write the JSON report to this file")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("solve-exact", help="exact twin-width with a witness sequence")
    s.add_argument("--graph", required=True)
    s.add_argument("--respect", help="comma separated 1-indexed vertices to respect")
    s.add_argument("--max-d", type=int, help="only decide whether the width is at most this")
    s.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="search node cap")
    s.add_argument("--threads", type=int, help="worker processes (default: $TWINWIDTH_THREADS or 1)")
    s.add_argument("--limit", type=int, help="largest instance the exact search accepts")
    s.add_argument("-o", "--out", help="write the witness sequence here")
    s.set_defaults(func=cmd_solve_exact)

    s = sub.add_parser("verify", help="replay a sequence and report its width")
    s.add_argument("--graph", required=True)
    s.add_argument("--seq", required=True)
    s.add_argument("--respect")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("synth", help="build a sequence from a decomposition")
    s.add_argument("--strategy", required=True, choices=["strong-tree", "blocks", "adhesion"])
    s.add_argument("--graph", required=True)
    s.add_argument("--decomp")
    s.add_argument("--root", type=int, help="root node of the decomposition (default 1)")
    s.add_argument("--parts-exact-limit", type=int, default=oracle.PLAIN_LIMIT)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("gadget", help="emit a part gadget as an extended .gr file")
    s.add_argument("--kind", required=True, choices=["tilde", "hat", "torso", "pendant"])
    s.add_argument("--graph", required=True)
    s.add_argument("--decomp")
    s.add_argument("--sidecar", help="separator annotations ('sep <node> <v...>')")
    s.add_argument("--node", type=int)
    s.add_argument("--root", type=int)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("bounds", help="evaluate a closed-form bound")
    s.add_argument("--name", required=True, choices=[b.value for b in bounds.BoundName])
    for name in _BOUND_PARAMS:
        s.add_argument(f"--{name}", type=int)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("gen", help="generate a graph family member")
    s.add_argument("--family", required=True, choices=list(families.FAMILIES))
    for name in ("q", "n", "seed", "spine", "legs", "depth", "rows", "cols"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--p", type=float)
    s.add_argument("--blocks", help="comma separated block names for block_glue")
    s.add_argument("--attach", help="comma separated 1-indexed attachment vertices for block_glue")
    s.add_argument("-o", "--out")
    s.add_argument("--emit-decomp")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("decompose-blocks", help="block-cut tree of a connected graph")
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_decompose_blocks)

    s = sub.add_parser("validate", help="check a (strong) tree decomposition")
    s.add_argument("--graph", required=True)
    s.add_argument("--decomp", required=True)
    s.add_argument("--root", type=int)
    s.set_defaults(func=cmd_validate)
    return p


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"schema": SCHEMA, "error": kind, "message": message}) + "\n")
    return code


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        return _fail("usage", str(e), 1)
    except (ResourceLimitError, InconclusiveError) as e:
        return _fail(type(e).__name__, str(e), 2)
    except TwinWidthError as e:
        return _fail(type(e).__name__, str(e), 1)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
