"""Command line front end.

Exit codes: 0 success, 1 usage or parse error, 2 search bound exceeded,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import algebra, closure, desing, graph, reduction, socle
from .algebra import Element, NotRegularError
from .graph import OMEGA, GraphError
from .syntax import ParseError, format_graph, load_graph, parse_element

EXIT_OK, EXIT_USAGE, EXIT_BOUND, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _size(n):
    return "omega" if n is OMEGA else n


def _rational(c) -> str:
    return f"{c.numerator}/{c.denominator}"


def _terms(x: Element) -> list:
    return [{"monomial": str(m), "coefficient": _rational(c), "degree": m.degree}
            for m, c in x.items()]


def _cycle(entry) -> dict:
    base, path = entry
    return {"base": base, "cycle": str(path)}


# -- subcommands -------------------------------------------------------------

def cmd_analyze(g, args):
    holds, witness = graph.condition_L(g)
    lp = [v for v in g.vertices if v in graph.line_points(g)]
    report = {
        "schema": "analyze/1",
        "vertices": graph.classify_vertices(g),
        "condition_L": holds,
        "condition_L_witness": _cycle(witness) if witness else None,
        "exitless_cycles": [_cycle(c) for c in graph.cycles_without_exits(g)],
        "line_points": lp,
        "path_algebra_semiprime": graph.path_algebra_semiprime(g),
    }
    text = [f"{v}: {kind}" for v, kind in report["vertices"].items()]
    text.append(f"Condition (L): {'holds' if holds else 'fails'}")
    for c in report["exitless_cycles"]:
        text.append(f"  exitless cycle at {c['base']}: {c['cycle']}")
    text.append("line points: " + (", ".join(lp) if lp else "none"))
    text.append(f"path algebra semiprime: {'yes' if report['path_algebra_semiprime'] else 'no'}")
    return report, "\n".join(text)


def _vertex_list(s: str) -> list:
    return [v.strip() for v in s.split(",") if v.strip()] if s else []


def cmd_closure(g, args):
    s = _vertex_list(args.set)
    h = closure.hereditary_saturated_closure(g, s)
    ordered = [v for v in g.vertices if v in h]
    report = {
        "schema": "closure/1",
        "set": s,
        "closure": ordered,
        "hereditary_saturated": closure.is_hereditary_saturated(g, s),
    }
    return report, "closure: {" + ", ".join(ordered) + "}"


def cmd_simple(g, args):
    verdict = closure.is_simple(g)
    report = {"schema": "simple/1", "simple": verdict.simple, "reason": verdict.reason}
    return report, f"{'simple' if verdict.simple else 'not simple'}: {verdict.reason}"


def cmd_socle(g, args):
    r = socle.socle_report(g)
    comps = [{"sink": c.terminal_sink, "line_class": list(c.line_class), "size": _size(c.size)}
             for c in r.components]
    report = {
        "schema": "socle/1",
        "line_points": list(r.line_points),
        "closure_H": list(r.closure_H),
        "components": comps,
        "socle_is_zero": r.socle_is_zero,
        "socle_is_everything": r.socle_is_everything,
    }
    if r.socle_is_zero:
        text = "socle is zero (no line points)"
    else:
        parts = [f"M_{'omega' if c.size is OMEGA else c.size}(K) at sink {c.terminal_sink}"
                 for c in r.components]
        text = "socle = " + " + ".join(parts)
        text += "\nH = {" + ", ".join(r.closure_H) + "}"
        if r.socle_is_everything:
            text += "\nthe socle is the whole algebra"
    return report, text


def cmd_desing(g, args):
    d = desing.desingularize(g)
    lp = desing.line_points_desing(d)
    check = desing.verify_desing_lemma(g)
    tails = [{"base": t.base, "kind": t.kind, "prefix": [str(e) for e in t.prefix],
              "bundles": list(t.bundles)} for t in d.tails]
    report = {
        "schema": "desing/1",
        "tails": tails,
        "line_points_F": {"core": [v for v in g.vertices if v in lp.core],
                          "tails": list(lp.tails)},
        "desing_lemma": check.holds,
    }
    text = [f"tail at {t['base']}: {t['kind']}" for t in tails] or ["no singular vertices"]
    text.append("line points of F in E: {" + ", ".join(report["line_points_F"]["core"]) + "}")
    text.append(f"line points agree with E: {'yes' if check.holds else 'NO'}")
    if args.depth:
        tr = desing.truncate(d, args.depth)
        header = f"truncated desingularization, depth {args.depth}\nWARNING: {tr.warning}\n" \
                 f"artificial sinks: {' '.join(tr.cut_vertices)}"
        lpg = format_graph(tr.graph, header)
        report["truncation"] = {"depth": args.depth, "graph": lpg,
                                "cut_vertices": list(tr.cut_vertices), "warning": tr.warning}
        text.append(lpg.rstrip("\n"))
    if not check.holds:
        raise socle.InvariantViolation("line points of E and of its desingularization disagree")
    return report, "\n".join(text)


def cmd_eval(g, args):
    x = parse_element(g, args.expr)
    report = {"schema": "eval/1", "input": args.expr, "normal_form": str(x), "terms": _terms(x)}
    return report, str(x)


def cmd_corner(g, args):
    basis = algebra.corner_basis(g, args.vertex, args.degree, args.bundle_index)
    kind = algebra.classify_corner(g, args.vertex, args.degree, args.bundle_index)
    report = {"schema": "corner/1", "vertex": args.vertex, "degree": args.degree,
              "basis": [str(b) for b in basis], "class": kind}
    return report, f"{kind}: {{" + ", ".join(report["basis"]) + "}"


def cmd_minimal(g, args):
    v = socle.minimal_vertex_ideal(g, args.vertex, args.degree, args.bundle_index)
    report = {"schema": "minimal/1", "vertex": v.vertex, "minimal": v.minimal,
              "line_point": v.line_point, "corner": v.corner, "degree": args.degree}
    word = "minimal" if v.minimal else "not minimal"
    return report, f"L {v.vertex} is {word} (line point: {v.line_point}, corner: {v.corner})"


def cmd_reduce(g, args):
    x = parse_element(g, args.expr)
    w = reduction.reduce(g, x, args.bound)
    report = {"schema": "reduce/1", "input": args.expr, "left": [str(t) for t in w.left],
              "right": [str(t) for t in w.right], "result": str(w.result), "kind": w.kind}
    left = " ".join(report["left"])
    right = " ".join(report["right"])
    text = f"[{left}] x [{right}] = {w.result}  ({w.kind})"
    return report, text


def cmd_semiprime(g, args):
    x = parse_element(g, args.expr)
    m = reduction.semiprime_spotcheck(g, x, args.bound)
    prod = x * m * x
    report = {"schema": "semiprime/1", "input": args.expr, "monomial": str(m), "product": str(prod)}
    return report, f"m = {m}; x m x = {prod}"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="leavitt", description="Leavitt path algebras of finite-vertex graphs")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="graph file (.lpg), or - for stdin")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("analyze", cmd_analyze, "vertex classes, Condition (L), line points")
    add("closure", cmd_closure, "hereditary saturated closure").add_argument(
        "--set", required=True, help="comma separated vertices")
    add("simple", cmd_simple, "simplicity test")
    add("socle", cmd_socle, "socle decomposition")
    add("desing", cmd_desing, "desingularization").add_argument(
        "--depth", type=int, default=0, help="export a truncation of this depth")
    add("eval", cmd_eval, "normal form of an expression").add_argument(
        "-e", dest="expr", required=True)
    for name, func in (("corner", cmd_corner), ("minimal", cmd_minimal)):
        sp = add(name, func, "corner algebra of a vertex" if name == "corner"
                 else "is the left ideal of a vertex minimal")
        sp.add_argument("-v", dest="vertex", required=True)
        sp.add_argument("--degree", type=int, default=8 if name == "minimal" else None,
                        required=name == "corner")
        sp.add_argument("--bundle-index", type=int, default=2)
    for name, func, default in (("reduce", cmd_reduce, 8), ("semiprime", cmd_semiprime, 10)):
        sp = add(name, func, "link an element to a vertex or cycle corner" if name == "reduce"
                 else "find m with x m x != 0")
        sp.add_argument("-e", dest="expr", required=True)
        sp.add_argument("--bound", type=int, default=default)
    return p


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        g = load_graph(args.file)
        report, text = args.func(g, args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error at line {exc.line}, column {exc.column}: {exc.message}", file=stderr)
        return EXIT_USAGE
    except (GraphError, NotRegularError, reduction.ZeroElement, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except reduction.BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=stderr)
        return EXIT_BOUND
    except socle.InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=stderr)
        return EXIT_INVARIANT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.json:
        stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))
