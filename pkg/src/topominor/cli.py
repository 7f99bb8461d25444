"""Command-line front end.

Exit codes: 0 success (or a true verdict), 1 false, 2 unknown, 64 usage
error, 65 parse error, 70 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .errors import ArgumentError, ParseError, ResourceError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_PARSE = 65
EXIT_RESOURCE = 70

RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "array", "items": {"type": "string"}},
        "verdict": {"type": ["string", "object", "array", "integer", "boolean", "null"]},
        "certificate": {"type": "object"},
        "elapsed_ms": {"type": "number", "minimum": 0},
    },
    "required": ["command", "inputs", "verdict", "elapsed_ms"],
    "additionalProperties": False,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class Outcome:
    """What a command produced: a JSON-able verdict, its text form, and an exit code."""

    def __init__(self, verdict, text: str, code: int = EXIT_OK, certificate: dict | None = None):
        self.verdict = verdict
        self.text = text
        self.code = code
        self.certificate = certificate


def _value(text: str):
    from .dsl import parse_value

    return parse_value(text)


def _verdict_outcome(verdict: str, certificate: dict | None) -> Outcome:
    code = {"True": EXIT_OK, "False": EXIT_FALSE}.get(verdict, EXIT_UNKNOWN)
    return Outcome(verdict.lower(), verdict.lower(), code, certificate)


def _spined(v, what: str):
    from .seq_order import EPSeq

    if isinstance(v, EPSeq):
        raise UsageError(f"{what} must be a tree or presentation, not a sequence")
    return v


def cmd_minor(args) -> Outcome:
    from .seq_order import EPSeq, leq_star_result
    from .spined import spined_minor_result

    a, b = _value(args.a), _value(args.b)
    if isinstance(a, EPSeq) or isinstance(b, EPSeq):
        if not (isinstance(a, EPSeq) and isinstance(b, EPSeq)):
            raise UsageError("compare two sequences or two trees, not one of each")
        res = leq_star_result(a, b)
        return _verdict_outcome(str(res.holds), res.to_json())
    res = spined_minor_result(a, b)
    cert = {"rule": res.rule, **res.certificate}
    return _verdict_outcome(str(res.verdict), cert)


def cmd_equiv(args) -> Outcome:
    from .seq_order import EPSeq, equiv_star
    from .spined import spined_equiv

    a, b = _value(args.a), _value(args.b)
    if isinstance(a, EPSeq) and isinstance(b, EPSeq):
        return _verdict_outcome(str(equiv_star(a, b)), None)
    return _verdict_outcome(str(spined_equiv(_spined(a, "A"), _spined(b, "B"))), None)


def cmd_order(args) -> Outcome:
    from .spined import order

    o = order(_spined(_value(args.t), "T"))
    return Outcome(str(o), str(o))


def cmd_classify(args) -> Outcome:
    from .spined import classify, maximal_rays

    t = _spined(_value(args.t), "T")
    o, n = classify(t)
    rays = [str(r) for r in maximal_rays(t)]
    return Outcome({"order": str(o), "ray_count": n}, f"order {o}, {n} maximal ray(s)", certificate={"rays": rays})


def cmd_enumerate(args) -> Outcome:
    from . import config
    from .finite_tree import enumerate_rooted_trees, to_parens

    trees = [to_parens(t) for t in enumerate_rooted_trees(args.nodes, bound=config.max_nodes())]
    return Outcome(trees, "\n".join(trees))


def cmd_classes(args) -> Outcome:
    from . import config
    from .embed import rooted_minor
    from .finite_tree import enumerate_rooted_trees, to_parens

    bound = config.max_nodes()
    trees = [t for n in range(1, args.max_nodes + 1) for t in enumerate_rooted_trees(n, bound=bound)]
    names = [to_parens(t) for t in trees]
    n = len(trees)
    below = [[rooted_minor(trees[i], trees[j]) for j in range(n)] for i in range(n)]
    # equivalence classes; for finite trees these are single isomorphism types
    classes: list[list[int]] = []
    rep = {}
    for i in range(n):
        for c in classes:
            j = c[0]
            if below[i][j] and below[j][i]:
                c.append(i)
                rep[i] = j
                break
        else:
            classes.append([i])
            rep[i] = i
    reps = [c[0] for c in classes]
    covers = []
    for i in reps:
        for j in reps:
            if i == j or not below[i][j] or below[j][i]:
                continue
            between = any(
                k not in (i, j) and below[i][k] and below[k][j] and not below[k][i] and not below[j][k]
                for k in reps
            )
            if not between:
                covers.append([names[i], names[j]])
    verdict = {"classes": [[names[i] for i in c] for c in classes], "hasse": covers}
    lines = [f"{len(classes)} classes, {len(covers)} covering pairs"]
    lines += [f"{lo} < {hi}" for lo, hi in covers]
    return Outcome(verdict, "\n".join(lines))


def _alpha(text: str):
    if text == "w":
        return "w"
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"alpha must be an integer >= 3 or 'w', got {text!r}") from None


def cmd_tstar(args) -> Outcome:
    from .dsl import to_text_value
    from .spined import order, t_star

    t = _spined(_value(args.t), "T")
    res = t_star(t, _alpha(args.alpha))
    if res is None:
        return Outcome(None, "absent")
    return Outcome(to_text_value(res), to_text_value(res), certificate={"order": str(order(res))})


def cmd_family(args) -> Outcome:
    from .dsl import to_text_value
    from .family import IsoVerdict, family_generate, presentation_iso, verify_iso_certificate
    from .spined import Verdict, spined_minor

    base = _spined(_value(args.base), "BASE")
    fam = family_generate(base, args.size)
    texts = [to_text_value(t) for t in fam]
    pairs = []
    all_ok = True
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            a, b = fam[i], fam[j]
            eq = spined_minor(a, b) is Verdict.TRUE and spined_minor(b, a) is Verdict.TRUE
            iso, cert = presentation_iso(a, b)
            checked = iso is IsoVerdict.NONISO and verify_iso_certificate(a, b, cert)
            all_ok &= eq and checked
            pairs.append({"i": i, "j": j, "equivalent": eq, "iso": str(iso), "certificate": cert})
    lines = texts + [f"{len(pairs)} pairs checked: {'all equivalent and non-isomorphic' if all_ok else 'FAILURES'}"]
    return Outcome(texts, "\n".join(lines), EXIT_OK if all_ok else EXIT_FALSE, {"pairs": pairs})


def cmd_truncate(args) -> Outcome:
    from .finite_tree import to_parens
    from .spined import truncate

    t = truncate(_spined(_value(args.t), "T"), args.spine, args.depth)
    return Outcome(to_parens(t), to_parens(t), certificate={"size": t.size})


def cmd_dot(args) -> Outcome:
    from .render import emit_dot
    from .spined import Fin, truncate

    t = _spined(_value(args.t), "T")
    tree = t.tree if isinstance(t, Fin) else truncate(t, args.spine, args.depth)
    dot = emit_dot(tree)
    return Outcome(dot, dot.rstrip("\n"))


def cmd_selftest(args) -> Outcome:
    from .acceptance import run_all

    checks = run_all(set(args.only) if args.only else None)
    lines = [c.line() for c in checks]
    ok = all(c.passed for c in checks)
    verdict = [{"criterion": c.number, "name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
    summary = f"{sum(c.passed for c in checks)}/{len(checks)} criteria passed"
    return Outcome(verdict, "\n".join(lines + [summary]), EXIT_OK if ok else EXIT_FALSE)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", metavar="FILE", help="also write the JSON result to FILE")

    parser = _Parser(prog="topominor", description="Topological minors of rooted trees.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_text, inputs):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(fn=fn, inputs=inputs)
        return p

    p = add("minor", cmd_minor, "decide A <=# B (or f <=* g for sequences)", ["a", "b"])
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")
    p = add("equiv", cmd_equiv, "decide mutual embeddability", ["a", "b"])
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")
    p = add("order", cmd_order, "order of a tree", ["t"])
    p.add_argument("t", metavar="T")
    p = add("classify", cmd_classify, "order and number of maximal rays", ["t"])
    p.add_argument("t", metavar="T")
    p = add("enumerate", cmd_enumerate, "all rooted trees on n nodes", [])
    p.add_argument("--nodes", type=int, required=True)
    p = add("classes", cmd_classes, "equivalence classes and Hasse diagram up to n nodes", [])
    p.add_argument("--max-nodes", type=int, required=True)
    p = add("tstar", cmd_tstar, "sub-presentation traced by comb copies", ["t"])
    p.add_argument("--alpha", required=True, help="integer >= 3 or w")
    p.add_argument("t", metavar="T")
    p = add("family", cmd_family, "pairwise equivalent non-isomorphic subdivisions", ["base"])
    p.add_argument("--size", type=int, required=True)
    p.add_argument("base", metavar="BASE")
    p = add("truncate", cmd_truncate, "finite truncation of a presentation", ["t"])
    p.add_argument("--spine", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("t", metavar="T")
    p = add("dot", cmd_dot, "Graphviz DOT for a tree (presentations are truncated)", ["t"])
    p.add_argument("--spine", type=int, default=4)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("t", metavar="T")
    p = add("selftest", cmd_selftest, "run the acceptance checks", [])
    p.add_argument("--only", type=int, nargs="*", metavar="N")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = [getattr(args, name) for name in args.inputs]
    start = time.perf_counter()
    try:
        out = args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ArgumentError, UsageError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = (time.perf_counter() - start) * 1000
    record = {"command": args.command, "inputs": inputs, "verdict": out.verdict}
    if out.certificate is not None:
        record["certificate"] = out.certificate
    record["elapsed_ms"] = round(elapsed, 3)
    payload = json.dumps(record, indent=2, sort_keys=False)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    print(payload if args.format == "json" else out.text)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
