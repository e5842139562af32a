"""Command-line front end.

Exit codes: 0 success, 1 counterexamples found, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import invariants, kernel, oracle
from .classifier import check_chain, classify
from .symbolic import DSLSyntaxError, Engine, eval_all, parse_dsl

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_input(args):
    """Return a FiniteSemigroup or a constructor term."""
    if args.table is not None:
        try:
            return kernel.load(args.table)
        except OSError as exc:
            raise InputError(f"cannot read {args.table}: {exc.strerror}") from None
    return parse_dsl(args.expr)


def _label(args) -> str:
    return args.expr if args.expr is not None else str(args.table)


def _finite(obj):
    if isinstance(obj, kernel.FiniteSemigroup):
        return obj
    return obj.materialize() if obj.is_finite else None


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _markdown_dict(title: str, d: dict) -> str:
    lines = [f"# {title}", ""]
    for k, v in d.items():
        lines.append(f"- **{k}**: {json.dumps(v) if not isinstance(v, str) else v}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    obj = _read_input(args)
    S = _finite(obj)
    if S is not None:
        report = {"input": _label(args), **invariants.structure_report(S)}
    else:
        verdicts = eval_all(obj)
        report = {
            "input": _label(args),
            "finite": False,
            "predicates": {p: v.to_dict() for p, v in verdicts.items()},
        }
    if args.format == "markdown":
        if S is None:
            lines = [f"# Predicates of `{_label(args)}`", "",
                     "| predicate | verdict | rule |", "|---|---|---|"]
            for p, v in verdicts.items():
                lines.append(f"| {p} | {v.value.value} | {v.citation} |")
            text = "\n".join(lines) + "\n"
        else:
            text = _markdown_dict(f"Structure of `{_label(args)}`", report)
    else:
        text = json.dumps(report, indent=2) + "\n"
    _emit(args, text)
    return EXIT_OK


def cmd_classify(args) -> int:
    report = classify(_read_input(args), Engine())
    report.input = _label(args)
    if not check_chain(report):
        print("error: report violates the implication chain", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    _emit(args, report.to_markdown() if args.format == "markdown" else report.to_json(indent=2) + "\n")
    return EXIT_OK


def _specs(args) -> list[oracle.EnumerationSpec]:
    orders = range(1, args.order + 1) if args.cumulative else [args.order]
    return [oracle.EnumerationSpec(n, args.commutative, args.up_to_iso) for n in orders]


def cmd_verify(args) -> int:
    report = oracle.run_lemma_suite(_specs(args), workers=args.workers)
    if args.format == "markdown":
        d = report.to_dict()
        lines = ["# Lemma suite", "", d["banner"], "",
                 f"semigroups checked: {d['semigroups']}, wall time {d['wall_time']} s", "",
                 "| check | passed | failed |", "|---|---|---|"]
        lines += [f"| {k} | {v['passed']} | {v['failed']} |" for k, v in d["checks"].items()]
        for c in d["counterexamples"]:
            lines.append(f"\n- `{c['check']}` on {c['table']}: {json.dumps(c['witness'])}")
        text = "\n".join(lines) + "\n"
    else:
        text = report.to_json(indent=2) + "\n"
    _emit(args, text)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def cmd_enumerate(args) -> int:
    out = {}
    for spec in _specs(args):
        tables = list(oracle.enumerate_semigroups(spec, args.workers))
        entry = {"count": len(tables)}
        if args.dump:
            entry["tables"] = [[list(r) for r in S.table] for S in tables]
        out[str(spec.order)] = entry
    if args.format == "markdown":
        text = "| order | count |\n|---|---|\n" + "".join(
            f"| {k} | {v['count']} |\n" for k, v in out.items())
    else:
        text = json.dumps(out, indent=None if args.dump else 2) + "\n"
    _emit(args, text)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()] if text.strip() else []


def _pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for item in text.replace(";", ",").split(","):
        if item.strip():
            a, b = item.split(":")
            pairs.append((int(a), int(b)))
    return pairs


def cmd_quotient(args) -> int:
    S = _finite(_read_input(args))
    if S is None:
        raise InputError("quotient needs a finite input")
    if args.ideal is not None:
        Q, q = kernel.rees_quotient(S, _int_list(args.ideal))
    else:
        Q, q = kernel.quotient(S, kernel.generated_congruence(S, _pairs(args.pairs)))
    d = {**kernel.to_dict(Q), "projection": list(q.image)}
    if args.format == "markdown":
        text = _markdown_dict(f"Quotient of `{_label(args)}`", d)
    else:
        text = json.dumps(d, indent=2) + "\n"
    _emit(args, text)
    return EXIT_OK


def _add_io(p, inputs=True):
    if inputs:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--table", type=Path, help="Cayley table file (JSON or text)")
        src.add_argument("--expr", help='constructor term, e.g. "Sum(omega, C(2))"')
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.add_argument("--output", "-o", help="write here instead of stdout")


def _add_enum(p):
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--commutative", action="store_true", help="commutative tables only")
    p.add_argument("--up-to-iso", action="store_true", help="one table per isomorphism class")
    p.add_argument("--cumulative", action="store_true", help="all orders 1..ORDER")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-order", type=int, help="override the order guardrail (slow)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiclose", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural invariants or predicate verdicts")
    _add_io(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="closedness classification")
    _add_io(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the lemma suite on enumerated semigroups")
    _add_enum(p)
    _add_io(p, inputs=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="count or dump small semigroups")
    _add_enum(p)
    p.add_argument("--dump", action="store_true", help="include the tables")
    _add_io(p, inputs=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("quotient", help="Rees quotient or quotient by generated congruence")
    _add_io(p)
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--ideal", help='ideal elements, e.g. "0,1"')
    how.add_argument("--pairs", help='congruence generators, e.g. "0:1,2:3"')
    p.set_defaults(func=cmd_quotient)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_order", None):
        os.environ["SEMICLOSE_MAX_ORDER"] = str(args.max_order)
    try:
        return args.func(args)
    except (InputError, kernel.SemigroupError, DSLSyntaxError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
