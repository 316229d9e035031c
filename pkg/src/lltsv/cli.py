"""Command-line front end.

Exit codes: 0 success/HOLDS, 1 FAILS, 2 parse error, 3 resource limit,
4 fragment/domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .actl import satisfies
from .errors import (
    AlphabetTooLarge,
    EmptyListError,
    NotInFragmentError,
    ParseError,
    StateLimitExceeded,
    UnknownActionError,
)
from .gen import TermGen
from .laws import SUITES, LawConfig, run_suites
from .llts import BuildLimits, build_graph, export, validate
from .refine import equiv, refines
from .syntax import (
    Alphabet,
    parse_formula,
    parse_term,
    print_formula,
    print_term,
    scan_action_names,
)
from .translate import char_formula, char_process

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_DOMAIN = 4


def _alphabet_for(args, texts: list[str]) -> Alphabet:
    if args.alphabet is not None:
        names = [a.strip() for a in args.alphabet.split(",") if a.strip()]
        return Alphabet(names)
    inferred: list[str] = []
    for text in texts:
        for name in scan_action_names(text):
            if name not in inferred:
                inferred.append(name)
    return Alphabet(inferred)


def _limits(args) -> BuildLimits:
    max_states = args.max_states
    if max_states is None:
        env = os.environ.get("LLTSV_MAX_STATES")
        max_states = int(env) if env else 50_000
    return BuildLimits(max_states=max_states)


def _emit(args, text_line: str, doc: dict) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text_line)


def cmd_lts(args) -> int:
    alphabet = _alphabet_for(args, [args.term])
    term = parse_term(args.term, alphabet)
    g = build_graph([term], alphabet, _limits(args), normalized=not args.no_normalize)
    rep = validate(g)
    if not rep.ok:
        print("internal error: built graph violates the transition-system axioms", file=sys.stderr)
        for t, axiom in rep.counterexamples:
            print(f"  {axiom}: {print_term(t)}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.format == "dot":
        print(export(g, "dot"))
    elif args.format == "json":
        print(export(g, "json"))
    else:
        order = g.reachable
        f_count = sum(1 for i in order if i in g.inconsistent)
        print(f"states: {len(order)}  edges: {sum(len(g.edges[i]) for i in order)}  inconsistent: {f_count}")
        pub = {i: k for k, i in enumerate(order)}
        for i in order:
            mark = " [F]" if i in g.inconsistent else ""
            print(f"  {pub[i]}: {print_term(g.terms[i])}{mark}")
            for lab, j in g.edges[i]:
                print(f"      --{lab}--> {pub[j]}")
    return EXIT_OK


def cmd_refines(args) -> int:
    alphabet = _alphabet_for(args, [args.left, args.right])
    p = parse_term(args.left, alphabet)
    q = parse_term(args.right, alphabet)
    g = build_graph([p, q], alphabet, _limits(args), normalized=not args.no_normalize)
    verdict = refines(g, p, q)
    if verdict.holds:
        _emit(args, "HOLDS", verdict.to_json())
        return EXIT_OK
    ce = verdict.counterexample
    steps = " ".join(
        f"--{a}--> {print_term(t)}" if a else print_term(t) for t, a in ce.trace
    )
    _emit(args, f"FAILS ({ce.clause}) at {steps}", verdict.to_json())
    return EXIT_FAILS


def cmd_equiv(args) -> int:
    alphabet = _alphabet_for(args, [args.left, args.right])
    p = parse_term(args.left, alphabet)
    q = parse_term(args.right, alphabet)
    g = build_graph([p, q], alphabet, _limits(args), normalized=not args.no_normalize)
    holds = equiv(g, p, q)
    _emit(args, "HOLDS" if holds else "FAILS", {"holds": holds})
    return EXIT_OK if holds else EXIT_FAILS


def cmd_check(args) -> int:
    alphabet = _alphabet_for(args, [args.term, args.formula])
    p = parse_term(args.term, alphabet)
    f = parse_formula(args.formula, alphabet)
    g = build_graph([p], alphabet, _limits(args), normalized=not args.no_normalize)
    holds = satisfies(g, p, f)
    _emit(args, "HOLDS" if holds else "FAILS", {"holds": holds})
    return EXIT_OK if holds else EXIT_FAILS


def cmd_charproc(args) -> int:
    alphabet = _alphabet_for(args, [args.formula])
    f = parse_formula(args.formula, alphabet)
    print(print_term(char_process(f, alphabet)))
    return EXIT_OK


def cmd_charform(args) -> int:
    alphabet = _alphabet_for(args, [args.term])
    t = parse_term(args.term, alphabet)
    print(print_formula(char_formula(t, alphabet)))
    return EXIT_OK


def cmd_laws(args) -> int:
    if args.alphabet is None:
        alphabet = Alphabet(["a", "b"])
    else:
        alphabet = _alphabet_for(args, [])
    names = [args.suite] if args.suite else None
    if names and names[0] not in SUITES:
        print(f"unknown suite {names[0]!r}; available: {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_DOMAIN
    cfg = LawConfig(alphabet, seed=args.seed, size=args.size, count=args.count)
    report = run_suites(cfg, names)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_FAILS


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lltsv",
        description="build state graphs, decide refinement, model-check and translate",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--alphabet", help="comma-separated action names (inferred when omitted)")
        p.add_argument("--max-states", type=int, default=None)
        p.add_argument("--format", choices=["text", "json", "dot"], default="text")
        p.add_argument("--no-normalize", action="store_true")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("lts", help="explore a term's state graph")
    p.add_argument("term")
    common(p)
    p.set_defaults(fn=cmd_lts)

    p = sub.add_parser("refines", help="decide the refinement preorder")
    p.add_argument("left")
    p.add_argument("right")
    common(p)
    p.set_defaults(fn=cmd_refines)

    p = sub.add_parser("equiv", help="decide mutual refinement")
    p.add_argument("left")
    p.add_argument("right")
    common(p)
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("check", help="model-check a formula against a term")
    p.add_argument("term")
    p.add_argument("formula")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("charproc", help="characteristic process of a formula")
    p.add_argument("formula")
    common(p)
    p.set_defaults(fn=cmd_charproc)

    p = sub.add_parser("charform", help="characteristic formula of a term")
    p.add_argument("term")
    common(p)
    p.set_defaults(fn=cmd_charform)

    p = sub.add_parser("laws", help="run the law suites")
    p.add_argument("--suite", default=None)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--size", type=int, default=4)
    common(p)
    p.set_defaults(fn=cmd_laws)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, UnknownActionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (StateLimitExceeded, AlphabetTooLarge) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (NotInFragmentError, EmptyListError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
