"""Command line front end: LTL text in, HOA or statistics out.

Exit codes: 0 success, 1 parse error, 2 resource limit hit, 3 the built
automaton disagreed with the semantic oracle under ``--check``.  In batch
mode (``--formula -``) each input line is handled independently and the
worst code wins (3 over 2 over 1).
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from .advice import DEFAULT_MAX_ADVICE
from .buchi import to_nba
from .derivative import DEFAULT_MAX_CLASSES
from .errors import ParseError, ResourceLimitError
from .hoa import write_hoa
from .limdet import to_ldba
from .parser import parse
from .rabin import to_dra
from .semantics import satisfies
from .sweep import accepts, random_lasso
from .automata import rabin_pairs
from .words import Alphabet

_BUILDERS = {"dra": to_dra, "nba": to_nba, "ldba": to_ldba}


def _arg_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ltl2aut",
        description="Translate LTL formulas into omega-automata "
                    "(deterministic Rabin, nondeterministic Buchi, or "
                    "limit-deterministic Buchi).")
    p.add_argument("--formula", required=True, metavar="TEXT",
                   help="LTL formula, or '-' to read one formula per line "
                        "from stdin")
    p.add_argument("--mode", choices=sorted(_BUILDERS), default="dra",
                   help="target automaton type (default: dra)")
    p.add_argument("--ap", metavar="a,b,c",
                   help="comma separated atomic propositions fixing the "
                        "alphabet (default: the atoms of the formula)")
    p.add_argument("--output", choices=["hoa", "stats"], default="hoa",
                   help="print the automaton in HOA v1 or summary statistics")
    p.add_argument("--check", type=int, default=0, metavar="N",
                   help="compare the automaton against the semantic oracle "
                        "on N random lasso words")
    p.add_argument("--seed", type=int, default=0,
                   help="random seed for --check (default: 0)")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_CLASSES,
                   metavar="N", help="abort constructions beyond N states")
    p.add_argument("--max-advice", type=int, default=DEFAULT_MAX_ADVICE,
                   metavar="N",
                   help="abort when a formula needs more than N advice "
                        "set pairs")
    return p


def _alphabet(args, phi) -> Alphabet:
    if args.ap is None:
        return Alphabet.for_formula(phi)
    atoms = tuple(a.strip() for a in args.ap.split(",") if a.strip())
    return Alphabet.for_formula(phi, atoms)


def _run_one(text: str, args) -> int:
    try:
        phi = parse(text, ap=None if args.ap is None
                    else tuple(a.strip() for a in args.ap.split(",")
                               if a.strip()))
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 1
    try:
        alphabet = _alphabet(args, phi)
        started = time.perf_counter()
        automaton = _BUILDERS[args.mode](
            phi, ap=alphabet.atoms, max_advice=args.max_advice,
            max_states=args.max_states)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
    except ResourceLimitError as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return 2
    if args.check > 0:
        rng = random.Random(args.seed)
        for _ in range(args.check):
            lasso = random_lasso(rng, alphabet, max_prefix=6, max_period=6)
            expected = satisfies(lasso, phi)
            got = accepts(automaton, lasso)
            if got != expected:
                print(f"mismatch: {phi} on {lasso} oracle={expected} "
                      f"automaton={got}", file=sys.stderr)
                return 3
    if args.output == "hoa":
        sys.stdout.write(write_hoa(automaton, name=str(phi)))
    else:
        print(f"formula: {phi}")
        print(f"mode: {args.mode}")
        print(f"states: {automaton.num_states}")
        print(f"edges: {automaton.num_edges}")
        if args.mode == "dra":
            pairs = rabin_pairs(automaton.acceptance)
            print(f"rabin-pairs: {len(pairs)}")
        print(f"time-ms: {elapsed_ms:.2f}")
    return 0


def main(argv: "list[str] | None" = None) -> int:
    args = _arg_parser().parse_args(argv)
    if args.formula != "-":
        return _run_one(args.formula, args)
    worst = 0
    for raw in sys.stdin:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        code = _run_one(line, args)
        if code != 0:
            print(f"[exit {code}] {line}", file=sys.stderr)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
