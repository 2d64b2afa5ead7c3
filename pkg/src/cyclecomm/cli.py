"""Command-line interface.

Permutations are read in cycle notation, ``(1 2 4 3)(5 6)``, with symbols
not mentioned taken as fixed points, or as a one-line image list
``2 3 4 1``. Exit codes: 0 success, 1 verification failure, 2 usage or
syntax error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .errors import CommutatorError, PermutationSyntaxError
from .perm import CycleType, Permutation, cycle_decomposition, identity, perm_from_cycles
from .planner import plan, render
from .solver import Witness, verify, witness_for_class, witness_for_perm

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _scan_int(text: str, i: int) -> int:
    j = i
    while j < len(text) and text[j].isdigit():
        j += 1
    return j


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation or a one-line image list.

    Cycle notation acts on the largest mentioned symbol, or on ``n`` when
    given. The empty string needs ``n`` and gives the identity.
    """
    stripped = text.strip()
    if not stripped:
        if n is None:
            raise PermutationSyntaxError("empty permutation needs an explicit degree", text, 0)
        return identity(n)
    if "(" not in stripped:
        return _parse_oneline(text, n)
    cycles: list[list[int]] = []
    seen: dict[int, int] = {}
    i = 0
    current: list[int] | None = None
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "(":
            if current is not None:
                raise PermutationSyntaxError("nested '('", text, i)
            current = []
            i += 1
        elif ch == ")":
            if current is None:
                raise PermutationSyntaxError("unmatched ')'", text, i)
            if not current:
                raise PermutationSyntaxError("empty cycle", text, i)
            cycles.append(current)
            current = None
            i += 1
        elif ch.isdigit():
            if current is None:
                raise PermutationSyntaxError("symbol outside a cycle", text, i)
            j = _scan_int(text, i)
            x = int(text[i:j])
            if x < 1:
                raise PermutationSyntaxError("symbols start at 1", text, i)
            if n is not None and x > n:
                raise PermutationSyntaxError(f"symbol {x} exceeds n={n}", text, i)
            if x in seen:
                raise PermutationSyntaxError(f"repeated symbol {x}", text, i)
            seen[x] = i
            current.append(x)
            i = j
        else:
            raise PermutationSyntaxError(f"unexpected character {ch!r}", text, i)
    if current is not None:
        raise PermutationSyntaxError("unclosed '('", text, len(text))
    degree = n if n is not None else max(seen)
    return perm_from_cycles(cycles, degree)


def _parse_oneline(text: str, n: int | None) -> Permutation:
    images, positions = [], []
    i = 0
    while i < len(text):
        if text[i].isspace() or text[i] == ",":
            i += 1
            continue
        if not text[i].isdigit():
            raise PermutationSyntaxError(f"unexpected character {text[i]!r}", text, i)
        j = _scan_int(text, i)
        images.append(int(text[i:j]))
        positions.append(i)
        i = j
    if n is not None and len(images) != n:
        raise PermutationSyntaxError(f"{len(images)} images given for n={n}", text, len(text))
    seen = set()
    for y, pos in zip(images, positions):
        if not 1 <= y <= len(images):
            raise PermutationSyntaxError(f"image {y} out of range 1..{len(images)}", text, pos)
        if y in seen:
            raise PermutationSyntaxError(f"repeated symbol {y}", text, pos)
        seen.add(y)
    return Permutation(tuple(images))


def format_permutation(p: Permutation, style: str = "cycles") -> str:
    """``cycles``: canonical cycles with fixed points; ``oneline``: the image list."""
    if style == "cycles":
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycle_decomposition(p))
    if style == "oneline":
        return " ".join(map(str, p.images))
    raise ValueError(f"unknown style {style!r}")


def witness_json(w: Witness, explain: str | None = None) -> dict:
    out = {
        "n": w.n,
        "tau": list(w.tau.images),
        "pi": list(w.pi.images),
        "rho": list(w.rho.images),
        "class": list(w.cls.parts),
        "verified": bool(verify(w)),
    }
    if explain is not None:
        out["plan"] = explain
    return out


def _witness_text(w: Witness, explain: str | None = None) -> str:
    lines = [
        f"n        {w.n}",
        f"tau      {format_permutation(w.tau)}",
        f"pi       {format_permutation(w.pi)}",
        f"rho      {format_permutation(w.rho)}",
        f"class    {w.cls}",
        f"verified {verify(w).reason.value}",
    ]
    if explain is not None:
        lines += ["plan", explain]
    return "\n".join(lines)


def _cmd_solve(args) -> int:
    if (args.rho is None) == (args.cls is None):
        raise _Usage("solve needs exactly one of --rho or --class")
    if args.rho is not None:
        w = witness_for_perm(parse_permutation(args.rho, args.n), args.brute_force_small)
    else:
        c = CycleType.parse(args.cls)
        w = witness_for_class(args.n if args.n is not None else c.n, c, args.brute_force_small)
    explain = None
    if args.explain:
        try:
            explain = render(plan(w.cls))
        except CommutatorError:
            explain = "brute-force search"
    if args.format == "json":
        print(json.dumps(witness_json(w, explain)))
    else:
        print(_witness_text(w, explain))
    return EXIT_OK if verify(w) else EXIT_FAIL


def _cmd_verify(args) -> int:
    w = Witness(
        parse_permutation(args.tau, args.n),
        parse_permutation(args.pi, args.n),
        parse_permutation(args.rho, args.n),
    )
    verdict = verify(w)
    print(verdict.reason.value)
    return EXIT_OK if verdict else EXIT_FAIL


def _cmd_oracle(args) -> int:
    from .oracle import format_report, pairs_report, reachable_types

    report = pairs_report(args.n) if args.pairs else reachable_types(args.n, workers=args.workers)
    text = format_report(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    missing = ", ".join(str(c) for c in sorted(report.missing, key=lambda c: c.parts)) or "none"
    print(f"missing: {missing}", file=sys.stderr)
    return EXIT_OK


def _cmd_paper_check(args) -> int:
    from .fixtures import run_fixtures

    results = run_fixtures()
    for r in results:
        line = f"{'PASS' if r.ok else 'FAIL'} {r.name}"
        if args.verbose or not r.ok:
            line += f"  {r.detail}"
        print(line)
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} fixtures passed")
    return EXIT_OK if not failed else EXIT_FAIL


def _cmd_batch(args) -> int:
    from .oracle import enumerate_even_types

    status = EXIT_OK
    with open(args.out, "w", encoding="utf-8") as fh:
        for c in sorted(enumerate_even_types(args.n), key=lambda c: c.parts):
            try:
                record = witness_json(witness_for_class(args.n, c, args.brute_force_small))
            except CommutatorError as exc:
                record = {"n": args.n, "class": list(c.parts), "error": type(exc).__name__, "message": str(exc)}
                status = EXIT_DOMAIN
            fh.write(json.dumps(record) + "\n")
    return status


def _cmd_sweep(args) -> int:
    from .sampling import random_even_class, random_even_perm

    rng = random.Random(args.seed)
    failures = 0
    for i in range(args.count):
        n = rng.choice([2] + list(range(6, args.max_n + 1)))
        if i % 2:
            w = witness_for_perm(random_even_perm(rng, n))
            target = "perm"
        else:
            c = random_even_class(rng, n)
            w = witness_for_class(n, c)
            target = f"C{c}"
        if not verify(w):
            failures += 1
            print(f"FAIL n={n} {target}")
    print(f"sweep seed={args.seed}: {args.count - failures}/{args.count} verified")
    return EXIT_OK if not failures else EXIT_FAIL


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclecomm", description="Even permutations as commutators of two n-cycles.")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized subcommands")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find n-cycles tau, pi with [tau, pi] = rho")
    p.add_argument("--rho", help="target permutation")
    p.add_argument("--class", dest="cls", help="target cycle type, e.g. 4,3,2")
    p.add_argument("--n", type=int, help="degree")
    p.add_argument("--explain", action="store_true", help="print the build plan")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--brute-force-small", action="store_true", help="search exhaustively for n in 1, 3, 4, 5")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check that tau, pi are n-cycles with [tau, pi] = rho")
    p.add_argument("--tau", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force coverage report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pairs", action="store_true", help="enumerate both arguments")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("paper-check", help="run the published fixtures")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_paper_check)

    p = sub.add_parser("batch", help="witnesses for every even class of one degree, as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--brute-force-small", action="store_true")
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("sweep", help="solve and verify random targets")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=256)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PermutationSyntaxError as exc:
        print(f"error: PermutationSyntaxError: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CommutatorError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_USAGE
