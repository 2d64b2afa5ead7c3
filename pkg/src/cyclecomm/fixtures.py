"""Regression fixtures taken verbatim from the published constructions.

Each fixture is checked exactly: catalog witnesses must land in their
stated class, displayed commutators must match the computed commutator
as permutations, and the small-degree counterexamples must be missing
from the brute-force image.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import load_displays
from .composer import add_fixed_point, stitch
from .constructions import (
    CATALOG,
    SPECIALS,
    IrreducibleClass,
    pinned_bindings,
    build_irreducible,
    catalog_entry,
    check_witness,
    irreducible_classes,
    special,
)
from .errors import CommutatorError
from .oracle import reachable_types
from .pattern import expand, expand_family, expand_values
from .perm import CycleType, commutator, cycle_type, from_word, perm_from_cycles, shift

MAX_FIXTURE_DEGREE = 48


@dataclass(frozen=True)
class FixtureResult:
    name: str
    ok: bool
    detail: str


def _instances(entry_name: str, family: str) -> list[IrreducibleClass]:
    return [
        c
        for c in irreducible_classes(MAX_FIXTURE_DEGREE)
        if c.kind == family and (e := catalog_entry(c)) is not None and e.name == entry_name
    ]


def _catalog_fixtures():
    for entry in CATALOG:
        bindings = pinned_bindings(entry)
        if bindings is not None:
            target = CycleType(entry.cls.evaluate(bindings))
            label = f"table {entry.name} {entry.cls} -> C{target}"
            try:
                pi = check_witness(from_word(expand_family(entry.pattern, bindings)), target, entry.name)
                yield FixtureResult(label, True, str(pi))
            except CommutatorError as exc:
                yield FixtureResult(label, False, str(exc))
            continue
        bad, seen = [], 0
        for c in _instances(entry.name, entry.family):
            seen += 1
            try:
                build_irreducible(c)
            except CommutatorError as exc:
                bad.append(f"{c}: {exc}")
        ok = seen > 0 and not bad
        detail = f"{seen} instances, degree <= {MAX_FIXTURE_DEGREE}" if ok else "; ".join(bad) or "no instances"
        yield FixtureResult(f"family {entry.name}", ok, detail)


def _display_fixtures():
    by_name = {e.name: e for e in CATALOG}
    for d in load_displays():
        entry = by_name[d.entry]
        label = f"display {d.entry} [{d.guard}]"
        if entry.family == "special":
            target = CycleType(entry.cls.evaluate({}))
            cases = [(SPECIALS[target].pi, {})]
        else:
            cases = [(build_irreducible(c), c.bindings) for c in _instances(entry.name, entry.family) if d.guard.holds(c.bindings)]
        bad = []
        for pi, bindings in cases:
            n = pi.n
            try:
                shown = perm_from_cycles([expand_values(s, bindings, n) for s in d.cycles], n)
            except CommutatorError as exc:
                bad.append(f"{bindings}: {exc}")
                continue
            if shown != commutator(shift(n), pi):
                bad.append(f"{bindings}: displayed {shown} != computed {commutator(shift(n), pi)}")
        ok = bool(cases) and not bad
        yield FixtureResult(label, ok, f"{len(cases)} instances exact" if ok else "; ".join(bad) or "no instances")


def _notation_fixtures():
    for text, want in (("(1 2 +2.. 8 7)", (1, 2, 4, 6, 8, 7)), ("(1 2 (+3,-1).. 9)", (1, 2, 5, 4, 7, 6, 9))):
        got = expand(text)
        yield FixtureResult(f"notation {text}", got == want, f"{got}")


def _composition_fixtures():
    base = special(CycleType.of(3, 1))
    checks = (
        ("add1 (1 2 4 3)", add_fixed_point(base), CycleType.of(3, 1, 1)),
        ("stitch (1 2 4 3) (1 2 4 3)", stitch(base, base), CycleType.of(3, 3, 1, 1)),
    )
    for label, pi, want in checks:
        got = cycle_type(commutator(shift(pi.n), pi))
        yield FixtureResult(f"compose {label}", got == want, f"C{got}")


def _small_degree_fixtures():
    want = {3: CycleType.of(3), 4: CycleType.of(2, 2), 5: CycleType.of(2, 2, 1)}
    for n, c in want.items():
        report = reachable_types(n)
        ok = report.missing == frozenset({c})
        yield FixtureResult(f"small degree n={n} missing C{c}", ok, ", ".join(map(str, sorted(report.missing))))


def run_fixtures() -> list[FixtureResult]:
    results = []
    for group in (_notation_fixtures, _catalog_fixtures, _display_fixtures, _composition_fixtures, _small_degree_fixtures):
        results.extend(group())
    return results
