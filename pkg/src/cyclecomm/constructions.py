"""Explicit witnesses for the irreducible classes and the tabulated special classes.

Every witness is an n-cycle ``pi`` with ``pi(1) == 2`` such that
``commutator(shift(n), pi)`` has the requested cycle type. All formulas
come from the catalog file; this module only selects an entry, expands
it and checks the result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Entry, load_catalog
from .errors import ConstructionFailed, NotInTable, OutOfFamily
from .pattern import expand_family
from .perm import (
    CycleType,
    Permutation,
    commutator,
    cycle_length_at,
    cycle_type,
    cycle_word,
    from_word,
    shift,
)


@dataclass(frozen=True, slots=True)
class IrreducibleClass:
    """One member of the six parameterized irreducible families.

    ``kind`` is the catalog family name. Parameters: ``odd_single(n)``,
    ``even_pair(k, l)``, ``odd_plus3(n)``, ``even_pair_plus3(k, l)``,
    ``odd_plus22(n)``, ``even_plus222(k)``. Pair families are normalized to
    ``k >= l``.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        kind, p = self.kind, self.params
        if kind in ("even_pair", "even_pair_plus3"):
            if len(p) != 2:
                raise OutOfFamily(f"{kind} takes (k, l), got {p}")
            k, l = max(p), min(p)
            object.__setattr__(self, "params", (k, l))
            if l < 1 or (kind == "even_pair" and k == l == 1):
                raise OutOfFamily(f"{kind}{(k, l)} is outside the family")
            return
        bounds = {"odd_single": 5, "odd_plus3": 1, "odd_plus22": 3, "even_plus222": 1}
        if kind not in bounds:
            raise OutOfFamily(f"unknown family {kind!r}")
        if len(p) != 1:
            raise OutOfFamily(f"{kind} takes one parameter, got {p}")
        (x,) = p
        if x < bounds[kind] or (kind != "even_plus222" and x % 2 == 0):
            raise OutOfFamily(f"{kind}({x}) is outside the family")

    @classmethod
    def odd_single(cls, n: int) -> IrreducibleClass:
        return cls("odd_single", (n,))

    @classmethod
    def even_pair(cls, k: int, l: int) -> IrreducibleClass:
        return cls("even_pair", (k, l))

    @classmethod
    def odd_plus3(cls, n: int) -> IrreducibleClass:
        return cls("odd_plus3", (n,))

    @classmethod
    def even_pair_plus3(cls, k: int, l: int) -> IrreducibleClass:
        return cls("even_pair_plus3", (k, l))

    @classmethod
    def odd_plus22(cls, n: int) -> IrreducibleClass:
        return cls("odd_plus22", (n,))

    @classmethod
    def even_plus222(cls, k: int) -> IrreducibleClass:
        return cls("even_plus222", (k,))

    @property
    def bindings(self) -> dict[str, int]:
        p = self.params
        if self.kind in ("even_pair", "even_pair_plus3"):
            return {"k": p[0], "l": p[1], "n": 2 * p[0] + 2 * p[1]}
        if self.kind == "even_plus222":
            return {"k": p[0], "n": 2 * p[0] + 6}
        return {"n": p[0]}

    @property
    def cycle_type(self) -> CycleType:
        p = self.params
        parts = {
            "odd_single": lambda: (p[0],),
            "even_pair": lambda: (2 * p[0], 2 * p[1]),
            "odd_plus3": lambda: (p[0], 3),
            "even_pair_plus3": lambda: (2 * p[0], 2 * p[1], 3),
            "odd_plus22": lambda: (p[0], 2, 2),
            "even_plus222": lambda: (2 * p[0], 2, 2, 2),
        }[self.kind]()
        return CycleType(parts)

    @property
    def degree(self) -> int:
        return self.cycle_type.n

    def __str__(self) -> str:
        return f"{self.kind}({', '.join(map(str, self.params))})"


@dataclass(frozen=True, slots=True)
class SpecialEntry:
    cls: CycleType
    pi: Permutation
    name: str


def check_witness(pi: Permutation, target: CycleType, what: str = "witness") -> Permutation:
    """Raise ConstructionFailed unless pi is an n-cycle, pi(1) = 2 and [shift, pi] has type target."""
    n = pi.n
    if n != target.n:
        raise ConstructionFailed(f"{what}: degree {n} but class {target} has degree {target.n}")
    if n >= 2 and pi(1) != 2:
        raise ConstructionFailed(f"{what}: pi(1) = {pi(1)}, expected 2")
    if len(cycle_word(pi)) != n:
        raise ConstructionFailed(f"{what}: {pi} is not an {n}-cycle")
    got = cycle_type(commutator(shift(n), pi))
    if got != target:
        raise ConstructionFailed(f"{what}: commutator has type {got}, expected {target}")
    return pi


def pinned_bindings(entry: Entry) -> dict[str, int] | None:
    """Parameter values fixed by ``var==const`` guard atoms, if they fix every variable."""
    pinned = {}
    for lhs, mod, op, rhs in entry.guard.atoms:
        if op == "==" and mod is None and len(lhs.coefs) == 1 and lhs.coefs[0][1] == 1 and lhs.const == 0 and not rhs.coefs:
            pinned[lhs.coefs[0][0]] = rhs.const
    if entry.pattern.variables - set(pinned) or {v for e in entry.cls.parts for v in e.variables} - set(pinned):
        return None
    return pinned


def _load() -> tuple[list[Entry], dict[CycleType, SpecialEntry]]:
    entries = load_catalog()
    table: dict[CycleType, SpecialEntry] = {}
    # Special family first so its entries win over identical small family cases.
    for entry in sorted(entries, key=lambda e: e.family != "special"):
        bindings = pinned_bindings(entry)
        if bindings is None:
            continue
        target = CycleType(entry.cls.evaluate(bindings))
        pi = from_word(expand_family(entry.pattern, bindings))
        check_witness(pi, target, entry.name)
        table.setdefault(target, SpecialEntry(target, pi, entry.name))
    return entries, table


CATALOG, SPECIALS = _load()


def special(c: CycleType) -> Permutation:
    """The tabulated witness for class ``c``; NotInTable if there is none."""
    try:
        return SPECIALS[c].pi
    except KeyError:
        raise NotInTable(f"no tabulated witness for {c}") from None


def catalog_entry(c: IrreducibleClass) -> Entry | None:
    """First catalog entry of c's family whose guard accepts c's parameters."""
    bindings = c.bindings
    for entry in CATALOG:
        if entry.family == c.kind and entry.guard.holds(bindings):
            return entry
    return None


def _even_pair_plus3_generic(c: IrreducibleClass) -> Permutation:
    # C(2k,2l,3) from a C(2k-2,2l) witness whose commutator has n in its (2k-2)-cycle:
    # append n+1 n+3 n+2 n+5 n+4 to the cycle of pi written from 1.
    k, l = c.params
    base = build_irreducible(IrreducibleClass.even_pair(k - 1, l))
    n = base.n
    length = cycle_length_at(commutator(shift(n), base), n)
    if length != 2 * (k - 1):
        raise ConstructionFailed(f"{c}: symbol {n} lies in a {length}-cycle of the base commutator")
    word = cycle_word(base)
    word.extend((n + 1, n + 3, n + 2, n + 5, n + 4))
    return from_word(word)


def build_irreducible(c: IrreducibleClass) -> Permutation:
    """Witness pi in C(degree) with pi(1) = 2 and [shift, pi] of type c.cycle_type."""
    entry = catalog_entry(c)
    if entry is not None:
        pi = from_word(expand_family(entry.pattern, c.bindings))
        return check_witness(pi, c.cycle_type, f"{entry.name}{c.params}")
    if c.kind == "even_pair_plus3" and c.params[0] > c.params[1]:
        return check_witness(_even_pair_plus3_generic(c), c.cycle_type, str(c))
    raise OutOfFamily(f"no construction for {c}")


def irreducible_classes(max_degree: int):
    """Every in-range irreducible class of degree <= max_degree."""
    for n in range(5, max_degree + 1, 2):
        yield IrreducibleClass.odd_single(n)
    for k in range(1, max_degree // 2 + 1):
        for l in range(1, k + 1):
            if (k, l) != (1, 1) and 2 * k + 2 * l <= max_degree:
                yield IrreducibleClass.even_pair(k, l)
            if 2 * k + 2 * l + 3 <= max_degree:
                yield IrreducibleClass.even_pair_plus3(k, l)
    for n in range(1, max_degree - 2, 2):
        yield IrreducibleClass.odd_plus3(n)
    for n in range(3, max_degree - 3, 2):
        yield IrreducibleClass.odd_plus22(n)
    for k in range(1, (max_degree - 6) // 2 + 1):
        yield IrreducibleClass.even_plus222(k)

