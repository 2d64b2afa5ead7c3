"""Arithmetic-progression cycle notation.

A pattern is a parenthesized cycle whose tokens are literals and
progressions, e.g. ``(1 2 +2.. 8 7)`` or ``(1 2 (+3,-1).. 9)``:

* ``+d..`` / ``-d..`` keep adding (subtracting) ``d`` from the preceding
  literal until the following literal is produced;
* ``(+d,-e)..`` alternately adds ``d`` and subtracts ``e`` until the
  following literal is produced (steps may appear in either order).

Literals may be linear expressions in lowercase parameters (``2l+2``,
``n-1``, ``4k-3``); ``expand_family`` substitutes values for them.

Degenerate spans: a progression whose two literals are equal contributes
nothing and the literal is written once; a monotone progression whose end
literal sits exactly one step *behind* its start is an empty run, and both
of its literals are dropped (``n n-1 -2.. 6`` at n=5 is just ``5``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import InconsistentProgression, PatternSyntaxError, UnresolvedSymbol

_TERM = re.compile(r"([+-]?)(\d*)([a-z]?)")


@dataclass(frozen=True, slots=True)
class Expr:
    """Integer-linear expression ``const + sum(coef * var)``, kept with its source text."""

    text: str
    const: int
    coefs: tuple[tuple[str, int], ...]

    @classmethod
    def parse(cls, text: str) -> Expr:
        if not text or text[0] in "+-" or not re.fullmatch(r"[0-9a-z+-]+", text):
            raise PatternSyntaxError(f"bad expression {text!r}")
        const, coefs, pos = 0, {}, 0
        while pos < len(text):
            m = _TERM.match(text, pos)
            sign, digits, var = m.groups()
            if not digits and not var or (pos > 0 and not sign):
                raise PatternSyntaxError(f"bad expression {text!r}")
            value = (-1 if sign == "-" else 1) * (int(digits) if digits else 1)
            if var:
                coefs[var] = coefs.get(var, 0) + value
            else:
                const += value
            pos = m.end()
        return cls(text, const, tuple(sorted(coefs.items())))

    @property
    def variables(self) -> set[str]:
        return {v for v, c in self.coefs if c}

    def evaluate(self, bindings: Mapping[str, int] | None = None) -> int:
        total = self.const
        for var, coef in self.coefs:
            if bindings is None or var not in bindings:
                raise UnresolvedSymbol(f"unbound parameter {var!r} in {self.text!r}")
            total += coef * bindings[var]
        return total

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True, slots=True)
class Literal:
    expr: Expr

    def __str__(self) -> str:
        return self.expr.text


@dataclass(frozen=True, slots=True)
class Progression:
    """Steps applied cyclically; one step for a monotone run, two for alternating."""

    steps: tuple[int, ...]

    def __post_init__(self):
        if not self.steps or any(s == 0 for s in self.steps):
            raise PatternSyntaxError(f"progression steps must be nonzero: {self.steps}")
        if len(self.steps) > 1 and sum(self.steps) == 0:
            raise PatternSyntaxError(f"alternating progression {self.steps} never advances")

    @property
    def monotone(self) -> bool:
        return len(self.steps) == 1

    def __str__(self) -> str:
        fmt = [f"{s:+d}" for s in self.steps]
        return f"{fmt[0]}.." if self.monotone else "(" + ",".join(fmt) + ").."


Token = Union[Literal, Progression]


@dataclass(frozen=True, slots=True)
class PatternSpec:
    tokens: tuple[Token, ...]

    def __post_init__(self):
        toks = self.tokens
        if not toks or not isinstance(toks[0], Literal) or not isinstance(toks[-1], Literal):
            raise PatternSyntaxError("a pattern must start and end with a literal")
        for a, b in zip(toks, toks[1:]):
            if isinstance(a, Progression) and isinstance(b, Progression):
                raise PatternSyntaxError("two adjacent progressions")

    @property
    def variables(self) -> set[str]:
        out = set()
        for tok in self.tokens:
            if isinstance(tok, Literal):
                out |= tok.expr.variables
        return out

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.tokens)) + ")"


_LEX = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<alt>\((?P<a1>[+-]\d+),(?P<a2>[+-]\d+)\)\.\.)
  | (?P<mono>(?P<m>[+-]\d+)\.\.)
  | (?P<open>\()
  | (?P<close>\))
  | (?P<lit>[0-9a-z][0-9a-z+-]*)
    """,
    re.VERBOSE,
)


def parse_patterns(text: str) -> list[PatternSpec]:
    """Parse juxtaposed cycles ``(...)(...)``; whitespace between them is allowed."""
    specs: list[PatternSpec] = []
    current: list[Token] | None = None
    pos = 0
    while pos < len(text):
        m = _LEX.match(text, pos)
        if m is None:
            raise PatternSyntaxError(f"unexpected character {text[pos]!r} at position {pos} in {text!r}")
        if m.group("ws"):
            pass
        elif m.group("alt"):
            if current is None:
                raise PatternSyntaxError(f"progression outside a cycle at position {pos}")
            current.append(Progression((int(m.group("a1")), int(m.group("a2")))))
        elif m.group("mono"):
            if current is None:
                raise PatternSyntaxError(f"progression outside a cycle at position {pos}")
            current.append(Progression((int(m.group("m")),)))
        elif m.group("open"):
            if current is not None:
                raise PatternSyntaxError(f"nested '(' at position {pos}")
            current = []
        elif m.group("close"):
            if current is None:
                raise PatternSyntaxError(f"unbalanced ')' at position {pos}")
            specs.append(PatternSpec(tuple(current)))
            current = None
        else:
            if current is None:
                raise PatternSyntaxError(f"literal outside a cycle at position {pos}")
            current.append(Literal(Expr.parse(m.group("lit"))))
        pos = m.end()
    if current is not None:
        raise PatternSyntaxError(f"unterminated cycle in {text!r}")
    return specs


def parse_pattern(text: str) -> PatternSpec:
    specs = parse_patterns(text)
    if len(specs) != 1:
        raise PatternSyntaxError(f"expected exactly one cycle, got {len(specs)} in {text!r}")
    return specs[0]


def _run(start: int, end: int, prog: Progression) -> list[int] | None:
    """Values strictly after ``start`` up to and including ``end``.

    ``None`` signals an empty monotone run (end is one step behind start).
    """
    if start == end:
        return []
    if prog.monotone:
        d = prog.steps[0]
        q, r = divmod(end - start, d)
        if r == 0 and q >= 1:
            return list(range(start + d, end + (1 if d > 0 else -1), d))
        if r == 0 and q == -1:
            return None
        raise InconsistentProgression(f"{start} {prog} {end}: stepping never reaches {end}")
    net = sum(prog.steps)
    direction = 1 if net > 0 else -1
    if (end - start) * direction < 0:
        raise InconsistentProgression(f"{start} {prog} {end}: progression moves away from {end}")
    slack = max(abs(s) for s in prog.steps)
    out, value, i = [], start, 0
    while True:
        value += prog.steps[i % len(prog.steps)]
        i += 1
        out.append(value)
        if value == end:
            return out
        if (value - end) * direction > slack:
            raise InconsistentProgression(f"{start} {prog} {end}: overshoots {end}")


def expand_values(spec: PatternSpec, bindings: Mapping[str, int] | None = None, n: int | None = None) -> tuple[int, ...]:
    out: list[int] = []
    toks = spec.tokens
    i = 0
    while i < len(toks):
        tok = toks[i]
        if isinstance(tok, Progression):
            start = out[-1] if out else None
            end = toks[i + 1].expr.evaluate(bindings)
            if start is None:
                raise InconsistentProgression(f"{spec}: progression has no start after an empty run")
            run = _run(start, end, tok)
            if run is None:
                out.pop()
            else:
                out.extend(run)
            i += 2
            continue
        out.append(tok.expr.evaluate(bindings))
        i += 1
    if len(set(out)) != len(out):
        raise InconsistentProgression(f"{spec} expands to a repeated symbol: {out}")
    low = min(out)
    if low < 1 or (n is not None and max(out) > n):
        raise InconsistentProgression(f"{spec} expands out of range: {out}")
    return tuple(out)


def expand(spec: PatternSpec | str, n: int | None = None) -> tuple[int, ...]:
    """Expand a concrete pattern (no parameters) into an explicit cycle."""
    if isinstance(spec, str):
        spec = parse_pattern(spec)
    return expand_values(spec, None, n)


def expand_family(template: PatternSpec | str, bindings: Mapping[str, int], n: int | None = None) -> tuple[int, ...]:
    """Substitute ``bindings`` into a parameterized pattern and expand it."""
    if isinstance(template, str):
        template = parse_pattern(template)
    missing = template.variables - set(bindings)
    if missing:
        raise UnresolvedSymbol(f"unbound parameters {sorted(missing)} in {template}")
    return expand_values(template, bindings, n)


_ATOM = re.compile(r"^(?P<lhs>[0-9a-z+-]+?)(?:%(?P<mod>\d+))?(?P<op>>=|<=|==|!=|>|<)(?P<rhs>[0-9a-z+-]+)$")
_OPS = {
    ">=": lambda a, b: a >= b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    ">": lambda a, b: a > b,
    "<": lambda a, b: a < b,
}


@dataclass(frozen=True, slots=True)
class Guard:
    """Conjunction of comparisons such as ``k>l+1, l>=2, n%4==1``; ``-`` is always true."""

    text: str
    atoms: tuple[tuple[Expr, int | None, str, Expr], ...]

    @classmethod
    def parse(cls, text: str) -> Guard:
        text = text.strip()
        if text == "-":
            return cls(text, ())
        atoms = []
        for raw in text.split(","):
            m = _ATOM.match(raw.replace(" ", ""))
            if m is None:
                raise PatternSyntaxError(f"bad guard atom {raw!r}")
            mod = int(m.group("mod")) if m.group("mod") else None
            atoms.append((Expr.parse(m.group("lhs")), mod, m.group("op"), Expr.parse(m.group("rhs"))))
        return cls(text, tuple(atoms))

    def holds(self, bindings: Mapping[str, int]) -> bool:
        for lhs, mod, op, rhs in self.atoms:
            a = lhs.evaluate(bindings)
            if mod is not None:
                a %= mod
            if not _OPS[op](a, rhs.evaluate(bindings)):
                return False
        return True

    def __str__(self) -> str:
        return self.text
