"""Reading and writing the construction catalog and the displayed-commutator fixtures.

Both files are line oriented: ``#`` comments and blank lines are kept
verbatim, every other line is ``|``-separated fields. ``format_*`` of a
parsed file reproduces the file byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Union

from .errors import PatternSyntaxError
from .pattern import Expr, Guard, PatternSpec, parse_pattern, parse_patterns

FAMILIES = (
    "odd_single",
    "even_pair",
    "odd_plus3",
    "even_pair_plus3",
    "odd_plus22",
    "even_plus222",
    "special",
)


@dataclass(frozen=True)
class ClassExpr:
    """A cycle type with symbolic parts, e.g. ``C(2k,2l,3)``."""

    text: str
    parts: tuple[Expr, ...]

    @classmethod
    def parse(cls, text: str) -> ClassExpr:
        text = text.strip()
        if not (text.startswith("C(") and text.endswith(")")):
            raise PatternSyntaxError(f"bad class annotation {text!r}")
        return cls(text, tuple(Expr.parse(p.strip()) for p in text[2:-1].split(",")))

    def evaluate(self, bindings) -> tuple[int, ...]:
        return tuple(sorted((p.evaluate(bindings) for p in self.parts), reverse=True))

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Entry:
    name: str
    family: str
    cls: ClassExpr
    guard: Guard
    pattern: PatternSpec

    def line(self) -> str:
        return f"{self.name} | {self.family} | {self.cls} | {self.guard} | {self.pattern}"


@dataclass(frozen=True)
class Display:
    entry: str
    guard: Guard
    cycles: tuple[PatternSpec, ...]

    def line(self) -> str:
        return f"{self.entry} | {self.guard} | " + "".join(map(str, self.cycles))


@dataclass(frozen=True)
class Verbatim:
    """A comment or blank line."""

    text: str

    def line(self) -> str:
        return self.text


Line = Union[Entry, Display, Verbatim]


def _fields(line: str, count: int, lineno: int) -> list[str]:
    fields = [f.strip() for f in line.split("|")]
    if len(fields) != count:
        raise PatternSyntaxError(f"line {lineno}: expected {count} fields, got {len(fields)}")
    return fields


def parse_catalog(text: str) -> list[Line]:
    out: list[Line] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            out.append(Verbatim(raw))
            continue
        name, family, cls, guard, pattern = _fields(raw, 5, lineno)
        if family not in FAMILIES:
            raise PatternSyntaxError(f"line {lineno}: unknown family {family!r}")
        out.append(Entry(name, family, ClassExpr.parse(cls), Guard.parse(guard), parse_pattern(pattern)))
    return out


def parse_displays(text: str) -> list[Line]:
    out: list[Line] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            out.append(Verbatim(raw))
            continue
        entry, guard, cycles = _fields(raw, 3, lineno)
        out.append(Display(entry, Guard.parse(guard), tuple(parse_patterns(cycles))))
    return out


def format_lines(lines: list[Line]) -> str:
    return "".join(line.line() + "\n" for line in lines)


def read_data(name: str) -> str:
    return resources.files("cyclecomm").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def load_catalog() -> list[Entry]:
    return [e for e in parse_catalog(read_data("catalog.txt")) if isinstance(e, Entry)]


def load_displays() -> list[Display]:
    return [d for d in parse_displays(read_data("displays.txt")) if isinstance(d, Display)]
