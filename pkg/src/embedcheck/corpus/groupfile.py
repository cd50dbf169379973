"""The line-oriented group file format.

.. code-block:: text

    # comment
    name: S4
    degree: 4
    gen: (1,2)
    gen: (1,2,3,4)

``name`` and ``degree`` appear once each, before any ``gen`` line. Generators use
disjoint-cycle notation with 1-based points; a line holding several cycles is their left
to right product and ``()`` is the identity. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..errors import GroupFileError
from ..perm import Group, Perm, build_group


_NAME = re.compile(r"[A-Za-z0-9_.+-]+")


@dataclass(frozen=True, slots=True)
class GroupFile:
    """A parsed group file.

    Attributes:
        name: Group identifier, also used as file stem.
        degree: Number of points.
        generators: Generators in the order they were listed.
    """

    name: str
    degree: int
    generators: tuple[Perm, ...]

    def __post_init__(self):
        if not _NAME.fullmatch(self.name):
            raise ValueError(f"invalid group name {self.name!r}")
        if self.degree < 1:
            raise ValueError("degree < 1")
        for gen in self.generators:
            if gen.degree != self.degree:
                raise ValueError(f"generator {gen} has degree {gen.degree}, expected {self.degree}")

    def build(self) -> Group:
        return build_group(self.degree, self.generators)

    def emit(self) -> str:
        lines = [f"name: {self.name}", f"degree: {self.degree}"]
        lines.extend(f"gen: {gen}" for gen in self.generators)
        return "\n".join(lines) + "\n"


def parse_perm(text: str, degree: int, line: int = 0, column: int = 1) -> Perm:
    """Parse cycle notation such as ``(1,2)(3,4,5)`` or ``()``.

    ``line`` and ``column`` locate ``text`` in its source for error messages.

    Raises:
        GroupFileError: Syntax error, point out of range or point repeated in a cycle.
    """
    cycles: list[list[int]] = []
    i = 0
    n = len(text)

    def fail(message: str, at: int) -> GroupFileError:
        return GroupFileError(message, line, column + at)

    def skip_spaces(at: int) -> int:
        while at < n and text[at].isspace():
            at += 1
        return at

    i = skip_spaces(i)
    if i == n:
        raise fail("expected a cycle", i)
    while i < n:
        if text[i] != "(":
            raise fail(f"expected '(' but found {text[i]!r}", i)
        i = skip_spaces(i + 1)
        cycle: list[int] = []
        if i < n and text[i] == ")":
            cycles.append(cycle)
            i = skip_spaces(i + 1)
            continue
        while True:
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if start == i:
                raise fail("expected a point", start)
            point = int(text[start:i])
            if not 1 <= point <= degree:
                raise fail(f"point {point} out of range 1..{degree}", start)
            if point in cycle:
                raise fail(f"duplicate point {point} in cycle", start)
            cycle.append(point)
            i = skip_spaces(i)
            if i < n and text[i] == ",":
                i = skip_spaces(i + 1)
                continue
            if i < n and text[i] == ")":
                i = skip_spaces(i + 1)
                break
            raise fail("expected ',' or ')'", i)
        cycles.append(cycle)
    return Perm.from_cycles(degree, [c for c in cycles if c])


def parse_generators(text: str, degree: int) -> list[Perm]:
    """Parse a ``;``-separated inline list of generators; an empty string gives no generators.

    Raises:
        GroupFileError: As :func:`parse_perm`; columns refer to ``text``.
    """
    result: list[Perm] = []
    offset = 0
    for chunk in text.split(";"):
        if chunk.strip():
            result.append(parse_perm(chunk, degree, 0, offset + 1))
        offset += len(chunk) + 1
    return result


def parse_group_file(text: str, path: str | None = None) -> GroupFile:
    """Parse the text of a group file.

    Raises:
        GroupFileError: Any syntax or range error, located by line and column.
    """
    name: str | None = None
    degree: int | None = None
    generators: list[Perm] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        raw_key, sep, raw_value = content.partition(":")
        if not sep:
            raise GroupFileError("expected 'key: value'", number, 1, path)
        key = raw_key.strip()
        column = len(raw_key) + 2 + len(raw_value) - len(raw_value.lstrip())
        value = raw_value.strip()
        match key:
            case "name":
                if name is not None:
                    raise GroupFileError("duplicate 'name'", number, 1, path)
                if not _NAME.fullmatch(value):
                    raise GroupFileError(f"invalid group name {value!r}", number, column, path)
                name = value
            case "degree":
                if degree is not None:
                    raise GroupFileError("duplicate 'degree'", number, 1, path)
                if not value.isdigit() or int(value) < 1:
                    raise GroupFileError(f"invalid degree {value!r}", number, column, path)
                degree = int(value)
            case "gen":
                if degree is None:
                    raise GroupFileError("'gen' before 'degree'", number, 1, path)
                try:
                    generators.append(parse_perm(value, degree, number, column))
                except GroupFileError as e:
                    if path is None:
                        raise
                    raise e.with_path(path) from None
            case _:
                raise GroupFileError(f"unknown key {key!r}", number, 1, path)
    if degree is None:
        raise GroupFileError("missing 'degree'", 0, 0, path)
    if name is None:
        name = Path(path).stem if path is not None else "group"
        if not _NAME.fullmatch(name):
            raise GroupFileError("missing 'name' and the file name is not a valid group name", 0, 0, path)
    return GroupFile(name, degree, tuple(generators))


def parse_group(text: str, path: str | None = None) -> Group:
    """Parse a group file and build its group.

    Raises:
        GroupFileError: Syntax or range error.
        CapExceededError: The degree exceeds the degree cap.
    """
    return parse_group_file(text, path).build()


def read_group_file(path: Path) -> GroupFile:
    return parse_group_file(path.read_text(encoding="utf-8"), str(path))


def emit_group(name: str, group: Group) -> str:
    """Canonical file text for ``group``: its canonical generators, one per line."""
    return GroupFile(name, group.degree, group.gens).emit()
