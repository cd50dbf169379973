"""The verification corpus: bundled groups, generated corpus directories and their manifest.

A corpus directory holds one ``<name>.group`` file per group and a ``manifest.jsonl``
with one ``{"name", "order", "source", "path"}`` record per line, in corpus order.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import reduce
from importlib.resources import files
from math import prod
from pathlib import Path
from typing import Literal

from ..errors import GroupFileError
from ..perm import Group
from .constructors import alternating, cyclic, dihedral, direct_product, generalized_quaternion, symmetric
from .groupfile import emit_group, parse_group_file, read_group_file


logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.jsonl"
MAX_CORPUS_ORDER = 2000

Source = Literal["constructed", "file", "import"]


@dataclass(frozen=True, slots=True)
class CorpusEntry:
    """One corpus member.

    Attributes:
        name: Unique identifier.
        group: The group.
        source: How the entry was obtained.
        path: File the entry was read from or written to, if any.
    """

    name: str
    group: Group
    source: Source
    path: str | None = None

    def record(self) -> dict[str, object]:
        return {"name": self.name, "order": self.group.order, "source": self.source, "path": self.path}


@dataclass(frozen=True, slots=True)
class CorpusManifest:
    """An ordered corpus with unique names."""

    entries: tuple[CorpusEntry, ...] = ()

    def __post_init__(self):
        names = [entry.name for entry in self.entries]
        if len(set(names)) != len(names):
            raise ValueError("duplicate corpus names")

    def __iter__(self) -> Iterator[CorpusEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> list[str]:
        return [entry.name for entry in self.entries]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(entry.record()) + "\n" for entry in self.entries)


# factors of the bundled direct products, by name: (order, constructor)
_FACTORS: dict[str, tuple[int, Callable[[], Group]]] = {
    "C2": (2, lambda: cyclic(2)),
    "C3": (3, lambda: cyclic(3)),
    "C4": (4, lambda: cyclic(4)),
    "C5": (5, lambda: cyclic(5)),
    "C6": (6, lambda: cyclic(6)),
    "S3": (6, lambda: symmetric(3)),
    "D8": (8, lambda: dihedral(8)),
    "Q8": (8, lambda: generalized_quaternion(8)),
    "D10": (10, lambda: dihedral(10)),
    "A4": (12, lambda: alternating(4)),
    "S4": (24, lambda: symmetric(4)),
}

_PRODUCTS = [
    "C2xC2xC2",
    "C2xC6",
    "C3xC3",
    "C2xS3",
    "C3xS3",
    "C4xS3",
    "C5xS3",
    "C2xD8",
    "C2xQ8",
    "C3xQ8",
    "C2xA4",
    "C3xA4",
    "A4xC5",
    "C2xS4",
    "C3xS4",
    "S3xD10",
    "Q8xS3",
    "D8xS3",
]


def _product(name: str) -> tuple[int, Callable[[], Group]]:
    factors = [_FACTORS[factor] for factor in name.split("x")]
    order = prod(order for order, _ in factors)
    return order, lambda: reduce(direct_product, (build() for _, build in factors))


def _families(max_order: int) -> Iterator[tuple[str, Callable[[], Group]]]:
    for n in range(2, min(max_order, 64) + 1):
        yield f"C{n}", lambda n=n: cyclic(n)
    for n in range(2, min(max_order // 2, 64) + 1):
        yield f"D{2 * n}", lambda n=n: dihedral(2 * n)
    n, factorial = 2, 2
    while factorial <= max_order:
        yield f"S{n}", lambda n=n: symmetric(n)
        n += 1
        factorial *= n
    n, half = 4, 12
    while half <= max_order:
        yield f"A{n}", lambda n=n: alternating(n)
        n += 1
        half *= n
    order = 8
    while order <= min(max_order, 64):
        yield f"Q{order}", lambda order=order: generalized_quaternion(order)
        order *= 2
    for name in _PRODUCTS:
        order, build = _product(name)
        if order <= max_order:
            yield name, build


def _fixture_files() -> list[tuple[str, str]]:
    root = files("embedcheck.corpus") / "fixtures"
    found = [(item.name, item.read_text(encoding="utf-8")) for item in root.iterdir() if item.name.endswith(".group")]
    return sorted(found)


def bundled_corpus(max_order: int) -> CorpusManifest:
    """The in-memory corpus: constructor families and bundled fixtures of order at most ``max_order``.

    Constructed entries whose name is taken by a fixture are skipped; the fixture wins.

    Raises:
        ValueError: ``max_order`` is outside ``1..2000``.
    """
    if not 1 <= max_order <= MAX_CORPUS_ORDER:
        raise ValueError(f"max_order {max_order} outside 1..{MAX_CORPUS_ORDER}")
    fixtures: list[CorpusEntry] = []
    for file_name, text in _fixture_files():
        parsed = parse_group_file(text, file_name)
        group = parsed.build()
        if group.order <= max_order:
            fixtures.append(CorpusEntry(parsed.name, group, "file", file_name))
    taken = {entry.name for entry in fixtures}
    constructed = [
        CorpusEntry(name, build(), "constructed") for name, build in _families(max_order) if name not in taken
    ]
    manifest = CorpusManifest(tuple(constructed + fixtures))
    logger.info("bundled corpus: %d groups of order <= %d", len(manifest), max_order)
    return manifest


def _import_entries(import_dir: Path) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    for path in sorted(import_dir.glob("*.group")):
        parsed = read_group_file(path)
        entries.append(CorpusEntry(parsed.name, parsed.build(), "import", str(path)))
    return entries


def generate_corpus(max_order: int, out_dir: Path, import_dir: Path | None = None) -> CorpusManifest:
    """Write the bundled corpus, plus any ``*.group`` files of ``import_dir``, as a corpus directory.

    Raises:
        ValueError: ``max_order`` out of range, or a name is used twice.
        GroupFileError: An imported file is malformed.
        OSError: ``out_dir`` cannot be written.
    """
    bundled = bundled_corpus(max_order).entries
    imported = _import_entries(import_dir) if import_dir is not None else []
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[CorpusEntry] = []
    for entry in (*bundled, *imported):
        file_name = f"{entry.name}.group"
        (out_dir / file_name).write_text(emit_group(entry.name, entry.group), encoding="utf-8")
        written.append(CorpusEntry(entry.name, entry.group, entry.source, file_name))
    manifest = CorpusManifest(tuple(written))
    (out_dir / MANIFEST_NAME).write_text(manifest.to_jsonl(), encoding="utf-8")
    logger.info("wrote %d groups to %s", len(manifest), out_dir)
    return manifest


def _read_manifest(corpus_dir: Path) -> list[tuple[str, int | None, Source]]:
    records: list[tuple[str, int | None, Source]] = []
    text = (corpus_dir / MANIFEST_NAME).read_text(encoding="utf-8")
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            source = record.get("source", "file")
            if source not in ("constructed", "file", "import"):
                raise ValueError(f"unknown source {source!r}")
            records.append((str(record["path"]), int(record["order"]), source))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise GroupFileError(f"bad manifest record: {e}", number, 1, str(corpus_dir / MANIFEST_NAME)) from e
    return records


def load_corpus(corpus_dir: Path) -> CorpusManifest:
    """Read a corpus directory.

    The manifest fixes the order of the corpus and the expected group orders; without a
    manifest every ``*.group`` file is read in file-name order.

    Raises:
        GroupFileError: A file or manifest record is malformed, or an order disagrees with the manifest.
        OSError: The directory cannot be read.
    """
    if not corpus_dir.is_dir():
        raise NotADirectoryError(f"{corpus_dir} is not a directory")
    if (corpus_dir / MANIFEST_NAME).exists():
        records = _read_manifest(corpus_dir)
    else:
        records = [(path.name, None, "file") for path in sorted(corpus_dir.glob("*.group"))]
    entries: list[CorpusEntry] = []
    for file_name, expected, source in records:
        path = corpus_dir / file_name
        parsed = read_group_file(path)
        group = parsed.build()
        if expected is not None and group.order != expected:
            raise GroupFileError(f"order {group.order} differs from the manifest order {expected}", 0, 0, str(path))
        entries.append(CorpusEntry(parsed.name, group, source, str(path)))
    manifest = CorpusManifest(tuple(entries))
    logger.info("loaded %d groups from %s", len(manifest), corpus_dir)
    return manifest
