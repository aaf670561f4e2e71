"""Dataset file formats shared by the CLI and the generators.

Strings: one set per text file, one object per line (a directory of .txt
files holds several sets). Clusterings: comma-separated label rows, blank
line between sets. Rankings: one 'a>b=c>d' line per ranking, blank line
between sets.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import ObjectSet
from .domains.rankings import Ranking

DOMAINS = ("string", "clustering", "ranking")


class DataFormatError(ValueError):
    """Malformed dataset content, reported with file and line position."""


def _parse_clustering_line(line: str, where: str) -> tuple:
    try:
        return tuple(int(part.strip()) for part in line.split(","))
    except ValueError as exc:
        raise DataFormatError(f"{where}: bad label row {line!r}") from exc


def _parse_ranking_line(line: str, where: str) -> Ranking:
    try:
        return Ranking.parse(line)
    except ValueError as exc:
        raise DataFormatError(f"{where}: bad ranking {line!r}") from exc


def _blank_separated(path: Path, parse_line) -> list[ObjectSet]:
    sets: list[ObjectSet] = []
    current: list = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                if current:
                    sets.append(ObjectSet(current))
                    current = []
                continue
            current.append(parse_line(line, f"{path}:{lineno}"))
    if current:
        sets.append(ObjectSet(current))
    if not sets:
        raise DataFormatError(f"{path}: no sets found")
    return sets


def _parse_string_file(path: Path) -> ObjectSet:
    objects = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line:
                raise DataFormatError(f"{path}:{lineno}: empty line in string set")
            objects.append(line)
    if not objects:
        raise DataFormatError(f"{path}: empty set")
    return ObjectSet(objects)


def parse_dataset(path, domain: str) -> list[ObjectSet]:
    """Read one dataset file (or, for strings, a directory of files)."""
    path = Path(path)
    if domain not in DOMAINS:
        raise DataFormatError(f"unknown domain {domain!r}")
    if not path.exists():
        raise DataFormatError(f"{path}: no such file or directory")
    if domain == "string":
        if path.is_dir():
            files = sorted(path.glob("*.txt"))
            if not files:
                raise DataFormatError(f"{path}: no .txt set files")
            return [_parse_string_file(f) for f in files]
        return [_parse_string_file(path)]
    if path.is_dir():
        raise DataFormatError(f"{path}: expected a file for domain {domain!r}")
    if domain == "clustering":
        return _blank_separated(path, _parse_clustering_line)
    return _blank_separated(path, _parse_ranking_line)


def serialize_object(domain: str, obj) -> str:
    if domain == "string":
        return obj
    if domain == "clustering":
        return ",".join(str(int(x)) for x in obj)
    return obj.format()


def write_dataset(path, domain: str, sets: list, metadata: dict | None = None) -> list[Path]:
    """Write sets in the CLI format plus a metadata sidecar; returns the files."""
    path = Path(path)
    written: list[Path] = []
    if domain == "string" and len(sets) > 1:
        path.mkdir(parents=True, exist_ok=True)
        for idx, objects in enumerate(sets):
            target = path / f"set_{idx:03d}.txt"
            target.write_text("".join(f"{o}\n" for o in objects), encoding="utf-8")
            written.append(target)
        sidecar = path / "meta.json"
    else:
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        blocks = []
        for objects in sets:
            blocks.append("".join(serialize_object(domain, o) + "\n" for o in objects))
        path.write_text("\n".join(blocks), encoding="utf-8")
        written.append(path)
        sidecar = Path(str(path) + ".meta.json")
    if metadata is not None:
        sidecar.write_text(json.dumps(metadata, indent=2, sort_keys=True) + "\n",
                           encoding="utf-8")
    return written
