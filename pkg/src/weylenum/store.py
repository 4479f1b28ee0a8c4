"""Disk persistence for levels plus the global element index.

One text file per level, named ``{prefix}_WeightMatrByLevel_{k}_elems={n}.txt``.
Each record is a header line

    n={ordinal}, name={word}, w={comma-joined weight}, n_inv={inverse ordinal}

followed by one bracketed integer list per matrix row.  The identity's word
is a single space on disk and the empty word in memory.  Files are UTF-8
with LF line endings, and a loaded level writes back byte-identically.
"""

from __future__ import annotations

import ast
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import IntegrityError, ParseError, WeylError
from .orbit import Level, matrix_key

_FILE_RE = re.compile(r"^(?P<prefix>.+)_WeightMatrByLevel_(?P<k>\d+)_elems=(?P<n>\d+)\.txt$")
_HEADER_RE = re.compile(r"^n=(\d+), name=([^,]*), w=([-\d,]*), n_inv=(\d+)$")


@dataclass(frozen=True)
class LevelFile:
    """A written level: its path plus the metadata encoded in the name."""

    path: Path
    index: int
    size: int


def level_file_name(prefix: str, index: int, size: int) -> str:
    return f"{prefix}_WeightMatrByLevel_{index}_elems={size}.txt"


def parse_level_file_name(path: Path | str) -> tuple[str, int, int]:
    """Split a level file name into (prefix, level index, element count)."""
    name = Path(path).name
    m = _FILE_RE.match(name)
    if not m:
        raise ParseError(f"{name}: file name does not match the level pattern")
    return m.group("prefix"), int(m.group("k")), int(m.group("n"))


def format_word(word: Sequence[int]) -> str:
    """Render a word for a file header: 's2.s1' for (2, 1), one space for the identity."""
    if not word:
        return " "
    return ".".join(f"s{g}" for g in word)


def parse_word(text: str) -> tuple[int, ...]:
    stripped = text.strip()
    if not stripped:
        return ()
    parts = stripped.split(".")
    if not all(p.startswith("s") and p[1:].isdigit() for p in parts):
        raise ParseError(f"malformed word {text!r}")
    return tuple(int(p[1:]) for p in parts)


def format_level(level: Level) -> str:
    """The exact file body for a level."""
    chunks = []
    for j in range(level.size):
        header = (f"n={j}, name={format_word(level.words[j])}, "
                  f"w={','.join(str(int(x)) for x in level.weights[j])}, "
                  f"n_inv={int(level.inv_ordinal[j])}")
        chunks.append(header)
        for row in level.matrices[j]:
            chunks.append("\n" + str(row.tolist()))
        chunks.append("\n")
    return "".join(chunks)


def write_level(level: Level, prefix: str, dir: Path | str) -> LevelFile:
    """Persist a sealed level; empty levels are refused."""
    if level.size == 0:
        raise WeylError(f"refusing to write empty level {level.index}")
    if not level.sealed:
        raise IntegrityError(f"level {level.index} is not sealed")
    directory = Path(dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / level_file_name(prefix, level.index, level.size)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_level(level))
    return LevelFile(path=path, index=level.index, size=level.size)


def read_level(path: Path | str) -> Level:
    """Load a level file written by write_level.

    The inverse matrices are not stored; they are recovered from the pairing,
    since the matrix of an element's inverse is its partner's matrix.  The
    predecessor/generator provenance arrays are not recoverable and are left
    unset.
    """
    path = Path(path)
    m = _FILE_RE.match(path.name)
    if not m:
        raise ParseError(f"{path.name}: file name does not match the level pattern")
    index, size = int(m.group("k")), int(m.group("n"))
    lines = path.read_text(encoding="utf-8").splitlines()
    words: list[tuple[int, ...]] = []
    weights: list[list[int]] = []
    matrices: list[list[list[int]]] = []
    inv_ordinal: list[int] = []
    rank: int | None = None
    pos = 0
    for j in range(size):
        if pos >= len(lines):
            raise ParseError(f"{path}:{len(lines)}: truncated file, expected {size} records")
        header = _HEADER_RE.match(lines[pos])
        if not header:
            raise ParseError(f"{path}:{pos + 1}: malformed header {lines[pos]!r}")
        if int(header.group(1)) != j:
            raise IntegrityError(
                f"{path}:{pos + 1}: record ordinal {header.group(1)} out of sequence, expected {j}")
        try:
            words.append(parse_word(header.group(2)))
        except ParseError as exc:
            raise ParseError(f"{path}:{pos + 1}: {exc}") from None
        coords = [int(t) for t in header.group(3).split(",") if t]
        if rank is None:
            rank = len(coords)
        if len(coords) != rank:
            raise ParseError(f"{path}:{pos + 1}: expected {rank} weight coordinates")
        weights.append(coords)
        inv_ordinal.append(int(header.group(4)))
        pos += 1
        rows = []
        for r in range(rank):
            if pos >= len(lines):
                raise ParseError(f"{path}:{len(lines)}: truncated matrix in record {j}")
            try:
                row = ast.literal_eval(lines[pos])
            except (ValueError, SyntaxError):
                raise ParseError(f"{path}:{pos + 1}: malformed matrix row {lines[pos]!r}") from None
            if not isinstance(row, list) or len(row) != rank \
                    or not all(isinstance(x, int) for x in row):
                raise ParseError(f"{path}:{pos + 1}: expected a list of {rank} integers")
            rows.append(row)
            pos += 1
        matrices.append(rows)
    if pos != len(lines):
        raise ParseError(f"{path}:{pos + 1}: trailing content after {size} records")
    inv = np.asarray(inv_ordinal, dtype=np.int64)
    if ((inv < 0) | (inv >= size)).any():
        raise IntegrityError(f"{path}: inverse ordinal out of range")
    matr = np.asarray(matrices, dtype=np.int64)
    return Level(
        index=index,
        weights=np.asarray(weights, dtype=np.int64),
        matrices=matr,
        inv_matrices=matr[inv],
        words=words,
        inv_ordinal=inv,
    )


def find_level_files(dir: Path | str, prefix: str) -> list[Path]:
    """All level files for a prefix, sorted by level index; gaps are an error."""
    directory = Path(dir)
    found = {}
    for path in directory.glob(f"{prefix}_WeightMatrByLevel_*.txt"):
        m = _FILE_RE.match(path.name)
        if m and m.group("prefix") == prefix:
            found[int(m.group("k"))] = path
    if not found:
        raise WeylError(f"no level files for prefix {prefix!r} in {directory}")
    top = max(found)
    missing = [k for k in range(top + 1) if k not in found]
    if missing:
        raise IntegrityError(f"missing level files for levels {missing} in {directory}")
    return [found[k] for k in range(top + 1)]


class GlobalIndex:
    """Injective map from matrix key to (level, ordinal) over a whole group."""

    def __init__(self, rank: int) -> None:
        self.rank = rank
        self._map: dict[bytes, tuple[int, int]] = {}

    def __len__(self) -> int:
        return len(self._map)

    @property
    def total(self) -> int:
        return len(self._map)

    def add(self, matrix: np.ndarray, level: int, ordinal: int) -> None:
        key = matrix_key(matrix)
        if key in self._map:
            raise IntegrityError(
                f"duplicate matrix at ({level}, {ordinal}) and {self._map[key]}; "
                "the enumeration produced a repeat")
        self._map[key] = (level, ordinal)

    def find(self, matrix: np.ndarray) -> tuple[int, int]:
        try:
            return self._map[matrix_key(matrix)]
        except KeyError:
            raise IntegrityError("matrix not present in the index") from None

    def items(self) -> Iterable[tuple[bytes, tuple[int, int]]]:
        return self._map.items()

    def key_matrix(self, key: bytes) -> np.ndarray:
        """Decode a stored key back into its matrix."""
        return np.frombuffer(key, dtype="<i8").reshape(self.rank, self.rank)


def build_index(levels: Iterable[Level]) -> GlobalIndex:
    """Index every element of a complete run by its matrix."""
    index: GlobalIndex | None = None
    for level in levels:
        if index is None:
            index = GlobalIndex(rank=level.weights.shape[1])
        for j in range(level.size):
            index.add(level.matrices[j], level.index, j)
    if index is None:
        raise WeylError("no levels given")
    return index


def summary_path(dir: Path | str, prefix: str) -> Path:
    return Path(dir) / f"{prefix}_summary.json"


def write_summary(dir: Path | str, prefix: str, root_system: str,
                  level_sizes: Sequence[int], elapsed_ms: float) -> Path:
    path = summary_path(dir, prefix)
    payload = {
        "root_system": root_system,
        "levels": [int(n) for n in level_sizes],
        "total": int(sum(level_sizes)),
        "elapsed_ms": float(elapsed_ms),
    }
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(payload, f, indent=2)
        f.write("\n")
    return path


def read_summary(dir: Path | str, prefix: str) -> dict:
    path = summary_path(dir, prefix)
    if not path.is_file():
        raise WeylError(f"summary file {path} not found")
    with open(path, encoding="utf-8") as f:
        return json.load(f)
