"""Exact character theory of the symmetric groups.

Irreducible character values are computed by the Murnaghan-Nakayama rule
(recursive border-strip removal over beta-sets) with memoization, and the
full table for each degree is cached in memory and optionally on disk.
All arithmetic uses Python ints, so every value is exact at any size.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from functools import cache
from math import factorial
from pathlib import Path

from . import partitions as pt
from .errors import CacheCorrupt, NonIntegralResult, SizeMismatch
from .partitions import Partition

CACHE_FORMAT_VERSION = 1

CycleType = Partition


def centralizer_order(t: CycleType) -> int:
    """Order of the centralizer of a permutation with cycle type t."""
    z = 1
    mult: dict[int, int] = {}
    for part in t:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return z


def class_size(t: CycleType) -> int:
    return factorial(sum(t)) // centralizer_order(t)


def sign_of_class(t: CycleType) -> int:
    return -1 if (sum(t) - len(t)) % 2 else 1


def border_strip_removals(lam: Partition, r: int):
    """Yield (smaller partition, strip height) for each r-strip removal.

    Works on the beta-set {lam_i + l - i}; removing an r-strip is
    subtracting r from one beta number without collision, and the strip
    height is the number of beta numbers jumped over.
    """
    l = len(lam)
    beta = [lam[i] + (l - 1 - i) for i in range(l)]
    present = set(beta)
    for b in beta:
        nb = b - r
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        newlam = tuple(c - (l - 1 - j) for j, c in enumerate(new_beta))
        while newlam and newlam[-1] == 0:
            newlam = newlam[:-1]
        yield newlam, height


@cache
def _mn(lam: Partition, cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not lam else 0
    r, rest = cycles[0], cycles[1:]
    total = 0
    for newlam, height in border_strip_removals(lam, r):
        total += (-1) ** height * _mn(newlam, rest)
    return total


def mn_character_value(lam: Partition, t: CycleType) -> int:
    """Value of the irreducible character labelled lam on class t."""
    if sum(lam) != sum(t):
        raise SizeMismatch(f"|{lam}| != |{t}|")
    return _mn(lam, tuple(sorted(t, reverse=True)))


@cache
def degree(lam: Partition) -> int:
    """Dimension of the irreducible labelled lam, by the hook formula."""
    n = sum(lam)
    hooks = 1
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            hooks *= pt.hook_length(lam, (i, j))
    num = factorial(n)
    if num % hooks:
        raise NonIntegralResult(f"hook product {hooks} does not divide {n}!")
    return num // hooks


@dataclass(frozen=True)
class ClassFunction:
    """Exact integer class function, values in decreasing-lex class order."""

    n: int
    values: tuple[int, ...]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise SizeMismatch(f"degrees differ: {self.n} vs {other.n}")
        return ClassFunction(self.n, tuple(a * b for a, b in zip(self.values, other.values)))


def inner_product(f: ClassFunction, g: ClassFunction) -> int:
    if f.n != g.n:
        raise SizeMismatch(f"degrees differ: {f.n} vs {g.n}")
    classes = pt.partitions_of(f.n)
    total = sum(
        class_size(t) * a * b for t, a, b in zip(classes, f.values, g.values)
    )
    order = factorial(f.n)
    q, r = divmod(total, order)
    if r:
        raise NonIntegralResult(f"inner product {total}/{order} is not integral")
    return q


@dataclass(frozen=True)
class CharacterTable:
    """Square table of character values; rows and classes in dec-lex order."""

    n: int
    labels: tuple[Partition, ...]
    rows: tuple[tuple[int, ...], ...]

    def index(self, p: Partition) -> int:
        return self.labels.index(p)

    def row(self, lam: Partition) -> ClassFunction:
        return ClassFunction(self.n, self.rows[self.index(lam)])

    def value(self, lam: Partition, t: CycleType) -> int:
        return self.rows[self.index(lam)][self.index(t)]


def _compute_table(n: int) -> CharacterTable:
    labels = pt.partitions_of(n)
    rows = tuple(
        tuple(_mn(lam, t) for t in labels) for lam in labels
    )
    return CharacterTable(n, labels, rows)


def _rows_payload(table: CharacterTable) -> list[dict]:
    return [
        {
            "label": pt.format_partition(lam),
            "values": [str(v) for v in row],
        }
        for lam, row in zip(table.labels, table.rows)
    ]


def _rows_checksum(rows_payload: list[dict]) -> str:
    canonical = json.dumps(rows_payload, separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(canonical.encode()).hexdigest()


def table_to_json_dict(table: CharacterTable) -> dict:
    rows_payload = _rows_payload(table)
    return {
        "n": table.n,
        "format_version": CACHE_FORMAT_VERSION,
        "classes": [pt.format_partition(t) for t in table.labels],
        "rows": rows_payload,
        "checksum": _rows_checksum(rows_payload),
    }


def cache_path(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"chartable_{n}.json"


def load_table_file(path, n: int) -> CharacterTable:
    """Load and validate a cache file; raise CacheCorrupt on any defect."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheCorrupt(f"unreadable cache {path}: {exc}") from exc
    try:
        if data["format_version"] != CACHE_FORMAT_VERSION:
            raise CacheCorrupt(f"unsupported format_version in {path}")
        if data["n"] != n:
            raise CacheCorrupt(f"cache {path} is for n={data['n']}, wanted {n}")
        if data["checksum"] != _rows_checksum(data["rows"]):
            raise CacheCorrupt(f"checksum mismatch in {path}")
        labels = pt.partitions_of(n)
        expected_classes = [pt.format_partition(t) for t in labels]
        if data["classes"] != expected_classes:
            raise CacheCorrupt(f"unexpected class list in {path}")
        if [row["label"] for row in data["rows"]] != expected_classes:
            raise CacheCorrupt(f"unexpected row labels in {path}")
        rows = tuple(
            tuple(int(v) for v in row["values"]) for row in data["rows"]
        )
        if any(len(row) != len(labels) for row in rows):
            raise CacheCorrupt(f"ragged rows in {path}")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CacheCorrupt):
            raise
        raise CacheCorrupt(f"malformed cache {path}: {exc}") from exc
    return CharacterTable(n, labels, rows)


def write_table_file(path, table: CharacterTable) -> None:
    """Write atomically: temp file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(table_to_json_dict(table), fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


_TABLES: dict[int, CharacterTable] = {}
_DEFAULT_CACHE_DIR: Path | None = None
_WARNED_UNWRITABLE = False


def set_default_cache_dir(path) -> None:
    """Route subsequent table loads through this directory (None: memory only)."""
    global _DEFAULT_CACHE_DIR
    _DEFAULT_CACHE_DIR = Path(path) if path is not None else None


def character_table(n: int, cache_dir=None) -> CharacterTable:
    """Full character table of degree n, from memory, disk cache, or MN.

    A corrupt cache file is recomputed and overwritten in place; an
    unwritable cache directory degrades to in-memory computation with a
    one-time warning on stderr.
    """
    global _WARNED_UNWRITABLE
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cache_dir is None:
        cache_dir = _DEFAULT_CACHE_DIR
    table = _TABLES.get(n)
    if table is None:
        if cache_dir is not None:
            try:
                table = load_table_file(cache_path(cache_dir, n), n)
            except (CacheCorrupt, FileNotFoundError):
                table = None
        if table is None:
            table = _compute_table(n)
            if cache_dir is not None:
                try:
                    write_table_file(cache_path(cache_dir, n), table)
                except OSError as exc:
                    if not _WARNED_UNWRITABLE:
                        import sys

                        print(
                            f"warning: cache dir not writable ({exc}); "
                            "computing in memory",
                            file=sys.stderr,
                        )
                        _WARNED_UNWRITABLE = True
        _TABLES[n] = table
    return table


def irreducible(lam: Partition) -> ClassFunction:
    return character_table(sum(lam)).row(lam)
