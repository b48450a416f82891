"""Integer partitions, nodes and skew diagrams.

A partition is a plain tuple of weakly decreasing positive ints; the empty
tuple is the unique partition of 0.  Nodes are 1-based (row, col) pairs in
matrix convention (row 1 on top).  All functions assume canonical input
(no trailing zeros) and produce canonical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator

from .errors import (
    NodeOutsideDiagram,
    NotAdjustable,
    NotContained,
    PartitionSyntaxError,
)

Partition = tuple[int, ...]
Node = tuple[int, int]


def as_partition(parts) -> Partition:
    """Validate an iterable of ints and return it as a canonical partition."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise PartitionSyntaxError(f"parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise PartitionSyntaxError(f"parts must be weakly decreasing: {p}")
    return p


def size(p: Partition) -> int:
    return sum(p)


def width(p: Partition) -> int:
    return p[0] if p else 0


def length(p: Partition) -> int:
    return len(p)


def is_symmetric(p: Partition) -> bool:
    return p == conjugate(p)


def is_hook(p: Partition) -> bool:
    """True for (a, 1^b) shapes, including rows and columns."""
    return len(p) <= 1 or p[1] == 1


def is_two_line(p: Partition) -> bool:
    """True when p has at most two rows or at most two columns."""
    return len(p) <= 2 or p[0] <= 2


def is_rectangle(p: Partition) -> bool:
    return len(set(p)) <= 1


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def intersect(p: Partition, q: Partition) -> Partition:
    result = tuple(min(a, b) for a, b in zip(p, q))
    while result and result[-1] == 0:
        result = result[:-1]
    return result


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def part_at(p: Partition, i: int) -> int:
    """Row length at 1-based row i, zero beyond the last row."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def removable_nodes(p: Partition) -> list[Node]:
    nodes = []
    for i in range(len(p)):
        below = p[i + 1] if i + 1 < len(p) else 0
        if p[i] > below:
            nodes.append((i + 1, p[i]))
    return nodes


def addable_nodes(p: Partition) -> list[Node]:
    nodes = []
    for i in range(len(p)):
        above = p[i - 1] if i > 0 else None
        if above is None or p[i] < above:
            nodes.append((i + 1, p[i] + 1))
    nodes.append((len(p) + 1, 1))
    return nodes


def remove_node(p: Partition, node: Node) -> Partition:
    if node not in removable_nodes(p):
        raise NotAdjustable(f"node {node} is not removable from {p}")
    i = node[0] - 1
    out = p[:i] + (p[i] - 1,) + p[i + 1 :]
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def add_node(p: Partition, node: Node) -> Partition:
    if node not in addable_nodes(p):
        raise NotAdjustable(f"node {node} is not addable to {p}")
    i = node[0] - 1
    if i == len(p):
        return p + (1,)
    return p[:i] + (p[i] + 1,) + p[i + 1 :]


def adjust_node(p: Partition, node: Node, direction: str) -> Partition:
    if direction == "remove":
        return remove_node(p, node)
    if direction == "add":
        return add_node(p, node)
    raise ValueError(f"direction must be 'add' or 'remove', got {direction!r}")


def hook_length(p: Partition, node: Node) -> int:
    i, j = node
    if not (1 <= i <= len(p) and 1 <= j <= p[i - 1]):
        raise NodeOutsideDiagram(f"node {node} is outside {p}")
    conj = conjugate(p)
    return p[i - 1] - j + conj[j - 1] - i + 1

def first_hook(p: Partition) -> int:
    """Hook length at (1,1): width + length - 1."""
    return p[0] + len(p) - 1 if p else 0


def drop_first_row(p: Partition) -> Partition:
    return p[1:]


def drop_first_column(p: Partition) -> Partition:
    return tuple(x - 1 for x in p if x > 1)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, maxpart: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def partitions_within(k: int, bound: Partition) -> Iterator[Partition]:
    """Partitions of k whose diagram fits inside the diagram of `bound`."""

    def gen(remaining: int, row: int, maxpart: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if row >= len(bound):
            return
        for part in range(min(remaining, maxpart, bound[row]), 0, -1):
            for rest in gen(remaining - part, row + 1, part):
                yield (part,) + rest

    yield from gen(k, 0, k if k > 0 else 1)


def subpartitions(p: Partition) -> Iterator[Partition]:
    """All partitions contained in p, of every size."""
    for k in range(size(p) + 1):
        yield from partitions_within(k, p)


def add_horizontal_strips(p: Partition, k: int) -> Iterator[Partition]:
    """Partitions obtained from p by adding a horizontal strip of size k."""
    rows = len(p) + 1
    padded = p + (0,)

    def gen(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if remaining == 0:
                yield ()
            return
        base = padded[i]
        cap = base + remaining if i == 0 else min(padded[i - 1], base + remaining)
        for v in range(cap, base - 1, -1):
            for rest in gen(i + 1, remaining - (v - base)):
                yield (v,) + rest

    for raw in gen(0, k):
        while raw and raw[-1] == 0:
            raw = raw[:-1]
        yield raw


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise NotContained(f"{self.inner} is not contained in {self.outer}")

    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def row_intervals(self) -> list[tuple[int, int, int]]:
        """Nonempty rows as (row, first col, last col), top to bottom."""
        out = []
        for i, outer_len in enumerate(self.outer, start=1):
            inner_len = part_at(self.inner, i)
            if outer_len > inner_len:
                out.append((i, inner_len + 1, outer_len))
        return out

    def cells(self) -> list[Node]:
        return [
            (r, c)
            for r, lo, hi in self.row_intervals()
            for c in range(lo, hi + 1)
        ]

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def is_row(self) -> bool:
        return len(self.row_intervals()) == 1

    def is_column(self) -> bool:
        cells = self.cells()
        return bool(cells) and len({c for _, c in cells}) == 1

    def __str__(self) -> str:
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


def skew_shape(outer: Partition, inner: Partition) -> SkewShape:
    return SkewShape(outer, inner)


def is_node_connected(node: Node, cells) -> bool:
    """True when node is edge-adjacent to some cell of the diagram."""
    i, j = node
    cellset = set(cells)
    return any(
        nb in cellset for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1))
    )


@cache
def reduced_skew_shapes(n: int) -> tuple[SkewShape, ...]:
    """All skew shapes of size n with no empty row or column.

    Every skew diagram equals one of these up to sliding away empty rows
    and columns, so they are the canonical finite census for size n.
    Rows are generated directly as column intervals [l, h]: both ends
    weakly decrease, consecutive rows leave no column gap (h' >= l - 1),
    and the last row reaches column 1.
    """
    shapes: list[SkewShape] = []

    def emit(rows: list[tuple[int, int]]) -> None:
        outer = tuple(h for _, h in rows)
        inner = tuple(l - 1 for l, _ in rows)
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        shapes.append(SkewShape(outer, inner))

    def grow(l_prev: int, h_prev: int, remaining: int, rows: list) -> None:
        for h in range(min(h_prev, l_prev - 1 + remaining), max(l_prev - 2, 0), -1):
            for l in range(min(l_prev, h), 0, -1):
                width = h - l + 1
                if width > remaining:
                    break
                row = rows + [(l, h)]
                if width == remaining:
                    if l == 1:
                        emit(row)
                else:
                    grow(l, h, remaining - width, row)

    if n > 0:
        for h in range(n, 0, -1):
            for l in range(h, 0, -1):
                width = h - l + 1
                if width == n:
                    if l == 1:
                        emit([(l, h)])
                else:
                    grow(l, h, n - width, [(l, h)])
    return tuple(shapes)


def format_partition(p: Partition) -> str:
    """Render with exponent compression: (3,3,1) -> '3^2,1', () -> ''."""
    if not p:
        return ""
    groups = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        groups.append(f"{p[i]}^{j - i}" if j - i > 1 else str(p[i]))
        i = j
    return ",".join(groups)


def bracket(p: Partition) -> str:
    return f"[{format_partition(p)}]"


def parse_partition(text: str) -> Partition:
    """Parse 'part(,part)*' where part is 'int' or 'int^int'; '' is empty."""
    stripped = "".join(text.split())
    if not stripped:
        return ()
    parts: list[int] = []
    for token in stripped.split(","):
        if not token:
            raise PartitionSyntaxError(f"empty part in {text!r}")
        base, sep, exp = token.partition("^")
        try:
            val = int(base)
            mult = int(exp) if sep else 1
        except ValueError:
            raise PartitionSyntaxError(f"bad part {token!r} in {text!r}") from None
        if val <= 0 or mult <= 0:
            raise PartitionSyntaxError(f"bad part {token!r} in {text!r}")
        parts.extend([val] * mult)
    return as_partition(parts)


def format_skew(s: SkewShape) -> str:
    return str(s)


def parse_skew(text: str) -> SkewShape:
    """Parse '<outer>/<inner>' in the partition grammar."""
    if "/" not in text:
        raise PartitionSyntaxError(f"skew shape {text!r} lacks '/'")
    outer_text, inner_text = text.split("/", 1)
    return SkewShape(parse_partition(outer_text), parse_partition(inner_text))
