"""Littlewood-Richardson combinatorics and skew-character decomposition.

Coefficients are counted by direct backtracking over fillings: rows weakly
increase, columns strictly increase, and the reverse reading word stays a
lattice word.  Cells are visited in reading order (rows top to bottom,
right to left within a row), which makes all three constraints local.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from . import partitions as pt
from .partitions import Partition, SkewShape


def _reading_cells(shape: SkewShape) -> list[tuple[int, int]]:
    cells = []
    for r, lo, hi in shape.row_intervals():
        for c in range(hi, lo - 1, -1):
            cells.append((r, c))
    return cells


def _count_fillings(shape: SkewShape, content_cap: Partition | None) -> dict[Partition, int]:
    """Tally LR fillings by content; cap rules out contents above it."""
    cells = _reading_cells(shape)
    n = shape.size()
    if n == 0:
        return {(): 1}
    values: dict[tuple[int, int], int] = {}
    counts = [0] * (n + 1)
    tally: dict[Partition, int] = {}

    def place(k: int) -> None:
        if k == len(cells):
            content = tuple(c for c in counts[1:] if c > 0)
            tally[content] = tally.get(content, 0) + 1
            return
        r, c = cells[k]
        above = values.get((r - 1, c))
        right = values.get((r, c + 1))
        lo = 1 if above is None else above + 1
        hi = n if right is None else right
        for v in range(lo, hi + 1):
            if counts[v - 1] <= counts[v]:
                continue  # placing v here would break the lattice condition
            if content_cap is not None and counts[v] >= pt.part_at(content_cap, v):
                continue
            counts[v] += 1
            values[(r, c)] = v
            place(k + 1)
            counts[v] -= 1
        values.pop((r, c), None)

    counts[0] = n + 1  # sentinel: value 1 is always allowed
    place(0)
    return tally


def lr_coefficient(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Multiplicity of [alpha] in the outer product [beta] x [gamma]."""
    if pt.size(beta) + pt.size(gamma) != pt.size(alpha):
        return 0
    if not pt.contains(alpha, beta):
        return 0
    shape = SkewShape(alpha, beta)
    return _count_fillings(shape, gamma).get(gamma, 0)


@cache
def _skew_decompose(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    tally = _count_fillings(SkewShape(outer, inner), None)
    return tuple(sorted(tally.items(), reverse=True))


def skew_decompose(shape: SkewShape) -> dict[Partition, int]:
    """Decomposition of the skew character into irreducibles."""
    return dict(_skew_decompose(shape.outer, shape.inner))


def outer_product_expand(beta: Partition, gamma: Partition) -> dict[Partition, int]:
    """All constituents of [beta] x [gamma] with their multiplicities."""
    n = pt.size(beta) + pt.size(gamma)
    out = {}
    for alpha in pt.partitions_of(n):
        c = lr_coefficient(alpha, beta, gamma)
        if c:
            out[alpha] = c
    return out


@cache
def _syt_count(outer: Partition, inner: Partition) -> int:
    if pt.size(outer) == pt.size(inner):
        return 1
    total = 0
    for node in pt.removable_nodes(outer):
        if node[1] > pt.part_at(inner, node[0]):
            total += _syt_count(pt.remove_node(outer, node), inner)
    return total


def skew_syt_count(shape: SkewShape) -> int:
    """Number of standard tableaux of the shape, by corner removal."""
    return _syt_count(shape.outer, shape.inner)


@dataclass(frozen=True)
class ShapeClass:
    """Geometric class of a skew diagram, up to translation."""

    tag: str  # 'partition' | 'rotated-partition' | 'proper-skew'
    alpha: Partition | None

    def is_irreducible(self) -> bool:
        return self.tag != "proper-skew"


def _as_partition_diagram(cells: set[tuple[int, int]]) -> Partition | None:
    """Row lengths if the normalized cell set is a partition diagram."""
    max_row = max(r for r, _ in cells)
    lengths = []
    for r in range(1, max_row + 1):
        row_cols = {c for rr, c in cells if rr == r}
        if not row_cols or row_cols != set(range(1, len(row_cols) + 1)):
            return None
        lengths.append(len(row_cols))
    p = tuple(lengths)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        return None
    return p


def classify_skew_shape(shape: SkewShape) -> ShapeClass:
    """Decide partition / rotated-partition / proper-skew, with its label."""
    raw = shape.cells()
    if not raw:
        return ShapeClass("partition", ())
    rmin = min(r for r, _ in raw)
    cmin = min(c for _, c in raw)
    cells = {(r - rmin + 1, c - cmin + 1) for r, c in raw}
    alpha = _as_partition_diagram(cells)
    if alpha is not None:
        return ShapeClass("partition", alpha)
    rmax = max(r for r, _ in cells)
    cmax = max(c for _, c in cells)
    rotated = {(rmax + 1 - r, cmax + 1 - c) for r, c in cells}
    alpha = _as_partition_diagram(rotated)
    if alpha is not None:
        return ShapeClass("rotated-partition", alpha)
    return ShapeClass("proper-skew", None)


def connected_components(shape: SkewShape) -> list[set[tuple[int, int]]]:
    """Edge-connected components of the cell set."""
    remaining = set(shape.cells())
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        remaining.discard(seed)
        while frontier:
            r, c = frontier.pop()
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    comp.add(nb)
                    frontier.append(nb)
        comps.append(comp)
    return comps


def component_shape(cells: set[tuple[int, int]]) -> SkewShape:
    """Rebuild a connected cell set as its own translated skew shape."""
    rmin = min(r for r, _ in cells)
    cmin = min(c for _, c in cells)
    rows = {}
    for r, c in cells:
        rows.setdefault(r - rmin + 1, []).append(c - cmin + 1)
    outer, inner = [], []
    for r in range(1, max(rows) + 1):
        cols = sorted(rows[r])
        outer.append(cols[-1])
        inner.append(cols[0] - 1)
    while inner and inner[-1] == 0:
        inner.pop()
    return SkewShape(tuple(outer), tuple(inner))


def skew_decompose_via_components(shape: SkewShape) -> dict[Partition, int]:
    """Decompose through the outer product of connected pieces.

    Independent of the direct path when the shape is disconnected; used as
    a cross-check oracle.
    """
    comps = connected_components(shape)
    if not comps:
        return {(): 1}
    result: dict[Partition, int] = {(): 1}
    for comp in comps:
        part = skew_decompose(component_shape(comp))
        merged: dict[Partition, int] = {}
        for left, cl in result.items():
            for right, cr in part.items():
                for combo, c in outer_product_expand(left, right).items():
                    merged[combo] = merged.get(combo, 0) + cl * cr * c
        result = merged
    return result
