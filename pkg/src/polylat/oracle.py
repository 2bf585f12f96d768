"""Brute-force geometric enumeration, straight from the definitions.

A column-convex polyomino is stored as its column intervals (bottom,
height), left to right; a plateau polycube as its strata (y0, h, z0, d).
Both are translation-normalized: the first column bottom (resp. the first
stratum's y0 and z0) is 0. Consecutive columns must share an edge
(overlapping intervals); consecutive strata must overlap in y and in z.
That constructive representation is unique per object, so enumeration is
plain depth-first generation over heights/depths and offsets, pruned on
the remaining size budget, with no canonical-form hashing.

Directedness is decided by literal reachability search: North/East unit
steps in 2D from the bottom cell of the leftmost column, and
East/North/Ahead unit steps in 3D from a cell of the first stratum (every
first-stratum cell is tried, min corner first; the object is directed if
any of them reaches all cells).

Counts can optionally be partitioned over the first column/stratum sizes
and summed across processes; results are independent of the partitioning.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

Column = tuple[int, int]
Stratum = tuple[int, int, int, int]


def _intervals_overlap(a_lo: int, a_len: int, b_lo: int, b_len: int) -> bool:
    return max(a_lo, b_lo) < min(a_lo + a_len, b_lo + b_len)


@dataclass(frozen=True)
class ColumnConvexPoly:
    """Column-convex polyomino as (bottom, height) per column."""

    columns: tuple[Column, ...]

    def __post_init__(self):
        cols = self.columns
        if not cols:
            raise ValueError("a polyomino needs at least one column")
        if cols[0][0] != 0:
            raise ValueError("not normalized: first column bottom must be 0")
        for b, h in cols:
            if h < 1:
                raise ValueError(f"column heights must be >= 1, got {h}")
        for (b1, h1), (b2, h2) in zip(cols, cols[1:]):
            if not _intervals_overlap(b1, h1, b2, h2):
                raise ValueError(f"columns ({b1},{h1}) and ({b2},{h2}) do not touch")

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def area(self) -> int:
        return sum(h for _, h in self.columns)

    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (x, y) for x, (b, h) in enumerate(self.columns) for y in range(b, b + h)
        )

    def is_directed(self) -> bool:
        return _cc_is_directed(self.columns)


@dataclass(frozen=True)
class PlateauPolycube:
    """Plateau polycube as (y0, h, z0, d) per stratum."""

    plateaus: tuple[Stratum, ...]

    def __post_init__(self):
        plats = self.plateaus
        if not plats:
            raise ValueError("a polycube needs at least one stratum")
        if plats[0][0] != 0 or plats[0][2] != 0:
            raise ValueError("not normalized: first stratum must start at y0 = z0 = 0")
        for y0, h, z0, d in plats:
            if h < 1 or d < 1:
                raise ValueError(f"stratum extents must be >= 1, got h={h}, d={d}")
        for (y1, h1, z1, d1), (y2, h2, z2, d2) in zip(plats, plats[1:]):
            if not (_intervals_overlap(y1, h1, y2, h2) and _intervals_overlap(z1, d1, z2, d2)):
                raise ValueError("consecutive strata must overlap in y and in z")

    @property
    def width(self) -> int:
        return len(self.plateaus)

    @property
    def lateral_area(self) -> int:
        return sum(h + d for _, h, _, d in self.plateaus)

    def cells(self) -> frozenset[tuple[int, int, int]]:
        return frozenset(
            (x, y, z)
            for x, (y0, h, z0, d) in enumerate(self.plateaus)
            for y in range(y0, y0 + h)
            for z in range(z0, z0 + d)
        )

    def is_directed(self) -> bool:
        return _plateau_is_directed(self.plateaus)


def _cc_is_directed(cols: tuple[Column, ...]) -> bool:
    """Reachability of all cells from the bottom cell of the leftmost column
    using only North and East unit steps."""
    cells = {(x, y) for x, (b, h) in enumerate(cols) for y in range(b, b + h)}
    root = (0, cols[0][0])
    seen = {root}
    frontier = [root]
    while frontier:
        x, y = frontier.pop()
        for nxt in ((x, y + 1), (x + 1, y)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == len(cells)


def _plateau_is_directed(plats: tuple[Stratum, ...]) -> bool:
    """Reachability of all cells from some cell of the first stratum using
    only East, North and Ahead unit steps. Every first-stratum cell is
    tried as a root, minimal corner first."""
    cells = {
        (x, y, z)
        for x, (y0, h, z0, d) in enumerate(plats)
        for y in range(y0, y0 + h)
        for z in range(z0, z0 + d)
    }
    total = len(cells)
    y0, h, z0, d = plats[0]
    for ry in range(y0, y0 + h):
        for rz in range(z0, z0 + d):
            root = (0, ry, rz)
            seen = {root}
            frontier = [root]
            while frontier:
                x, y, z = frontier.pop()
                for nxt in ((x + 1, y, z), (x, y + 1, z), (x, y, z + 1)):
                    if nxt in cells and nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
            if len(seen) == total:
                return True
    return False


def _iter_columns(k: int, n: int, first_h: int | None = None) -> Iterator[tuple[Column, ...]]:
    """All normalized column tuples with k columns and total area n, by DFS
    over heights (pruned on remaining area) and overlap-feasible bottoms."""
    current: list[Column] = []

    def rec(cols_left: int, area_left: int) -> Iterator[tuple[Column, ...]]:
        if cols_left == 0:
            yield tuple(current)
            return
        # later columns need 1 cell each; the last column takes the rest
        h_max = area_left - (cols_left - 1)
        h_min = area_left if cols_left == 1 else 1
        if not current:
            heights = (first_h,) if first_h is not None else range(h_min, h_max + 1)
            for h in heights:
                if not h_min <= h <= h_max:
                    continue
                current.append((0, h))
                yield from rec(cols_left - 1, area_left - h)
                current.pop()
            return
        pb, ph = current[-1]
        for h in range(h_min, h_max + 1):
            for b in range(pb - h + 1, pb + ph):
                current.append((b, h))
                yield from rec(cols_left - 1, area_left - h)
                current.pop()

    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    if n < k:
        return
    yield from rec(k, n)


def _iter_strata(
    k: int, m: int, first_hd: tuple[int, int] | None = None
) -> Iterator[tuple[Stratum, ...]]:
    """All normalized stratum tuples with k strata and lateral area m, by DFS
    over (height, depth) pairs and overlap-feasible y/z offsets."""
    current: list[Stratum] = []

    def rec(cols_left: int, area_left: int) -> Iterator[tuple[Stratum, ...]]:
        if cols_left == 0:
            yield tuple(current)
            return
        # later strata need h + d >= 2 each; the last stratum takes the rest
        budget = area_left - 2 * (cols_left - 1)
        s_min = area_left if cols_left == 1 else 2
        if not current:
            if first_hd is not None:
                h, d = first_hd
                if h < 1 or d < 1 or not s_min <= h + d <= budget:
                    return
                current.append((0, h, 0, d))
                yield from rec(cols_left - 1, area_left - h - d)
                current.pop()
                return
            for s in range(s_min, budget + 1):
                for h in range(1, s):
                    current.append((0, h, 0, s - h))
                    yield from rec(cols_left - 1, area_left - s)
                    current.pop()
            return
        py, ph, pz, pd = current[-1]
        for s in range(s_min, budget + 1):
            for h in range(1, s):
                d = s - h
                for y in range(py - h + 1, py + ph):
                    for z in range(pz - d + 1, pz + pd):
                        current.append((y, h, z, d))
                        yield from rec(cols_left - 1, area_left - s)
                        current.pop()

    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    if m < 2 * k:
        return
    yield from rec(k, m)


def iter_cc(k: int, n: int) -> Iterator[ColumnConvexPoly]:
    """Every normalized column-convex polyomino with k columns and area n."""
    for cols in _iter_columns(k, n):
        yield ColumnConvexPoly(cols)


def iter_dcc(k: int, n: int) -> Iterator[ColumnConvexPoly]:
    """The directed subfamily of iter_cc."""
    for cols in _iter_columns(k, n):
        if _cc_is_directed(cols):
            yield ColumnConvexPoly(cols)


def iter_plateau(k: int, m: int) -> Iterator[PlateauPolycube]:
    """Every normalized plateau polycube with k strata and lateral area m."""
    for plats in _iter_strata(k, m):
        yield PlateauPolycube(plats)


def iter_dplateau(k: int, m: int) -> Iterator[PlateauPolycube]:
    """The directed subfamily of iter_plateau."""
    for plats in _iter_strata(k, m):
        if _plateau_is_directed(plats):
            yield PlateauPolycube(plats)


def _count_cc_part(args) -> int:
    k, n, h1, directed = args
    it = _iter_columns(k, n, first_h=h1)
    if directed:
        return sum(1 for cols in it if _cc_is_directed(cols))
    return sum(1 for _ in it)


def _count_plateau_part(args) -> int:
    k, m, h1, d1, directed = args
    it = _iter_strata(k, m, first_hd=(h1, d1))
    if directed:
        return sum(1 for plats in it if _plateau_is_directed(plats))
    return sum(1 for _ in it)


def _parallel_sum(fn, parts, workers: int) -> int:
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(fn, parts))


def enum_cc(k: int, n: int, workers: int = 1) -> int:
    """Count of column-convex polyominoes with k columns and area n,
    by exhaustive generation. 0 when n < k."""
    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    if n < k:
        return 0
    if workers > 1:
        parts = [(k, n, h1, False) for h1 in range(1, n - (k - 1) + 1)]
        return _parallel_sum(_count_cc_part, parts, workers)
    return sum(1 for _ in _iter_columns(k, n))


def enum_dcc(k: int, n: int, workers: int = 1) -> int:
    """Count of directed column-convex polyominoes with k columns and
    area n, by exhaustive generation plus a reachability check. 0 when
    n < k."""
    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    if n < k:
        return 0
    if workers > 1:
        parts = [(k, n, h1, True) for h1 in range(1, n - (k - 1) + 1)]
        return _parallel_sum(_count_cc_part, parts, workers)
    return sum(1 for cols in _iter_columns(k, n) if _cc_is_directed(cols))


def _first_hd_parts(k: int, m: int) -> list[tuple[int, int]]:
    budget = m - 2 * (k - 1)
    return [(h, d) for h in range(1, budget) for d in range(1, budget - h + 1)]


def enum_plateau(k: int, m: int, workers: int = 1) -> int:
    """Count of plateau polycubes with k strata and lateral area m, by
    exhaustive generation. 0 when m < 2k."""
    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    if m < 2 * k:
        return 0
    if workers > 1:
        parts = [(k, m, h, d, False) for h, d in _first_hd_parts(k, m)]
        return _parallel_sum(_count_plateau_part, parts, workers)
    return sum(1 for _ in _iter_strata(k, m))


def enum_dplateau(k: int, m: int, workers: int = 1) -> int:
    """Count of directed plateau polycubes with k strata and lateral area m,
    by exhaustive generation plus a reachability check. 0 when m < 2k."""
    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    if m < 2 * k:
        return 0
    if workers > 1:
        parts = [(k, m, h, d, True) for h, d in _first_hd_parts(k, m)]
        return _parallel_sum(_count_plateau_part, parts, workers)
    return sum(1 for plats in _iter_strata(k, m) if _plateau_is_directed(plats))


def project(p: PlateauPolycube) -> tuple[ColumnConvexPoly, ColumnConvexPoly]:
    """The two column-convex projections of a plateau polycube: onto the
    (i,j) plane (columns (y0, h)) and onto the (i,k) plane (columns
    (z0, d)). Their areas sum to the lateral area."""
    heights = tuple((y0, h) for y0, h, _, _ in p.plateaus)
    depths = tuple((z0, d) for _, _, z0, d in p.plateaus)
    return ColumnConvexPoly(heights), ColumnConvexPoly(depths)


def unproject(a: ColumnConvexPoly, b: ColumnConvexPoly) -> PlateauPolycube:
    """The unique plateau polycube whose projections are (a, b); the
    inverse of project. The widths must match."""
    if a.width != b.width:
        raise ValueError(f"widths differ: {a.width} != {b.width}")
    plats = tuple(
        (ab, ah, bb, bh) for (ab, ah), (bb, bh) in zip(a.columns, b.columns)
    )
    return PlateauPolycube(plats)


def is_face_connected(cells) -> bool:
    """6-neighbour connectivity of a set of integer voxel triples."""
    cells = set(cells)
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    frontier = [start]
    while frontier:
        x, y, z = frontier.pop()
        for nxt in (
            (x + 1, y, z), (x - 1, y, z),
            (x, y + 1, z), (x, y - 1, z),
            (x, y, z + 1), (x, y, z - 1),
        ):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == len(cells)


def lateral_area_voxels(cells) -> int:
    """Lateral area of a voxel set: the number of distinct (x, y) pairs plus
    the number of distinct (x, z) pairs over its cells (the areas of its two
    axis projections). The set must be nonempty and face-connected."""
    cells = set(cells)
    if not cells:
        raise ValueError("voxel set is empty")
    if not is_face_connected(cells):
        raise ValueError("voxel set is not face-connected")
    xy = {(x, y) for x, y, _ in cells}
    xz = {(x, z) for x, _, z in cells}
    return len(xy) + len(xz)


# Plain-text object dump: one object per line. A column-convex polyomino is
# its "(bottom,height)" pairs, a plateau polycube its "(y0,h,z0,d)" tuples,
# space-separated in left-to-right order.

def format_cc(p: ColumnConvexPoly) -> str:
    return " ".join(f"({b},{h})" for b, h in p.columns)


def format_plateau(p: PlateauPolycube) -> str:
    return " ".join(f"({y0},{h},{z0},{d})" for y0, h, z0, d in p.plateaus)


def parse_cc(line: str) -> ColumnConvexPoly:
    cols = tuple(
        tuple(int(v) for v in chunk.strip("()").split(",")) for chunk in line.split()
    )
    return ColumnConvexPoly(tuple((b, h) for b, h in cols))


def parse_plateau(line: str) -> PlateauPolycube:
    plats = tuple(
        tuple(int(v) for v in chunk.strip("()").split(",")) for chunk in line.split()
    )
    return PlateauPolycube(tuple((y, h, z, d) for y, h, z, d in plats))


_ITERATORS = {
    "cc": iter_cc,
    "dcc": iter_dcc,
    "plateau": iter_plateau,
    "dplateau": iter_dplateau,
}

_FORMATTERS = {
    "cc": format_cc,
    "dcc": format_cc,
    "plateau": format_plateau,
    "dplateau": format_plateau,
}


def dump_objects(family: str, k: int, size: int, stream) -> int:
    """Write every enumerated object of the family at (k, size) to stream,
    one per line in the dump format above; returns the object count."""
    if family not in _ITERATORS:
        raise ValueError(f"unknown family {family!r}")
    count = 0
    formatter = _FORMATTERS[family]
    for obj in _ITERATORS[family](k, size):
        stream.write(formatter(obj) + "\n")
        count += 1
    return count
