"""Sprague-Grundy grids: computation, extraction, comparison, serialization.

The nim-value of a cell is the mex of the nim-values of all cells reachable
in one move. Every move strictly decreases x or y, so a finite rectangle
computed in row-major order (y ascending, x ascending inside a row) is
exact: truncation introduces no boundary error.

The engine keeps one presence bitset per row, per column, and per diagonal,
stored as arbitrary-size Python ints (bit v set = value v present among the
reachable cells of that line). Nim moves reach every earlier cell of the
row and column, so those bitsets only ever grow. Diagonal moves reach a
contiguous window of the diagonal (see ruleset.diagonal_reach_start); for
WK/WKL the window's lower edge is a constant per diagonal and the diagonal
bitset also only grows, while for bounded TK the lower edge creeps upward
as the source climbs, so the TK loop maintains a sliding window with value
counts. The mex of the OR of the three bitsets is the lowest zero bit,
extracted with two's-complement arithmetic.

No floating point is involved anywhere in grid computation; results are
bit-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .ruleset import (
    Kind,
    Position,
    RuleSet,
    moves,
    parse_rule,
    rule_string,
)

DEFAULT_CELL_CAP = 16_777_216


class CellCapExceeded(ValueError):
    """Requested grid is larger than the configured cell cap."""


def mex(values) -> int:
    """Minimum excluded natural number of a finite multiset."""
    present = set(values)
    g = 0
    while g in present:
        g += 1
    return g


def nim_sum(x: int, y: int) -> int:
    """Binary digital sum (XOR): the nim-value of the 2-pile Nim position (x, y)."""
    return x ^ y


@dataclass(frozen=True, eq=False)
class GrundyGrid:
    """A finite rectangle of nim-values for one rule set.

    ``values`` is a (height, width) uint32 array; the value of position
    (x, y) is ``values[y, x]``. The array is never mutated after
    construction and is safe to share across threads.
    """

    rule: RuleSet
    width: int
    height: int
    values: np.ndarray

    def value(self, x: int, y: int) -> int:
        return int(self.values[y, x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrundyGrid):
            return NotImplemented
        return (
            self.rule == other.rule
            and self.width == other.width
            and self.height == other.height
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.rule, self.width, self.height))


@dataclass(frozen=True)
class PositionSet:
    """A finite set of positions, complete within its bound box.

    ``bound`` is (width, height): every member has x < width and y < height,
    and every position of the generating rule (formula or grid) inside that
    box is present.
    """

    positions: frozenset[Position]
    bound: tuple[int, int]

    def __contains__(self, pos: Position) -> bool:
        return pos in self.positions

    def __len__(self) -> int:
        return len(self.positions)

    def sorted(self) -> list[Position]:
        """Members ordered by y, then x (the grid serialization order)."""
        return sorted(self.positions, key=lambda p: (p[1], p[0]))


@dataclass(frozen=True)
class AgreementReport:
    """Outcome of comparing the g-positions of two same-size grids.

    ``per_g_equal[g]`` says whether the g-positions coincide, for each g
    from 0 to ``g_max_checked``. ``first_witness`` is present exactly when
    some entry is False: the lexicographically smallest (g, then y, then x)
    disagreement, as (g, position, value_in_a, value_in_b).
    """

    g_max_checked: int
    per_g_equal: tuple[bool, ...]
    first_witness: tuple[int, Position, int, int] | None

    @property
    def all_equal(self) -> bool:
        return all(self.per_g_equal)


def _mex_loop_plain(width: int, height: int, diag_start) -> list[list[int]]:
    """Row-major mex computation for rules whose diagonal window has a fixed
    lower edge per diagonal (Nim, WK, WKL, unbounded TK).

    ``diag_start(delta)`` gives that lower edge in smaller-coordinate units;
    any value >= width + height disables the diagonal entirely.
    """
    off = height - 1
    thr = [diag_start(abs(d - off)) for d in range(width + height - 1)]
    col_mask = [0] * width
    diag_mask = [0] * (width + height - 1)
    diag_hi = [0] * (width + height - 1)
    diag_vals: list[list[int]] = [[] for _ in range(width + height - 1)]
    rows: list[list[int]] = []
    for y in range(height):
        row_mask = 0
        row: list[int] = []
        append = row.append
        d = off - y
        for x in range(width):
            m = x if x < y else y
            b = diag_hi[d]
            t = thr[d]
            start = b if b > t else t
            if start < m:
                dm = diag_mask[d]
                dv = diag_vals[d]
                for j in range(start, m):
                    dm |= 1 << dv[j]
                diag_mask[d] = dm
                diag_hi[d] = m
            full = row_mask | col_mask[x] | diag_mask[d]
            v = ((full + 1) & ~full).bit_length() - 1
            append(v)
            bit = 1 << v
            row_mask |= bit
            col_mask[x] |= bit
            diag_vals[d].append(v)
            d += 1
        rows.append(row)
    return rows


def _mex_loop_tk(width: int, height: int, k: int) -> list[list[int]]:
    """Row-major mex computation for bounded TK.

    The diagonal window's lower edge depends on the source cell:
    j >= delta // (delta // m + k + 1) + 1 for a source with smaller
    coordinate m on the diagonal with coordinate difference delta. The edge
    is nondecreasing as m grows, so each diagonal carries a sliding window
    maintained with per-value counts (values can repeat along a diagonal,
    unlike along rows or columns).
    """
    n_diag = width + height - 1
    off = height - 1
    col_mask = [0] * width
    diag_mask = [0] * n_diag
    diag_lo = [0] * n_diag
    diag_hi = [0] * n_diag
    diag_vals: list[list[int]] = [[] for _ in range(n_diag)]
    diag_cnt: list[dict[int, int]] = [{} for _ in range(n_diag)]
    rows: list[list[int]] = []
    for y in range(height):
        row_mask = 0
        row: list[int] = []
        append = row.append
        d = off - y
        for x in range(width):
            m = x if x < y else y
            if m:
                delta = x - y if x >= y else y - x
                t = delta // (delta // m + k + 1) + 1
                a = diag_lo[d]
                b = diag_hi[d]
                if t > a:
                    stop = t if t < b else b
                    if a < stop:
                        dm = diag_mask[d]
                        cnt = diag_cnt[d]
                        dv = diag_vals[d]
                        for j in range(a, stop):
                            v0 = dv[j]
                            c = cnt[v0] - 1
                            if c:
                                cnt[v0] = c
                            else:
                                del cnt[v0]
                                dm &= ~(1 << v0)
                        diag_mask[d] = dm
                    diag_lo[d] = t
                    if b < t:
                        b = t
                        diag_hi[d] = t
                if m > b:
                    dm = diag_mask[d]
                    cnt = diag_cnt[d]
                    dv = diag_vals[d]
                    for j in range(b, m):
                        v0 = dv[j]
                        c = cnt.get(v0)
                        if c:
                            cnt[v0] = c + 1
                        else:
                            cnt[v0] = 1
                            dm |= 1 << v0
                    diag_mask[d] = dm
                    diag_hi[d] = m
            full = row_mask | col_mask[x] | diag_mask[d]
            v = ((full + 1) & ~full).bit_length() - 1
            append(v)
            bit = 1 << v
            row_mask |= bit
            col_mask[x] |= bit
            diag_vals[d].append(v)
            d += 1
        rows.append(row)
    return rows


def compute_grid(
    rule: RuleSet,
    width: int,
    height: int,
    cell_cap: int = DEFAULT_CELL_CAP,
) -> GrundyGrid:
    """Compute the nim-value grid of ``rule`` on [0, width) x [0, height).

    Deterministic and exact at every cell. Raises :class:`CellCapExceeded`
    when width * height exceeds ``cell_cap``.
    """
    if width < 1 or height < 1:
        raise ValueError(f"grid dimensions must be positive, got {width}x{height}")
    if width * height > cell_cap:
        raise CellCapExceeded(
            f"{width}x{height} = {width * height} cells exceeds cap {cell_cap}"
        )
    kind = rule.kind
    if kind is Kind.TK and not rule.unbounded:
        rows = _mex_loop_tk(width, height, rule.k)
    else:
        sentinel = width + height
        if kind is Kind.NIM:
            rows = _mex_loop_plain(width, height, lambda delta: sentinel)
        elif kind is Kind.WK:
            k = rule.k
            rows = _mex_loop_plain(width, height, lambda delta: k)
        elif kind is Kind.WKL:
            k, l = rule.k, rule.l
            rows = _mex_loop_plain(width, height, lambda delta: max(k, l - delta))
        else:  # unbounded TK, identical windows to WK(1)
            rows = _mex_loop_plain(width, height, lambda delta: 1)
    arr = np.array(rows, dtype=np.uint64)
    peak = int(arr.max())
    # Cell width contract: values stay far below 2**32 at any cap-respecting size.
    assert peak < 2**32, f"nim-value {peak} overflows the 32-bit cell contract"
    return GrundyGrid(rule=rule, width=width, height=height, values=arr.astype(np.uint32))


def compute_grid_naive(rule: RuleSet, width: int, height: int) -> GrundyGrid:
    """Reference grid: per-cell mex over the full move list, no incremental
    state. Slow; exists as the oracle the fast engine is tested against.
    """
    if width < 1 or height < 1:
        raise ValueError(f"grid dimensions must be positive, got {width}x{height}")
    vals = [[0] * width for _ in range(height)]
    for y in range(height):
        for x in range(width):
            vals[y][x] = mex(vals[my][mx] for mx, my in moves(rule, (x, y)))
    arr = np.array(vals, dtype=np.uint32)
    return GrundyGrid(rule=rule, width=width, height=height, values=arr)


def g_positions(grid: GrundyGrid, g: int) -> PositionSet:
    """All positions of the grid with nim-value exactly g."""
    ys, xs = np.nonzero(grid.values == g)
    pos = frozenset((int(x), int(y)) for x, y in zip(xs, ys))
    return PositionSet(positions=pos, bound=(grid.width, grid.height))


def grids_agree_up_to(a: GrundyGrid, b: GrundyGrid, g_max: int) -> AgreementReport:
    """Compare the g-positions of two same-size grids for each g <= g_max."""
    if (a.width, a.height) != (b.width, b.height):
        raise ValueError(
            f"dimension mismatch: {a.width}x{a.height} vs {b.width}x{b.height}"
        )
    if g_max < 0:
        raise ValueError("g_max must be nonnegative")
    diff_ys, diff_xs = np.nonzero(a.values != b.values)
    per_g_equal = [True] * (g_max + 1)
    witnesses: dict[int, tuple[Position, int, int]] = {}
    for y, x in zip(diff_ys.tolist(), diff_xs.tolist()):
        va = int(a.values[y, x])
        vb = int(b.values[y, x])
        for g in (va, vb):
            if g <= g_max and per_g_equal[g]:
                # diff cells arrive in (y, x) order, so first hit is smallest
                per_g_equal[g] = False
                witnesses[g] = ((x, y), va, vb)
    first_witness = None
    for g in range(g_max + 1):
        if not per_g_equal[g]:
            pos, va, vb = witnesses[g]
            first_witness = (g, pos, va, vb)
            break
    return AgreementReport(
        g_max_checked=g_max,
        per_g_equal=tuple(per_g_equal),
        first_witness=first_witness,
    )


def grid_to_csv(grid: GrundyGrid) -> str:
    """CSV serialization: header ``x,y,value``, one line per cell, y-major."""
    lines = ["x,y,value"]
    vals = grid.values
    for y in range(grid.height):
        row = vals[y].tolist()
        lines.extend(f"{x},{y},{v}" for x, v in enumerate(row))
    return "\n".join(lines) + "\n"


def grid_to_json(grid: GrundyGrid) -> str:
    """JSON serialization with the rule string and row-major values."""
    doc = {
        "rule": rule_string(grid.rule),
        "width": grid.width,
        "height": grid.height,
        "values": grid.values.tolist(),
    }
    return json.dumps(doc, separators=(",", ":"), sort_keys=True)


def grid_from_json(text: str) -> GrundyGrid:
    """Inverse of :func:`grid_to_json`; validates shape and value bounds."""
    doc = json.loads(text)
    rule = parse_rule(doc["rule"])
    width, height = int(doc["width"]), int(doc["height"])
    arr = np.array(doc["values"], dtype=np.uint32)
    if arr.shape != (height, width):
        raise ValueError(f"values shape {arr.shape} does not match {height}x{width}")
    return GrundyGrid(rule=rule, width=width, height=height, values=arr)


def grid_to_ascii(grid: GrundyGrid) -> str:
    """One character per cell (the value if < 10, else ``#``), origin at the
    bottom-left so the rendering matches the usual table orientation.
    """
    vals = grid.values
    lines = []
    for y in range(grid.height - 1, -1, -1):
        row = vals[y]
        lines.append("".join(str(v) if v < 10 else "#" for v in row.tolist()))
    return "\n".join(lines) + "\n"
