"""Closed-form position sets for the game families.

P-positions (nim-value 0), listed here as (a, b) with a <= b and optionally
mirrored across the diagonal:

* nim        -- the diagonal {(i, i)}.
* wythoff    -- {(A(n), B(n)) : n >= 0} with the golden-ratio Beatty pairs.
* wk:K       -- {(i, i) : i < K} plus the Wythoff pairs translated by (K, K).
* wkl:K,L    -- {(i, i) : i < L} plus the Wythoff pairs translated by (L, L);
  independent of K.
* tk:K       -- {(0, 0)} plus the Wythoff pairs translated by (1, 1);
  independent of K.

For WKL with L odd the 1-positions (nim-value 1) also have a closed form,
produced by :func:`one_position_set_wkl_odd`, and three supporting
obligations (disjointness from the P-positions, closure under moves,
coverage) that identify the set are checkable on a box.

Truncation semantics everywhere: a set is complete within ``bound`` when
every closed-form member with both coordinates < bound is present; members
straddling the boundary are excluded, which makes exact set equality
against grid extractions possible.
"""

from __future__ import annotations

from bisect import bisect_left

from .beatty import Membership, a_n, classify
from .grundy import PositionSet
from .ruleset import Kind, Position, RuleSet, diagonal_reach_start, wkl


def _wythoff_pairs(shift_a: int, shift_b: int, bound: int) -> list[Position]:
    """(A(n) + shift_a, B(n) + shift_b) for n >= 0, both coordinates < bound.

    B(n) grows faster than A(n), so iterating n until the first coordinate
    leaves the box covers every member.
    """
    out = []
    n = 0
    while True:
        base = a_n(n)
        a = base + shift_a
        if a >= bound:
            return out
        b = base + n + shift_b  # B(n) = A(n) + n
        if b < bound:
            out.append((a, b))
        n += 1


def _finish(members: list[Position], bound: int, mirror: bool) -> PositionSet:
    pos = set(members)
    if mirror:
        pos.update((b, a) for a, b in members)
    return PositionSet(positions=frozenset(pos), bound=(bound, bound))


def p_position_set(rule: RuleSet, bound: int, mirror: bool = True) -> PositionSet:
    """Closed-form P-positions of ``rule`` with both coordinates < bound.

    With ``mirror`` (the default) both orientations are emitted, matching
    symmetric grids; without it only the a <= b representatives.
    """
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    kind = rule.kind
    if kind is Kind.NIM:
        members = [(i, i) for i in range(bound)]
    elif kind is Kind.WK:
        members = [(i, i) for i in range(min(rule.k, bound))]
        members += _wythoff_pairs(rule.k, rule.k, bound)
    elif kind is Kind.WKL:
        members = [(i, i) for i in range(min(rule.l, bound))]
        members += _wythoff_pairs(rule.l, rule.l, bound)
    else:  # TK, independent of k
        members = [(0, 0)]
        members += _wythoff_pairs(1, 1, bound)
    return _finish(members, bound, mirror)


def one_position_set_wkl_odd(
    k: int, l: int, bound: int, mirror: bool = True
) -> PositionSet:
    """Closed-form 1-positions of WKL(k, l) for odd l and k < l.

    With l = 2m + 1 the a <= b members are
    {(2i, 2i+1) : 0 <= i <= m} and (l+1, l+1), plus
    (A(n)+l,   B(n)+l+1) for every n >= 1 in the B sequence, plus
    (A(n)+l+1, B(n)+l+2) for every n >= 1 in the A sequence.
    There is no n = 0 Beatty term; the low diagonals are covered by the two
    leading families.
    """
    if l < 0 or l % 2 == 0:
        raise ValueError(f"l must be odd, got {l}")
    if not 0 <= k < l:
        raise ValueError(f"requires 0 <= k < l, got k={k}, l={l}")
    if bound < l + 3:
        raise ValueError(f"bound must be at least l + 3 = {l + 3}, got {bound}")
    m = (l - 1) // 2
    members: list[Position] = [(2 * i, 2 * i + 1) for i in range(m + 1)]
    members.append((l + 1, l + 1))
    n = 1
    while True:
        a = a_n(n)
        b = a + n
        if classify(n) is Membership.B_MEMBER:
            pair = (a + l, b + l + 1)
        else:
            pair = (a + l + 1, b + l + 2)
        if pair[0] >= bound:
            break
        if pair[1] < bound:
            members.append(pair)
        n += 1
    return _finish(members, bound, mirror)


def lodd_disjoint_from_p(k: int, l: int, bound: int) -> Position | None:
    """Obligation (a): the closed-form 1-positions never meet the
    P-positions. Returns a shared position as witness, or None.
    """
    s0 = p_position_set(wkl_rule(k, l), bound, mirror=True).positions
    s1 = one_position_set_wkl_odd(k, l, bound, mirror=True).positions
    overlap = s0 & s1
    return min(overlap, key=lambda p: (p[1], p[0])) if overlap else None


def lodd_no_internal_moves(k: int, l: int, bound: int) -> tuple[Position, Position] | None:
    """Obligation (b): no move connects two closed-form 1-positions.

    Returns (source, target) as witness, or None. Move targets only shrink
    coordinates, so the truncated set is self-contained on the box.
    """
    rule = wkl_rule(k, l)
    s1 = one_position_set_wkl_odd(k, l, bound, mirror=True).positions
    index = _LineIndex(s1)
    for pos in sorted(s1, key=lambda p: (p[1], p[0])):
        hit = index.move_target(rule, pos)
        if hit is not None:
            return (pos, hit)
    return None


def lodd_coverage(k: int, l: int, bound: int) -> Position | None:
    """Obligation (c): every position in the box outside S0 and S1 has a
    move into S1. Returns an uncovered position as witness, or None.

    Sound on a box: every move shrinks coordinates, so any S1 member
    reachable from a box position lies inside the box.
    """
    rule = wkl_rule(k, l)
    s0 = p_position_set(rule, bound, mirror=True).positions
    s1 = one_position_set_wkl_odd(k, l, bound, mirror=True).positions
    index = _LineIndex(s1)
    for y in range(bound):
        for x in range(bound):
            pos = (x, y)
            if pos in s0 or pos in s1:
                continue
            if index.move_target(rule, pos) is None:
                return pos
    return None


def wkl_rule(k: int, l: int) -> RuleSet:
    from .ruleset import wkl

    return wkl(k, l)


class _LineIndex:
    """Row/column/diagonal index over a position set for O(log) reachability
    queries: is some member of the set one move away from a given position?
    """

    def __init__(self, positions: frozenset[Position]):
        self.by_row: dict[int, list[int]] = {}
        self.by_col: dict[int, list[int]] = {}
        self.by_diag: dict[int, list[int]] = {}  # delta = x - y -> sorted min coords
        for x, y in positions:
            self.by_row.setdefault(y, []).append(x)
            self.by_col.setdefault(x, []).append(y)
            self.by_diag.setdefault(x - y, []).append(x if x < y else y)
        for lst in self.by_row.values():
            lst.sort()
        for lst in self.by_col.values():
            lst.sort()
        for lst in self.by_diag.values():
            lst.sort()

    def move_target(self, rule: RuleSet, pos: Position) -> Position | None:
        """A member reachable from pos in one move under rule, else None."""
        x, y = pos
        row = self.by_row.get(y)
        if row and row[0] < x:
            return (row[0], y)
        col = self.by_col.get(x)
        if col and col[0] < y:
            return (x, col[0])
        if rule.kind in _NO_DIAGONAL:
            return None
        m = x if x < y else y
        delta = x - y
        diag = self.by_diag.get(delta)
        if diag:
            lo = diagonal_reach_start(rule, abs(delta), m)
            i = bisect_left(diag, lo)
            if i < len(diag) and diag[i] < m:
                j = diag[i]
                return (j, j + y - x) if x < y else (j + x - y, j)
        return None
