"""Game families, legal-move generation, and the forbidden-region predicate.

Five impartial games are covered, all played on a quarter-plane grid of
positions (x, y) with nonnegative coordinates:

* ``nim``      -- 2-pile Nim: remove any positive number of tokens from one
  pile (move left along the row or down along the column).
* ``wythoff``  -- Nim plus the diagonal move (x-s, y-s); alias for ``wk:0``.
* ``wk:K``     -- the diagonal move is legal only if the target's smaller
  coordinate is at least K.
* ``wkl:K,L``  -- the diagonal target needs smaller coordinate >= K and
  larger coordinate >= L (requires K <= L). ``wkl:L,L`` behaves exactly
  like ``wk:L``.
* ``tk:K``     -- restricts the diagonals of ``wk:1``: writing each position
  with its smaller coordinate as denominator, the floor of larger/smaller
  may change by at most K along the move, and the target's smaller
  coordinate must stay >= 1. ``tk:inf`` removes the floor bound and
  behaves exactly like ``wk:1``.

All rule sets are symmetric in (x, y). Every legal move strictly decreases
x + y, so the games are finite.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

Position = tuple[int, int]


class Kind(enum.Enum):
    """Game family selector."""

    NIM = "nim"
    WK = "wk"
    WKL = "wkl"
    TK = "tk"


@dataclass(frozen=True)
class RuleSet:
    """A validated game variant. Build through :func:`make_ruleset` or the
    convenience constructors; direct construction skips validation.

    ``k`` carries the family parameter for WK, WKL and TK; ``l`` is only
    meaningful for WKL; ``unbounded`` marks the TK variant with no bound on
    the floor difference.
    """

    kind: Kind
    k: int = 0
    l: int = 0
    unbounded: bool = False


def make_ruleset(
    kind: Kind,
    k: int | None = None,
    l: int | None = None,
    unbounded: bool | None = None,
) -> RuleSet:
    """Validate parameters and build a RuleSet.

    Rejects negative parameters, WKL with k > l, and parameters that do not
    belong to the requested family. WKL with k = l is accepted (it plays
    identically to WK(l)).
    """
    if kind is Kind.NIM:
        if k is not None or l is not None or unbounded is not None:
            raise ValueError("nim takes no parameters")
        return RuleSet(Kind.NIM)
    if kind is Kind.WK:
        if k is None or l is not None or unbounded is not None:
            raise ValueError("wk takes exactly one parameter k")
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        return RuleSet(Kind.WK, k=k)
    if kind is Kind.WKL:
        if k is None or l is None or unbounded is not None:
            raise ValueError("wkl takes parameters k and l")
        if k < 0 or l < 0:
            raise ValueError(f"parameters must be nonnegative, got k={k}, l={l}")
        if k > l:
            raise ValueError(f"wkl requires k <= l, got k={k}, l={l}")
        return RuleSet(Kind.WKL, k=k, l=l)
    if kind is Kind.TK:
        if l is not None:
            raise ValueError("tk takes no l parameter")
        if unbounded:
            if k is not None:
                raise ValueError("unbounded tk takes no k")
            return RuleSet(Kind.TK, unbounded=True)
        if k is None:
            raise ValueError("tk requires k (or unbounded=True)")
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        return RuleSet(Kind.TK, k=k)
    raise ValueError(f"unknown kind {kind!r}")


def nim() -> RuleSet:
    return make_ruleset(Kind.NIM)


def wythoff() -> RuleSet:
    """Wythoff's game, i.e. WK with k = 0."""
    return make_ruleset(Kind.WK, k=0)


def wk(k: int) -> RuleSet:
    return make_ruleset(Kind.WK, k=k)


def wkl(k: int, l: int) -> RuleSet:
    return make_ruleset(Kind.WKL, k=k, l=l)


def tk(k: int | None = None, unbounded: bool = False) -> RuleSet:
    return make_ruleset(Kind.TK, k=k, unbounded=unbounded or None)


_RULE_RE = re.compile(
    r"^(?:(nim)|(wythoff)|wk:(\d+)|wkl:(\d+),(\d+)|tk:(inf|\d+))$"
)


def parse_rule(text: str) -> RuleSet:
    """Parse a rule string: ``nim``, ``wythoff``, ``wk:K``, ``wkl:K,L``,
    ``tk:K``, ``tk:inf``. ``wythoff`` is an alias for ``wk:0``.
    """
    m = _RULE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"unparseable rule string: {text!r}")
    g_nim, g_wythoff, g_wk, g_wkl_k, g_wkl_l, g_tk = m.groups()
    if g_nim:
        return nim()
    if g_wythoff:
        return wythoff()
    if g_wk is not None:
        return wk(int(g_wk))
    if g_wkl_k is not None:
        return wkl(int(g_wkl_k), int(g_wkl_l))
    if g_tk == "inf":
        return tk(unbounded=True)
    return tk(int(g_tk))


def rule_string(rule: RuleSet) -> str:
    """Canonical rule string accepted back by :func:`parse_rule`."""
    if rule.kind is Kind.NIM:
        return "nim"
    if rule.kind is Kind.WK:
        return f"wk:{rule.k}"
    if rule.kind is Kind.WKL:
        return f"wkl:{rule.k},{rule.l}"
    if rule.unbounded:
        return "tk:inf"
    return f"tk:{rule.k}"


def diagonal_legal(rule: RuleSet, pos: Position, s: int) -> bool:
    """Is the diagonal move of length s from pos legal under rule?

    Expects 1 <= s <= min(pos), so the target has nonnegative coordinates.
    For TK the floor condition compares larger/smaller at both endpoints;
    the orientation cannot flip along a diagonal because the coordinate
    difference is constant.
    """
    x, y = pos
    m, big = (x, y) if x <= y else (y, x)
    if not 1 <= s <= m:
        raise ValueError(f"diagonal length {s} out of range for {pos}")
    kind = rule.kind
    if kind is Kind.NIM:
        return False
    if kind is Kind.WK:
        return m - s >= rule.k
    if kind is Kind.WKL:
        return m - s >= rule.k and big - s >= rule.l
    # TK: target's smaller coordinate must stay positive.
    if m - s < 1:
        return False
    if rule.unbounded:
        return True
    return (big - s) // (m - s) - big // m <= rule.k


def diagonal_reach_start(rule: RuleSet, delta: int, m: int) -> int:
    """Closed form for the diagonal move window.

    From a position with smaller coordinate ``m`` on the diagonal where the
    coordinates differ by ``delta`` (>= 0), the legal diagonal targets are
    exactly the cells of that diagonal whose smaller coordinate j satisfies
    ``diagonal_reach_start(...) <= j <= m - 1``. A start >= m means no
    diagonal move is legal.

    The window is genuinely an interval for every family: WK and WKL bound
    j from below by constants, and for TK the floor difference
    floor(delta/j) - floor(delta/m) is nonnegative and nonincreasing in j,
    so the bound "<= k" cuts the diagonal at a single threshold
    j >= delta // (delta // m + k + 1) + 1.
    """
    if delta < 0 or m < 0:
        raise ValueError("delta and m must be nonnegative")
    kind = rule.kind
    if kind is Kind.NIM:
        return m
    if kind is Kind.WK:
        return rule.k
    if kind is Kind.WKL:
        lo = rule.l - delta
        return rule.k if rule.k >= lo else lo
    if rule.unbounded:
        return 1
    if m == 0:
        return 0
    return delta // (delta // m + rule.k + 1) + 1


def moves(rule: RuleSet, pos: Position) -> list[Position]:
    """All positions reachable from pos in one move.

    Nim moves shrink one coordinate; diagonal moves shrink both by the same
    amount and are filtered through :func:`diagonal_legal`. The three move
    families cannot collide, so the list is duplicate-free by construction.
    """
    x, y = pos
    out: list[Position] = [(i, y) for i in range(x)]
    out += [(x, i) for i in range(y)]
    m = x if x < y else y
    out += [
        (x - s, y - s) for s in range(1, m + 1) if diagonal_legal(rule, pos, s)
    ]
    return out


def in_forbidden_region(rule: RuleSet, pos: Position) -> bool:
    """True iff no legal diagonal move of any position can land on pos.

    Only defined for WK and WKL: a WK(k) target is unreachable when its
    smaller coordinate is below k; a WKL(k,l) target additionally when its
    larger coordinate is below l.
    """
    x, y = pos
    m, big = (x, y) if x <= y else (y, x)
    if rule.kind is Kind.WK:
        return m < rule.k
    if rule.kind is Kind.WKL:
        return m < rule.k or big < rule.l
    raise ValueError(f"forbidden region is defined for wk/wkl only, not {rule.kind.value}")
