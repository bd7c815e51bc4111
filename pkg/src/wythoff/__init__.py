"""Engine and verification harness for Wythoff's game and its
restricted-diagonal variants (WK, WKL, TK).
"""

from .beatty import Membership, a_n, b_n, classify, frac_phi_below
from .grundy import (
    AgreementReport,
    GrundyGrid,
    PositionSet,
    compute_grid,
    compute_grid_naive,
    g_positions,
    grid_from_json,
    grid_to_ascii,
    grid_to_csv,
    grid_to_json,
    grids_agree_up_to,
    mex,
    nim_sum,
)
from .ruleset import (
    Kind,
    Position,
    RuleSet,
    diagonal_legal,
    diagonal_reach_start,
    in_forbidden_region,
    make_ruleset,
    moves,
    nim,
    parse_rule,
    rule_string,
    tk,
    wk,
    wkl,
    wythoff,
)

__all__ = [
    "AgreementReport",
    "GrundyGrid",
    "Kind",
    "Membership",
    "Position",
    "PositionSet",
    "RuleSet",
    "a_n",
    "b_n",
    "classify",
    "compute_grid",
    "compute_grid_naive",
    "diagonal_legal",
    "diagonal_reach_start",
    "frac_phi_below",
    "g_positions",
    "grid_from_json",
    "grid_to_ascii",
    "grid_to_csv",
    "grid_to_json",
    "grids_agree_up_to",
    "in_forbidden_region",
    "make_ruleset",
    "mex",
    "moves",
    "nim",
    "nim_sum",
    "parse_rule",
    "rule_string",
    "tk",
    "wk",
    "wkl",
    "wythoff",
]
