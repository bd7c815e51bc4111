"""Exact integer arithmetic for the golden-ratio Beatty sequences.

The lower sequence is A(n) = floor(n*phi) and the upper sequence is
B(n) = floor(n*phi^2), with phi = (1 + sqrt(5)) / 2. For n >= 1 the two
sequences are complementary: together they cover every positive integer
exactly once.

Everything in this module is decided in exact integer arithmetic. Floating
point is deliberately avoided: a double carries ~53 bits of mantissa, so
evaluating floor(n*phi) through a float starts producing off-by-one errors
once n*phi lands within rounding error of an integer, which happens for
surprisingly small n. The key identities used instead:

* n*phi = (n + n*sqrt(5)) / 2 and floor(n*sqrt(5)) = isqrt(5*n^2), so
  A(n) = (n + isqrt(5*n^2)) // 2 exactly.
* phi^2 = phi + 1, so B(n) = A(n) + n.
* The fractional part {m*phi} is < 2 - phi exactly when A(m+1) = A(m) + 1,
  because {m*phi} + phi crosses 2 precisely at that threshold.
"""

from __future__ import annotations

import enum
from math import isqrt


class Membership(enum.Enum):
    """Which of the two complementary Beatty sequences an integer belongs to."""

    A_MEMBER = "A"
    B_MEMBER = "B"


def a_n(n: int) -> int:
    """Return floor(n * phi) for a nonnegative integer n, exactly.

    Uses A(n) = (n + isqrt(5*n^2)) // 2. The inner isqrt is exact for
    arbitrary-precision integers, and the outer floor is unaffected by
    replacing n*sqrt(5) with its floor because n*sqrt(5) is irrational
    for every n >= 1.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return (n + isqrt(5 * n * n)) // 2


def b_n(n: int) -> int:
    """Return floor(n * phi^2) = floor(n * phi) + n for nonnegative n."""
    return a_n(n) + n


def classify(m: int) -> Membership:
    """Decide whether the positive integer m lies in the A or the B sequence.

    The count of A-members <= m is A(m+1) - (m+1): A(j) <= m holds exactly
    for j*phi < m+1, i.e. for j <= floor((m+1)/phi) = floor((m+1)*(phi-1))
    = A(m+1) - (m+1). If the count is c, then m is an A-member exactly when
    the c-th A-member is m itself. No floating point is involved.

    m = 0 is rejected: both sequences have 0 as their zeroth term, so the
    classification is only meaningful from 1 on.
    """
    if m < 1:
        raise ValueError(f"classify is defined for m >= 1, got {m}")
    count_a = a_n(m + 1) - (m + 1)
    if a_n(count_a) == m:
        return Membership.A_MEMBER
    return Membership.B_MEMBER


def frac_phi_below(m: int) -> bool:
    """Return True iff the fractional part {m * phi} is < 2 - phi.

    Decided exactly through the integer equivalence
    {m*phi} < 2 - phi  <=>  A(m+1) = A(m) + 1:
    A(m+1) - A(m) = floor({m*phi} + phi), which is 1 when {m*phi} + phi < 2
    and 2 otherwise.
    """
    if m < 0:
        raise ValueError(f"argument must be nonnegative, got {m}")
    return a_n(m + 1) - a_n(m) == 1
