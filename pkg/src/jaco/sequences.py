"""Exact integer sequences underlying Jaco graphs.

The central object is the lowest-in-neighbor series c: c[0] = 0, c[1] = 1
and, for n >= 2, c[n] is the least k < n with a*k + c[k] >= n.  From it
follow the in-degree (n - c[n]), the out-degree ((a-1)*n + c[n]) and the
reach (a*n + c[n]) of every vertex of the infinite order-a graph.

The same series has a closed form over the generalized Lucas basis
U(a, -1): expand n in the unique constrained digit expansion over that
basis, shift every basis index down by one and add a 0/1 correction term.
All arithmetic is exact (Python integers widen as needed).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass


class ZeckDigitError(ValueError):
    """A digit string violates the generalized Zeckendorf constraints."""

    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(f"digit alpha_{index}: {message}")


def check_order(a: int) -> None:
    """Reject graph orders outside the defined domain (a >= 1)."""
    if a < 1:
        raise ValueError(f"order a must be >= 1, got {a}")


@dataclass(frozen=True)
class LucasBasis:
    """Terms U_0..U_m of the generalized Lucas sequence U(a, -1)."""

    a: int
    terms: tuple[int, ...]


@dataclass(frozen=True)
class LizSequence:
    """Terms B_0..B_m with B_0=0, B_1=B_2=1, B_i = a*B_{i-1} + B_{i-2}."""

    a: int
    terms: tuple[int, ...]


@dataclass(frozen=True)
class ZeckRep:
    """Constrained digit expansion n = sum(alpha_i * U_i), alpha_1 first.

    Digits are stored least-significant-first; the expansion of 0 is the
    empty tuple.  Valid digit strings satisfy alpha_1 < a, alpha_i <= a,
    and alpha_i = a only when alpha_{i-1} = 0.
    """

    a: int
    digits: tuple[int, ...]


@dataclass(frozen=True)
class SequenceTable:
    """The series c[0..horizon] and its derived degree columns.

    dminus[n] = n - c[n], dplus[n] = (a-1)*n + c[n], reach[n] = a*n + c[n].
    """

    a: int
    horizon: int
    c: tuple[int, ...]
    dminus: tuple[int, ...]
    dplus: tuple[int, ...]
    reach: tuple[int, ...]


# Lucas basis terms per order, grown on demand.  Purely additive cache:
# concurrent readers can at worst recompute the same extension.
_BASIS_CACHE: dict[int, list[int]] = {}


def _basis_upto(a: int, value: int) -> list[int]:
    """Return cached Lucas terms for order a, with last term >= value."""
    terms = _BASIS_CACHE.setdefault(a, [0, 1, a])
    while terms[-1] < value:
        terms.append(a * terms[-1] + terms[-2])
    return terms


def lucas_terms(a: int, m: int) -> LucasBasis:
    """Terms U_0..U_m of U(a, -1): U_0 = 0, U_1 = 1, U_{n+1} = a*U_n + U_{n-1}."""
    check_order(a)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    terms = [0, 1]
    for _ in range(m - 1):
        terms.append(a * terms[-1] + terms[-2])
    return LucasBasis(a, tuple(terms))


def liz_terms(a: int, m: int) -> LizSequence:
    """Liz numbers B_0..B_m; for a = 1 these are the Fibonacci numbers."""
    check_order(a)
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    terms = [0, 1, 1]
    for _ in range(m - 2):
        terms.append(a * terms[-1] + terms[-2])
    return LizSequence(a, tuple(terms))


def c_series(a: int, horizon: int) -> SequenceTable:
    """Compute c[0..horizon] and derived columns in O(horizon).

    The defining minimization is a scan over k < n, but the minimizing k
    never decreases as n grows, so a single forward pointer suffices.
    """
    check_order(a)
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    c = [0] * (horizon + 1)
    if horizon >= 1:
        c[1] = 1
    k = 1
    for n in range(2, horizon + 1):
        while a * k + c[k] < n:
            k += 1
        c[n] = k
    dminus = [n - c[n] for n in range(horizon + 1)]
    dplus = [(a - 1) * n + c[n] for n in range(horizon + 1)]
    reach = [a * n + c[n] for n in range(horizon + 1)]
    return SequenceTable(a, horizon, tuple(c), tuple(dminus), tuple(dplus), tuple(reach))


def zeck_encode(a: int, n: int) -> ZeckRep:
    """Greedy constrained digit expansion of n over the basis U(a, -1).

    Working from the largest basis term down, take the largest admissible
    multiple of each term.  The remainder after position 2 is < U_2 = a
    and becomes alpha_1, so alpha_1 < a holds by construction, as does the
    rule that a full digit (alpha_i = a) is followed below by a zero.
    """
    check_order(a)
    if n < 0:
        raise ValueError(f"value must be >= 0, got {n}")
    if n == 0:
        return ZeckRep(a, ())
    terms = _basis_upto(a, n)
    m = bisect_right(terms, n) - 1
    if m < 2:
        m = 2
    digits = [0] * m
    r = n
    for i in range(m, 1, -1):
        u = terms[i]
        if u <= r:
            q = r // u
            digits[i - 1] = q
            r -= q * u
    digits[0] = r
    while digits and digits[-1] == 0:
        digits.pop()
    return ZeckRep(a, tuple(digits))


def validate_digits(rep: ZeckRep) -> None:
    """Raise ZeckDigitError if rep violates any digit constraint."""
    check_order(rep.a)
    a = rep.a
    d = rep.digits
    if not d:
        return
    if d[-1] == 0:
        raise ZeckDigitError(len(d), "leading digit must be nonzero")
    if not 0 <= d[0] < a:
        raise ZeckDigitError(1, f"alpha_1 must satisfy 0 <= alpha_1 < a, got {d[0]}")
    for i in range(1, len(d)):
        if not 0 <= d[i] <= a:
            raise ZeckDigitError(i + 1, f"digit must be in [0, {a}], got {d[i]}")
        if d[i] == a and d[i - 1] != 0:
            raise ZeckDigitError(i + 1, f"alpha_{i + 1} = a requires alpha_{i} = 0")


def zeck_decode(a: int, rep: ZeckRep) -> int:
    """Evaluate a digit string back to its integer value, validating it first."""
    check_order(a)
    if rep.a != a:
        raise ValueError(f"representation has order {rep.a}, expected {a}")
    validate_digits(rep)
    if not rep.digits:
        return 0
    terms = _basis_upto(a, 2)
    while len(terms) <= len(rep.digits):
        terms.append(a * terms[-1] + terms[-2])
    return sum(alpha * terms[i + 1] for i, alpha in enumerate(rep.digits))


def tau(rep: ZeckRep) -> int:
    """The 0/1 correction term of the closed form, read off the digits.

    Zero when alpha_1 = 0; one when alpha_1 > 1; otherwise determined by
    the parity of the run of leading ones and by whether the digit after
    the run is zero or larger than one.  For a = 1 this is always zero.
    """
    d = rep.digits
    if not d:
        raise ValueError("correction term is undefined for the zero representation")
    if d[0] == 0:
        return 0
    if d[0] > 1:
        return 1
    run = 1
    while run < len(d) and d[run] == 1:
        run += 1
    after = d[run] if run < len(d) else 0
    if after == 0:
        return run % 2
    return 1 - run % 2


def c_closed(a: int, n: int) -> int:
    """Closed form for c[n]: shift every digit's basis index down, add tau."""
    check_order(a)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rep = zeck_encode(a, n)
    terms = _basis_upto(a, n)
    # digit alpha_{i+1} (0-based index i) contributes alpha * U_i
    return sum(alpha * terms[i] for i, alpha in enumerate(rep.digits) if alpha) + tau(rep)


def bettina_dplus(n: int) -> int:
    """Out-degree of v_n in the infinite order-1 graph via Zeckendorf shift.

    Expand n over the Fibonacci numbers and shift every index down by one;
    the correction term vanishes at order 1, so this is a pure digit shift.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rep = zeck_encode(1, n)
    terms = _basis_upto(1, n)
    return sum(alpha * terms[i] for i, alpha in enumerate(rep.digits) if alpha)
