"""Macaulay binomial representations and the numerator-decrement operator.

Every non-negative integer ``a`` has a unique expansion in base ``d``

    a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_delta, delta)

with strictly decreasing numerators ``a_d > a_{d-1} > ... > a_delta >= delta``.
Decrementing every numerator by one (with the convention ``C(c, k) = 0`` for
``c < k``) yields ``kappa(a, d)``, the quantity that bounds the Hilbert
function of a generic hyperplane restriction.

All arithmetic is exact; binomials are arbitrary-precision integers.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import comb


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention that C(n, k) = 0 when n < k.

    Both arguments must be non-negative.
    """
    return comb(n, k)


# Cached strictly increasing rows [C(i,i), C(i+1,i), ...] per degree i >= 2,
# grown on demand. Degree 1 needs no table (C(m,1) = m).
_BINOM_ROWS: dict[int, list[int]] = {}


@dataclass(frozen=True)
class MacaulayRep:
    """Base-d binomial representation: numerators listed highest degree first.

    ``numerators`` is empty exactly when the represented integer is 0.
    """

    d: int
    numerators: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerators", tuple(self.numerators))
        if self.d < 1:
            raise ValueError(f"representation base must be >= 1, got d={self.d}")
        if len(self.numerators) > self.d:
            raise ValueError("more numerators than degrees in base d")
        prev = None
        for a_i in self.numerators:
            if a_i < 0:
                raise ValueError("numerators must be non-negative")
            if prev is not None and a_i >= prev:
                raise ValueError(
                    f"numerators must strictly decrease, got {self.numerators}"
                )
            prev = a_i
        if self.numerators:
            delta = self.d - len(self.numerators) + 1
            if self.numerators[-1] < delta:
                raise ValueError(
                    f"terminal numerator {self.numerators[-1]} below degree {delta}"
                )

    @property
    def delta(self) -> int | None:
        """Terminal degree of the expansion; None for the zero representation."""
        if not self.numerators:
            return None
        return self.d - len(self.numerators) + 1

    def terms(self) -> list[tuple[int, int]]:
        """(numerator, degree) pairs, highest degree first."""
        return [(a_i, self.d - k) for k, a_i in enumerate(self.numerators)]

    def padded(self) -> tuple[int, ...]:
        """Extended view: numerators zero-padded down to degree 1 (length d)."""
        return self.numerators + (0,) * (self.d - len(self.numerators))

    def ends_at_delta(self) -> bool:
        """True when the terminal numerator equals its degree (a_delta = delta)."""
        return bool(self.numerators) and self.numerators[-1] == self.delta

    def expansion_str(self) -> str:
        """Human-readable sum, e.g. ``C(4,3)+C(3,2)+C(1,1)``."""
        if not self.numerators:
            return "0"
        return "+".join(f"C({a},{i})" for a, i in self.terms())


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """Base-d Macaulay representation of a, built greedily from degree d down.

    The greedy choice (largest numerator whose binomial still fits) is the
    standard constructive proof of uniqueness; maximality forces the strict
    decrease of the numerators automatically.
    """
    if d < 1:
        raise ValueError(f"representation base must be >= 1, got d={d}")
    if a < 0:
        raise ValueError(f"cannot represent negative integer {a}")
    nums: list[int] = []
    rem = a
    i = d
    while rem > 0:
        if i == 1:
            nums.append(rem)
            break
        row = _BINOM_ROWS.get(i)
        if row is None:
            row = _BINOM_ROWS[i] = [1]
        while row[-1] <= rem:
            row.append(comb(i + len(row), i))
        # largest m with C(m, i) <= rem; idx >= 0 since C(i,i) = 1 <= rem
        idx = bisect_right(row, rem) - 1
        nums.append(i + idx)
        rem -= row[idx]
        i -= 1
    return MacaulayRep(d=d, numerators=tuple(nums))


def rep_value(rep: MacaulayRep) -> int:
    """Integer represented by rep: the sum of its binomial terms."""
    d = rep.d
    return sum(comb(a_i, d - k) for k, a_i in enumerate(rep.numerators))


def kappa(a: int, d: int) -> int:
    """Decrement every numerator in the base-d representation of a.

    kappa(a, d) = C(a_d - 1, d) + ... + C(a_delta - 1, delta), with terms
    where the numerator drops below the degree contributing zero. Always
    satisfies kappa(a, d) <= a.
    """
    return sum(comb(a_i - 1, i) for a_i, i in macaulay_rep(a, d).terms())


def rep_compare(a: int, b: int, d: int) -> int:
    """Compare a and b through their zero-padded base-d numerator vectors.

    Returns -1, 0 or 1. Lexicographic order on the padded vectors agrees
    with the integer order of a and b; that agreement is a testable fact,
    not an assumption of the implementation.
    """
    pa = macaulay_rep(a, d).padded()
    pb = macaulay_rep(b, d).padded()
    return (pa > pb) - (pa < pb)
