"""Generalized polygonal numbers and representation by octagonal forms.

A sum c1*P8(x1) + ... + ck*P8(xk) with positive integer coefficients is
decided here two ways: a bit-sieve over a value range (fast, bulk) and a
pruned depth-first search (single values, produces witnesses).  Both paths
are exact integer arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "ResourceBudgetError",
    "polygonal_number",
    "octagonal_numbers_up_to",
    "coeff_vector",
    "insert_sorted",
    "is_proper_subsequence",
    "RepresentationSieve",
    "build_sieve",
    "represents",
    "witness",
    "missing_in_range",
]

# One bit per value; 2**31 bits = 256 MiB of sieve.
DEFAULT_BIT_LIMIT = 2**31


class ResourceBudgetError(Exception):
    """A requested computation exceeds its configured memory or point budget."""


def polygonal_number(m: int, x: int) -> int:
    """Value of the generalized m-gonal number ((m-2)x^2 - (m-4)x) / 2.

    Defined for every integer x (negative arguments give the "generalized"
    values).  For m=8 this is 3x^2 - 2x.  Arithmetic is arbitrary precision,
    so no overflow is possible.
    """
    if m < 3:
        raise ValueError(f"polygonal order must be >= 3, got {m}")
    # (m-2)x^2 - (m-4)x is even for all integer x, so // is exact.
    return ((m - 2) * x * x - (m - 4) * x) // 2


def octagonal_number(x: int) -> int:
    """3x^2 - 2x, the octagonal case of polygonal_number."""
    return x * (3 * x - 2)


def octagonal_numbers_up_to(bound: int) -> list[int]:
    """Sorted list of all values 3x^2 - 2x <= bound over integer x.

    Duplicate-free; always contains 0 when bound >= 0.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    vals = [0]
    x = 1
    while True:
        plus = octagonal_number(x)  # 3x^2 - 2x, the smaller of the pair
        minus = octagonal_number(-x)
        if plus > bound:
            break
        vals.append(plus)
        if minus <= bound:
            vals.append(minus)
        x += 1
    return sorted(vals)


def coeff_vector(entries) -> tuple[int, ...]:
    """Validate a coefficient vector: positive integers, non-decreasing.

    Returns the canonical tuple form used throughout the package.
    """
    a = tuple(int(e) for e in entries)
    if len(a) < 1:
        raise ValueError("coefficient vector must have length >= 1")
    if any(e < 1 for e in a):
        raise ValueError(f"coefficients must be positive: {a}")
    if any(a[i] > a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"coefficients must be non-decreasing: {a}")
    return a


def insert_sorted(a, g: int) -> tuple[int, ...]:
    """Insert a new coefficient g into a, keeping the entries sorted."""
    if g < 1:
        raise ValueError(f"coefficient must be positive: {g}")
    a = coeff_vector(a)
    i = 0
    while i < len(a) and a[i] <= g:
        i += 1
    return a[:i] + (g,) + a[i:]


def is_proper_subsequence(b, a) -> bool:
    """True iff b is a proper subsequence of a (multiset containment).

    Both vectors are sorted, so subsequence containment coincides with
    multiset containment with strictly smaller length.
    """
    b = coeff_vector(b)
    a = coeff_vector(a)
    if len(b) >= len(a):
        return False
    i = 0
    for e in a:
        if i < len(b) and b[i] == e:
            i += 1
    return i == len(b)


def term_values(coefficient: int, cap: int) -> list[int]:
    """All nonnegative values coefficient * P8(x) <= cap, ascending."""
    if cap < 0:
        return []
    out = [0]
    x = 1
    while True:
        v = coefficient * octagonal_number(x)
        if v > cap:
            break
        out.append(v)
        w = coefficient * octagonal_number(-x)
        if w <= cap:
            out.append(w)
        x += 1
    return sorted(set(out))


@dataclass(frozen=True)
class RepresentationSieve:
    """Bit array over [0, bound] marking the values taken by an octagonal form.

    bits holds bit v set iff v = c1*P8(x1)+...+ck*P8(xk) for some integers
    x1..xk (packed into a single Python int; bit 0 is always set).
    """

    coeffs: tuple[int, ...]
    bound: int
    bits: int

    def __contains__(self, v: int) -> bool:
        if not 0 <= v <= self.bound:
            raise ValueError(f"value {v} outside sieve range [0, {self.bound}]")
        return bool((self.bits >> v) & 1)

    def missing_in_range(self, lo: int, hi: int, limit: int | None = None) -> list[int]:
        """Sorted list of the values in [lo, hi] NOT represented.

        With limit, stops after that many gaps (cheap peek at huge ranges).
        """
        if not 0 <= lo <= hi <= self.bound:
            raise ValueError(f"range [{lo}, {hi}] outside sieve range [0, {self.bound}]")
        window = (self.bits >> lo) & ((1 << (hi - lo + 1)) - 1)
        gaps = ~window & ((1 << (hi - lo + 1)) - 1)
        out = []
        while gaps and (limit is None or len(out) < limit):
            low = gaps & -gaps
            out.append(lo + low.bit_length() - 1)
            gaps ^= low
        return out

    def count_represented(self, lo: int, hi: int) -> int:
        """Number of represented values in [lo, hi]."""
        if not 0 <= lo <= hi <= self.bound:
            raise ValueError(f"range [{lo}, {hi}] outside sieve range [0, {self.bound}]")
        return ((self.bits >> lo) & ((1 << (hi - lo + 1)) - 1)).bit_count()

    def first_missing(self, lo: int, hi: int) -> int | None:
        """Smallest value in [lo, hi] not represented, or None."""
        if not 0 <= lo <= hi <= self.bound:
            raise ValueError(f"range [{lo}, {hi}] outside sieve range [0, {self.bound}]")
        window = (self.bits >> lo) & ((1 << (hi - lo + 1)) - 1)
        gaps = ~window & ((1 << (hi - lo + 1)) - 1)
        if gaps == 0:
            return None
        return lo + (gaps & -gaps).bit_length() - 1

    def values(self) -> list[int]:
        """Sorted list of all represented values <= bound."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out


def build_sieve(a, bound: int, bit_limit: int = DEFAULT_BIT_LIMIT) -> RepresentationSieve:
    """Sieve of all values of the octagonal form with coefficients a, up to bound.

    Iterated sumset: start from {0} and fold in the term values of each
    coefficient by shift-or on the packed bit array.
    """
    a = coeff_vector(a)
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if bound + 1 > bit_limit:
        raise ResourceBudgetError(
            f"sieve of {bound + 1} bits exceeds the limit of {bit_limit} bits"
        )
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for c in a:
        acc = 0
        for v in term_values(c, bound):
            acc |= bits << v
        bits = acc & mask
    return RepresentationSieve(coeffs=a, bound=bound, bits=bits)


def _descending_positions(a: tuple[int, ...]) -> list[int]:
    # Largest coefficient first; ties keep ascending position order.
    return sorted(range(len(a)), key=lambda i: (-a[i], i))


def _search(a: tuple[int, ...], v: int, want_witness: bool):
    if v % gcd(*a):
        return None if want_witness else False
    order = _descending_positions(a)
    xs: list[int] = [0] * len(a)
    dead: set[tuple[int, int]] = set()  # (depth, rem) states that cannot finish

    def go(depth: int, rem: int):
        if depth == len(order):
            return rem == 0
        if (depth, rem) in dead:
            return False
        c = a[order[depth]]
        # P8 arguments in the order 0, 1, -1, 2, -2, ...; P8(-x) > P8(x) for
        # x >= 1, so once the positive branch overshoots nothing else fits.
        x = 0
        while True:
            val = c * octagonal_number(x)
            if x > 0 and val > rem:
                dead.add((depth, rem))
                return False
            if val <= rem and go(depth + 1, rem - val):
                xs[order[depth]] = x
                return True
            x = -x if x > 0 else -x + 1

    found = go(0, v)
    if not want_witness:
        return found
    return tuple(xs) if found else None


def represents(a, v: int) -> bool:
    """True iff v is a value of the octagonal form with coefficients a.

    Depth-first search over coefficients in descending order with
    remaining-value pruning; every term is nonnegative, so the search
    is finite.
    """
    a = coeff_vector(a)
    if v < 0:
        raise ValueError("v must be >= 0")
    return _search(a, v, want_witness=False)


def witness(a, v: int) -> tuple[int, ...] | None:
    """Arguments (x1, ..., xk) with sum(a[i] * P8(x[i])) == v, or None.

    The witness is deterministic: coefficients are searched in descending
    order and P8 arguments in the order 0, 1, -1, 2, -2, ...
    """
    a = coeff_vector(a)
    if v < 0:
        raise ValueError("v must be >= 0")
    return _search(a, v, want_witness=True)


def missing_in_range(a, lo: int, hi: int) -> list[int]:
    """Sorted list of the values in [lo, hi] not represented by the form."""
    if not 0 <= lo <= hi:
        raise ValueError("need 0 <= lo <= hi")
    return build_sieve(a, hi).missing_in_range(lo, hi)
