"""Dimension-indexed constants for (4m-1)-connected 8m-manifolds.

j_m (order of the image of the stable J-homomorphism in degree 4m-1), its
prime set, q_m, the correction factor c_m and |bP_{8m}|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidArgument
from .exactmath import bernoulli_paper, divisors, factorize, is_prime

__all__ = [
    "DimensionData",
    "dimension_data",
    "j_order",
    "prime_set_j",
    "bp8_order",
    "bp_default",
    "c_factor",
    "q_m",
    "hopf_stabilization_check",
    "clear_cache",
]


def _check_m(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InvalidArgument(f"m must be a positive integer, got {m!r}")


@lru_cache(maxsize=None)
def j_order(m: int) -> int:
    """Denominator of B_m / 4m in lowest terms."""
    _check_m(m)
    return (bernoulli_paper(m) / (4 * m)).denominator


@lru_cache(maxsize=None)
def prime_set_j(m: int) -> frozenset[int]:
    """{p prime : (p - 1) | 2m}, enumerated from the divisors of 2m."""
    _check_m(m)
    return frozenset(d + 1 for d in divisors(2 * m) if is_prime(d + 1))


def q_m(m: int) -> int:
    return len(prime_set_j(m)) - 1


@lru_cache(maxsize=None)
def bp8_order(m: int) -> int:
    """|bP_{8m}| = 2^(4m-2) (2^(4m-1) - 1) * numerator(2 B_{2m} / m)."""
    _check_m(m)
    ratio = Fraction(2) * bernoulli_paper(2 * m) / m
    return 2 ** (4 * m - 2) * (2 ** (4 * m - 1) - 1) * ratio.numerator


def bp_default(m: int) -> int:
    # The order of Sigma_Q divides |bP_8m|, so divisibility by |bP_8m| is sufficient.
    return bp8_order(m)


def c_factor(m: int) -> int:
    _check_m(m)
    return 2 if m in (1, 2) else 1


@dataclass(frozen=True)
class DimensionData:
    m: int
    j_m: int
    bernoulli_m: Fraction
    prime_set: frozenset[int]
    q_m: int
    c_m: int
    bp8m_order: int
    bp_default: int

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "j_m": self.j_m,
            "bernoulli_m": str(self.bernoulli_m),
            "prime_set": sorted(self.prime_set),
            "q_m": self.q_m,
            "c_m": self.c_m,
            "bp8m_order": self.bp8m_order,
            "bp_default": self.bp_default,
        }


@lru_cache(maxsize=None)
def dimension_data(m: int) -> DimensionData:
    _check_m(m)
    return DimensionData(
        m=m,
        j_m=j_order(m),
        bernoulli_m=bernoulli_paper(m),
        prime_set=prime_set_j(m),
        q_m=q_m(m),
        c_m=c_factor(m),
        bp8m_order=bp8_order(m),
        bp_default=bp_default(m),
    )


def clear_cache() -> None:
    for fn in (j_order, prime_set_j, bp8_order, dimension_data):
        fn.cache_clear()


def hopf_stabilization_check(m: int) -> bool:
    """Check (x, y) -> (x, x + 2y) from Z + Z/(j_m/2) to Z + Z/j_m for m in {1, 2}.

    Enumerates x in [-j_m, j_m] and all y: the map must be well defined on
    Z/(j_m/2), injective, and its torsion coordinate must agree with x mod 2.
    """
    if m not in (1, 2):
        raise InvalidArgument("the explicit Hopf/stabilization map is only given for m = 1, 2")
    j = j_order(m)
    half = j // 2
    if 2 * half != j:
        return False
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for x in range(-j, j + 1):
        for y in range(half):
            image = (x, (x + 2 * y) % j)
            # representative y + half must land on the same image
            if image != (x, (x + 2 * (y + half)) % j):
                return False
            if image in seen:
                return False
            seen[image] = (x, y)
            if (image[1] - x) % 2:
                return False
    return True
