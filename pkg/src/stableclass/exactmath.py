"""Exact integer and rational primitives.

Bernoulli numbers (positive, even-index convention), primality, certified
factorization and enumeration of coprime splittings.
"""

from __future__ import annotations

import bisect
import math
import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import FactorizationIncomplete, InvalidArgument

__all__ = [
    "BigRat",
    "Factorization",
    "CoprimeSplitting",
    "bernoulli_paper",
    "bernoulli_std_even",
    "is_prime",
    "factorize",
    "coprime_splittings",
    "factorial_divides",
    "primes_up_to",
    "divisors",
]

# Fraction already keeps den > 0 and gcd(|num|, den) = 1.
BigRat = Fraction

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_MR_ROUNDS = 64
DEFAULT_RHO_EFFORT = 2_000_000

_MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_U64 = 1 << 64


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidArgument(f"{name} must be a positive integer, got {value!r}")


# ---------------------------------------------------------------------------
# Bernoulli numbers

# _std_even[j] is the classical B_{2j} (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...).
_std_even: list[Fraction] = [Fraction(1)]
_std_lock = threading.Lock()


def _extend_std_even(j: int) -> None:
    with _std_lock:
        while len(_std_even) <= j:
            n = 2 * len(_std_even)
            # sum_{k=0}^{n} C(n+1, k) B_k = 0, with B_1 = -1/2 and B_odd = 0 beyond.
            s = Fraction(n + 1) * Fraction(-1, 2)
            for i, b in enumerate(_std_even):
                s += comb(n + 1, 2 * i) * b
            _std_even.append(-s / (n + 1))


def bernoulli_std_even(j: int) -> Fraction:
    """Classical Bernoulli number B_{2j} (sign included)."""
    if j < 0:
        raise InvalidArgument("index must be non-negative")
    if j >= len(_std_even):
        _extend_std_even(j)
    return _std_even[j]


def bernoulli_paper(m: int) -> Fraction:
    """B_m in the positive convention of t/(e^t - 1) = 1 - t/2 + sum (-1)^(n+1) B_n t^{2n}/(2n)!.

    Equals |B_{2m}| in the classical indexing; B_1 = 1/6, B_2 = 1/30.
    """
    _check_positive("m", m)
    return abs(bernoulli_std_even(m))


# ---------------------------------------------------------------------------
# Primes

_sieve_cache: list[int] = []
_sieve_limit = 0
_sieve_lock = threading.Lock()


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit (sieve of Eratosthenes, cached for the largest limit seen)."""
    global _sieve_cache, _sieve_limit
    if limit < 2:
        return []
    if limit <= _sieve_limit:
        return _sieve_cache[: bisect.bisect_right(_sieve_cache, limit)]
    with _sieve_lock:
        size = max(limit, 2 * _sieve_limit, 1 << 12)
        sieve = bytearray([1]) * (size + 1)
        sieve[0] = sieve[1] = 0
        for p in range(2, math.isqrt(size) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(range(p * p, size + 1, p)))
        _sieve_cache = [i for i, flag in enumerate(sieve) if flag]
        _sieve_limit = size
    return primes_up_to(limit)


def _miller_rabin(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Miller-Rabin. Deterministic below 2**64, probabilistic (seeded bases) above."""
    if n < 2:
        return False
    for p in _MR_DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _U64:
        bases = _MR_DETERMINISTIC_BASES
    else:
        rng = random.Random(n)
        bases = _MR_DETERMINISTIC_BASES + tuple(rng.randrange(2, n - 1) for _ in range(rounds))
    return all(_miller_rabin(n, a, d, s) for a in bases)


# ---------------------------------------------------------------------------
# Factorization


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]
    # primes >= 2**64 certified only probabilistically
    probable: frozenset[int] = field(default_factory=frozenset)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        return len(self.factors)

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _pollard_brent(n: int, effort: int, seed: int) -> int | None:
    """Return a nontrivial factor of composite n, or None if effort runs out."""
    if n % 2 == 0:
        return 2
    rng = random.Random(seed)
    spent = 0
    while spent < effort:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < effort:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(
    n: int,
    rounds: int = DEFAULT_MR_ROUNDS,
    effort: int = DEFAULT_RHO_EFFORT,
) -> Factorization:
    """Complete prime factorization: trial division to 10**6, then Pollard-Brent.

    Raises FactorizationIncomplete rather than returning an uncertified answer.
    """
    _check_positive("n", n)
    counts: dict[int, int] = {}
    rest = n
    limit = min(TRIAL_DIVISION_LIMIT, math.isqrt(rest))
    for p in primes_up_to(limit):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            counts[p] = e

    stack = [rest] if rest > 1 else []
    while stack:
        c = stack.pop()
        if is_prime(c, rounds):
            counts[c] = counts.get(c, 0) + 1
            continue
        root = math.isqrt(c)
        if root * root == c:
            stack.extend((root, root))
            continue
        g = _pollard_brent(c, effort, seed=c)
        if g is None:
            raise FactorizationIncomplete(n, c)
        stack.extend((g, c // g))

    factors = tuple(sorted(counts.items()))
    probable = frozenset(p for p, _ in factors if p >= _U64)
    return Factorization(n, factors, probable)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n, built from its factorization."""
    out = [1]
    for p, e in factorize(n).factors:
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


# ---------------------------------------------------------------------------
# Coprime splittings


@dataclass(frozen=True, order=True)
class CoprimeSplitting:
    left: int
    right: int

    def __post_init__(self) -> None:
        if self.left > self.right:
            raise InvalidArgument("CoprimeSplitting expects left <= right")
        if math.gcd(self.left, self.right) != 1:
            raise InvalidArgument(f"{self.left} and {self.right} are not coprime")

    @property
    def value(self) -> int:
        return self.left * self.right

    def as_tuple(self) -> tuple[int, int]:
        return (self.left, self.right)


def coprime_splittings(n: int) -> list[CoprimeSplitting]:
    """Unordered {u, v} with uv = n and gcd(u, v) = 1, sorted; 2**(omega(n) - 1) of them."""
    _check_positive("n", n)
    powers = factorize(n).prime_powers()
    if not powers:
        return [CoprimeSplitting(1, 1)]
    # pin the last prime power to one side so each unordered pair appears once
    *free, _ = powers
    out = []
    for mask in range(1 << len(free)):
        u = 1
        for i, q in enumerate(free):
            if mask >> i & 1:
                u *= q
        v = n // u
        out.append(CoprimeSplitting(min(u, v), max(u, v)))
    return sorted(out)


def legendre_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n! (Legendre)."""
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


def factorial_divides(k: int, n: int) -> bool:
    """True iff (2k)! divides n, checked prime by prime without forming (2k)!."""
    _check_positive("k", k)
    _check_positive("n", n)
    for p in primes_up_to(2 * k):
        e = legendre_valuation(2 * k, p)
        # p**e > n is a cheap early exit before the big power
        if e * p.bit_length() - e > n.bit_length() or n % p**e:
            return False
    return True
