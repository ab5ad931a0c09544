"""The manifold families N_{a,b} (dimension 4k) and M_{a,b} (dimension 8m).

A ``WallManifold`` is keyed by its obstruction values (alpha, beta): the
values of the stable normal-bundle obstruction class on a hyperbolic basis of
H_{4m}. The handle construction with parameters (a, b) has
(alpha, beta) = (a c_m, b c_m); see ``wall_from_ab``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from . import jdata
from .errors import BoundaryNotStandardSphere, HypothesisViolation, InvalidArgument
from .exactmath import coprime_splittings, factorial_divides, factorize, primes_up_to
from .forms import ExtSymForm, canonical_int_pair, unoriented_equivalent

__all__ = [
    "FourKManifold",
    "WallManifold",
    "WallInvariants",
    "FamilyParameters",
    "StableClassReport",
    "wall_from_ab",
    "wall_invariants",
    "smooth_ext_form",
    "homotopy_ext_form",
    "almost_diffeomorphic",
    "homotopy_equivalent",
    "stably_almost_diffeomorphic",
    "family_parameters",
    "enumerate_stable_class",
    "homotopy_family",
    "homotopy_upper_bound",
    "homotopy_classes",
    "n4k_homotopy_equivalent",
    "n4k_stably_diffeomorphic",
    "n4k_enumerate_stable_class",
    "n4k_witness_family",
    "witness_product",
]


def _positive(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidArgument(f"{name} must be a positive integer, got {value!r}")


# ---------------------------------------------------------------------------
# (4m-1)-connected 8m-manifolds


@dataclass(frozen=True)
class WallManifold:
    m: int
    alpha: int
    beta: int
    orientation: int = 1
    bp_override: Optional[int] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        _positive("m", self.m)
        _positive("alpha", self.alpha)
        _positive("beta", self.beta)
        if self.orientation not in (1, -1):
            raise InvalidArgument("orientation must be +1 or -1")
        if self.bp_override is not None:
            _positive("bp override", self.bp_override)
        c = self.c_m
        if self.alpha % c or self.beta % c:
            raise InvalidArgument(
                f"obstruction values ({self.alpha}, {self.beta}) must be divisible by c_{self.m} = {c}"
            )
        product = (self.alpha // c) * (self.beta // c)
        if product % self.bp:
            raise BoundaryNotStandardSphere(
                f"bp_{self.m} = {self.bp} does not divide (alpha/c_m)(beta/c_m) = {product}; "
                "the boundary of the plumbing is not the standard sphere"
            )

    @property
    def c_m(self) -> int:
        return jdata.c_factor(self.m)

    @property
    def bp(self) -> int:
        return self.bp_override if self.bp_override is not None else jdata.bp_default(self.m)

    @property
    def d(self) -> int:
        return math.gcd(self.alpha, self.beta)

    @property
    def A(self) -> int:
        return self.alpha * self.beta // self.d**2

    @property
    def pair(self) -> tuple[int, int]:
        return (self.alpha, self.beta)

    signature = 0
    euler_characteristic = 4

    def reversed(self) -> "WallManifold":
        return WallManifold(self.m, self.alpha, self.beta, -self.orientation, self.bp_override)

    def with_pair(self, alpha: int, beta: int) -> "WallManifold":
        return WallManifold(self.m, alpha, beta, 1, self.bp_override)


class WallInvariants(NamedTuple):
    d: int
    sigma: int
    salpha_sq: int


def wall_from_ab(m: int, a: int, b: int, bp_override: Optional[int] = None) -> WallManifold:
    """M_{a,b} from the handle construction: obstruction values (a c_m, b c_m)."""
    _positive("a", a)
    _positive("b", b)
    c = jdata.c_factor(m)
    return WallManifold(m, a * c, b * c, 1, bp_override)


def wall_invariants(M: WallManifold) -> WallInvariants:
    """(d_M, signature, <(S alpha)^2, [M]>); the last flips sign with the orientation."""
    return WallInvariants(M.d, 0, M.orientation * 2 * M.alpha * M.beta)


def smooth_ext_form(M: WallManifold) -> ExtSymForm:
    return ExtSymForm(M.orientation, (M.alpha, M.beta), 0, M.m in (1, 2))


def homotopy_ext_form(M: WallManifold) -> ExtSymForm:
    """Obstruction values pushed through Z -> Z/j_m."""
    return ExtSymForm(M.orientation, (M.alpha, M.beta), jdata.j_order(M.m), M.m in (1, 2))


def _same_dimension(M1: WallManifold, M2: WallManifold) -> None:
    if M1.m != M2.m:
        raise InvalidArgument(f"dimension mismatch: 8*{M1.m} vs 8*{M2.m}")


def almost_diffeomorphic(M1: WallManifold, M2: WallManifold) -> bool:
    _same_dimension(M1, M2)
    return unoriented_equivalent(smooth_ext_form(M1), smooth_ext_form(M2))


def homotopy_equivalent(M1: WallManifold, M2: WallManifold) -> bool:
    _same_dimension(M1, M2)
    return unoriented_equivalent(homotopy_ext_form(M1), homotopy_ext_form(M2))


def stably_almost_diffeomorphic(M1: WallManifold, M2: WallManifold) -> bool:
    """Equal divisibility, signature and |(S alpha)^2| (one side may be reversed).

    Euler characteristics agree automatically: both are 4.
    """
    _same_dimension(M1, M2)
    i1, i2 = wall_invariants(M1), wall_invariants(M2)
    return i1.d == i2.d and i1.sigma == i2.sigma and abs(i1.salpha_sq) == abs(i2.salpha_sq)


@dataclass(frozen=True)
class FamilyParameters:
    """Derived constants of the stable class of a WallManifold."""

    m: int
    j_m: int
    c_m: int
    d: int
    A: int
    j_bar: int
    primes_A: tuple[int, ...]
    primes_A_m: tuple[int, ...]
    A_prime: int
    d_prime: int
    q_A: int
    q_A_m: int
    bp: int

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "j_m": self.j_m,
            "c_m": self.c_m,
            "d": self.d,
            "A": self.A,
            "j_bar": self.j_bar,
            "primes_A": list(self.primes_A),
            "primes_A_m": list(self.primes_A_m),
            "A_prime": self.A_prime,
            "d_prime": self.d_prime,
            "q_A": self.q_A,
            "q_A_m": self.q_A_m,
            "bp": self.bp,
        }


def family_parameters(M: WallManifold) -> FamilyParameters:
    j = jdata.j_order(M.m)
    d, A = M.d, M.A
    j_bar = j // math.gcd(j, d)
    fa = factorize(A)
    jbar_primes = set(factorize(j_bar).primes)
    # A' collects the prime-power factors of A whose prime divides j_bar
    A_prime = 1
    for p, e in fa.factors:
        if p in jbar_primes:
            A_prime *= p**e
    primes_A_m = tuple(p for p in fa.primes if p in jbar_primes)
    return FamilyParameters(
        m=M.m,
        j_m=j,
        c_m=M.c_m,
        d=d,
        A=A,
        j_bar=j_bar,
        primes_A=fa.primes,
        primes_A_m=primes_A_m,
        A_prime=A_prime,
        d_prime=d * (A // A_prime),
        q_A=max(len(fa.primes) - 1, 0),
        q_A_m=max(len(primes_A_m) - 1, 0),
        bp=M.bp,
    )


def _require_positive_orientation(M: WallManifold) -> None:
    if M.orientation != 1:
        raise InvalidArgument("stable class enumeration expects the base manifold with orientation +1")


def _sort_members(members: list[WallManifold]) -> list[WallManifold]:
    return sorted(members, key=lambda w: canonical_int_pair(w.pair, allow_reversal=True))


def _stable_members(M: WallManifold) -> list[WallManifold]:
    d = M.d
    return _sort_members([M.with_pair(d * s.left, d * s.right) for s in coprime_splittings(M.A)])


def homotopy_family(M: WallManifold) -> list[WallManifold]:
    """Members (d v, d' w) over coprime splittings {v, w} of A'.

    Pairwise stably almost diffeomorphic and pairwise not homotopy equivalent.
    Each unordered splitting is taken once by putting the prime power of the
    largest prime of A' into w.
    """
    _require_positive_orientation(M)
    fp = family_parameters(M)
    powers = factorize(fp.A_prime).prime_powers()
    if not powers:
        return [M.with_pair(fp.d, fp.d_prime)]
    *free, _ = powers
    members = []
    for mask in range(1 << len(free)):
        v = 1
        for i, q in enumerate(free):
            if mask >> i & 1:
                v *= q
        w = fp.A_prime // v
        members.append(M.with_pair(fp.d * v, fp.d_prime * w))
    return _sort_members(members)


def homotopy_upper_bound(M: WallManifold) -> int:
    """floor((j_bar^2 + 2 j_bar + 4) / 4) with j_bar = j_m / gcd(j_m, d)."""
    j = jdata.j_order(M.m)
    j_bar = j // math.gcd(j, M.d)
    return (j_bar * j_bar + 2 * j_bar + 4) // 4


def homotopy_classes(members: list[WallManifold]) -> list[list[WallManifold]]:
    """Partition by homotopy_equivalent, keeping first-seen order."""
    classes: list[list[WallManifold]] = []
    for w in members:
        for cls in classes:
            if homotopy_equivalent(cls[0], w):
                cls.append(w)
                break
        else:
            classes.append([w])
    return classes


@dataclass(frozen=True)
class StableClassReport:
    base: WallManifold
    d: int
    A: int
    members: list[WallManifold]
    count_stable_mod_spheres: int
    homotopy_lower: int
    homotopy_upper: int
    homotopy_family: list[WallManifold]
    homotopy_classes_among_members: int
    parameters: FamilyParameters


def enumerate_stable_class(M: WallManifold) -> StableClassReport:
    """One member (d y, d z) per coprime splitting {y, z} of A, plus the homotopy bounds."""
    _require_positive_orientation(M)
    fp = family_parameters(M)
    members = _stable_members(M)
    family = homotopy_family(M)
    return StableClassReport(
        base=M,
        d=fp.d,
        A=fp.A,
        members=members,
        count_stable_mod_spheres=2**fp.q_A,
        homotopy_lower=2**fp.q_A_m,
        homotopy_upper=homotopy_upper_bound(M),
        homotopy_family=family,
        homotopy_classes_among_members=len(homotopy_classes(members)),
        parameters=fp,
    )


# ---------------------------------------------------------------------------
# 4k-manifolds N_{a,b}


@dataclass(frozen=True)
class FourKManifold:
    k: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 2:
            raise InvalidArgument(f"k must be an integer >= 2, got {self.k!r}")
        _positive("a", self.a)
        _positive("b", self.b)
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        if math.gcd(self.a, self.b) != 1:
            raise HypothesisViolation(f"a = {self.a} and b = {self.b} must be coprime")
        if not factorial_divides(self.k, 2 * self.a * self.b):
            raise HypothesisViolation(
                f"(2k)! = {2 * self.k}! does not divide 2ab = {2 * self.a * self.b}"
            )

    @property
    def product(self) -> int:
        return self.a * self.b

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)


def _same_k(N1: FourKManifold, N2: FourKManifold) -> None:
    if N1.k != N2.k:
        raise InvalidArgument(f"dimension mismatch: 4*{N1.k} vs 4*{N2.k}")


def n4k_homotopy_equivalent(N1: FourKManifold, N2: FourKManifold) -> bool:
    """Equal unordered pairs {a, b}; z^{2k} != 0 rules out orientation reversal."""
    _same_k(N1, N2)
    return N1.pair == N2.pair


def n4k_stably_diffeomorphic(N1: FourKManifold, N2: FourKManifold) -> bool:
    _same_k(N1, N2)
    return N1.product == N2.product


def n4k_enumerate_stable_class(k: int, product: int) -> list[FourKManifold]:
    if not isinstance(k, int) or k < 2:
        raise InvalidArgument(f"k must be an integer >= 2, got {k!r}")
    _positive("product", product)
    if not factorial_divides(k, 2 * product):
        raise HypothesisViolation(f"(2k)! = {2 * k}! does not divide 2 * product = {2 * product}")
    return [FourKManifold(k, s.left, s.right) for s in coprime_splittings(product)]


def witness_product(k: int, n: int) -> int:
    """Smallest (2k)!/2 times ascending new primes with at least n coprime splittings."""
    if not isinstance(k, int) or k < 2:
        raise InvalidArgument(f"k must be an integer >= 2, got {k!r}")
    _positive("n", n)
    product = math.factorial(2 * k) // 2
    omega = len(primes_up_to(2 * k))
    p = 2 * k
    while 2 ** (omega - 1) < n:
        p += 1
        while not _is_small_prime(p):
            p += 1
        product *= p
        omega += 1
    return product


def _is_small_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


def n4k_witness_family(k: int, n: int) -> list[FourKManifold]:
    """At least n pairwise stably diffeomorphic, pairwise non-homotopy-equivalent N_{a,b}."""
    return n4k_enumerate_stable_class(k, witness_product(k, n))

