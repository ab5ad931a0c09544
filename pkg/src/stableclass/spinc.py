"""Spin^c structures on S^2 x S^2, modeled by their first Chern class.

H^2(S^2 x S^2) has basis (x, y) with x^2 = y^2 = 0 and xy = 1, so the cup
product pairing is the hyperbolic form. H_1 = 0, hence a spin^c structure is
determined by c_1, and c_1 ranges over the characteristic vectors.

``equivalent`` is the isometry-orbit test on c_1. Equivalent structures have
c_1 in one orbit; the converse is not claimed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvalidArgument, NotCharacteristic, NotCharacteristicSquare, HypothesisViolation
from .exactmath import coprime_splittings, divisors
from .forms import HYPERBOLIC, canonical_int_pair, isometry_group_hyperbolic

__all__ = [
    "SpinCClass",
    "BordismClass",
    "is_characteristic",
    "c1_square",
    "chern_action",
    "equivalent",
    "stably_equivalent",
    "bordism_invariant",
    "census",
    "all_orbits",
]

SIGNATURE = 0


def _pairing(u: tuple[int, int], v: tuple[int, int]) -> int:
    return sum(u[i] * HYPERBOLIC[i][j] * v[j] for i in range(2) for j in range(2))


def is_characteristic(v: tuple[int, int]) -> bool:
    """lambda(x, x) = lambda(x, v) mod 2 for all x; basis vectors suffice."""
    return all((_pairing(e, e) - _pairing(e, v)) % 2 == 0 for e in ((1, 0), (0, 1)))


@dataclass(frozen=True, order=True)
class SpinCClass:
    z1: int
    z2: int

    def __post_init__(self) -> None:
        if not is_characteristic(self.c1):
            raise NotCharacteristic(f"c1 = {self.c1} is not characteristic (both coordinates must be even)")

    @property
    def c1(self) -> tuple[int, int]:
        return (self.z1, self.z2)


@dataclass(frozen=True)
class BordismClass:
    signature: int
    index8: int


def c1_square(s: SpinCClass) -> int:
    return _pairing(s.c1, s.c1)


def chern_action(x: tuple[int, int], s: SpinCClass) -> SpinCClass:
    """c_1(x . s) = c_1(s) + 2x."""
    return SpinCClass(s.z1 + 2 * x[0], s.z2 + 2 * x[1])


def _act(p, v: tuple[int, int]) -> tuple[int, int]:
    # cohomology classes transform as column vectors
    return (p[0][0] * v[0] + p[0][1] * v[1], p[1][0] * v[0] + p[1][1] * v[1])


def equivalent(s1: SpinCClass, s2: SpinCClass) -> bool:
    return any(_act(p, s1.c1) == s2.c1 for p in isometry_group_hyperbolic())


def stably_equivalent(s1: SpinCClass, s2: SpinCClass) -> bool:
    return c1_square(s1) == c1_square(s2)


def bordism_invariant(s: SpinCClass) -> BordismClass:
    """(signature, (c_1^2 - signature) / 8) in the spin^c bordism group."""
    excess = c1_square(s) - SIGNATURE
    if excess % 8:
        raise AssertionError(f"characteristic class {s.c1} with c1^2 - sigma not divisible by 8")
    return BordismClass(SIGNATURE, excess // 8)


def _check_square(c: int) -> int:
    if not isinstance(c, int) or isinstance(c, bool):
        raise InvalidArgument(f"c1^2 must be an integer, got {c!r}")
    if c % 8:
        raise NotCharacteristicSquare(f"c1^2 = {c} is not divisible by 8")
    if c == 0:
        raise InvalidArgument("c1^2 = 0 has infinitely many orbits")
    return c // 8


def _representative(q1: int, q2: int, negative: bool) -> SpinCClass:
    pair = (2 * q1, -2 * q2) if negative else (2 * q1, 2 * q2)
    return SpinCClass(*canonical_int_pair(pair))


def _sorted(classes: list[SpinCClass]) -> list[SpinCClass]:
    return sorted(classes, key=lambda s: (abs(s.z1), s.z1 < 0, abs(s.z2), s.z2 < 0))


def census(c: int) -> list[SpinCClass]:
    """One class (2 q1, 2 q2) per coprime factorization Q = q1 q2 of Q = C/8, up to
    swapping and a common sign; 2^(P(C) - 1) pairwise inequivalent, stably
    equivalent structures."""
    q = _check_square(c)
    if abs(c) < 16:
        raise HypothesisViolation(f"|c1^2| = {abs(c)} < 16; the census needs |C| >= 16")
    return _sorted([_representative(s.left, s.right, c < 0) for s in coprime_splittings(abs(q))])


def all_orbits(c: int) -> list[SpinCClass]:
    """Isometry-orbit representatives of all characteristic vectors with square c."""
    q = _check_square(c)
    n = abs(q)
    reps = {_representative(u, n // u, c < 0) for u in divisors(n) if u * u <= n}
    return _sorted(list(reps))


def characteristic_vectors(bound: int) -> list[SpinCClass]:
    """All characteristic vectors with coordinates in [-bound, bound]."""
    coords = [z for z in range(-bound, bound + 1) if z % 2 == 0]
    return [SpinCClass(a, b) for a, b in product(coords, repeat=2)]
