"""Rank-2 extended symmetric forms (+-H, f: Z^2 -> G, v: G -> Z/2).

The form is sign * H with H = [[0, 1], [1, 0]]; G is Z (modulus 0) or Z/N.
A marking f is stored as its values (f(e1), f(e2)) on the hyperbolic basis.

Parity condition: lambda(x, x) = v(f(x)) mod 2 need only be checked on
e1 and e2, because lambda(x+y, x+y) - lambda(x, x) - lambda(y, y) = 2 lambda(x, y)
is even while v o f is additive mod 2. For +-H the diagonal vanishes, so the
condition says: if v is nonzero then f(e1) and f(e2) are even.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

import numpy as np

from .errors import InvalidArgument

__all__ = [
    "HYPERBOLIC",
    "Matrix",
    "ExtSymForm",
    "isometry_group_hyperbolic",
    "antiisometries_hyperbolic",
    "oriented_equivalent",
    "unoriented_equivalent",
    "canonical_pair",
    "marking_orbit",
    "orbit_count_pairs_bruteforce",
    "orbit_count_pairs_formula",
]

Matrix = tuple[tuple[int, int], tuple[int, int]]

HYPERBOLIC: Matrix = ((0, 1), (1, 0))


def _mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )  # type: ignore[return-value]


def _transpose(a: Matrix) -> Matrix:
    return ((a[0][0], a[1][0]), (a[0][1], a[1][1]))


def _scale(s: int, a: Matrix) -> Matrix:
    return ((s * a[0][0], s * a[0][1]), (s * a[1][0], s * a[1][1]))


def gram_pullback(p: Matrix, gram: Matrix = HYPERBOLIC) -> Matrix:
    """P^T G P."""
    return _mul(_mul(_transpose(p), gram), p)


def determinant(p: Matrix) -> int:
    return p[0][0] * p[1][1] - p[0][1] * p[1][0]


_IDENTITY: Matrix = ((1, 0), (0, 1))
_SWAP: Matrix = HYPERBOLIC
_REFLECT: Matrix = ((1, 0), (0, -1))


def isometry_group_hyperbolic() -> list[Matrix]:
    """The four automorphisms of H: +-Id and +-swap."""
    out = [_IDENTITY, _scale(-1, _IDENTITY), _SWAP, _scale(-1, _SWAP)]
    for p in out:
        assert gram_pullback(p) == HYPERBOLIC
    return out


def antiisometries_hyperbolic() -> list[Matrix]:
    """Isometries H -> -H: the automorphisms composed with diag(1, -1) or diag(-1, 1).

    The two reflections differ by -Id, so the eight compositions collapse to
    four distinct matrices.
    """
    out: list[Matrix] = []
    for p in isometry_group_hyperbolic():
        for r in (_REFLECT, _scale(-1, _REFLECT)):
            q = _mul(p, r)
            if q not in out:
                out.append(q)
    for q in out:
        assert gram_pullback(q) == _scale(-1, HYPERBOLIC)
    return out


@dataclass(frozen=True)
class ExtSymForm:
    sign: int
    f: tuple[int, int]
    modulus: int = 0
    v_nonzero: bool = False

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise InvalidArgument(f"form sign must be +1 or -1, got {self.sign!r}")
        if self.modulus < 0:
            raise InvalidArgument("modulus must be >= 0 (0 means the target group Z)")
        if len(self.f) != 2:
            raise InvalidArgument("a rank-2 marking needs exactly two values")
        f = tuple(int(x) for x in self.f)
        if self.modulus:
            f = tuple(x % self.modulus for x in f)
        object.__setattr__(self, "f", f)
        if self.v_nonzero:
            if self.modulus % 2:
                raise InvalidArgument(f"no nonzero homomorphism Z/{self.modulus} -> Z/2")
            if f[0] % 2 or f[1] % 2:
                raise InvalidArgument(
                    f"marking {f} violates lambda(x, x) = v(f(x)) mod 2 on the hyperbolic basis"
                )

    @property
    def gram(self) -> Matrix:
        return _scale(self.sign, HYPERBOLIC)

    def reversed(self) -> "ExtSymForm":
        return ExtSymForm(-self.sign, self.f, self.modulus, self.v_nonzero)

    def pulled_back(self, p: Matrix) -> tuple[int, int]:
        """Marking values of f o P on the basis."""
        f1, f2 = self.f
        vals = (f1 * p[0][0] + f2 * p[1][0], f1 * p[0][1] + f2 * p[1][1])
        if self.modulus:
            return (vals[0] % self.modulus, vals[1] % self.modulus)
        return vals


def _check_compatible(e1: ExtSymForm, e2: ExtSymForm) -> None:
    if e1.modulus != e2.modulus or e1.v_nonzero != e2.v_nonzero:
        raise InvalidArgument("forms must share the target group and the parity map v")


def oriented_equivalent(e1: ExtSymForm, e2: ExtSymForm) -> bool:
    """Some isometry h with f2 o h = f1, with the forms of equal sign."""
    _check_compatible(e1, e2)
    if e1.sign != e2.sign:
        return False
    return any(e2.pulled_back(p) == e1.f for p in isometry_group_hyperbolic())


def unoriented_equivalent(e1: ExtSymForm, e2: ExtSymForm) -> bool:
    """Equivalence where a form of the opposite sign may be matched by an anti-isometry.

    Equal signs: some automorphism of H carries the markings. Opposite signs:
    some anti-isometry H -> -H does. Together these are the eight maps of the
    swap/independent-negation group, each usable only with the matching signs,
    so (+H, f) and (-H, f) are in general not equivalent.
    """
    _check_compatible(e1, e2)
    maps = isometry_group_hyperbolic() if e1.sign == e2.sign else antiisometries_hyperbolic()
    return any(e2.pulled_back(p) == e1.f for p in maps)


def marking_orbit(e: ExtSymForm, allow_reversal: bool) -> set[tuple[int, int]]:
    maps = isometry_group_hyperbolic()
    if allow_reversal:
        maps = maps + antiisometries_hyperbolic()
    return {e.pulled_back(p) for p in maps}


def _key(pair: tuple[int, int], modulus: int) -> tuple:
    if modulus:
        return pair
    # Z ordered by (|x|, +) before (|x|, -)
    return tuple((abs(x), x < 0) for x in pair)


def canonical_pair(e: ExtSymForm, allow_reversal: bool = False) -> tuple[int, int]:
    """Least marking pair in the orbit under the order-4 group, or the order-8 group
    when reversal is allowed.

    Without reversal this and the sign form a complete invariant for
    ``oriented_equivalent``. With reversal, equal pairs mean E1 is
    unoriented-equivalent to E2 or to E2.reversed().
    """
    return min(marking_orbit(e, allow_reversal), key=lambda pr: _key(pr, e.modulus))


def canonical_int_pair(pair: Iterable[int], allow_reversal: bool = False) -> tuple[int, int]:
    """canonical_pair for a plain Z marking, without parity bookkeeping."""
    return canonical_pair(ExtSymForm(1, tuple(pair)), allow_reversal)


_pair_table: tuple[np.ndarray, np.ndarray] = (np.zeros(0, np.int32), np.zeros(0, np.int32))


def _pairs_below(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All (x, y) with 0 <= x <= y < n, ordered by y so every n is a prefix."""
    global _pair_table
    need = n * (n + 1) // 2
    if _pair_table[0].size < need:
        size = max(n, 1024)
        dtype = np.int32 if size * (size + 1) // 2 < 2**31 else np.int64
        counts = np.arange(1, size + 1)
        ys = np.repeat(np.arange(size, dtype=dtype), counts)
        starts = np.repeat(np.cumsum(np.arange(size + 1, dtype=dtype))[:-1], counts)
        xs = np.arange(ys.size, dtype=dtype) - starts
        _pair_table = (xs, ys)
    xs, ys = _pair_table
    return xs[:need], ys[:need]


def orbit_count_pairs_bruteforce(n: int) -> int:
    """Unordered pairs {x, y} in Z/n modulo simultaneous negation, by enumeration.

    Lists every pair x <= y, tests each for {-x, -y} == {x, y}, and counts
    orbits as (pairs - fixed)/2 + fixed.
    """
    if n < 1:
        raise InvalidArgument("N must be positive")
    x, y = _pairs_below(n)
    nx = np.where(x == 0, 0, n - x)
    ny = np.where(y == 0, 0, n - y)
    fixed = int(np.count_nonzero(((nx == x) & (ny == y)) | ((nx == y) & (ny == x))))
    return (x.size - fixed) // 2 + fixed


def orbit_count_pairs_formula(n: int) -> int:
    """floor((N^2 + 2N + 4) / 4)."""
    if n < 1:
        raise InvalidArgument("N must be positive")
    return (n * n + 2 * n + 4) // 4


def bruteforce_isometries(bound: int = 2, target_sign: int = 1) -> list[Matrix]:
    """All integer 2x2 matrices with entries in [-bound, bound] and P^T H P = target_sign * H."""
    want = _scale(target_sign, HYPERBOLIC)
    out = []
    for a, b, c, d in product(range(-bound, bound + 1), repeat=4):
        p: Matrix = ((a, b), (c, d))
        if gram_pullback(p) == want:
            out.append(p)
    return out
