"""Bundled acceptance checks, run by ``stableclass selftest`` and the test suite.

Each check raises AssertionError on failure and returns a short detail string.
Oracles used here are deliberately separate code paths from the library
routines they check.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import forms, jdata, manifolds, spinc
from .errors import HypothesisViolation
from .exactmath import bernoulli_paper, factorize

SEED = 20241018


@dataclass
class CheckResult:
    id: int
    title: str
    passed: bool
    detail: str
    seconds: float


# ---------------------------------------------------------------------------
# independent oracles


def _trial_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, math.isqrt(n) + 1))


def _trial_primes_of(n: int) -> set[int]:
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def akiyama_tanigawa(n: int) -> Fraction:
    """Classical B_n (B_1 = +1/2 variant; even indices agree) by the Akiyama-Tanigawa table."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def bp8_oracle(m: int) -> int:
    b2m = abs(akiyama_tanigawa(4 * m))
    return 2 ** (4 * m - 2) * (2 ** (4 * m - 1) - 1) * (2 * b2m / m).numerator


def divisor_scan_count(m: int, d: int, A: int) -> int:
    """Unordered {alpha, beta} with alpha*beta = d^2 A, gcd = d, c_m | both, by scanning."""
    c = 2 if m in (1, 2) else 1
    n = d * d * A
    count = 0
    for alpha in range(1, math.isqrt(n) + 1):
        if n % alpha:
            continue
        beta = n // alpha
        if math.gcd(alpha, beta) == d and alpha % c == 0 and beta % c == 0:
            count += 1
    return count


def random_valid_wall(rng: random.Random) -> manifolds.WallManifold:
    """Random M_{a,b} with m <= 3 satisfying the boundary divisibility."""
    m = rng.choice((1, 2, 3))
    bound = 6 if m == 3 else 60
    a, b = 1, 1
    for q in factorize(jdata.bp8_order(m)).prime_powers():
        if rng.random() < 0.5:
            a *= q
        else:
            b *= q
    g = rng.randint(1, 2 if m == 3 else 4)
    a *= g * rng.randint(1, bound)
    b *= g * rng.randint(1, bound)
    return manifolds.wall_from_ab(m, a, b)


# ---------------------------------------------------------------------------
# checks


def check_j_orders() -> str:
    jdata.clear_cache()
    timings = []
    for m, want in ((1, 24), (2, 240), (3, 504)):
        t0 = time.perf_counter()
        got = jdata.j_order(m)
        dt = time.perf_counter() - t0
        timings.append(dt)
        assert got == want, f"j_{m} = {got}, expected {want}"
        assert dt < 1e-3, f"j_order({m}) took {dt * 1e3:.3f} ms"
    return "j = 24, 240, 504; max {:.3f} ms".format(max(timings) * 1e3)


def check_prime_sets() -> str:
    for m in range(1, 31):
        rule = jdata.prime_set_j(m)
        divs = set(factorize(jdata.j_order(m)).primes)
        assert rule == divs, f"m={m}: (p-1)|2m gives {sorted(rule)}, j_m has {sorted(divs)}"
        assert {2, 3} <= rule and jdata.q_m(m) >= 1, f"m={m}: q_m < 1"
    return "m = 1..30"


def check_von_staudt() -> str:
    for m in range(1, 31):
        expected = math.prod(p for p in range(2, 2 * m + 2) if _trial_prime(p) and (2 * m) % (p - 1) == 0)
        got = bernoulli_paper(m).denominator
        assert got == expected, f"m={m}: denominator {got}, von Staudt-Clausen {expected}"
    return "m = 1..30"


def check_bp_orders() -> str:
    assert jdata.bp8_order(1) == 28, f"|bP_8| = {jdata.bp8_order(1)}, expected 28"
    assert jdata.bp8_order(2) == 8128, f"|bP_16| = {jdata.bp8_order(2)}, expected 8128"
    for m in (1, 2, 3):
        assert jdata.bp8_order(m) == bp8_oracle(m), f"m={m}: oracle {bp8_oracle(m)}"
    return "28, 8128 (oracle agrees for m <= 3)"


def check_orbit_counts() -> str:
    t0 = time.perf_counter()
    for n in range(1, 1001):
        f, b = forms.orbit_count_pairs_formula(n), forms.orbit_count_pairs_bruteforce(n)
        assert f == b, f"N={n}: formula {f}, brute force {b}"
    dt = time.perf_counter() - t0
    assert dt < 5.0, f"took {dt:.2f} s"
    return f"N = 1..1000 in {dt:.2f} s"


def check_worked_family() -> str:
    base = manifolds.WallManifold(1, 56, 6)
    rep = manifolds.enumerate_stable_class(base)
    members = [w.pair for w in rep.members]
    assert set(members) == {(2, 168), (6, 56), (8, 42), (14, 24)} and len(members) == 4, members
    assert rep.count_stable_mod_spheres == 4
    for x, y in combinations(rep.members, 2):
        assert manifolds.stably_almost_diffeomorphic(x, y), (x.pair, y.pair)
        assert not manifolds.almost_diffeomorphic(x, y), (x.pair, y.pair)
    fam = [w.pair for w in rep.homotopy_family]
    assert set(fam) == {(2, 168), (8, 42)} and len(fam) == 2, fam
    assert rep.homotopy_lower == 2
    for x, y in combinations(rep.homotopy_family, 2):
        assert not manifolds.homotopy_equivalent(x, y)
    assert rep.homotopy_upper == manifolds.homotopy_upper_bound(base) == 43
    return "4 members, family {(2,168),(8,42)}, upper bound 43"


def check_sandwich() -> str:
    rng = random.Random(SEED)
    for _ in range(50):
        M = random_valid_wall(rng)
        rep = manifolds.enumerate_stable_class(M)
        lo = len(rep.homotopy_family)
        mid = len(manifolds.homotopy_classes(rep.members))
        hi = manifolds.homotopy_upper_bound(M)
        assert lo == rep.homotopy_lower, (M, lo, rep.homotopy_lower)
        assert lo <= mid <= hi, f"{M}: {lo} <= {mid} <= {hi} fails"
    return "50 random inputs"


def check_stable_count() -> str:
    rng = random.Random(SEED + 1)
    for _ in range(50):
        M = random_valid_wall(rng)
        rep = manifolds.enumerate_stable_class(M)
        want = divisor_scan_count(M.m, rep.d, rep.A)
        assert len(rep.members) == want == rep.count_stable_mod_spheres, (M, len(rep.members), want)
    return "50 random inputs"


def check_n4k() -> str:
    fam = manifolds.n4k_enumerate_stable_class(2, 60)
    assert [n.pair for n in fam] == [(1, 60), (3, 20), (4, 15), (5, 12)], fam
    for x, y in combinations(fam, 2):
        assert manifolds.n4k_stably_diffeomorphic(x, y)
        assert not manifolds.n4k_homotopy_equivalent(x, y)
    try:
        manifolds.n4k_enumerate_stable_class(3, 12)
    except HypothesisViolation:
        pass
    else:
        raise AssertionError("k=3, product 12 was not rejected")
    return "k=2, product 60: 4 classes; k=3, product 12 rejected"


def _orbit4(v: tuple[int, int]) -> set[tuple[int, int]]:
    a, b = v
    return {(a, b), (-a, -b), (b, a), (-b, -a)}


def check_spinc() -> str:
    checked = 0
    for c in range(-10000, 10001, 8):
        if abs(c) < 16:
            continue
        members = spinc.census(c)
        n = 2 ** (len(_trial_primes_of(abs(c) // 8)) - 1)
        assert len(members) == n, f"C={c}: {len(members)} != {n}"
        for x, y in combinations(members, 2):
            assert spinc.stably_equivalent(x, y)
            assert y.c1 not in _orbit4(x.c1) and not spinc.equivalent(x, y), (c, x, y)
        checked += 1
    assert [s.c1 for s in spinc.census(48)] == [(2, 12), (4, 6)]
    by_square: dict[int, set] = {}
    for s in spinc.characteristic_vectors(100):
        by_square.setdefault(spinc.c1_square(s), set()).add(spinc.bordism_invariant(s))
    invariants = [next(iter(v)) for v in by_square.values()]
    assert all(len(v) == 1 for v in by_square.values()), "bordism invariant varies within a stable class"
    assert len(set(invariants)) == len(invariants), "bordism invariant collides across classes"
    return f"{checked} values of C; {len(by_square)} stable classes in the [-100,100] box"


def _laws(name: str, rel: Callable, sample: Callable[[random.Random], tuple], rng: random.Random) -> int:
    nontrivial = 0
    for _ in range(1000):
        a, b, c = sample(rng)
        assert rel(a, a), f"{name}: not reflexive at {a}"
        assert rel(a, b) == rel(b, a), f"{name}: not symmetric at {a}, {b}"
        if rel(a, b) and rel(b, c):
            assert rel(a, c), f"{name}: not transitive at {a}, {b}, {c}"
            nontrivial += 1
    assert nontrivial > 0, f"{name}: transitivity never exercised"
    return nontrivial


def _form_triples(rng: random.Random) -> tuple:
    modulus = rng.choice((0, 6, 12, 24))
    v = modulus != 6 and rng.random() < 0.5
    vals = [x for x in range(-4, 5) if not v or x % 2 == 0]
    return tuple(
        forms.ExtSymForm(rng.choice((1, -1)), (rng.choice(vals), rng.choice(vals)), modulus, v) for _ in range(3)
    )


def _wall_pool() -> list[manifolds.WallManifold]:
    pool = []
    for a, b in ((28, 3), (28, 1), (7, 12), (14, 6), (28, 15)):
        for w in manifolds.enumerate_stable_class(manifolds.wall_from_ab(1, a, b)).members:
            pool.extend((w, w.reversed()))
    return pool


def check_equivalence_laws() -> str:
    rng = random.Random(SEED + 2)
    walls = _wall_pool()
    n4k = [n for p in (60, 120) for n in manifolds.n4k_enumerate_stable_class(2, p)]
    n4k += [manifolds.FourKManifold(2, n.b, n.a) for n in n4k]
    chars = spinc.characteristic_vectors(6)
    pick3 = lambda pool: lambda r: (r.choice(pool), r.choice(pool), r.choice(pool))  # noqa: E731
    relations = [
        ("oriented_equivalent", forms.oriented_equivalent, _form_triples),
        ("unoriented_equivalent", forms.unoriented_equivalent, _form_triples),
        ("almost_diffeomorphic", manifolds.almost_diffeomorphic, pick3(walls)),
        ("homotopy_equivalent", manifolds.homotopy_equivalent, pick3(walls)),
        ("stably_almost_diffeomorphic", manifolds.stably_almost_diffeomorphic, pick3(walls)),
        ("n4k_homotopy_equivalent", manifolds.n4k_homotopy_equivalent, pick3(n4k)),
        ("n4k_stably_diffeomorphic", manifolds.n4k_stably_diffeomorphic, pick3(n4k)),
        ("spinc.equivalent", spinc.equivalent, pick3(chars)),
        ("spinc.stably_equivalent", spinc.stably_equivalent, pick3(chars)),
    ]
    for name, rel, sample in relations:
        _laws(name, rel, sample, rng)
    return f"{len(relations)} relations x 1000 triples"


def check_hopf() -> str:
    assert jdata.hopf_stabilization_check(1)
    assert jdata.hopf_stabilization_check(2)
    return "m = 1, 2"


CHECKS: list[tuple[int, str, Callable[[], str]]] = [
    (1, "j_m = 24, 240, 504 (< 1 ms each)", check_j_orders),
    (2, "prime set of j_m equals {p : (p-1) | 2m}, m <= 30", check_prime_sets),
    (3, "Bernoulli denominators match von Staudt-Clausen, m <= 30", check_von_staudt),
    (4, "|bP_8| = 28, |bP_16| = 8128", check_bp_orders),
    (5, "orbit-count formula equals brute force, N <= 1000", check_orbit_counts),
    (6, "worked family m=1, (56, 6)", check_worked_family),
    (7, "homotopy sandwich on 50 random inputs", check_sandwich),
    (8, "stable class size equals divisor scan on 50 random inputs", check_stable_count),
    (9, "N_{a,b}: k=2, product 60", check_n4k),
    (10, "spin^c census on S^2 x S^2", check_spinc),
    (11, "equivalence-relation laws", check_equivalence_laws),
    (12, "Hopf/stabilization maps for m = 1, 2", check_hopf),
]


def run_check(cid: int, title: str, fn: Callable[[], str]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        detail, ok = fn(), True
    except AssertionError as exc:
        detail, ok = f"{exc}", False
    except Exception as exc:  # a crash counts as a failure, reported by type
        detail, ok = f"{type(exc).__name__}: {exc}", False
    return CheckResult(cid, title, ok, detail, time.perf_counter() - t0)


def run_all() -> list[CheckResult]:
    return [run_check(*c) for c in CHECKS]


def format_table(results: list[CheckResult]) -> str:
    lines = [f"{'#':>3}  {'status':<6}  {'time':>8}  check"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.id:>3}  {status:<6}  {r.seconds:>7.3f}s  {r.title}: {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
