"""Property-based checks of the structural invariants."""

import math
import random
from fractions import Fraction
from itertools import combinations

import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from stableclass import acceptance, forms, manifolds, spinc
from stableclass.exactmath import BigRat, coprime_splittings, factorial_divides, factorize
from stableclass.forms import ExtSymForm

# --- exactmath ---------------------------------------------------------------


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_bigrat_reduced(num, den):
    r = BigRat(num, -den if num % 2 else den)
    assert r.denominator > 0
    assert math.gcd(abs(r.numerator), r.denominator) == 1


@given(st.integers(1, 10**12))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(e >= 1 and sympy.isprime(p) for p, e in f.factors)


@given(st.lists(st.sampled_from([10**9 + 7, 998244353, 2**31 - 1, 1000003, 3, 2]), min_size=1, max_size=5))
def test_factorize_products_of_primes(ps):
    n = math.prod(ps)
    assert factorize(n).as_dict() == {p: ps.count(p) for p in set(ps)}


@given(st.integers(1, 10**5))
def test_splittings_match_divisor_scan(n):
    splits = coprime_splittings(n)
    brute = {(u, n // u) for u in range(1, math.isqrt(n) + 1) if n % u == 0 and math.gcd(u, n // u) == 1}
    assert {s.as_tuple() for s in splits} == brute
    assert len(splits) == 2 ** max(factorize(n).omega - 1, 0)
    assert all(s.value == n and math.gcd(s.left, s.right) == 1 for s in splits)


@given(st.integers(1, 8), st.integers(1, 10**9))
def test_factorial_divides_direct(k, n):
    assert factorial_divides(k, n) == (n % math.factorial(2 * k) == 0)


# --- forms -------------------------------------------------------------------

moduli = st.sampled_from([0, 2, 5, 12, 24])


@st.composite
def form_pairs(draw):
    n = draw(moduli)
    v = n % 2 == 0 and draw(st.booleans())
    vals = st.integers(-30, 30).filter(lambda x: not v or x % 2 == 0)
    make = lambda: ExtSymForm(draw(st.sampled_from([1, -1])), (draw(vals), draw(vals)), n, v)  # noqa: E731
    return make(), make(), make()


@given(form_pairs())
def test_form_relations_are_equivalences(t):
    a, b, c = t
    for rel in (forms.oriented_equivalent, forms.unoriented_equivalent):
        assert rel(a, a)
        assert rel(a, b) == rel(b, a)
        if rel(a, b) and rel(b, c):
            assert rel(a, c)


@given(form_pairs())
def test_canonical_pair_complete(t):
    a, b, _ = t
    same = forms.canonical_pair(a) == forms.canonical_pair(b) and a.sign == b.sign
    assert same == forms.oriented_equivalent(a, b)
    loose = forms.canonical_pair(a, True) == forms.canonical_pair(b, True)
    assert loose == (forms.unoriented_equivalent(a, b) or forms.unoriented_equivalent(a, b.reversed()))


@given(form_pairs())
def test_canonical_pair_in_orbit(t):
    a = t[0]
    for rev in (False, True):
        c = forms.canonical_pair(a, rev)
        assert c in forms.marking_orbit(a, rev)


@given(st.integers(1, 400))
def test_orbit_formula(n):
    assert forms.orbit_count_pairs_formula(n) == forms.orbit_count_pairs_bruteforce(n)


# --- manifolds ---------------------------------------------------------------


@given(st.integers(0, 2**32))
def test_stable_class_invariants(seed):
    M = acceptance.random_valid_wall(random.Random(seed))
    rep = manifolds.enumerate_stable_class(M)
    assert rep.d == math.gcd(M.alpha, M.beta) and rep.A == M.alpha * M.beta // rep.d**2
    assert rep.count_stable_mod_spheres == len(rep.members) == 2 ** rep.parameters.q_A
    for w in rep.members:
        assert w.alpha * w.beta == rep.d**2 * rep.A and math.gcd(w.alpha, w.beta) == rep.d
    assert any(manifolds.almost_diffeomorphic(M, w) for w in rep.members)
    fam = rep.homotopy_family
    assert len(fam) == rep.homotopy_lower
    for x, y in combinations(fam, 2):
        assert manifolds.stably_almost_diffeomorphic(x, y)
        assert not manifolds.homotopy_equivalent(x, y)
    assert rep.homotopy_lower <= rep.homotopy_classes_among_members <= rep.homotopy_upper


@given(st.integers(2, 4), st.integers(1, 12))
def test_witness_family(k, n):
    fam = manifolds.n4k_witness_family(k, n)
    assert len(fam) >= n
    for x, y in combinations(fam, 2):
        assert manifolds.n4k_stably_diffeomorphic(x, y)
        assert not manifolds.n4k_homotopy_equivalent(x, y)


# --- spinc -------------------------------------------------------------------

evens = st.integers(-500, 500).map(lambda x: 2 * x)


@given(evens, evens, st.integers(-50, 50), st.integers(-50, 50))
def test_chern_action_preserves_characteristic(a, b, x, y):
    s = spinc.chern_action((x, y), spinc.SpinCClass(a, b))
    assert spinc.is_characteristic(s.c1)
    assert (spinc.c1_square(s) - spinc.SIGNATURE) % 8 == 0


@given(st.integers(2, 5000).map(lambda q: 8 * q), st.booleans())
def test_census_members(c, negative):
    c = -c if negative else c
    reps = spinc.census(c)
    assert all(spinc.c1_square(s) == c for s in reps)
    assert len(reps) == 2 ** (len(sympy.primefactors(abs(c) // 8)) - 1)
    for x, y in combinations(reps, 2):
        assert spinc.stably_equivalent(x, y) and not spinc.equivalent(x, y)
    assert set(reps) <= set(spinc.all_orbits(c))


@given(evens, evens)
def test_bordism_depends_only_on_square(a, b):
    s = spinc.SpinCClass(a, b)
    assert spinc.bordism_invariant(s).index8 * 8 == spinc.c1_square(s)
    assert spinc.bordism_invariant(spinc.SpinCClass(b, a)) == spinc.bordism_invariant(s)


def test_fraction_is_bigrat():
    assert BigRat is Fraction
