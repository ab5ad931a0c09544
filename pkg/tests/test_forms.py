import pytest

from stableclass.errors import InvalidArgument
from stableclass.forms import (
    HYPERBOLIC,
    ExtSymForm,
    antiisometries_hyperbolic,
    bruteforce_isometries,
    canonical_pair,
    gram_pullback,
    isometry_group_hyperbolic,
    orbit_count_pairs_bruteforce,
    orbit_count_pairs_formula,
    oriented_equivalent,
    unoriented_equivalent,
)

NEG_H = ((0, -1), (-1, 0))


def test_isometry_group():
    iso = isometry_group_hyperbolic()
    assert len(iso) == 4
    assert all(gram_pullback(p) == HYPERBOLIC for p in iso)
    assert sorted(bruteforce_isometries(2, 1)) == sorted(iso)


def test_antiisometries():
    anti = antiisometries_hyperbolic()
    assert all(gram_pullback(p) == NEG_H for p in anti)
    # the brute-force oracle is authoritative: diag(1,-1) and diag(-1,1) differ by -Id
    assert sorted(bruteforce_isometries(2, -1)) == sorted(anti)
    assert len(anti) == 4
    assert ((1, 0), (0, -1)) in anti and ((-1, 0), (0, 1)) in anti


def Z(f, sign=1):
    return ExtSymForm(sign, f)


@pytest.mark.parametrize(
    "f1, f2, expected",
    [((2, 3), (3, 2), True), ((2, 3), (-2, -3), True), ((2, 3), (2, -3), False)],
)
def test_oriented_examples(f1, f2, expected):
    assert oriented_equivalent(Z(f1), Z(f2)) is expected


def test_oriented_needs_equal_sign():
    assert not oriented_equivalent(Z((2, 3)), Z((2, 3), -1))


@pytest.mark.parametrize(
    "e1, e2, expected",
    [
        (Z((2, 3)), Z((-2, 3), -1), True),
        (Z((2, 3)), Z((2, 3)), True),
        (Z((2, 12)), Z((4, 6)), False),
        (Z((56, 6)), Z((56, 6), -1), False),
    ],
)
def test_unoriented_examples(e1, e2, expected):
    assert unoriented_equivalent(e1, e2) is expected


def test_mismatched_target():
    with pytest.raises(InvalidArgument):
        oriented_equivalent(ExtSymForm(1, (2, 3), 24), ExtSymForm(1, (2, 3), 0))
    with pytest.raises(InvalidArgument):
        unoriented_equivalent(ExtSymForm(1, (2, 4), 24, True), ExtSymForm(1, (2, 4), 24, False))


def test_form_validation():
    with pytest.raises(InvalidArgument):
        ExtSymForm(2, (1, 1))
    with pytest.raises(InvalidArgument):
        ExtSymForm(1, (1, 2), 0, True)
    with pytest.raises(InvalidArgument):
        ExtSymForm(1, (2, 2), 7, True)
    assert ExtSymForm(1, (7, 11)).f == (7, 11)
    assert ExtSymForm(1, (26, -1), 24).f == (2, 23)


@pytest.mark.parametrize(
    "e, reversal, expected",
    [
        (Z((3, 2)), False, (2, 3)),
        (ExtSymForm(1, (22, 3), 24), False, (2, 21)),
        (Z((2, -3)), True, (2, 3)),
    ],
)
def test_canonical_pair_examples(e, reversal, expected):
    assert canonical_pair(e, reversal) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (24, 157), (12, 43)])
def test_orbit_counts(n, expected):
    assert orbit_count_pairs_bruteforce(n) == expected
    assert orbit_count_pairs_formula(n) == expected


def test_orbit_count_120():
    assert orbit_count_pairs_bruteforce(120) == orbit_count_pairs_formula(120) == 3661


def test_orbit_count_rejects_zero():
    with pytest.raises(InvalidArgument):
        orbit_count_pairs_bruteforce(0)
    with pytest.raises(InvalidArgument):
        orbit_count_pairs_formula(0)


def test_bruteforce_24_by_hand():
    # 300 unordered pairs, 14 fixed by negation
    pairs = {tuple(sorted((x, y))) for x in range(24) for y in range(24)}
    fixed = [p for p in pairs if tuple(sorted(((-p[0]) % 24, (-p[1]) % 24))) == p]
    assert len(pairs) == 300 and len(fixed) == 14
