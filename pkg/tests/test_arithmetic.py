from itertools import combinations, permutations
from math import gcd

import pytest

from relgap.errors import InvalidParameterError, NotAdmissibleError
from relgap.services.arithmetic_service import (
    admissible_tuple, bezout_witness, c, check_bezout, check_crt_exponent, crt_exponents, q,
    require_admissible, search_admissible
)


def brute_q(n):
    return (n + 1) ** n - 1


def test_q_and_c():
    assert q(1) == 1
    assert q(2) == 8
    assert q(3) == 63
    assert q(12) == 13 ** 12 - 1
    assert c(1) == 1
    assert c(2) == 16
    assert c(3) == 189
    with pytest.raises(InvalidParameterError):
        q(0)


def test_q_properties():
    for n in range(1, 40):
        assert q(n) % (n + 1) == n
        assert c(n) == n * brute_q(n)
    assert q(30) > 2 ** 64


def test_admissible_tuple():
    report = admissible_tuple([2, 3])
    assert report.admissible
    assert report.gcd_map() == {(0, 1): 1}
    assert report.q_values == [8, 63]

    report = admissible_tuple([2, 4])
    assert not report.admissible
    assert report.pairwise_gcds[0].gcd == 8

    assert admissible_tuple([2, 3, 5]).admissible
    assert admissible_tuple([1, 2]).degenerate
    assert not admissible_tuple([2, 3]).degenerate


def test_admissible_verdict_is_permutation_invariant():
    for ms in ([2, 3, 5], [2, 4, 5], [3, 4, 7]):
        verdicts = {admissible_tuple(list(p)).admissible for p in permutations(ms)}
        assert len(verdicts) == 1


def test_require_admissible():
    with pytest.raises(NotAdmissibleError) as info:
        require_admissible([2, 4])
    assert info.value.gcds == {(2, 4): 8}
    assert 'gcd(q_2, q_4) = 8' in str(info.value)


def test_search_admissible():
    assert search_admissible(5) == [(2, 3), (2, 5), (3, 5), (4, 5)]
    assert search_admissible(3, 3) == []
    assert search_admissible(2) == []
    with pytest.raises(InvalidParameterError):
        search_admissible(5, 1)


def test_search_matches_brute_force_oracle():
    for r in (2, 3):
        expected = [
            tup for tup in combinations(range(2, 13), r)
            if all(gcd(brute_q(a), brute_q(b)) == 1 for a, b in combinations(tup, 2))
        ]
        assert search_admissible(12, r) == expected
        assert search_admissible(12, r) == [
            tup for tup in combinations(range(2, 13), r) if admissible_tuple(list(tup)).admissible
        ]


def test_bezout_witness():
    assert bezout_witness(2, 3) == (7, 8)
    assert bezout_witness(2, 5) == (7, 972)
    with pytest.raises(NotAdmissibleError):
        bezout_witness(2, 4)


def test_bezout_witnesses_verify():
    for m, n in search_admissible(12):
        u, v = bezout_witness(m, n)
        assert (u * q(n)) % q(m) == 1
        assert (v * q(m)) % q(n) == 1
        assert check_bezout(m, n, u, v)
    assert not check_bezout(2, 3, 6, 8)


def test_crt_exponents():
    for ms in ([2, 3], [2, 3, 5], [2, 5, 7]):
        if not admissible_tuple(ms).admissible:
            continue
        exponents = crt_exponents(ms)
        assert len(exponents) == len(ms)
        for i, e in enumerate(exponents):
            assert check_crt_exponent(ms, i, e)
    assert crt_exponents([2, 3]) == [441, 64]
    with pytest.raises(NotAdmissibleError):
        crt_exponents([2, 4])
