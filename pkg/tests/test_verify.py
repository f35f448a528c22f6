import time

import pytest

from relgap.errors import InvalidParameterError, SizeCapExceededError, UnknownGeneratorError
from relgap.models.affine_map import AffineMap
from relgap.models.certificate import Certificate
from relgap.models.word import Word
from relgap.services.arithmetic_service import q
from relgap.services.presentation_service import rho
from relgap.services.verify_service import (
    bs_affine, check_certificate, cn_target, derive_cn_certificate, estimate_cn_certificate_size,
    relation_gens_report, verify_cn, verify_conjugation_power
)
from relgap.services.word_service import conjugate, multiply, parse_word, power

from conftest import random_word


def test_bs_affine_examples():
    assert bs_affine(3, parse_word('x')) == AffineMap.translation(3, 1)
    assert bs_affine(3, parse_word('y.x.y^-1')) == AffineMap(3, 0, 3, 0)
    assert bs_affine(3, parse_word('y.x.y^-1.x^-3')).is_identity()
    assert bs_affine(2, parse_word('y^-1.x')) == AffineMap(2, -1, 1, 1)
    with pytest.raises(UnknownGeneratorError):
        bs_affine(3, parse_word('t'))
    with pytest.raises(InvalidParameterError):
        bs_affine(1, parse_word('x'))


def test_affine_map_is_canonical():
    assert AffineMap(2, 0, 4, 2) == AffineMap(2, 0, 1, 0)
    assert AffineMap(3, 1, 0, 5).e == 0
    with pytest.raises(ValueError):
        AffineMap(1)


def test_bs_affine_is_a_homomorphism(rng):
    for _ in range(500):
        k = rng.randint(2, 6)
        u = random_word(rng, ['x', 'y'])
        v = random_word(rng, ['x', 'y'])
        composed = bs_affine(k, u) @ bs_affine(k, v)
        assert bs_affine(k, multiply(u, v)) == composed
        assert composed.is_canonical()


def test_bs_affine_kills_relator_conjugates(rng):
    for _ in range(300):
        k = rng.randint(2, 6)
        relator = parse_word(f'y.x.y^-1.x^-{k}')
        factors = [
            conjugate(random_word(rng, ['x', 'y']), relator if rng.random() < 0.5 else relator.inverse())
            for _ in range(rng.randint(1, 6))
        ]
        assert bs_affine(k, multiply(*factors)).is_identity()


def test_verify_conjugation_power():
    assert verify_conjugation_power(2, 2)
    assert verify_conjugation_power(5, 0)
    assert verify_conjugation_power(3, 5)
    for n in range(1, 11):
        for j in range(0, 11):
            assert verify_conjugation_power(n, j)
    with pytest.raises(InvalidParameterError):
        verify_conjugation_power(0, 1)


def test_verify_cn():
    assert verify_cn(1)
    assert verify_cn(2)
    with pytest.raises(InvalidParameterError):
        verify_cn(0)


def test_verify_cn_scales():
    start = time.perf_counter()
    assert all(verify_cn(n) for n in range(1, 51))
    assert time.perf_counter() - start < 5


def test_wrong_exponent_is_rejected():
    # The affine check is not vacuous: x^{c_n + 1} in place of x^{c_n} fails
    y, x = Word.letter('y'), Word.letter('x')
    for n in (1, 2, 3, 7):
        k = n + 1
        bracket = multiply(power(y, n), power(x, n), power(y, -n), power(x, -n))
        assert not bs_affine(k, multiply(bracket, power(x, -(n * q(n) + 1)))).is_identity()


def test_certificates_agree_with_affine_check():
    for n in range(1, 6):
        cert = derive_cn_certificate(n)
        assert len(cert) == q(n)
        assert check_certificate(rho(n), cert, cn_target(n))
        assert verify_cn(n)


def test_smallest_certificate_is_the_relator_itself():
    cert = derive_cn_certificate(1)
    assert len(cert) == 1
    assert cert.factors[0] == (Word.identity(), 1)


def test_check_certificate_edge_cases():
    assert check_certificate(rho(2), Certificate(), Word.identity())

    cert = derive_cn_certificate(2)
    u, sign = cert.factors[-1]
    assert u.syllables[0] == ('x', 15)
    damaged = multiply(Word.letter('x', -1), u)
    broken = Certificate(cert.factors[:-1] + ((damaged, sign),))
    assert not check_certificate(rho(2), broken, cn_target(2))


def test_certificate_size_cap():
    with pytest.raises(SizeCapExceededError):
        derive_cn_certificate(9, limit=10 ** 6)
    with pytest.raises(SizeCapExceededError):
        derive_cn_certificate(3, limit=10)
    assert estimate_cn_certificate_size(9) > 10 ** 9


def test_relation_gens_report_for_two_factors():
    report = relation_gens_report([2, 3])
    assert report.admissibility.admissible
    assert report.generators == ['r1', 'r2', 'x1^2.x2^3']
    assert report.generator_words[0] == 't1.x1.t1^-1.x1.t1.x1^-1.t1^-1.x1^-3'
    assert report.generator_count == 3
    assert report.relator_count == 4
    assert all(f.cn_holds and f.c_over_m_is_q and f.x_power_trivial and f.conjugate_power_trivial
               for f in report.factor_checks)
    assert [(b.u, b.v, b.holds) for b in report.bezout] == [(7, 8, True)]
    assert all(e.holds for e in report.crt_exponents)
    assert report.holds
    assert report.conclusion is not None
    assert not report.derived


def test_relation_gens_report_for_bad_tuple():
    report = relation_gens_report([2, 4])
    assert not report.admissibility.admissible
    assert not report.holds
    assert report.conclusion is None
    assert report.bezout == []
    assert report.generator_count == 4


def test_relation_gens_report_for_three_factors():
    report = relation_gens_report([2, 3, 5])
    assert report.holds
    assert report.generator_count == 4
    assert len(report.bezout) == 3
    assert report.derived
    assert relation_gens_report([1, 2]).degenerate


def test_report_serializes_big_integers_as_strings():
    data = relation_gens_report([2, 3]).to_dict()
    assert data['factor_checks'][1]['c'] == '189'
    assert data['admissibility']['q_values'] == ['8', '63']
