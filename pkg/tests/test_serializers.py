import json

import pytest

from relgap.errors import CertificateError, RelgapError, UnknownGeneratorError
from relgap.models.certificate import Certificate
from relgap.models.int_matrix import IntMatrix
from relgap.models.word import Word
from relgap.services.presentation_service import rho
from relgap.services.verify_service import check_certificate, cn_target, derive_cn_certificate
from relgap.services.word_service import parse_word
from relgap.utils.serializers import format_certificate, format_matrix, parse_certificate, parse_matrix, to_json


def test_format_certificate():
    cert = Certificate(((Word.identity(), 1), (parse_word('x^2.t'), -1)))
    assert format_certificate(cert) == '+1\t1\n-1\tx^2.t\n'
    assert format_certificate(Certificate()) == ''


def test_parsed_certificate_still_checks():
    cert = derive_cn_certificate(2)
    parsed = parse_certificate(format_certificate(cert), ['x', 't'])
    assert parsed == cert
    assert check_certificate(rho(2), parsed, cn_target(2))


def test_parse_certificate_skips_blank_lines():
    assert len(parse_certificate('\n+1\tx\n\n1\tt^-1\n')) == 2


@pytest.mark.parametrize('text', ['+2\tx\n', 'x\n', '+1\tx\textra\n', '-1 x\n'])
def test_parse_certificate_rejects_malformed_lines(text):
    with pytest.raises(CertificateError):
        parse_certificate(text)


def test_parse_certificate_checks_alphabet():
    with pytest.raises(UnknownGeneratorError):
        parse_certificate('+1\ty\n', ['x', 't'])


def test_matrix_format():
    m = IntMatrix.from_rows([[1, -2, 0], [0, 3, 13 ** 20]])
    text = format_matrix(m)
    assert text == f"1 -2 0\n0 3 {13 ** 20}\n"
    assert parse_matrix(text) == m
    assert format_matrix(IntMatrix.zeros(0, 0)) == ''
    assert parse_matrix('', cols=2).cols == 2


def test_parse_matrix_rejects_bad_input():
    with pytest.raises(RelgapError):
        parse_matrix('1 2\n3 x\n')
    with pytest.raises(RelgapError):
        parse_matrix('1 2\n3\n')


def test_to_json_keeps_big_integers_as_strings():
    document = json.loads(to_json({'q': str(13 ** 12 - 1), 'ok': True}))
    assert document == {'q': '23298085122480', 'ok': True}
