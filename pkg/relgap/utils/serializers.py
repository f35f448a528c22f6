# Serializers - text formats for certificates and matrices, JSON documents for the CLI
import json
import logging
from typing import Iterable, Optional

from relgap.errors import CertificateError, RelgapError
from relgap.models.certificate import Certificate
from relgap.models.int_matrix import IntMatrix
from relgap.services.word_service import parse_word

logger = logging.getLogger(__name__)


def format_certificate(cert: Certificate) -> str:
    # One factor per line: "sign<TAB>conjugator"
    return ''.join(f"{'+1' if sign > 0 else '-1'}\t{u}\n" for u, sign in cert.factors)


def parse_certificate(text: str, alphabet: Optional[Iterable[str]] = None) -> Certificate:
    factors = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split('\t')
        if len(parts) != 2 or parts[0].strip() not in ('+1', '1', '-1'):
            raise CertificateError(f"Line {number}: expected 'sign<TAB>conjugator', got {line!r}")
        sign = -1 if parts[0].strip() == '-1' else 1
        factors.append((parse_word(parts[1].strip(), alphabet), sign))
    return Certificate(tuple(factors))


def format_matrix(m: IntMatrix) -> str:
    # Rows of space-separated integers, one row per line
    text = str(m)
    return text + '\n' if text else ''


def parse_matrix(text: str, cols: Optional[int] = None) -> IntMatrix:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            rows.append([int(v) for v in line.split()])
        except ValueError:
            raise RelgapError(f"Matrix row {line!r} is not a list of integers")
    try:
        return IntMatrix.from_rows(rows, cols=cols)
    except ValueError as e:
        raise RelgapError(str(e))


def to_json(document: dict, indent: Optional[int] = 2) -> str:
    # Documents already carry big integers as strings; anything left over is stringified
    return json.dumps(document, indent=indent, default=str)
