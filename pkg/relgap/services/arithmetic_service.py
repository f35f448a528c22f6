# Arithmetic Service - q_n, c_n, admissibility and Bezout witnesses
import logging
from functools import lru_cache
from itertools import combinations
from math import gcd, prod
from typing import List, Sequence, Tuple

from relgap.errors import InvalidParameterError, NotAdmissibleError
from relgap.models.reports import AdmissibilityReport, PairGcd

logger = logging.getLogger(__name__)


def _require_positive(n: int, what: str = 'n'):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"{what} must be an integer >= 1, got {n!r}")


@lru_cache(maxsize=None)
def _q(n: int) -> int:
    return (n + 1) ** n - 1


class ArithmeticService:
    # Service class for the number theory behind the coprimality hypothesis

    def q(self, n: int) -> int:
        # q_n = (n+1)^n - 1
        _require_positive(n)
        return _q(n)

    def c(self, n: int) -> int:
        # c_n = n q_n
        _require_positive(n)
        return n * _q(n)

    def admissible_tuple(self, ms: Sequence[int]) -> AdmissibilityReport:
        # Pairwise gcds of the q_m. Args: ms: tuple of factor orders. Returns: AdmissibilityReport
        ms = list(ms)
        for m in ms:
            _require_positive(m, 'm')
        q_values = [_q(m) for m in ms]
        pairs = [
            PairGcd(i=i, j=j, m_i=ms[i], m_j=ms[j], gcd=gcd(q_values[i], q_values[j]))
            for i, j in combinations(range(len(ms)), 2)
        ]
        return AdmissibilityReport(
            ms=ms,
            q_values=q_values,
            pairwise_gcds=pairs,
            admissible=all(p.gcd == 1 for p in pairs),
            degenerate=any(m == 1 for m in ms)
        )

    def require_admissible(self, ms: Sequence[int]) -> AdmissibilityReport:
        # Same report, raising NotAdmissibleError with the offending gcds
        report = self.admissible_tuple(ms)
        if not report.admissible:
            logger.warning(f"Rejected non-admissible tuple {list(ms)}")
            raise NotAdmissibleError(ms, {(p.m_i, p.m_j): p.gcd for p in report.pairwise_gcds})
        return report

    def search_admissible(self, max_n: int, r: int = 2) -> List[Tuple[int, ...]]:
        # All strictly increasing admissible r-tuples from {2..max_n}, in lexicographic order
        if r < 2:
            raise InvalidParameterError(f"Tuple size must be >= 2, got {r}")
        if max_n < 2:
            return []
        values = range(2, max_n + 1)
        coprime = {(a, b): gcd(_q(a), _q(b)) == 1 for a, b in combinations(values, 2)}
        found = [
            tup for tup in combinations(values, r)
            if all(coprime[pair] for pair in combinations(tup, 2))
        ]
        logger.info(f"Found {len(found)} admissible {r}-tuples with entries <= {max_n}")
        return found

    def bezout_witness(self, m: int, n: int) -> Tuple[int, int]:
        # u q_n = 1 mod q_m and v q_m = 1 mod q_n; a modulus of 1 gives witness 1
        self.require_admissible([m, n])
        qm, qn = _q(m), _q(n)
        u = pow(qn, -1, qm) if qm > 1 else 1
        v = pow(qm, -1, qn) if qn > 1 else 1
        return u, v

    def check_bezout(self, m: int, n: int, u: int, v: int) -> bool:
        # u q_n = 1 mod q_m and v q_m = 1 mod q_n
        qm, qn = _q(m), _q(n)
        return (u * qn) % qm == 1 % qm and (v * qm) % qn == 1 % qn

    def crt_exponents(self, ms: Sequence[int]) -> List[int]:
        # Exponents e_i = 1 mod q_{m_i} and 0 mod q_{m_j} (j != i), so g^{e_i} = a_i for g = a_1...a_r
        self.require_admissible(ms)
        qs = [_q(m) for m in ms]
        total = prod(qs)
        exponents = []
        for q_i in qs:
            rest = total // q_i
            exponents.append((rest * pow(rest, -1, q_i)) % total if q_i > 1 else 0)
        return exponents

    def check_crt_exponent(self, ms: Sequence[int], index: int, e: int) -> bool:
        return all(
            e % _q(m) == (1 % _q(m) if j == index else 0)
            for j, m in enumerate(ms)
        )


_default_service = ArithmeticService()

# Module-level shortcuts bound to the default service
q = _default_service.q
c = _default_service.c
admissible_tuple = _default_service.admissible_tuple
require_admissible = _default_service.require_admissible
search_admissible = _default_service.search_admissible
bezout_witness = _default_service.bezout_witness
check_bezout = _default_service.check_bezout
crt_exponents = _default_service.crt_exponents
check_crt_exponent = _default_service.check_crt_exponent
