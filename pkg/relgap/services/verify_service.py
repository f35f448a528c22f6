# Verify Service - Affine and certificate verifiers for the identities behind the relation-module bound
import logging
from itertools import combinations
from typing import List, Optional, Sequence

from relgap.errors import InvalidParameterError, SizeCapExceededError, UnknownGeneratorError
from relgap.models.affine_map import AffineMap
from relgap.models.certificate import Certificate
from relgap.models.presentation import DerivationCertificate, DerivationFactor
from relgap.models.reports import BezoutWitness, CrtExponent, FactorCheck, RelationGensReport
from relgap.models.word import Word
from relgap.services.arithmetic_service import (
    admissible_tuple, bezout_witness, c, check_bezout, check_crt_exponent, crt_exponents, q
)
from relgap.services.normal_form_service import q_is_trivial
from relgap.services.presentation_service import (
    check_derivation, conjugated_x, gamma_presentation
)
from relgap.services.word_service import commutator, multiply, power, substitute

logger = logging.getLogger(__name__)

# Alphabet of BS(1, k): y plays the role of t x t^-1
BS_ALPHABET = ('x', 'y')


def _require_positive(n: int, what: str = 'n'):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"{what} must be an integer >= 1, got {n!r}")


class VerifyService:
    # Service class for the affine and certificate checks of [(txt^-1)^n, x^n] = x^{c_n}.
    # The affine representation of BS(1, n+1) is faithful and y -> t x t^-1 maps BS(1, n+1) into <x,t | rho_n>

    def __init__(self, certificate_limit: int = 10_000_000):
        # Initialize VerifyService. Args: certificate_limit: largest certificate size in letters
        self.certificate_limit = certificate_limit

    def bs_affine(self, k: int, w: Word) -> AffineMap:
        # Evaluate a {x, y} word in the affine representation of BS(1, k). Returns: AffineMap in canonical form
        if k < 2:
            raise InvalidParameterError(f"Multiplier must be >= 2, got {k}")
        foreign = w.generators() - set(BS_ALPHABET)
        if foreign:
            raise UnknownGeneratorError(f"Generators {sorted(foreign)} are not in {{x, y}}")
        result = AffineMap(k)
        for g, e in w.syllables:
            step = AffineMap.translation(k, e) if g == 'x' else AffineMap.scaling(k, e)
            result = result @ step
        return result

    def conjugation_power_word(self, n: int, j: int) -> Word:
        # y^j x y^-j x^-((n+1)^j)
        x, y = Word.letter('x'), Word.letter('y')
        return multiply(power(y, j), x, power(y, -j), power(x, -((n + 1) ** j)))

    def cn_word(self, n: int) -> Word:
        # [y^n, x^n] x^-c_n over {x, y}
        x, y = Word.letter('x'), Word.letter('y')
        return multiply(commutator(power(y, n), power(x, n)), power(x, -c(n)))

    def verify_conjugation_power(self, n: int, j: int) -> bool:
        _require_positive(n)
        if j < 0:
            raise InvalidParameterError(f"j must be >= 0, got {j}")
        return self.bs_affine(n + 1, self.conjugation_power_word(n, j)).is_identity()

    def verify_cn(self, n: int) -> bool:
        # Affine check of [y^n, x^n] = x^{c_n} in BS(1, n+1)
        _require_positive(n)
        holds = self.bs_affine(n + 1, self.cn_word(n)).is_identity()
        logger.info(f"Affine check of the c_n identity for n={n}: {holds}")
        return holds

    def expand_y(self, w: Word) -> Word:
        # Rewrite a {x, y} word over {x, t} with y = t x t^-1
        return substitute(w, {'y': conjugated_x()})

    def cn_target(self, n: int) -> Word:
        # [(txt^-1)^n, x^n] x^-c_n over {x, t}
        _require_positive(n)
        return self.expand_y(self.cn_word(n))

    def check_certificate(self, relator: Word, cert: Certificate, target: Word) -> bool:
        # Free-reduction check of a single-relator certificate against target
        derivation = DerivationCertificate(tuple(DerivationFactor(u, 0, sign) for u, sign in cert.factors))
        return check_derivation([relator], derivation, target)

    def estimate_cn_certificate_size(self, n: int) -> int:
        # Target letters plus one relator copy per factor; there are q_n factors
        return self.cn_target(n).letter_length() + q(n) * (n + 8)

    def derive_cn_certificate(self, n: int, limit: Optional[int] = None) -> Certificate:
        """
        Product of conjugates of rho_n equal to [(txt^-1)^n, x^n] x^-c_n.

        Inductively y^j x y^-j = P_j x^{k^j} with k = n+1, where
        P_{j+1} = y P_j y^-1 followed by the conjugates x^{ik} rho x^{-ik},
        0 <= i < k^j, coming from y x^m y^-1 = (rho x^k)^m. Raising
        P_n x^{k^n} to the n-th power conjugates P_n by x^{lK}, 0 <= l < n.
        """
        _require_positive(n)
        limit = self.certificate_limit if limit is None else limit
        estimate = self.estimate_cn_certificate_size(n)
        if estimate > limit:
            logger.warning(f"Certificate for n={n} needs about {estimate} letters, limit is {limit}")
            raise SizeCapExceededError(estimate, limit)

        k = n + 1
        y = Word.letter('y')
        conjugators: List[Word] = []
        for j in range(n):
            lifted = [multiply(y, u) for u in conjugators]
            conjugators = lifted + [Word.letter('x', i * k) for i in range(k ** j)]

        big = k ** n
        factors = []
        for l in range(n):
            shift = Word.letter('x', l * big)
            for u in conjugators:
                factors.append((self.expand_y(multiply(shift, u)), 1))

        logger.info(f"Derived certificate with {len(factors)} factors for n={n}")
        return Certificate(tuple(factors))

    def relation_gens_report(self, ms: Sequence[int]) -> RelationGensReport:
        # Everything the generator count for ms rests on: admissibility, c_m identities, Bezout and CRT
        ms = list(ms)
        admissibility = admissible_tuple(ms)
        presentation = gamma_presentation(ms)
        y = conjugated_x()

        factor_checks = []
        for i, m in enumerate(ms, start=1):
            factor_checks.append(FactorCheck(
                index=i,
                m=m,
                q=q(m),
                c=c(m),
                cn_holds=self.verify_cn(m),
                c_over_m_is_q=c(m) % m == 0 and c(m) // m == q(m),
                x_power_trivial=q_is_trivial(m, Word.letter('x', m)),
                conjugate_power_trivial=q_is_trivial(m, power(y, m)),
            ))
        checks_hold = all(
            f.cn_holds and f.c_over_m_is_q and f.x_power_trivial and f.conjugate_power_trivial
            for f in factor_checks
        )

        r = len(ms)
        bezout, crt = [], []
        if admissibility.admissible:
            for i, j in combinations(range(r), 2):
                u, v = bezout_witness(ms[i], ms[j])
                bezout.append(BezoutWitness(m=ms[i], n=ms[j], u=u, v=v,
                                            holds=check_bezout(ms[i], ms[j], u, v)))
            for i, e in enumerate(crt_exponents(ms)):
                crt.append(CrtExponent(index=i + 1, m=ms[i], exponent=e,
                                       holds=check_crt_exponent(ms, i, e)))
            product = multiply(*[Word.letter(f"x{i}", m) for i, m in enumerate(ms, start=1)])
            generators = [f"r{i}" for i in range(1, r + 1)] + [str(product)]
            generator_words = [str(presentation.relators[2 * i]) for i in range(r)] + [str(product)]
        else:
            # No reduction is claimed: the relators themselves are the generating set
            generators = [str(rel) for rel in presentation.relators]
            generator_words = list(generators)

        holds = (
            admissibility.admissible and checks_hold
            and all(b.holds for b in bezout) and all(e.holds for e in crt)
        )
        conclusion = None
        if holds:
            conclusion = (
                f"The relation module of {presentation.name} ({2 * r} generators, {2 * r} relators) "
                f"is generated by the {r + 1} elements {', '.join(generators)}"
            )
        logger.info(f"Relation-module report for {ms}: holds={holds}")
        return RelationGensReport(
            ms=ms,
            admissibility=admissibility,
            factor_checks=factor_checks,
            bezout=bezout,
            crt_exponents=crt,
            generators=generators,
            generator_words=generator_words,
            generator_count=len(generators),
            relator_count=presentation.relator_count,
            holds=holds,
            conclusion=conclusion,
            degenerate=admissibility.degenerate,
            derived=ms != [2, 3],
        )


_default_service = VerifyService()

# Module-level shortcuts bound to the default service
bs_affine = _default_service.bs_affine
verify_conjugation_power = _default_service.verify_conjugation_power
verify_cn = _default_service.verify_cn
cn_target = _default_service.cn_target
expand_y = _default_service.expand_y
check_certificate = _default_service.check_certificate
estimate_cn_certificate_size = _default_service.estimate_cn_certificate_size
derive_cn_certificate = _default_service.derive_cn_certificate
relation_gens_report = _default_service.relation_gens_report
