# Normal Form Service - Word problem for Q_n (Britton) and Gamma = Q_m1 * ... * Q_mr
import logging
from typing import Dict, List, Sequence, Tuple

from relgap.errors import InvalidParameterError, UnknownGeneratorError
from relgap.models.normal_form import BaseElement, HnnForm, OrderResult, ProductForm
from relgap.models.word import Word
from relgap.services.word_service import commutator, exponent_sum, multiply, power

logger = logging.getLogger(__name__)


def _require_positive(n: int, what: str = 'n'):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"{what} must be an integer >= 1, got {n!r}")


class NormalFormService:
    # Service class for canonical forms, triviality and element orders

    # ---- Q_n = (Z/n x Z/n) *_phi with phi(a, 0) = (0, a) ----

    def _add(self, n: int, g: BaseElement, h: BaseElement) -> BaseElement:
        return BaseElement((g.a + h.a) % n, (g.b + h.b) % n)

    def _prepend_base(self, form: HnnForm, g: BaseElement) -> HnnForm:
        return HnnForm(form.n, self._add(form.n, g, form.head), form.tail)

    def _prepend_stable(self, form: HnnForm, eps: int) -> HnnForm:
        n, head, tail = form.n, form.head, form.tail
        if eps == 1:
            # t (a,b) = (0,a) t (0,b)
            pushed, rest = BaseElement(0, head.a), BaseElement(0, head.b)
            pinch = -1
        else:
            # t^-1 (a,b) = (b,0) t^-1 (a,0)
            pushed, rest = BaseElement(head.b, 0), BaseElement(head.a, 0)
            pinch = 1
        if rest.is_identity() and tail and tail[0][0] == pinch:
            return HnnForm(n, self._add(n, pushed, tail[0][1]), tail[1:])
        return HnnForm(n, pushed, ((eps, rest),) + tail)

    def q_identity(self, n: int) -> HnnForm:
        _require_positive(n)
        return HnnForm(n)

    def q_canonical(self, n: int, w: Word, x: str = 'x', t: str = 't') -> HnnForm:
        # Britton normal form of a {x, t} word in Q_n. Raises: UnknownGeneratorError
        _require_positive(n)
        foreign = w.generators() - {x, t}
        if foreign:
            raise UnknownGeneratorError(f"Generators {sorted(foreign)} are not in Q_{n} = <{x},{t}>")
        form = HnnForm(n)
        for g, e in reversed(w.syllables):
            if g == x:
                form = self._prepend_base(form, BaseElement(e % n, 0))
            else:
                eps = 1 if e > 0 else -1
                for _ in range(abs(e)):
                    form = self._prepend_stable(form, eps)
        return form

    def q_multiply(self, f: HnnForm, g: HnnForm) -> HnnForm:
        # Group product of two canonical forms, prepending f's letters onto g
        result = g
        for eps, h in reversed(f.tail):
            result = self._prepend_base(result, h)
            result = self._prepend_stable(result, eps)
        return self._prepend_base(result, f.head)

    def q_is_trivial(self, n: int, w: Word) -> bool:
        return self.q_canonical(n, w).is_identity()

    def q_equal(self, n: int, u: Word, v: Word) -> bool:
        return self.q_canonical(n, u) == self.q_canonical(n, v)

    def verify_base_subgroup(self, n: int) -> bool:
        # <x, t x t^-1> in Q_n is Z/n x Z/n: n^2 distinct elements, commuting generators of order dividing n
        _require_positive(n)
        x = Word.letter('x')
        y = Word.from_syllables([('t', 1), ('x', 1), ('t', -1)])
        forms = {
            self.q_canonical(n, multiply(power(x, a), power(y, b)))
            for a in range(n) for b in range(n)
        }
        holds = (
            len(forms) == n * n
            and self.q_is_trivial(n, commutator(x, y))
            and self.q_is_trivial(n, power(x, n))
            and self.q_is_trivial(n, power(y, n))
        )
        logger.info(f"Base subgroup check for Q_{n}: {holds}")
        return holds

    # ---- Gamma = Q_m1 * ... * Q_mr on generators x1,t1,...,xr,tr ----

    def _factor_alphabet(self, ms: Sequence[int]) -> Dict[str, Tuple[int, str]]:
        alphabet = {}
        for i in range(1, len(ms) + 1):
            alphabet[f"x{i}"] = (i, 'x')
            alphabet[f"t{i}"] = (i, 't')
        return alphabet

    def _check_ms(self, ms: Sequence[int]) -> Tuple[int, ...]:
        ms = tuple(ms)
        if not ms:
            raise InvalidParameterError("Gamma needs at least one factor")
        for m in ms:
            _require_positive(m, 'm')
        return ms

    def gamma_multiply(self, f: ProductForm, g: ProductForm) -> ProductForm:
        # Product of two free-product forms, merging the blocks at the seam
        stack: List[Tuple[int, HnnForm]] = list(f.syllables)
        for i, form in g.syllables:
            if stack and stack[-1][0] == i:
                merged = self.q_multiply(stack.pop()[1], form)
                if not merged.is_identity():
                    stack.append((i, merged))
            else:
                stack.append((i, form))
        return ProductForm(f.ms, tuple(stack))

    def gamma_canonical(self, ms: Sequence[int], w: Word) -> ProductForm:
        # Free-product normal form: maximal one-factor blocks, each in Q_{m_i} normal form
        ms = self._check_ms(ms)
        alphabet = self._factor_alphabet(ms)
        foreign = w.generators() - set(alphabet)
        if foreign:
            raise UnknownGeneratorError(f"Generators {sorted(foreign)} are not generators of Gamma{list(ms)}")

        # Split into maximal single-factor segments, then merge on a stack
        segments: List[Tuple[int, list]] = []
        for g, e in w.syllables:
            i, letter = alphabet[g]
            if segments and segments[-1][0] == i:
                segments[-1][1].append((letter, e))
            else:
                segments.append((i, [(letter, e)]))

        result = ProductForm(ms)
        for i, syllables in segments:
            form = self.q_canonical(ms[i - 1], Word.from_syllables(syllables))
            if not form.is_identity():
                result = self.gamma_multiply(result, ProductForm(ms, ((i, form),)))
        return result

    def gamma_is_trivial(self, ms: Sequence[int], w: Word) -> bool:
        return self.gamma_canonical(ms, w).is_identity()

    def element_order_bounded(self, ms: Sequence[int], w: Word, bound: int) -> OrderResult:
        # Order of w in Gamma up to `bound`. 'infinite' needs a nonzero t_i exponent sum; 'unknown' past the bound
        ms = self._check_ms(ms)
        if bound < 1:
            raise InvalidParameterError(f"bound must be >= 1, got {bound}")
        for i in range(1, len(ms) + 1):
            total = exponent_sum(w, f"t{i}")
            if total != 0:
                return OrderResult('infinite', bound=bound, reason=f"exponent sum {total} in t{i}")

        form = self.gamma_canonical(ms, w)
        current = form
        for k in range(1, bound + 1):
            if current.is_identity():
                return OrderResult('finite', order=k, bound=bound, reason=f"{w}^{k} is trivial")
            current = self.gamma_multiply(current, form)
        return OrderResult('unknown', bound=bound, reason=f"no power up to {bound} is trivial")


_default_service = NormalFormService()

# Module-level shortcuts bound to the default service
q_identity = _default_service.q_identity
q_canonical = _default_service.q_canonical
q_multiply = _default_service.q_multiply
q_is_trivial = _default_service.q_is_trivial
q_equal = _default_service.q_equal
verify_base_subgroup = _default_service.verify_base_subgroup
gamma_canonical = _default_service.gamma_canonical
gamma_multiply = _default_service.gamma_multiply
gamma_is_trivial = _default_service.gamma_is_trivial
element_order_bounded = _default_service.element_order_bounded
