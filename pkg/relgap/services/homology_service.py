# Homology Service - Fox calculus, boundary maps over ZGamma, Smith normal form, H_1 and deficiency bounds
import logging
from typing import Callable, Hashable, List, Optional, Sequence, Tuple

import sympy

from relgap.errors import InvalidParameterError, SmithFormError, UnsupportedPresentationError
from relgap.models.abelian_group import AbelianGroup
from relgap.models.int_matrix import IntMatrix, SmithForm
from relgap.models.presentation import Presentation
from relgap.models.reports import DeficiencyReport
from relgap.models.ring_element import FreeRingElement, GroupRingElement
from relgap.models.word import Word
from relgap.services.normal_form_service import gamma_canonical, gamma_multiply, q_canonical, q_multiply
from relgap.services.presentation_service import deficiency_of
from relgap.services.word_service import exponent_sum

logger = logging.getLogger(__name__)


class GroupRing:
    # Integral group ring of Q_n or Gamma; elements are keyed by canonical forms, so equality is equality in ZGamma

    def __init__(self, p: Presentation, ms: Sequence[int]):
        self.presentation = p
        self.ms = tuple(ms)
        self._canonical, self._multiply = self._projector(p, self.ms)
        for r in p.relators:
            if not self._canonical(r).is_identity():
                raise UnsupportedPresentationError(f"Relator {r} is not trivial in the group determined by {list(self.ms)}")

    def _projector(self, p: Presentation, ms: Tuple[int, ...]) -> Tuple[Callable, Callable]:
        if not ms:
            raise InvalidParameterError("A group ring needs at least one factor")
        if tuple(p.generators) == ('x', 't') and len(ms) == 1:
            n = ms[0]
            return (lambda w: q_canonical(n, w)), q_multiply

        expected = []
        for i in range(1, len(ms) + 1):
            expected.extend([f"x{i}", f"t{i}"])
        if tuple(p.generators) == tuple(expected):
            return (lambda w: gamma_canonical(ms, w)), gamma_multiply
        raise UnsupportedPresentationError(
            f"No normal forms for generators {list(p.generators)}; expected <x,t> or <x1,t1,...>"
        )

    def key(self, w: Word) -> Hashable:
        return self._canonical(w)

    def project(self, element: FreeRingElement) -> GroupRingElement:
        # Push a ZF element into the group ring along the canonical-form map
        terms = {}
        for w, c in element.terms.items():
            k = self._canonical(w)
            terms[k] = terms.get(k, 0) + c
        return GroupRingElement(terms)

    def from_word(self, w: Word, coefficient: int = 1) -> GroupRingElement:
        return GroupRingElement({self._canonical(w): coefficient})

    def multiply(self, a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
        # Product in the group ring. Returns: GroupRingElement
        terms = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                k = self._multiply(ka, kb)
                terms[k] = terms.get(k, 0) + ca * cb
        return GroupRingElement(terms)

    def zero(self) -> GroupRingElement:
        return GroupRingElement({})


class HomologyService:
    # Service class for the chain-level algebra of a presentation 2-complex

    def fox_derivative(self, w: Word, g: str) -> FreeRingElement:
        # Fox derivative dw/dg. Args: w: reduced word, g: generator name. Returns: element of ZF
        terms = {}
        prefix = Word.identity()
        for h, e in w.syllables:
            if h == g:
                if e > 0:
                    # d(g^e) = 1 + g + ... + g^(e-1)
                    for k in range(e):
                        key = prefix * Word.letter(g, k)
                        terms[key] = terms.get(key, 0) + 1
                else:
                    # d(g^-e) = -(g^-1 + ... + g^-e)
                    for k in range(1, -e + 1):
                        key = prefix * Word.letter(g, -k)
                        terms[key] = terms.get(key, 0) - 1
            prefix = prefix * Word.letter(h, e)
        return FreeRingElement(terms)

    def fox_matrix(self, p: Presentation) -> List[List[FreeRingElement]]:
        # Rows are relators, columns generators
        return [[self.fox_derivative(r, g) for g in p.generators] for r in p.relators]

    def _boundaries(self, ring: GroupRing, p: Presentation):
        d2 = [[ring.project(entry) for entry in row] for row in self.fox_matrix(p)]
        d1 = [ring.project(FreeRingElement.from_word(Word.letter(g)) - FreeRingElement.one()) for g in p.generators]
        return d2, d1

    def boundary_matrices(self, p: Presentation, ms: Sequence[int]
                          ) -> Tuple[List[List[GroupRingElement]], List[GroupRingElement]]:
        return self._boundaries(GroupRing(p, ms), p)

    def chain_condition(self, p: Presentation, ms: Sequence[int]) -> bool:
        # d1 o d2 = 0 over ZGamma: row j gives sum_i (dr_j/dx_i)(x_i - 1) = r_j - 1
        ring = GroupRing(p, ms)
        d2, d1 = self._boundaries(ring, p)
        for j, row in enumerate(d2):
            total = ring.zero()
            for entry, boundary in zip(row, d1):
                total = total + ring.multiply(entry, boundary)
            if not total.is_zero():
                logger.warning(f"Chain condition fails at relator {p.relators[j]}: {total}")
                return False
        logger.info(f"Chain condition d1 o d2 = 0 holds for {p.name or p}")
        return True

    def augment(self, m):
        # Entrywise augmentation: an int for one ring element, an IntMatrix for a list of rows
        if isinstance(m, (FreeRingElement, GroupRingElement)):
            return m.augmentation()
        rows = [[entry.augmentation() for entry in row] for row in m]
        return IntMatrix.from_rows(rows, cols=len(rows[0]) if rows else 0)

    def relation_matrix(self, p: Presentation) -> IntMatrix:
        # Exponent-sum matrix, equal to the augmented Fox matrix without expanding any powers
        rows = [[exponent_sum(r, g) for g in p.generators] for r in p.relators]
        return IntMatrix.from_rows(rows, cols=p.generator_count)

    def smith_normal_form(self, a: IntMatrix) -> SmithForm:
        """
        Smith normal form by minimal-absolute-value pivoting in exact integers.

        Every result is checked before it is returned: U A V = D, both
        transforms have determinant +-1 and D is a nonnegative divisor chain.
        """
        m, n = a.rows, a.cols
        d = a.data.copy()
        u = IntMatrix.identity(m).data
        v = IntMatrix.identity(n).data

        for t in range(min(m, n)):
            while True:
                pivot = self._min_entry(d, t)
                if pivot is None:
                    break
                i, j = pivot
                if i != t:
                    d[[t, i]] = d[[i, t]]
                    u[[t, i]] = u[[i, t]]
                if j != t:
                    d[:, [t, j]] = d[:, [j, t]]
                    v[:, [t, j]] = v[:, [j, t]]

                p = d[t, t]
                for i in range(t + 1, m):
                    factor = d[i, t] // p
                    if factor:
                        d[i, :] = d[i, :] - factor * d[t, :]
                        u[i, :] = u[i, :] - factor * u[t, :]
                for j in range(t + 1, n):
                    factor = d[t, j] // p
                    if factor:
                        d[:, j] = d[:, j] - factor * d[:, t]
                        v[:, j] = v[:, j] - factor * v[:, t]

                if any(d[i, t] != 0 for i in range(t + 1, m)) or any(d[t, j] != 0 for j in range(t + 1, n)):
                    continue
                # Pivot must divide the rest of the block; otherwise fold the offending row in
                offending = next(
                    (i for i in range(t + 1, m) for j in range(t + 1, n) if d[i, j] % p != 0), None
                )
                if offending is None:
                    break
                d[t, :] = d[t, :] + d[offending, :]
                u[t, :] = u[t, :] + u[offending, :]
            if m and n and d[t, t] < 0:
                d[t, :] = -d[t, :]
                u[t, :] = -u[t, :]

        form = SmithForm(IntMatrix(u), IntMatrix(d), IntMatrix(v))
        self._check_smith_form(a, form)
        return form

    def _min_entry(self, d, t: int) -> Optional[Tuple[int, int]]:
        best = None
        for i in range(t, d.shape[0]):
            for j in range(t, d.shape[1]):
                if d[i, j] != 0 and (best is None or abs(d[i, j]) < abs(d[best])):
                    best = (i, j)
        return best

    def _determinant(self, m: IntMatrix) -> int:
        if m.rows == 0:
            return 1
        return int(sympy.Matrix(m.to_rows()).det())

    def _check_smith_form(self, a: IntMatrix, form: SmithForm):
        # Raise SmithFormError unless U.A.V = D with U, V unimodular and D a nonnegative divisor chain
        if form.U @ a @ form.V != form.D:
            raise SmithFormError("U.A.V does not reproduce D")
        for name, transform in (('U', form.U), ('V', form.V)):
            if self._determinant(transform) not in (1, -1):
                raise SmithFormError(f"{name} is not unimodular")
        if not form.D.is_diagonal():
            raise SmithFormError("D is not diagonal")
        diagonal = form.D.diagonal()
        if any(x < 0 for x in diagonal):
            raise SmithFormError(f"D has negative entries: {diagonal}")
        for x, y in zip(diagonal, diagonal[1:]):
            if (x == 0 and y != 0) or (x != 0 and y % x != 0):
                raise SmithFormError(f"D is not a divisor chain: {diagonal}")

    def h1(self, p: Presentation) -> AbelianGroup:
        # Cokernel of the augmented d2 acting on rows
        form = self.smith_normal_form(self.relation_matrix(p))
        factors = form.invariant_factors()
        return AbelianGroup(
            free_rank=p.generator_count - len(factors),
            torsion=tuple(d for d in factors if d > 1)
        )

    def deficiency_bounds(self, p: Presentation, relmod_gen_count: Optional[int] = None) -> DeficiencyReport:
        # Deficiency, H_1 rank and the inequality chain. Args: relmod_gen_count: known relation-module generators
        if relmod_gen_count is not None and relmod_gen_count < 0:
            raise InvalidParameterError(f"Relation-module generator count must be >= 0, got {relmod_gen_count}")
        d, r = p.generator_count, p.relator_count
        form = self.smith_normal_form(self.relation_matrix(p))
        rank = form.rank()
        group = self.h1(p)
        def_pres = deficiency_of(p)
        nullity = r - rank

        inequalities = [f"def(P) = {r} - {d} = {def_pres}"]
        adef_upper = None
        if relmod_gen_count is not None:
            adef_upper = relmod_gen_count - d
            inequalities.append(f"def(P) >= adef(P) and adef(P) <= {relmod_gen_count} - {d} = {adef_upper}")
        inequalities.append(f"adef(P) >= d(H_2) - rk(H_1) = d(H_2) - {group.free_rank}")
        inequalities.append(f"d(H_2) <= nullity of augmented d2 = {r} - {rank} = {nullity}")
        if adef_upper is not None:
            inequalities.append(f"d(H_2) <= adef_upper + rk(H_1) = {adef_upper + group.free_rank}")

        return DeficiencyReport(
            presentation=str(p),
            generator_count=d,
            relator_count=r,
            def_pres=def_pres,
            adef_upper=adef_upper,
            rk_h1=group.free_rank,
            torsion=list(group.torsion),
            augmented_rank=rank,
            nullity=nullity,
            inequalities=inequalities,
        )


_default_service = HomologyService()

# Module-level shortcuts bound to the default service
fox_derivative = _default_service.fox_derivative
fox_matrix = _default_service.fox_matrix
boundary_matrices = _default_service.boundary_matrices
chain_condition = _default_service.chain_condition
augment = _default_service.augment
relation_matrix = _default_service.relation_matrix
smith_normal_form = _default_service.smith_normal_form
h1 = _default_service.h1
deficiency_bounds = _default_service.deficiency_bounds
