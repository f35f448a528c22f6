# Complex Service - Cell bookkeeping for K -> L -> M and the directed Euler characteristic
import logging
from typing import Sequence

from relgap.errors import InvalidParameterError
from relgap.models.cw_summary import CwSummary
from relgap.models.presentation import Presentation
from relgap.models.reports import CwReport
from relgap.services.arithmetic_service import require_admissible
from relgap.services.presentation_service import deficiency_of, gamma_presentation

logger = logging.getLogger(__name__)

ASSUMPTIONS = [
    "H^3(Gamma; ZGamma) = 0 because Gamma is virtually free (cited, not computed)",
    "M is a D(2) counterexample only if the presentation of Gamma has a relation gap (open)",
    "Attaching maps of the 3-cells are not computed; only cell counts are tracked",
]


class ComplexService:
    # Service class for cell counts and Euler characteristics

    def complex_k(self, p: Presentation) -> CwSummary:
        # Presentation 2-complex: one vertex, an edge per generator, a disc per relator
        return CwSummary((1, p.generator_count, p.relator_count), label=f"K({p.name or p})")

    def complex_m(self, ms: Sequence[int]) -> CwSummary:
        """
        The 3-complex M built from K for an admissible tuple.

        L wedges r+1 two-spheres onto K, one per relation-module generator,
        each sphere adding a 2-cell at the basepoint. M attaches one 3-cell
        per relator of K, giving [1, 2r, 2r + (r+1), 2r] cells.
        """
        ms = list(ms)
        if len(ms) < 2:
            raise InvalidParameterError(f"M needs at least two factors, got {ms}")
        require_admissible(ms)
        k = self.complex_k(gamma_presentation(ms))
        r = len(ms)
        vertices, edges, discs = k.cells
        cells = (vertices, edges, discs + (r + 1), discs)
        logger.info(f"Built cell counts {list(cells)} for M over {ms}")
        return CwSummary(cells, label=f"M({','.join(str(m) for m in ms)})")

    def euler_char(self, c: CwSummary) -> int:
        # Alternating sum of cell counts
        return sum((-1) ** i * n for i, n in enumerate(c.cells))

    def directed_chi2(self, r0: int, r1: int, r2: int) -> int:
        # rk C_0 - rk C_1 + rk C_2
        if min(r0, r1, r2) < 0:
            raise InvalidParameterError(f"Ranks must be nonnegative, got {(r0, r1, r2)}")
        return r0 - r1 + r2

    def complex_report(self, ms: Sequence[int]) -> CwReport:
        # Cell counts, Euler characteristic and the conditional verdict for M over ms
        ms = list(ms)
        m = self.complex_m(ms)
        r = len(ms)
        chi = self.euler_char(m)
        def_pres = deficiency_of(gamma_presentation(ms))
        return CwReport(
            ms=ms,
            cells=list(m.cells),
            total_cells=m.total,
            chi=chi,
            chi_minus_1=chi - 1,
            def_pres=def_pres,
            conditional_counterexample=chi - 1 < def_pres,
            relation_module_generators=r + 1,
            schanuel_ranks=[r + 1, 2 * r],
            assumptions=list(ASSUMPTIONS),
            derived=ms != [2, 3],
        )

    def d2_report(self, ms: Sequence[int]) -> CwReport:
        # Two-factor construction only
        ms = list(ms)
        if len(ms) != 2:
            raise InvalidParameterError(f"The D(2) report takes exactly two factors, got {ms}")
        return self.complex_report(ms)


_default_service = ComplexService()

# Module-level shortcuts bound to the default service
complex_k = _default_service.complex_k
complex_m = _default_service.complex_m
euler_char = _default_service.euler_char
directed_chi2 = _default_service.directed_chi2
complex_report = _default_service.complex_report
d2_report = _default_service.d2_report
