# Report models - pydantic documents behind every CLI --json answer
from typing import Annotated, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, PlainSerializer

# Big integers travel as decimal strings in JSON so nothing truncates them to 64 bits
BigInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used='json')]


class ReportModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    def to_dict(self):
        return self.model_dump(mode='json')


class PairGcd(ReportModel):
    i: int
    j: int
    m_i: int
    m_j: int
    gcd: BigInt


class AdmissibilityReport(ReportModel):
    ms: List[int]
    q_values: List[BigInt]
    pairwise_gcds: List[PairGcd]
    admissible: bool
    degenerate: bool = False

    def gcd_map(self) -> Dict[Tuple[int, int], int]:
        return {(p.i, p.j): p.gcd for p in self.pairwise_gcds}


class BezoutWitness(ReportModel):
    m: int
    n: int
    u: BigInt
    v: BigInt
    holds: bool


class FactorCheck(ReportModel):
    index: int
    m: int
    q: BigInt
    c: BigInt
    cn_holds: bool
    c_over_m_is_q: bool
    x_power_trivial: bool
    conjugate_power_trivial: bool


class CrtExponent(ReportModel):
    index: int
    m: int
    exponent: BigInt
    holds: bool


class RelationGensReport(ReportModel):
    ms: List[int]
    admissibility: AdmissibilityReport
    factor_checks: List[FactorCheck]
    bezout: List[BezoutWitness]
    crt_exponents: List[CrtExponent]
    generators: List[str]
    generator_words: List[str]
    generator_count: int
    relator_count: int
    holds: bool
    conclusion: Optional[str] = None
    degenerate: bool = False
    derived: bool = False


class DeficiencyReport(ReportModel):
    presentation: str
    generator_count: int
    relator_count: int
    def_pres: int
    adef_upper: Optional[int] = None
    rk_h1: int
    torsion: List[BigInt]
    augmented_rank: int
    nullity: int
    inequalities: List[str]
    derived: bool = True


class CwReport(ReportModel):
    ms: List[int]
    cells: List[int]
    total_cells: int
    chi: int
    chi_minus_1: int
    def_pres: int
    conditional_counterexample: bool
    relation_module_generators: int
    schanuel_ranks: List[int]
    assumptions: List[str]
    derived: bool
