from dataclasses import dataclass, field
from typing import Optional, Tuple

from relgap.errors import TietzeError
from relgap.models.word import Generator, Word


@dataclass(frozen=True)
class Presentation:
    # Finite presentation <generators | relators>
    generators: Tuple[Generator, ...]
    relators: Tuple[Word, ...] = ()
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(Generator(g) for g in self.generators))
        object.__setattr__(self, 'relators', tuple(self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise TietzeError(f"Duplicate generator names in {list(self.generators)}")
        allowed = set(self.generators)
        for r in self.relators:
            if r.is_identity():
                raise TietzeError("Relators must be nonempty reduced words")
            foreign = r.generators() - allowed
            if foreign:
                raise TietzeError(f"Relator {r} uses generators {sorted(foreign)} outside the presentation")

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @property
    def relator_count(self) -> int:
        return len(self.relators)

    def __str__(self) -> str:
        gens = ','.join(self.generators)
        rels = ', '.join(str(r) for r in self.relators)
        return f"<{gens} | {rels}>"

    def to_dict(self):
        return {
            'name': self.name,
            'generators': list(self.generators),
            'relators': [str(r) for r in self.relators],
            'generator_count': self.generator_count,
            'relator_count': self.relator_count
        }


@dataclass(frozen=True)
class DerivationFactor:
    conjugator: Word
    relator_index: int
    sign: int = 1


@dataclass(frozen=True)
class DerivationCertificate:
    # Witness that a word lies in the normal closure of a presentation's relators
    factors: Tuple[DerivationFactor, ...] = ()

    def to_dict(self):
        return {
            'factors': [
                {'conjugator': str(f.conjugator), 'relator_index': f.relator_index, 'sign': f.sign}
                for f in self.factors
            ]
        }


ADD_GENERATOR = 'add-generator'
REMOVE_GENERATOR = 'remove-generator'
ADD_RELATOR = 'add-relator'
REMOVE_RELATOR = 'remove-relator'
MOVE_KINDS = (ADD_GENERATOR, REMOVE_GENERATOR, ADD_RELATOR, REMOVE_RELATOR)


@dataclass(frozen=True)
class TietzeMove:
    # One Tietze transformation. Relator moves carry the relator `word` and a certificate over the
    # relators that remain after the move. add-generator carries `name` and the defining `word`;
    # with `abbreviate` it also rewrites blocks of `word` in existing relators, and `certificates`
    # (one per rewritten relator, in relator order) derive the rewrites from the unabbreviated relators
    kind: str
    word: Optional[Word] = None
    name: Optional[str] = None
    certificate: Optional[DerivationCertificate] = None
    certificates: Tuple[DerivationCertificate, ...] = ()
    abbreviate: bool = False

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise TietzeError(f"Unknown Tietze move kind: {self.kind}")

    def describe(self) -> str:
        if self.kind == ADD_GENERATOR:
            return f"add generator {self.name} := {self.word}"
        if self.kind == REMOVE_GENERATOR:
            return f"remove generator {self.name}"
        if self.kind == ADD_RELATOR:
            return f"add relator {self.word}"
        return f"remove relator {self.word}"

    def to_dict(self):
        return {
            'kind': self.kind,
            'name': self.name,
            'word': str(self.word) if self.word is not None else None,
            'abbreviate': self.abbreviate,
            'certificate': self.certificate.to_dict() if self.certificate else None,
            'certificates': [c.to_dict() for c in self.certificates],
            'description': self.describe()
        }
