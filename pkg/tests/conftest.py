import random

import pytest
from click.testing import CliRunner

from relgap import create_app
from relgap.models.word import Word


def random_word(rng, alphabet, max_syllables=8, max_exponent=3):
    # Random reduced word; syllables with a repeated generator merge on construction
    syllables = []
    for _ in range(rng.randint(0, max_syllables)):
        exponent = rng.randint(1, max_exponent) * rng.choice((1, -1))
        syllables.append((rng.choice(alphabet), exponent))
    return Word.from_syllables(syllables)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def make_word(rng):
    def factory(alphabet=('x', 't'), max_syllables=8, max_exponent=3):
        return random_word(rng, list(alphabet), max_syllables, max_exponent)
    return factory


@pytest.fixture
def app():
    return create_app('testing')


@pytest.fixture
def runner():
    return CliRunner()
