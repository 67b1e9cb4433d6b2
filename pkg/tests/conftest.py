import random
import sys

import pytest
from hypothesis import strategies as st

from plateaurc.words import Word

EXAMPLE_WORD = "871264435161"


def random_word(rng: random.Random, n: int, sigma: int) -> Word:
    return Word([rng.randint(1, sigma) for _ in range(n)], sigma)


def small_words(max_len: int = 9, max_sigma: int = 4, min_len: int = 0):
    return st.integers(1, max_sigma).flatmap(
        lambda s: st.lists(st.integers(1, s), min_size=min_len, max_size=max_len).map(lambda a: Word(a, s))
    )


@pytest.fixture
def example_word() -> Word:
    return Word.from_string(EXAMPLE_WORD)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
