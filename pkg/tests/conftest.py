from pathlib import Path

import pytest

from blindcode import BitMatrix, BitVector, CandidateSet, LinearCode

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def code_a() -> LinearCode:
    return LinearCode.from_strings(["01001", "11100", "11111"])


@pytest.fixture(scope="session")
def code_b() -> LinearCode:
    return LinearCode.from_strings(["01010", "10010", "01100"])


@pytest.fixture(scope="session")
def word() -> BitVector:
    return BitVector.from_string("11100")


@pytest.fixture(scope="session")
def pair(code_a, code_b) -> CandidateSet:
    return CandidateSet((code_a, code_b))


@pytest.fixture(scope="session")
def word_matrix(word) -> BitMatrix:
    return BitMatrix((word,))


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURES
