from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from asymcodes import AlphabetSpec, CodeBook


@pytest.fixture
def ternary_12_source() -> CodeBook:
    """The 5-word ternary code whose expansion is the (6,12) 1-code."""
    rows = [(0, 0, 0), (1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]
    return CodeBook.from_symbols(AlphabetSpec.uniform(3, 3), rows)


def book_from_strings(strings, q=2):
    rows = [tuple(int(ch) for ch in s) for s in strings]
    n = len(rows[0])
    return CodeBook.from_symbols(AlphabetSpec.uniform(q, n), rows)
