"""The acceptance matrix, one test per criterion.

Each row reproduces a structural claim exactly (no tolerances anywhere);
a PASS line is printed per criterion for suite-style reading.
"""

import pytest

from thinlie.suite import CRITERIA


@pytest.mark.parametrize("name,criterion", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_acceptance(name, criterion):
    criterion()
    print(f"ACCEPTANCE {name}: PASS")
