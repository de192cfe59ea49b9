from __future__ import annotations

import pytest

from fiqs import enumerate_all


@pytest.fixture(scope="session")
def surfaces_by_rho():
    """All (key, matrix) pairs with Gorenstein index <= 50, keyed by rho."""
    return {
        rho: [pair for iota in range(1, 51) for pair in enumerate_all(rho, iota)]
        for rho in (1, 2, 3)
    }


def up_to(surfaces, iota_max):
    return [(k, m) for k, m in surfaces if k.iota <= iota_max]
