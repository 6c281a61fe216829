from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from zzgraph import read_filtration

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

FIG3_BARCODE = [(2, 2), (4, 4), (6, 8), (8, 9), (7, 10), (1, 10)]
FIG5_BARCODE = [(4, 6), (2, 8), (6, 9), (8, 9)]


@pytest.fixture(scope="session")
def fig3():
    return read_filtration(DATA / "fig3.zz")


@pytest.fixture(scope="session")
def fig5():
    return read_filtration(DATA / "fig5.zz")
