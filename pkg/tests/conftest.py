import pytest
from hypothesis import HealthCheck, settings

from pakit import accounting

settings.register_profile(
    "pakit",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("pakit")


@pytest.fixture(autouse=True)
def leak_check():
    """Every test must destroy what it creates: registry totals may not move."""
    before = accounting.totals()
    yield
    assert accounting.totals() == before, "leaked allocations (destroy() missing?)"
