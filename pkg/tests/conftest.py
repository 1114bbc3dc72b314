from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "boxball", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("boxball")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES
