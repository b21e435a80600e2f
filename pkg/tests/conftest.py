import os
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def fixtures_dir() -> Path:
    return Path(os.environ.get("GEOSERIES_FIXTURES", str(REPO_ROOT / "fixtures")))
