from __future__ import annotations

from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN / name).read_text()

    return read
