"""
Shared pytest fixtures.
"""
import pytest

from src.utils.config import Config


@pytest.fixture(autouse=True)
def fresh_config():
    """Every test starts from config.yaml, untouched by earlier overrides."""
    Config.reset()
    yield Config()
    Config.reset()
