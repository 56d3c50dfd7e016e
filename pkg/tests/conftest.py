import pytest

from app import create_app
from config.config import TestingConfig


@pytest.fixture
def app(tmp_path):
    """Application in testing mode writing its results under a temporary folder"""

    class Config(TestingConfig):
        OUTPUT_FOLDER = str(tmp_path / 'results')

    app = create_app(Config)
    yield app


@pytest.fixture
def runner(app):
    return app.test_cli_runner()
