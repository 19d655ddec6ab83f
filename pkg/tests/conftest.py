import os
import random
import tempfile

# The engine is created at import time, so point it at a scratch archive first.
_DB_DIR = tempfile.mkdtemp(prefix="toughcycles-tests-")
os.environ["DATABASE_URL"] = f"sqlite:///{os.path.join(_DB_DIR, 'archive.db')}"
os.environ.pop("RAILWAY_ENVIRONMENT", None)

import pytest  # noqa: E402

from src.graph_core import Graph  # noqa: E402


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240917)


@pytest.fixture
def client():
    from fastapi.testclient import TestClient

    from src.main import app

    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def db():
    from src.database import archive_session, prepare_archive

    prepare_archive()
    with archive_session() as session:
        yield session
