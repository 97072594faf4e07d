from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from cliffexp.isomorphism import repr_table
from cliffexp.parsing import load_matrix_document, parse_matrix

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "repo",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

SAMPLES = {
    (3, 1): "real4.json",
    (3, 0): "complex2.json",
    (1, 3): "quat2.json",
}


def load_sample(sig):
    table = repr_table(sig)
    doc = load_matrix_document(DATA / SAMPLES[sig])
    return table, parse_matrix(doc, table.field, table.size)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(params=sorted(SAMPLES), ids=lambda s: f"cl{s[0]}{s[1]}")
def sample(request):
    return (request.param, *load_sample(request.param))
