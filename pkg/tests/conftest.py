from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from skillvet.corpus import (
    default_blacklist,
    default_system_commands,
    detector_catalog,
    uic_corpus,
)
from skillvet.costmatrix import build_matrix
from skillvet.detector import train_uic
from skillvet.embedding import make_provider
from skillvet.prondict import load_default_dictionary
from skillvet.variants import VariantConfig

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def dictionary():
    return load_default_dictionary()


@pytest.fixture(scope="session")
def matrix(dictionary):
    return build_matrix(dictionary)


@pytest.fixture(scope="session")
def variant_config():
    return VariantConfig()


@pytest.fixture(scope="session")
def provider():
    return make_provider("baseline")


@pytest.fixture(scope="session")
def catalog10():
    return detector_catalog()


@pytest.fixture(scope="session")
def blacklist():
    return default_blacklist()


@pytest.fixture(scope="session")
def syscmds():
    return default_system_commands()


@pytest.fixture(scope="session")
def uic_forest(catalog10, syscmds, provider):
    return train_uic(uic_corpus(), catalog10, syscmds, provider, seed=42)
