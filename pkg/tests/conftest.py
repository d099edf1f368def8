"""Shared pytest fixtures for the planelin test suite."""

import random

import pytest

from planelin.config import Settings
from planelin.exactalg import QQ, FieldSpec

SEED = 20240521


@pytest.fixture()
def q() -> FieldSpec:
    """The rationals."""
    return QQ


@pytest.fixture()
def f3() -> FieldSpec:
    return FieldSpec.prime(3)


@pytest.fixture()
def f5() -> FieldSpec:
    return FieldSpec.prime(5)


@pytest.fixture()
def f7() -> FieldSpec:
    return FieldSpec.prime(7)


@pytest.fixture()
def rng() -> random.Random:
    """A generator seeded identically for every test."""
    return random.Random(SEED)


@pytest.fixture()
def test_settings() -> Settings:
    """Settings with small search bounds, independent of the environment."""
    return Settings(
        _env_file=None,  # type: ignore[call-arg]
        image_cap=500,
        section_depth=2,
        hypothesis_word_bound=3,
        distinctness_length=3,
    )
