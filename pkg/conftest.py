"""
Shared fixtures for the refrig test suite.
"""
from pathlib import Path

import pytest

from apps.corpus.services.catalog import NAMED_GRAPHS
from config.runconfig import RunConfig

CORPUS_DIR = Path(__file__).resolve().parent / 'corpus'


@pytest.fixture
def config():
    return RunConfig(seed=7)


@pytest.fixture
def corpus_dir():
    return CORPUS_DIR


@pytest.fixture
def loop_graph():
    return NAMED_GRAPHS['loop']


@pytest.fixture
def g2():
    return NAMED_GRAPHS['g2']


@pytest.fixture
def ross_pair():
    return NAMED_GRAPHS['ross-pair']


@pytest.fixture
def g_rc():
    return NAMED_GRAPHS['g-rc']


@pytest.fixture
def g_rc_pendant():
    return NAMED_GRAPHS['g-rc-pendant']


@pytest.fixture
def loop_pair():
    return NAMED_GRAPHS['loop-pair']


@pytest.fixture
def k4():
    return NAMED_GRAPHS['k4']


@pytest.fixture
def k4_negative():
    return NAMED_GRAPHS['k4-negative']
