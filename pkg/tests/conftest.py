import json
import random
from functools import lru_cache
from importlib import resources

import pytest

from parmon.algebra import PartitionAlgebra
from parmon.diagram import PartitionDiagram, enumerate_diagrams
from parmon.hrunits import build_system
from parmon.monoid import monoid_basis, random_parameter


@lru_cache(maxsize=None)
def system_symbolic(k):
    return build_system(k)


@lru_cache(maxsize=None)
def basis_symbolic(k):
    return monoid_basis(k, system_symbolic(k))


@lru_cache(maxsize=None)
def system_at(k, seed):
    rng = random.Random(seed)
    alg = PartitionAlgebra(k, random_parameter(rng, k))
    return build_system(k, alg)


def fixture_text(name):
    return resources.files("parmon.fixtures").joinpath(name).read_text()


def fixture_json(name):
    return json.loads(fixture_text(name))


def pi(i):
    """The i-th order-2 diagram of the fixed display order (1-based)."""
    return enumerate_diagrams(2)[i - 1]


def D(k, *blocks):
    return PartitionDiagram.from_blocks(k, blocks)


@pytest.fixture(scope="session")
def sys2():
    return system_symbolic(2)


@pytest.fixture(scope="session")
def basis2():
    return basis_symbolic(2)


# one summary line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
