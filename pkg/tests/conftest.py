import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from deloop_kit.algebra import make_B, make_C, make_lambda, primitive_idempotents
from deloop_kit.modules import _projective_data, make_M_alpha, simples


@pytest.fixture(scope="session")
def lam():
    return make_lambda(2)


@pytest.fixture(scope="session")
def algebra_B():
    return make_B(2)


@pytest.fixture(scope="session")
def algebra_C():
    return make_C(2)


@pytest.fixture(scope="session")
def frame_B(algebra_B):
    return primitive_idempotents(algebra_B)


@pytest.fixture(scope="session")
def frame_C(algebra_C):
    return primitive_idempotents(algebra_C)


@pytest.fixture(scope="session")
def mq(lam):
    return make_M_alpha(lam, 2)


@pytest.fixture(scope="session")
def simples_C(algebra_C, frame_C):
    return simples(algebra_C, frame_C)


@pytest.fixture(scope="session")
def simples_B(algebra_B, frame_B):
    return simples(algebra_B, frame_B)


@pytest.fixture(scope="session")
def projectives_C(algebra_C, frame_C):
    return _projective_data(algebra_C, frame_C).projectives


@pytest.fixture(scope="session")
def projectives_B(algebra_B, frame_B):
    return _projective_data(algebra_B, frame_B).projectives
