import contextlib
import logging
import os

import mock
import pytest
from environ import Env

from mapfcc.core import Graph, Instance, Schedule
from mapfcc.testing import lanes_instance

DATA = os.path.join(os.path.dirname(__file__), 'data')


def data_path(name):
    return os.path.join(DATA, name)


@contextlib.contextmanager
def environ(env=None):
    """
    Replace the process environment seen by the configuration classes.
    """
    env = {} if env is None else env
    with mock.patch.object(Env, 'ENVIRON', env):
        with mock.patch.object(os, 'environ', env):
            yield env


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long differential grids')
    config.addinivalue_line('markers', 'documentation: doctests in docs/')


@pytest.fixture
def lanes():
    return lanes_instance(d=1, ell=9)


@pytest.fixture
def path3():
    return Instance(Graph.path(3), ((0, 2),), d=1, ell=1)


@pytest.fixture
def star7():
    """
    Star with 7 leaves and two agents whose routes only use leaves 1 to 4.
    """
    return Instance(Graph.star(7), ((1, 2), (3, 4)), d=2, ell=6)


# Nine turns on the lanes instance: the agents line up in the second lane
# in one order, then leave it through the right column.
LANES_SCHEDULE = [
    (0, 4, 8, 12),
    (4, 8, 12, 13),
    (5, 4, 8, 12),
    (6, 5, 4, 8),
    (7, 6, 5, 4),
    (3, 7, 6, 5),
    (2, 3, 7, 6),
    (1, 2, 3, 7),
    (2, 3, 7, 11),
    (3, 7, 11, 15),
]


@pytest.fixture
def lanes_schedule():
    return Schedule.from_positions(LANES_SCHEDULE)


@pytest.fixture(autouse=True)
def reset_logging():
    """
    Remove handlers installed by configure_logging, which write to the
    captured stderr of the test that installed them.
    """
    yield
    logger = logging.getLogger('mapfcc')
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)
    logger.propagate = True
