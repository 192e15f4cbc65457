import pytest

from diskcontact.divset import STAR, DividingSet


@pytest.fixture
def ex_g1():
    # the non-basic object of the (2,1) component
    return DividingSet.make(2, 1, {STAR: (0,), (1,): (1, 2)})


@pytest.fixture
def ex_g2():
    return DividingSet.make(4, 3, {STAR: (0, 4), (1,): (1, 2, 3)})


@pytest.fixture
def ex_g3():
    return DividingSet.make(4, 2, {STAR: (0,), (1,): (1, 2), (2,): (3, 4)})


@pytest.fixture
def ex_g4():
    return DividingSet.make(4, 2, {STAR: (0,), (1,): (1, 4), (1, 1): (2, 3)})


@pytest.fixture
def ex_t2():
    return DividingSet.make(5, 2, {STAR: (0,), (1,): (1, 5), (1, 1): (2,), (1, 2): (3, 4)})


def pairs_up_to(nmax):
    return [(n, e) for n in range(nmax + 1) for e in range(n + 1)]
