import pytest

from ckhopf.corpus import named_graph


@pytest.fixture
def loop1():
    return named_graph("loop1")


@pytest.fixture
def bubble():
    return named_graph("bubble")


@pytest.fixture
def twoleg():
    return named_graph("twoleg")


@pytest.fixture
def tadpole2():
    return named_graph("tadpole2")
