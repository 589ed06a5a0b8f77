import pytest

from masseylink.embed import build_embedding
from masseylink.fixtures import load_fixture


@pytest.fixture(scope="session")
def borromean():
    return load_fixture("borromean")


@pytest.fixture(scope="session")
def hopf():
    return load_fixture("hopf_pos")


@pytest.fixture(scope="session")
def trefoil():
    return load_fixture("trefoil")


@pytest.fixture(scope="session")
def e_borromean(borromean):
    return build_embedding(borromean)


@pytest.fixture(scope="session")
def e_hopf(hopf):
    return build_embedding(hopf)


@pytest.fixture(scope="session")
def e_trefoil(trefoil):
    return build_embedding(trefoil)
