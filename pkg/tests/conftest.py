import pytest

from cubetag import KeyMode, generate_key


@pytest.fixture(scope="session")
def key31():
    return generate_key(KeyMode.CUBIC3_PRIME, p=31)


@pytest.fixture(scope="session")
def key77():
    return generate_key(KeyMode.CUBIC3_COMPOSITE, p=7, q=11)


@pytest.fixture(scope="session")
def key91():
    return generate_key(KeyMode.CUBIC9_COMPOSITE, p=7, q=13)


@pytest.fixture(scope="session")
def key77_square():
    return generate_key(KeyMode.SQUARE_COMPOSITE, p=7, q=11)
