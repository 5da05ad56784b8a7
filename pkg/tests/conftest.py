import pytest

from latcover.catalog import generate_catalog
from latcover.groebner import verify_pair_lemma, verify_triple_lemma


@pytest.fixture(scope="session")
def catalog():
    """The full catalog, generated once for the whole test run."""
    return generate_catalog()


@pytest.fixture(scope="session")
def pair_verdicts():
    return verify_pair_lemma()


@pytest.fixture(scope="session")
def triple_verdicts():
    return verify_triple_lemma()
