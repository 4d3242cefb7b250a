import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def grid_triples():
    from drinfeld_lab.catalog import catalog_on_grid
    return catalog_on_grid()


@pytest.fixture(scope="session")
def theorem_report():
    from drinfeld_lab.isomorph import verify_theorem
    return verify_theorem()

