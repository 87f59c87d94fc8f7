import io

import pytest

from src.database.db import get_fixture_table, get_layout
from src.repository.elements import load_table
from src.schemas.cluster import DistanceMatrix
from src.services.chemotopology import agglomerative_cluster

# caterpillar tree: a and b first, then c, then d
FOUR_POINT_DISTANCES = DistanceMatrix(
    labels=("a", "b", "c", "d"),
    values=((0.0, 1.0, 2.0, 3.0),
            (1.0, 0.0, 2.0, 3.0),
            (2.0, 2.0, 0.0, 3.0),
            (3.0, 3.0, 3.0, 0.0)),
)

SMALL_TABLE = """Z,symbol,group,period,mass,radius
unit,,,,u,pm
1,H,1,1,1.008,31.0
3,Li,1,2,6.94,128.0
11,Na,1,3,22.99,166.0
9,F,17,2,18.998,57.0
17,Cl,17,3,35.45,
"""


@pytest.fixture(scope="module")
def layout():
    return get_layout()


@pytest.fixture(scope="module")
def fixture_table():
    return get_fixture_table()


@pytest.fixture()
def small_table():
    return load_table(io.StringIO(SMALL_TABLE))


@pytest.fixture()
def four_point_tree():
    return agglomerative_cluster(FOUR_POINT_DISTANCES, "average")

