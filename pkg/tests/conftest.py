import pytest

from minor_ramsey import graph as gr

PETERSEN_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                  (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                  (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]


@pytest.fixture
def petersen() -> gr.Graph:
    return gr.from_edge_list(10, PETERSEN_EDGES)
