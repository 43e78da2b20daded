import json
from pathlib import Path

import pytest

from singularity_app.core.dualgraph import DualGraph

GERMS_DIR = Path(__file__).resolve().parent.parent / "germs"


@pytest.fixture
def smooth():
    return DualGraph.smooth_point()


@pytest.fixture
def a1_3():
    return DualGraph.chain([3])


@pytest.fixture
def a2_23():
    return DualGraph.chain([2, 3])


@pytest.fixture
def d4():
    return DualGraph.d_shape([2, 2])


@pytest.fixture
def nlt_star():
    """Center of weight 5 with four (-2)-leaves: a_center = 1."""
    leaves = [f"l{i}" for i in range(1, 5)]
    return DualGraph.from_lists([("c", 5)] + [(leaf, 2) for leaf in leaves],
                                [("c", leaf) for leaf in leaves])


@pytest.fixture
def germs_dir():
    return GERMS_DIR


@pytest.fixture
def write_document(tmp_path):
    def write(data, name="germ.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write
