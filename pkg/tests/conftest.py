import math

import numpy as np
import pytest

from quatframes import Frame, QVector


@pytest.fixture
def mercedes():
    """Three vectors in H^2 whose frame operator is [[3/2, 1/2], [1/2, 3/2]]
    with spectrum {1, 2}: the standard basis plus their normalized sum."""
    s = 1.0 / math.sqrt(2.0)
    return Frame([
        QVector.basis(2, 0),
        QVector.basis(2, 1),
        QVector.from_reals([s, 0, 0, 0, s, 0, 0, 0]),
    ])


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_vector(rng, n):
    return QVector.from_real_array(rng.uniform(-1.0, 1.0, size=(n, 4)))


def random_frame(rng, n, m):
    for _ in range(16):
        frame = Frame.from_real_array(rng.uniform(-1.0, 1.0, size=(m, n, 4)))
        if frame.lower_bound > 1e-4:
            return frame
    raise AssertionError("could not draw a spanning family")
