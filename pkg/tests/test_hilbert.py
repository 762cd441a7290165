import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatframes import (DimensionMismatch, QVector, Quaternion, format_vector,
                        inner, left_scale, norm, parse_vector)
from quatframes.quaternion import I

from conftest import random_vector

AXIOM_TOL = 1e-12

components = st.floats(min_value=-3.0, max_value=3.0)


def vectors(n):
    return st.builds(
        QVector.from_reals,
        st.lists(components, min_size=4 * n, max_size=4 * n))


quaternions = st.builds(Quaternion, components, components, components, components)


def test_standard_basis_orthogonality():
    e1, e2 = QVector.basis(2, 0), QVector.basis(2, 1)
    assert inner(e1, e2) == Quaternion()
    assert inner(e1, e1) == Quaternion(1)


def test_norm_cases():
    assert norm(QVector.basis(3, 0)) == 1.0
    v = QVector.from_quaternions([Quaternion(1, 1, 1, 1), Quaternion()])
    assert norm(v) == pytest.approx(2.0)


def test_left_scale_cases():
    f = random_vector(np.random.default_rng(0), 3)
    assert left_scale(Quaternion(1), f).isclose(f, tol=0)
    assert left_scale(I, QVector.basis(2, 0)).isclose(
        QVector.from_quaternions([I, Quaternion()]))


@given(quaternions, quaternions, vectors(3))
def test_left_action_is_associative(q, p, f):
    lhs = left_scale(q, left_scale(p, f))
    rhs = left_scale(q * p, f)
    assert lhs.isclose(rhs, tol=1e-12 * (1.0 + abs(q) * abs(p) * f.norm()))


@given(vectors(2), vectors(2))
def test_conjugate_symmetry(f, g):
    assert inner(f, g).conj().isclose(inner(g, f), tol=AXIOM_TOL)


@given(vectors(2), vectors(2), vectors(2))
def test_additivity_in_second_slot(f, g, h):
    lhs = inner(f, g + h)
    rhs = inner(f, g) + inner(f, h)
    assert lhs.isclose(rhs, tol=AXIOM_TOL * (1.0 + abs(lhs)))


@given(quaternions, vectors(2), vectors(2))
def test_left_homogeneity(q, f, g):
    lhs = inner(left_scale(q, f), g)
    rhs = q * inner(f, g)
    assert lhs.isclose(rhs, tol=AXIOM_TOL * (1.0 + abs(rhs)))


@given(quaternions, vectors(2), vectors(2))
def test_right_conjugate_homogeneity(q, f, g):
    lhs = inner(f, left_scale(q, g))
    rhs = inner(f, g) * q.conj()
    assert lhs.isclose(rhs, tol=AXIOM_TOL * (1.0 + abs(rhs)))


def test_inner_of_self_is_real_nonnegative(rng):
    for _ in range(200):
        f = random_vector(rng, int(rng.integers(1, 6)))
        ff = inner(f, f)
        assert ff.imag_norm() <= 1e-12
        assert ff.w >= 0.0
    assert inner(QVector.zero(4), QVector.zero(4)) == Quaternion()


def test_cauchy_schwarz(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 6))
        f, g = random_vector(rng, n), random_vector(rng, n)
        assert abs(inner(f, g)) <= f.norm() * g.norm() * (1.0 + 1e-12) + 1e-12


def test_parallelogram_law(rng):
    for _ in range(200):
        n = int(rng.integers(1, 6))
        f, g = random_vector(rng, n), random_vector(rng, n)
        lhs = (f + g).norm_sq() + (f - g).norm_sq()
        rhs = 2.0 * f.norm_sq() + 2.0 * g.norm_sq()
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        inner(QVector.zero(2), QVector.zero(3))
    with pytest.raises(DimensionMismatch):
        QVector.zero(2) + QVector.zero(3)


def test_text_round_trip(rng):
    v = random_vector(rng, 3)
    assert parse_vector(format_vector(v)) == v


def test_parse_vector_validates():
    from quatframes import ParseError
    with pytest.raises(ParseError):
        parse_vector("1 2 3")
    with pytest.raises(ParseError):
        parse_vector("1 0 0 0", dim=2)
