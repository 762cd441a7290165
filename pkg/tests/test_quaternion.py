import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatframes import Quaternion, format_quaternion, parse_quaternion
from quatframes.quaternion import I, J, K, ONE

components = st.floats(min_value=-5.0, max_value=5.0)
quaternions = st.builds(Quaternion, components, components, components, components)


def test_multiplication_table():
    assert I * J == K
    assert J * I == -K
    assert J * K == I
    assert K * J == -I
    assert K * I == J
    assert I * K == -J
    assert I * I == Quaternion(-1)
    assert J * J == Quaternion(-1)
    assert K * K == Quaternion(-1)


def test_identity_element():
    q = Quaternion(0.3, -1.2, 4.0, 0.7)
    assert ONE * q == q
    assert q * ONE == q


def test_expand_product_by_hand():
    # (1 + i)(1 + j) = 1 + j + i + ij = 1 + i + j + k
    assert (Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0)).isclose(
        Quaternion(1, 1, 1, 1))


def test_conjugate_cases():
    assert Quaternion(1, 1, 1, 1).conj() == Quaternion(1, -1, -1, -1)
    assert Quaternion(5).conj() == Quaternion(5)


def test_norm_cases():
    assert abs(Quaternion(1, 1, 1, 1)) == pytest.approx(2.0)
    assert abs(Quaternion()) == 0.0


def test_inverse_cases():
    assert Quaternion(2).inverse().isclose(Quaternion(0.5))
    assert I.inverse().isclose(-I)
    with pytest.raises(ZeroDivisionError):
        Quaternion().inverse()


def test_real_quaternions_commute(rng):
    for _ in range(50):
        r = Quaternion(rng.uniform(-3, 3))
        q = Quaternion(*rng.uniform(-3, 3, size=4))
        assert (r * q).isclose(q * r, tol=1e-12)


@given(quaternions, quaternions, quaternions)
def test_associativity(a, b, c):
    lhs = (a * b) * c
    rhs = a * (b * c)
    assert lhs.isclose(rhs, tol=1e-12 * (1.0 + abs(a) * abs(b) * abs(c)))


@given(quaternions, quaternions, quaternions)
def test_left_distributivity(a, b, c):
    lhs = a * (b + c)
    rhs = a * b + a * c
    assert lhs.isclose(rhs, tol=1e-12 * (1.0 + abs(a) * (abs(b) + abs(c))))


@given(quaternions, quaternions)
def test_norm_is_multiplicative(a, b):
    assert abs(a * b) == pytest.approx(abs(a) * abs(b), rel=1e-12, abs=1e-12)


@given(quaternions, quaternions)
def test_conjugation_reverses_products(a, b):
    assert (a * b).conj().isclose(b.conj() * a.conj(),
                                  tol=1e-12 * (1.0 + abs(a) * abs(b)))


@given(quaternions)
def test_conj_is_involution(q):
    assert q.conj().conj() == q


@given(quaternions)
def test_q_times_conjugate_is_norm_squared(q):
    squared = q * q.conj()
    assert squared.isclose(Quaternion(q.norm_sq()), tol=1e-12 * (1.0 + q.norm_sq()))
    assert (q.conj() * q).isclose(squared, tol=1e-12 * (1.0 + q.norm_sq()))


def test_inverse_round_trip(rng):
    for _ in range(100):
        q = Quaternion(*rng.uniform(-2, 2, size=4))
        if q.norm_sq() < 1e-6:
            continue
        assert (q.inverse() * q).isclose(ONE, tol=1e-12)
        assert (q * q.inverse()).isclose(ONE, tol=1e-12)


def test_text_round_trip(rng):
    for _ in range(25):
        q = Quaternion(*rng.uniform(-1e3, 1e3, size=4))
        assert parse_quaternion(format_quaternion(q)) == q


def test_parse_accepts_scientific_notation():
    q = parse_quaternion("1e-3 -2E4 0.5 3")
    assert q == Quaternion(1e-3, -2e4, 0.5, 3.0)


def test_parse_rejects_bad_input():
    from quatframes import ParseError
    with pytest.raises(ParseError):
        parse_quaternion("1 2 3")
    with pytest.raises(ParseError):
        parse_quaternion("1 2 3 spam")
