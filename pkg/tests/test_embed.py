import numpy as np
import pytest

from quatframes import (QOperator, eig_self_adjoint, from_complex, inner,
                        singular_values, spectrum_self_adjoint, to_complex)
from quatframes.quaternion import I, J

from conftest import random_frame

HOM_TOL = 1e-12


def random_operator(rng, n):
    return QOperator.from_real_array(rng.uniform(-1.0, 1.0, size=(n, n, 4)))


def test_identity_maps_to_identity():
    assert np.allclose(to_complex(QOperator.identity(3)), np.eye(6), atol=0)


def test_unit_j_block():
    x = to_complex(QOperator.from_quaternions([[J]]))
    assert np.allclose(x, np.array([[0, 1], [-1, 0]]), atol=0)


def test_product_homomorphism(rng):
    for _ in range(500):
        n = int(rng.integers(1, 5))
        s, t = random_operator(rng, n), random_operator(rng, n)
        lhs = to_complex(s @ t)          # composition applies t first
        rhs = to_complex(t) @ to_complex(s)
        scale = 1.0 + max(np.abs(lhs).max(), np.abs(rhs).max())
        assert np.abs(lhs - rhs).max() <= HOM_TOL * scale


def test_adjoint_homomorphism(rng):
    for _ in range(100):
        t = random_operator(rng, 3)
        assert np.abs(to_complex(t.adjoint()) - to_complex(t).conj().T).max() == 0.0


def test_round_trip(rng):
    t = random_operator(rng, 4)
    assert from_complex(to_complex(t)) == t


def test_from_complex_rejects_broken_symmetry():
    x = to_complex(QOperator.identity(2)).copy()
    x[0, 1] = 7.0
    with pytest.raises(ValueError):
        from_complex(x)


def test_spectrum_cases(mercedes):
    assert np.allclose(spectrum_self_adjoint(QOperator.identity(2)), [1.0, 1.0])
    assert np.allclose(spectrum_self_adjoint(QOperator.diagonal([1.0, 2.0])), [1, 2])
    assert np.allclose(spectrum_self_adjoint(mercedes.operator), [1.0, 2.0],
                       atol=1e-12)


def test_spectrum_requires_self_adjoint():
    with pytest.raises(ValueError):
        spectrum_self_adjoint(QOperator.from_quaternions([[I]]))


def test_pairing_holds_on_random_self_adjoint(rng):
    for _ in range(200):
        n = int(rng.integers(1, 6))
        t = random_operator(rng, n)
        sym = 0.5 * (t + t.adjoint())
        values = spectrum_self_adjoint(sym)   # raises PairingFailure if broken
        assert values.shape == (n,)
        assert (np.diff(values) >= 0).all()


def test_singular_value_cases():
    assert np.allclose(singular_values(QOperator.identity(1)), [1.0])
    assert np.allclose(singular_values(QOperator.zero(2)), [0.0, 0.0])


def test_singular_values_match_spectrum_for_positive(rng):
    for _ in range(50):
        s = random_frame(rng, 3, 7).operator
        sv = singular_values(s)
        spectrum = spectrum_self_adjoint(s)
        assert sv[0] == pytest.approx(float(spectrum[-1]), rel=1e-10)
        assert sv[-1] == pytest.approx(float(spectrum[0]), rel=1e-10)


def test_eigenvector_witnesses(rng):
    for _ in range(25):
        s = random_frame(rng, 4, 9).operator
        values, vectors = eig_self_adjoint(s)
        for value, v in zip(values, vectors):
            residual = (s.apply(v) - float(value) * v).norm()
            assert residual <= 1e-9 * (1.0 + s.op_norm())
            form = inner(s.apply(v), v).w
            assert form == pytest.approx(float(value) * v.norm_sq(), rel=1e-9)
