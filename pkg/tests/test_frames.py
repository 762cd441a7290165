import math

import pytest

from quatframes import (Frame, NotAFrame, QOperator, QVector, Quaternion,
                        analysis, canonical_dual, frame_operator, inner,
                        optimal_bounds, read_frame, synthesis, write_frame)

from conftest import random_frame, random_vector

RECON_TOL = 1e-9


def test_synthesis_unit_coefficient(mercedes):
    out = synthesis(mercedes, [Quaternion(1), Quaternion(), Quaternion()])
    assert out == mercedes[0]
    zero = synthesis(mercedes, [Quaternion()] * 3)
    assert zero.norm() == 0.0


def test_synthesis_analysis_compose_to_frame_operator(rng):
    for _ in range(50):
        n, m = int(rng.integers(1, 6)), int(rng.integers(2, 12))
        frame = random_frame(rng, n, max(n, m))
        psi = random_vector(rng, n)
        via_maps = synthesis(frame, analysis(frame, psi))
        via_operator = frame.operator.apply(psi)
        assert (via_maps - via_operator).norm() <= 1e-12 * (1 + via_operator.norm())


def test_analysis_cases(mercedes):
    coeffs = analysis(Frame.standard_basis(3), QVector.basis(3, 0))
    assert coeffs[0] == Quaternion(1)
    assert coeffs[1] == Quaternion() and coeffs[2] == Quaternion()
    assert all(q == Quaternion() for q in analysis(mercedes, QVector.zero(2)))


def test_coefficient_energy_within_bounds(rng):
    for _ in range(100):
        frame = random_frame(rng, 3, 8)
        lower, upper = frame.bounds
        psi = random_vector(rng, 3)
        energy = sum(abs(q) ** 2 for q in analysis(frame, psi))
        n2 = psi.norm_sq()
        assert lower * n2 * (1 - 1e-9) <= energy <= upper * n2 * (1 + 1e-9)


def test_frame_operator_of_standard_basis():
    assert frame_operator(Frame.standard_basis(4)).isclose(QOperator.identity(4), tol=0)


def test_frame_operator_mercedes(mercedes):
    s = mercedes.operator
    expected = [[1.5, 0.5], [0.5, 1.5]]
    for i in range(2):
        for j in range(2):
            assert s.entry(i, j).isclose(Quaternion(expected[i][j]), tol=1e-12)


def test_doubling_vectors_doubles_operator(mercedes):
    doubled = Frame(list(mercedes.vectors) + list(mercedes.vectors))
    assert doubled.operator.isclose(2.0 * mercedes.operator, tol=1e-12)


def test_quadratic_form_matches_energy(rng, mercedes):
    for _ in range(100):
        psi = random_vector(rng, 2)
        form = inner(mercedes.operator.apply(psi), psi)
        energy = sum(abs(q) ** 2 for q in analysis(mercedes, psi))
        assert form.imag_norm() <= 1e-12
        assert form.w == pytest.approx(energy, rel=1e-10)


def test_optimal_bounds_cases(mercedes):
    assert optimal_bounds(Frame.standard_basis(3)) == pytest.approx((1.0, 1.0))
    lower, upper = optimal_bounds(mercedes)
    assert lower == pytest.approx(1.0, abs=1e-9)
    assert upper == pytest.approx(2.0, abs=1e-9)


def test_rank_deficient_family_is_not_a_frame():
    family = Frame([QVector.basis(2, 0)])
    assert family.lower_bound <= 1e-10
    assert not family.is_frame()
    with pytest.raises(NotAFrame):
        family.canonical_dual()


def test_canonical_dual_of_orthonormal_basis():
    basis = Frame.standard_basis(3)
    assert canonical_dual(basis) == basis


def test_canonical_dual_mercedes(mercedes):
    dual = mercedes.canonical_dual()
    s = 1.0 / math.sqrt(2.0)
    expected = [
        QVector.from_reals([0.75, 0, 0, 0, -0.25, 0, 0, 0]),
        QVector.from_reals([-0.25, 0, 0, 0, 0.75, 0, 0, 0]),
        QVector.from_reals([s / 2, 0, 0, 0, s / 2, 0, 0, 0]),
    ]
    for vector, target in zip(dual.vectors, expected):
        assert vector.isclose(target, tol=1e-12)


def test_dual_frame_operator_is_inverse(rng):
    for _ in range(25):
        frame = random_frame(rng, 4, 10)
        dual = frame.canonical_dual()
        assert dual.operator.isclose(frame.operator.inverse(), tol=1e-9)


def test_reconstruction_formulas(rng):
    for _ in range(50):
        n = int(rng.integers(1, 9))
        m = int(rng.integers(n, 25))
        frame = random_frame(rng, n, max(m, 2 * n))
        dual = frame.canonical_dual()
        psi = random_vector(rng, n)
        first = synthesis(frame, analysis(dual, psi))
        second = synthesis(dual, analysis(frame, psi))
        assert (psi - first).norm() <= RECON_TOL * psi.norm()
        assert (psi - second).norm() <= RECON_TOL * psi.norm()


def test_bounds_are_attained_by_witnesses(rng):
    from quatframes import eig_self_adjoint
    for _ in range(25):
        frame = random_frame(rng, 3, 9)
        lower, upper = frame.bounds
        values, vectors = eig_self_adjoint(frame.operator)
        for target, witness in ((lower, vectors[0]), (upper, vectors[-1])):
            energy = sum(abs(q) ** 2 for q in analysis(frame, witness))
            assert energy == pytest.approx(target * witness.norm_sq(), rel=1e-6)


def test_is_normalized(mercedes):
    assert mercedes.is_normalized()
    assert not mercedes.scaled([2.0, 1.0, 1.0]).is_normalized()


def test_frame_file_round_trip(tmp_path, rng):
    frame = random_frame(rng, 3, 7)
    path = tmp_path / "frame.qhf"
    write_frame(frame, path)
    assert read_frame(path) == frame


def test_frame_file_comments_and_errors(tmp_path):
    from quatframes import ParseError
    path = tmp_path / "frame.qhf"
    path.write_text("# a comment\n1 1\n\n# another\n1 0 0 0\n")
    frame = read_frame(path)
    assert frame.dimension == 1 and len(frame) == 1
    path.write_text("1 2\n1 0 0 0\n")
    with pytest.raises(ParseError):
        read_frame(path)
    path.write_text("1 1\n1 0 0\n")
    with pytest.raises(ParseError):
        read_frame(path)
