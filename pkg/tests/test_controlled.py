import pytest

from quatframes import (ControllerNotInGL, Frame, NotSelfAdjoint, QOperator,
                        QVector, Quaternion, check_controlled, commutator_norm,
                        commuting_positive, controlled_frame_operator,
                        random_commuting_positive, random_noncommuting_positive,
                        verify_controlled_equivalence,
                        verify_controlled_identities)

from conftest import random_frame

TOL = 1e-9


def test_identity_controller_gives_frame_operator(mercedes):
    s_c = controlled_frame_operator(mercedes, QOperator.identity(2))
    assert s_c.isclose(mercedes.operator, tol=0)


def test_inverse_controller_gives_identity(mercedes):
    s = mercedes.operator
    s_c = controlled_frame_operator(mercedes, s.inverse())
    assert s_c.isclose(QOperator.identity(2), tol=1e-12)


def test_scaling_controller(mercedes):
    s_c = controlled_frame_operator(mercedes, 2.0 * QOperator.identity(2))
    assert s_c.isclose(2.0 * mercedes.operator, tol=1e-12)


def test_controlled_operator_matches_defining_sum(rng):
    # the matrix path must equal sum_k <psi|phi_k> C phi_k pointwise
    from quatframes import analysis
    for _ in range(25):
        frame = random_frame(rng, 3, 7)
        controller = QOperator.from_real_array(rng.uniform(-1, 1, (3, 3, 4)))
        s_c = controlled_frame_operator(frame, controller)
        psi = QVector.from_real_array(rng.uniform(-1, 1, (3, 4)))
        total = QVector.zero(3)
        for coeff, phi in zip(analysis(frame, psi), frame.vectors):
            total = total + coeff * controller.apply(phi)
        assert (s_c.apply(psi) - total).norm() <= 1e-12 * (1 + total.norm())


def test_check_controlled_simple_cases(mercedes):
    report = check_controlled(Frame.standard_basis(2), QOperator.identity(2))
    assert report.is_controlled
    assert report.lower == pytest.approx(1.0) and report.upper == pytest.approx(1.0)

    inv = check_controlled(mercedes, mercedes.operator.inverse())
    assert inv.is_controlled
    assert inv.lower == pytest.approx(1.0, abs=1e-9)
    assert inv.upper == pytest.approx(1.0, abs=1e-9)

    flipped = check_controlled(mercedes, -QOperator.identity(2))
    assert not flipped.is_controlled


def test_check_controlled_requires_invertible_controller(mercedes):
    with pytest.raises(ControllerNotInGL):
        check_controlled(mercedes, QOperator.zero(2))


def test_controlled_sum_is_real_on_valid_instances(rng):
    for _ in range(25):
        frame = random_frame(rng, 3, 7)
        controller = random_commuting_positive(frame, int(rng.integers(2**32)))
        report = check_controlled(frame, controller)
        assert report.is_controlled
        assert report.sum_is_real
        assert report.bound_violation <= 1e-9


def test_identities_for_identity_controller(mercedes):
    report = verify_controlled_identities(mercedes, QOperator.identity(2))
    assert report.is_frame
    assert report.max_residual() <= 1e-12


def test_identities_for_polynomial_controllers(rng):
    for _ in range(50):
        frame = random_frame(rng, 4, 10)
        controller = random_commuting_positive(frame, int(rng.integers(2**32)))
        report = verify_controlled_identities(frame, controller)
        assert report.is_frame
        assert report.max_residual() <= TOL, vars(report)


def test_identities_for_inverse_controller(rng):
    for _ in range(10):
        frame = random_frame(rng, 3, 8)
        report = verify_controlled_identities(frame, frame.operator.inverse())
        assert report.operator_identity_residual <= TOL


def test_recovered_frame_operator(rng):
    for _ in range(25):
        frame = random_frame(rng, 3, 9)
        controller = random_commuting_positive(frame, int(rng.integers(2**32)))
        s_c = controlled_frame_operator(frame, controller)
        recovered = controller.inverse() @ s_c
        assert (recovered - frame.operator).op_norm() <= 1e-10 * (
            1.0 + frame.operator.op_norm())


def test_equivalence_identity_and_polynomials(rng, mercedes):
    eq = verify_controlled_equivalence(mercedes, QOperator.identity(2))
    assert eq.forward and eq.backward and eq.is_controlled

    for _ in range(25):
        frame = random_frame(rng, 3, 7)
        controller = commuting_positive(frame, rng.uniform(0.1, 2.0, size=2).tolist() + [0.0])
        eq = verify_controlled_equivalence(frame, controller)
        assert eq.forward and eq.backward
        assert eq.is_controlled and eq.commutes


def test_equivalence_rejects_non_self_adjoint(mercedes):
    skew = QOperator.from_quaternions(
        [[Quaternion(1), Quaternion(0, 1)], [Quaternion(), Quaternion(1)]])
    with pytest.raises(NotSelfAdjoint):
        verify_controlled_equivalence(mercedes, skew)


def test_noncommuting_positive_controller_is_rejected(mercedes, rng):
    controller = QOperator.diagonal([1.0, 2.0])
    assert commutator_norm(controller, mercedes.operator) > 1e-6
    report = check_controlled(mercedes, controller)
    assert not report.is_controlled
    # the mixed sum picks up imaginary parts for some sampled psi
    assert not report.sum_is_real

    eq = verify_controlled_equivalence(mercedes, controller)
    assert not eq.commutes
    assert eq.forward and eq.backward  # both implications hold vacuously

    for _ in range(25):
        frame = random_frame(rng, 3, 7)
        bad = random_noncommuting_positive(frame, int(rng.integers(2**32)))
        assert bad.is_positive(1e-8)
        assert not check_controlled(frame, bad).is_controlled


def test_commuting_generator_contract(rng, mercedes):
    assert commuting_positive(mercedes, (1.0, 0.0, 0.0)).isclose(
        QOperator.identity(2))
    assert commuting_positive(mercedes, (0.0, 1.0, 0.0)).isclose(
        mercedes.operator)
    for seed in range(100):
        frame = random_frame(rng, 3, 7)
        controller = random_commuting_positive(frame, seed)
        s = frame.operator
        assert commutator_norm(controller, s) <= 1e-10 * (1 + s.op_norm()) * (
            1 + controller.op_norm())
        assert controller.is_self_adjoint(1e-9 * (1 + controller.max_abs()))
        assert controller.in_gl_plus(1e-9)


def test_noncommuting_generator_needs_dimension_two():
    line = Frame([QVector.basis(1, 0)])
    with pytest.raises(ValueError):
        random_noncommuting_positive(line, 0)
