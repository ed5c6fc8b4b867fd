import math

import numpy as np
import pytest

from hqec import quaternion as quat
from hqec.quaternion import Quaternion, exp_axis
from hqec.linalg import (
    MulSide,
    QMatrix,
    QVector,
    adjoint,
    inner_product,
    is_unitary,
    matmul,
    matrix_exp,
    matrix_from_dict,
    matrix_to_dict,
    matvec,
    phase_alignment_check,
    real_norm_sq,
    right_scalar_mul,
    tensor,
    vector_from_dict,
    vector_to_dict,
)
from hqec.register import cnot_gate, hadamard_gate, t_gate

ONE, I, J, K, ZERO = quat.ONE, quat.I, quat.J, quat.K, quat.ZERO


def rand_vector(rng, dim):
    return QVector.from_components(rng.uniform(-2, 2, size=(dim, 4)))


def rand_matrix(rng, rows, cols):
    return QMatrix.from_components(rng.uniform(-2, 2, size=(rows, cols, 4)))


# -- inner product -----------------------------------------------------------

def test_inner_product_orthonormal_basis():
    e0 = QVector.basis(2, 0)
    e1 = QVector.basis(2, 1)
    assert inner_product(e0, e0) == ONE
    assert inner_product(e0, e1) == ZERO


def test_inner_product_example():
    phi = QVector([ONE, I])
    psi = QVector([J, ONE])
    # conj(1)*j + conj(i)*1 = j - i
    assert inner_product(phi, psi) == Quaternion(0, -1, 1, 0)


def test_inner_product_conjugate_symmetry():
    rng = np.random.default_rng(21)
    for _ in range(50):
        phi, psi = rand_vector(rng, 4), rand_vector(rng, 4)
        lhs = inner_product(phi, psi)
        rhs = inner_product(psi, phi).conj()
        assert lhs.isclose(rhs, tol=1e-10)


def test_inner_product_dim_mismatch():
    with pytest.raises(ValueError):
        inner_product(QVector.basis(2, 0), QVector.basis(4, 0))


# -- norms ---------------------------------------------------------------------

def test_real_norm_sq_values():
    inv = 1 / math.sqrt(2)
    psi = QVector([inv * ONE, inv * I])
    assert real_norm_sq(psi) == pytest.approx(1.0, abs=1e-12)
    assert real_norm_sq(QVector.zeros(3)) == 0.0
    assert real_norm_sq(QVector([Quaternion(1, 1, 0, 0), Quaternion(0, 0, 1, 1)])) == 4.0


def test_positivity():
    rng = np.random.default_rng(22)
    for _ in range(50):
        v = rand_vector(rng, 3)
        if np.any(v.components):
            assert real_norm_sq(v) > 0.0


# -- right scalar multiplication --------------------------------------------------

def test_right_scalar_mul_values():
    psi = QVector([ONE, ZERO])
    assert right_scalar_mul(psi, J)[0] == J
    assert right_scalar_mul(psi, ONE)[0] == ONE
    assert right_scalar_mul(QVector([I]), J)[0] == K  # i*j = k


def test_right_linearity():
    rng = np.random.default_rng(23)
    for _ in range(50):
        phi, psi = rand_vector(rng, 3), rand_vector(rng, 3)
        q = Quaternion(*rng.uniform(-2, 2, size=4))
        lhs = inner_product(phi, right_scalar_mul(psi, q))
        rhs = inner_product(phi, psi) * q
        assert (lhs - rhs).norm() <= 1e-10


# -- adjoint -------------------------------------------------------------------

def test_adjoint_diagonal():
    a = QMatrix([[ONE, ZERO], [ZERO, I]])
    assert adjoint(a).entry(1, 1) == -I
    assert adjoint(a).entry(0, 0) == ONE


def test_adjoint_involution():
    rng = np.random.default_rng(24)
    a = rand_matrix(rng, 3, 2)
    assert adjoint(adjoint(a)).isclose(a)


def test_adjoint_transposes_and_conjugates_cnot():
    c = cnot_gate().matrix
    ct = adjoint(c)
    assert ct.entry(3, 2) == -J  # conj of entry (2, 3) = j
    assert ct.entry(2, 3) == -K  # conj of entry (3, 2) = k


def test_adjoint_contract():
    rng = np.random.default_rng(25)
    for dim in (2, 4, 8):
        a = rand_matrix(rng, dim, dim)
        phi, psi = rand_vector(rng, dim), rand_vector(rng, dim)
        lhs = inner_product(phi, matvec(a, psi, MulSide.LEFT))
        rhs = inner_product(matvec(adjoint(a), phi, MulSide.LEFT), psi)
        assert (lhs - rhs).norm() <= 1e-10


# -- matvec -------------------------------------------------------------------

def test_matvec_hadamard_worked_example():
    rng = np.random.default_rng(26)
    inv = 1 / math.sqrt(2)
    for _ in range(20):
        w, x, y, z = rng.uniform(-1, 1, size=4)
        psi = QVector([Quaternion(w), Quaternion(0, x, y, z)])
        out = matvec(hadamard_gate().matrix, psi, MulSide.LEFT)
        alpha = Quaternion(inv * (w - x), 0, -inv * z, inv * y)
        beta = Quaternion(0, inv * (w - x), -inv * y, -inv * z)
        assert out[0].isclose(alpha, tol=1e-12)
        assert out[1].isclose(beta, tol=1e-12)


def test_matvec_identity_both_sides():
    rng = np.random.default_rng(27)
    psi = rand_vector(rng, 4)
    eye = QMatrix.identity(4)
    assert matvec(eye, psi, MulSide.LEFT).isclose(psi)
    assert matvec(eye, psi, MulSide.RIGHT).isclose(psi)


def test_matvec_cnot_right_worked_example():
    rng = np.random.default_rng(28)
    w, x, y, z = rng.uniform(-1, 1, size=4)
    psi = QVector([Quaternion(w), ZERO, Quaternion(0, x, y, z), ZERO])
    out = matvec(cnot_gate().matrix, psi, MulSide.RIGHT)
    assert out[0].isclose(Quaternion(w), tol=1e-12)
    # (xi + yj + zk) * k = yi - xj - z
    assert out[3].isclose(Quaternion(-z, y, -x, 0), tol=1e-12)


def test_matvec_side_distinction_witness():
    m = QMatrix([[K]])
    psi = QVector([I])
    assert matvec(m, psi, MulSide.LEFT)[0] == J  # k*i = j
    assert matvec(m, psi, MulSide.RIGHT)[0] == -J  # i*k = -j


def test_matvec_shape_mismatch():
    with pytest.raises(ValueError):
        matvec(QMatrix.identity(2), QVector.basis(4, 0), MulSide.LEFT)


# -- unitarity ------------------------------------------------------------------

def test_is_unitary_cnot_passes():
    report = is_unitary(cnot_gate().matrix, tol=1e-12)
    assert report.passed
    assert report.max_deviation <= 1e-12


def test_is_unitary_identity():
    assert is_unitary(QMatrix.identity(3)).passed


def test_is_unitary_hadamard_fails_with_unit_deviation():
    report = is_unitary(hadamard_gate().matrix, tol=1e-12)
    assert not report.passed
    assert report.max_deviation == pytest.approx(1.0, abs=1e-12)
    assert report.worst_entry == (0, 1)
    # the offending product entry is -i
    product = matmul(hadamard_gate().matrix, adjoint(hadamard_gate().matrix))
    assert product.entry(0, 1).isclose(-I, tol=1e-12)


def test_is_unitary_requires_square():
    with pytest.raises(ValueError):
        is_unitary(QMatrix.zeros(2, 3))


# -- phase alignment ---------------------------------------------------------------

def test_phase_alignment():
    assert phase_alignment_check(t_gate().matrix)
    assert phase_alignment_check(QMatrix.identity(2))
    assert not phase_alignment_check(cnot_gate().matrix)


# -- matrix exponential --------------------------------------------------------------

def test_matrix_exp_zero():
    exp_m, residual = matrix_exp(QMatrix.zeros(2, 2), terms=5)
    assert exp_m.isclose(QMatrix.identity(2))
    assert residual <= 1e-12


def test_matrix_exp_diagonal_j():
    a = QMatrix([[Quaternion(0, 0, math.pi / 2, 0), ZERO], [ZERO, ZERO]])
    exp_m, _ = matrix_exp(a, terms=20)
    expected = QMatrix([[J, ZERO], [ZERO, ONE]])
    assert exp_m.isclose(expected, tol=1e-10)


def test_matrix_exp_scalar_i():
    theta = 0.9
    a = QMatrix.from_components(np.array([[(0, -theta, 0, 0), (0, 0, 0, 0)],
                                          [(0, 0, 0, 0), (0, -theta, 0, 0)]], dtype=float))
    exp_m, residual = matrix_exp(a, terms=20)
    expected_entry = Quaternion(math.cos(theta), -math.sin(theta), 0, 0)
    assert exp_m.entry(0, 0).isclose(expected_entry, tol=1e-10)
    assert exp_m.entry(1, 1).isclose(expected_entry, tol=1e-10)
    assert exp_m.entry(0, 1).isclose(ZERO, tol=1e-12)
    assert residual < 1e-10


def test_matrix_exp_matches_exp_axis():
    theta = 1.1
    a = QMatrix([[Quaternion(0, 0, 0, theta)]])
    exp_m, _ = matrix_exp(a, terms=25)
    assert exp_m.entry(0, 0).isclose(exp_axis(quat.K_AXIS, theta), tol=1e-12)


def test_matrix_exp_validation():
    with pytest.raises(ValueError):
        matrix_exp(QMatrix.zeros(2, 3), terms=3)
    with pytest.raises(ValueError):
        matrix_exp(QMatrix.identity(2), terms=0)


# -- tensor product ----------------------------------------------------------------

def test_tensor_identities():
    eye2 = QMatrix.identity(2)
    assert tensor(eye2, eye2).isclose(QMatrix.identity(4))


def test_tensor_hadamard_on_00():
    h_on_first = tensor(hadamard_gate().matrix, QMatrix.identity(2))
    out = matvec(h_on_first, QVector.basis(4, 0), MulSide.LEFT)
    inv = 1 / math.sqrt(2)
    assert out[0].isclose(inv * ONE, tol=1e-12)
    assert out[2].isclose(inv * I, tol=1e-12)
    assert out[1] == ZERO and out[3] == ZERO


def test_tensor_diagonal_units():
    a = QMatrix([[ONE, ZERO], [ZERO, I]])
    b = QMatrix([[ONE, ZERO], [ZERO, J]])
    out = tensor(a, b)
    assert out.entry(0, 0) == ONE
    assert out.entry(1, 1) == J
    assert out.entry(2, 2) == I
    assert out.entry(3, 3) == K  # i*j


def test_tensor_matvec_compatibility_real_entries():
    rng = np.random.default_rng(29)
    for _ in range(20):
        a_real = np.zeros((2, 2, 4))
        b_real = np.zeros((2, 2, 4))
        a_real[..., 0] = rng.uniform(-1, 1, size=(2, 2))
        b_real[..., 0] = rng.uniform(-1, 1, size=(2, 2))
        a, b = QMatrix.from_components(a_real), QMatrix.from_components(b_real)
        u, v = rand_vector(rng, 2), rand_vector(rng, 2)
        uv = QVector.from_components(
            np.stack([q.as_tuple() for q in (u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1])])
        )
        lhs = matvec(tensor(a, b), uv, MulSide.LEFT)
        au, bv = matvec(a, u, MulSide.LEFT), matvec(b, v, MulSide.LEFT)
        rhs = QVector(
            [au[0] * bv[0], au[0] * bv[1], au[1] * bv[0], au[1] * bv[1]]
        )
        assert lhs.isclose(rhs, tol=1e-9)


# -- serialization ----------------------------------------------------------------

def test_matrix_dict_roundtrip():
    m = cnot_gate().matrix
    data = matrix_to_dict(m)
    assert data["rows"] == 4 and data["cols"] == 4
    assert len(data["entries"]) == 16
    assert matrix_from_dict(data).isclose(m)


def test_vector_dict_roundtrip():
    v = QVector([ONE, J, Quaternion(0.5, -1, 2, 3)])
    data = vector_to_dict(v)
    assert data["cols"] == 1
    assert vector_from_dict(data).isclose(v)


def test_matrix_dict_rejects_bad_keys():
    data = matrix_to_dict(QMatrix.identity(2))
    data["extra"] = 1
    with pytest.raises(ValueError):
        matrix_from_dict(data)
    del data["extra"]
    del data["rows"]
    with pytest.raises(ValueError):
        matrix_from_dict(data)
