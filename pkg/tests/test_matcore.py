"""Tests for Hermitian/PSD arithmetic, functional calculus and matrix files."""

import math

import numpy as np
import pytest

from src.errors import (
    DimensionMismatch,
    DomainError,
    NonHermitianInput,
    SingularMatrix,
    SpecParseError,
)
from src.matcore import (
    HermitianMatrix,
    PsdMatrix,
    apply_spectral,
    apply_spectral_psd,
    compress,
    congruence,
    expand,
    format_matrix,
    inv_psd,
    inv_sqrt_psd,
    is_invertible,
    is_psd,
    load_matrix,
    loewner_leq,
    min_eigenvalue,
    operator_norm,
    parse_matrix,
    shorted,
    spectral_decompose,
    sqrt_psd,
    support_basis,
    write_matrix,
)
from tests.conftest import assert_matrix_close

pytestmark = pytest.mark.unit


class TestConstruction:
    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitianInput):
            HermitianMatrix([[1.0, 2.0], [0.0, 1.0]])

    def test_symmetrize(self):
        H = HermitianMatrix([[1.0, 2.0], [0.0, 1.0]], symmetrize=True)
        assert_matrix_close(H, [[1.0, 1.0], [1.0, 1.0]], atol=0)

    def test_rejects_non_square(self):
        with pytest.raises(DimensionMismatch):
            HermitianMatrix([[1.0, 2.0]])

    def test_rejects_negative_psd(self):
        with pytest.raises(DomainError):
            PsdMatrix([[1.0, 0.0], [0.0, -1.0]])

    def test_tiny_negative_eigenvalue_is_clamped(self):
        A = PsdMatrix([[1.0, 0.0], [0.0, -1e-12]])
        assert A.eigenvalues[0] == 0.0

    def test_complex_hermitian(self):
        H = HermitianMatrix([[2.0, 1j], [-1j, 2.0]])
        assert H.is_complex
        np.testing.assert_allclose(H.eigenvalues, [1.0, 3.0])

    def test_sum_of_psd_stays_psd(self):
        total = PsdMatrix.identity(2) + PsdMatrix.diag([1.0, 2.0])
        assert isinstance(total, PsdMatrix)
        assert isinstance(total - PsdMatrix.identity(2), HermitianMatrix)

    def test_dimension_mismatch_on_add(self):
        with pytest.raises(DimensionMismatch):
            PsdMatrix.identity(2) + PsdMatrix.identity(3)


class TestSpectral:
    def test_sqrt_squares_back(self):
        A = PsdMatrix([[2.0, 1.0], [1.0, 2.0]])
        root = sqrt_psd(A)
        assert_matrix_close(root.entries @ root.entries, A, atol=1e-12)

    def test_inverse_and_inverse_sqrt(self):
        A = PsdMatrix([[2.0, 1.0], [1.0, 2.0]])
        assert_matrix_close(inv_psd(A).entries @ A.entries, np.eye(2), atol=1e-12)
        r = inv_sqrt_psd(A).entries
        assert_matrix_close(r @ A.entries @ r, np.eye(2), atol=1e-12)

    def test_inverse_of_singular_raises(self):
        with pytest.raises(SingularMatrix):
            inv_psd(PsdMatrix.diag([1.0, 0.0]))

    def test_spectral_decompose_reconstructs(self):
        H = HermitianMatrix([[2.0, 1j], [-1j, 2.0]])
        lam, U = spectral_decompose(H)
        np.testing.assert_allclose(lam, [1.0, 3.0], atol=1e-12)
        assert_matrix_close(U.conj().T @ U, np.eye(2), atol=1e-12)
        assert_matrix_close((U * lam) @ U.conj().T, H, atol=1e-12)

    def test_apply_spectral_domain_error(self):
        with pytest.raises(DomainError):
            apply_spectral(PsdMatrix.diag([1.0, 0.0]), math.log)

    def test_apply_spectral_exp(self):
        H = HermitianMatrix.diag([0.0, 1.0])
        assert_matrix_close(apply_spectral(H, math.exp), np.diag([1.0, math.e]))

    def test_apply_spectral_psd_reads_null_space_as_zero(self):
        A = PsdMatrix.diag([1e-17, 4.0])
        root = apply_spectral_psd(A, math.sqrt, rank=1)
        assert_matrix_close(root, np.diag([0.0, 2.0]), atol=1e-14)

    def test_norm_and_min_eigenvalue(self):
        H = HermitianMatrix.diag([-3.0, 2.0])
        assert operator_norm(H) == 3.0
        assert min_eigenvalue(H) == -3.0

    def test_invertibility(self):
        assert is_invertible(PsdMatrix.identity(3))
        assert not is_invertible(PsdMatrix.diag([1.0, 0.0]))
        assert not is_invertible(PsdMatrix.zeros(2))


class TestOrder:
    def test_loewner_leq(self):
        eye = PsdMatrix.identity(2)
        assert loewner_leq(eye, eye * 2.0)
        assert not loewner_leq(eye * 2.0, eye)
        assert loewner_leq(eye, eye)

    def test_incomparable(self):
        A, B = PsdMatrix.diag([1.0, 0.0]), PsdMatrix.diag([0.0, 1.0])
        assert not loewner_leq(A, B)
        assert not loewner_leq(B, A)

    def test_is_psd_on_hermitian(self):
        assert is_psd(HermitianMatrix.diag([0.0, 1.0]))
        assert not is_psd(HermitianMatrix.diag([-1e-3, 1.0]))


class TestSupport:
    def test_congruence(self):
        C = np.array([[1.0, 2.0], [0.0, 1.0]])
        A = PsdMatrix.diag([1.0, 3.0])
        assert_matrix_close(congruence(C, A), C @ A.entries @ C.T, atol=1e-12)

    def test_support_basis_rank(self):
        A = PsdMatrix.diag([1.0, 0.0, 2.0])
        V = support_basis(A)
        assert V.shape == (3, 2)
        assert_matrix_close(expand(compress(A, V), V), A, atol=1e-12)

    def test_support_of_zero_is_empty(self):
        assert support_basis(PsdMatrix.zeros(2)).shape == (2, 0)

    def test_support_is_relative_to_the_operand(self):
        assert support_basis(PsdMatrix.diag([1e-11, 0.0])).shape == (2, 1)
        assert support_basis(PsdMatrix.diag([1.0, 1e-11])).shape == (2, 1)

    def test_shorted(self):
        B = PsdMatrix([[1.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 1.0]])
        V = np.eye(3)[:, :2]
        assert_matrix_close(shorted(B, V), np.diag([0.0, 1.0]), atol=1e-12)

    def test_shorted_to_everything_is_compression(self):
        B = PsdMatrix([[2.0, 1.0], [1.0, 2.0]])
        assert_matrix_close(shorted(B, np.eye(2)), B, atol=1e-12)

    def test_shorted_is_below_compression(self, gen):
        for dim in range(2, 6):
            B = gen.invertible(dim)
            V = support_basis(gen.projection(dim, rank=dim - 1))
            assert loewner_leq(shorted(B, V), compress(B, V))


class TestTextFormat:
    def test_parse(self):
        H = parse_matrix("dim 2\n1 2\n2 5\n")
        assert_matrix_close(H, [[1.0, 2.0], [2.0, 5.0]], atol=0)

    def test_parse_enforces_symmetric_part(self):
        H = parse_matrix("# comment\ndim 2\n1 2\n0 1\n")
        assert_matrix_close(H, [[1.0, 1.0], [1.0, 1.0]], atol=0)

    @pytest.mark.parametrize(
        "text",
        ["", "dim x\n1\n", "size 1\n1\n", "dim 2\n1 2\n", "dim 2\n1 2\n3\n", "dim 1\nabc\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(SpecParseError):
            parse_matrix(text)

    def test_format_normalizes_negative_zero(self):
        assert format_matrix(HermitianMatrix.diag([1.5, -0.0])) == "dim 2\n1.5 0\n0 0\n"

    def test_write_and_load(self, tmp_path):
        A = PsdMatrix([[2.0 / 3.0, 0.1], [0.1, math.pi]])
        path = write_matrix(A, tmp_path / "a.txt")
        assert load_matrix(path) == A

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecParseError):
            load_matrix(tmp_path / "missing.txt")


class TestRandomized:
    """Spectral-calculus and order identities on seeded random matrices, dims 1 through 8."""

    DIMS = range(1, 9)

    def test_identity_function(self, gen):
        for dim in self.DIMS:
            A = gen.generate(dim)
            assert_matrix_close(
                apply_spectral(A, lambda x: x), A, atol=1e-10 * max(operator_norm(A), 1.0)
            )

    def test_sqrt_then_square(self, gen):
        for dim in self.DIMS:
            A = gen.generate(dim, rank=int(gen.rng.integers(0, dim + 1)))
            root = apply_spectral(A, math.sqrt)
            assert_matrix_close(
                apply_spectral(root, lambda x: x * x), A, atol=1e-10 * max(operator_norm(A), 1.0)
            )

    def test_loewner_reflexive(self, gen):
        for dim in self.DIMS:
            H = gen.generate(dim) - gen.generate(dim)
            assert loewner_leq(H, H)

    def test_loewner_transitive(self, gen):
        for dim in self.DIMS:
            A = gen.generate(dim)
            B = A + gen.increment(dim)
            C = B + gen.increment(dim)
            assert loewner_leq(A, B) and loewner_leq(B, C)
            assert loewner_leq(A, C)

    def test_norm_is_homogeneous(self, gen):
        for dim in self.DIMS:
            A = gen.generate(dim)
            k = float(gen.rng.uniform(0.1, 10.0))
            assert operator_norm(A * k) == pytest.approx(k * operator_norm(A), rel=1e-12)
