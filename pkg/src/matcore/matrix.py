"""
Dense Hermitian / PSD matrices with a lazily cached spectral decomposition.

Usage:
    from src.matcore import HermitianMatrix, PsdMatrix, apply_spectral, sqrt_psd

    A = PsdMatrix([[2.0, 1.0], [1.0, 2.0]])
    root = sqrt_psd(A)
    loewner_leq(A, A + PsdMatrix.identity(2))
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from functools import cached_property

import numpy as np
import scipy.linalg

from src.config.defaults import get_tolerances
from src.errors import DimensionMismatch, DomainError, NonHermitianInput, SingularMatrix


def _as_array(entries: Iterable) -> np.ndarray:
    arr = np.array(entries, dtype=complex if np.iscomplexobj(entries) else float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise DimensionMismatch(f"Expected a nonempty square matrix, got shape {arr.shape}")
    if np.iscomplexobj(arr) and not np.any(arr.imag):
        arr = arr.real.copy()
    return arr


class HermitianMatrix:
    """Finite Hermitian matrix; immutable once constructed.

    The spectral decomposition is computed on first use and cached.
    Eigenvalues are ascending.
    """

    def __init__(self, entries: Iterable, *, symmetrize: bool = False, check: bool = True):
        arr = _as_array(entries)
        if symmetrize:
            arr = (arr + arr.conj().T) / 2
        elif check:
            _check_hermitian(arr)
        arr.setflags(write=False)
        self._entries = arr

    # construction helpers

    @classmethod
    def identity(cls, dim: int):
        return cls(np.eye(dim), check=False)

    @classmethod
    def zeros(cls, dim: int):
        return cls(np.zeros((dim, dim)), check=False)

    @classmethod
    def diag(cls, values: Iterable[float]):
        return cls(np.diag(np.asarray(values, dtype=float)), check=False)

    @classmethod
    def scalar(cls, value: float, dim: int):
        return cls(value * np.eye(dim), check=False)

    @classmethod
    def _trusted(cls, arr: np.ndarray):
        """Wrap a computed array, enforcing exact Hermitian symmetry."""
        return cls((arr + arr.conj().T) / 2, check=False)

    # properties

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self._entries)

    @cached_property
    def spectrum(self) -> tuple[np.ndarray, np.ndarray]:
        eigenvalues, eigenvectors = scipy.linalg.eigh(self._entries)
        eigenvalues.setflags(write=False)
        eigenvectors.setflags(write=False)
        return eigenvalues, eigenvectors

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.spectrum[0]

    @property
    def norm(self) -> float:
        return operator_norm(self)

    # arithmetic (results stay Hermitian)

    def __add__(self, other: HermitianMatrix) -> HermitianMatrix:
        _check_dims(self, other)
        both_psd = isinstance(self, PsdMatrix) and isinstance(other, PsdMatrix)
        result = PsdMatrix if both_psd else HermitianMatrix
        return result._trusted(self._entries + other.entries)

    def __sub__(self, other: HermitianMatrix) -> HermitianMatrix:
        _check_dims(self, other)
        return HermitianMatrix._trusted(self._entries - other.entries)

    def __mul__(self, k: float) -> HermitianMatrix:
        k = float(k)
        result = type(self) if isinstance(self, PsdMatrix) and k >= 0 else HermitianMatrix
        return result._trusted(k * self._entries)

    __rmul__ = __mul__

    def __neg__(self) -> HermitianMatrix:
        return HermitianMatrix._trusted(-self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self._entries, other.entries)

    __hash__ = None

    def allclose(self, other: HermitianMatrix, atol: float) -> bool:
        _check_dims(self, other)
        return bool(np.max(np.abs(self._entries - other.entries)) <= atol)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim}, entries={self._entries.tolist()!r})"


class PsdMatrix(HermitianMatrix):
    """Hermitian matrix whose smallest eigenvalue is >= -tol_psd * ||A||.

    Eigenvalues in [-tol_psd * ||A||, 0) read back as 0.
    """

    def __init__(self, entries: Iterable, *, symmetrize: bool = False, check: bool = True):
        super().__init__(entries, symmetrize=symmetrize, check=check)
        if check:
            lam = scipy.linalg.eigvalsh(self._entries)
            bound = _psd_floor(float(np.max(np.abs(lam))))
            if lam[0] < -bound:
                raise DomainError(
                    f"Matrix is not positive semidefinite: min eigenvalue {lam[0]:.3e}"
                )

    @classmethod
    def from_hermitian(cls, H: HermitianMatrix) -> PsdMatrix:
        if isinstance(H, PsdMatrix):
            return H
        return cls(H.entries)

    @cached_property
    def spectrum(self) -> tuple[np.ndarray, np.ndarray]:
        eigenvalues, eigenvectors = scipy.linalg.eigh(self._entries)
        eigenvalues = np.clip(eigenvalues, 0.0, None)
        eigenvalues.setflags(write=False)
        eigenvectors.setflags(write=False)
        return eigenvalues, eigenvectors


def _psd_floor(norm: float) -> float:
    tol = get_tolerances()
    return max(tol.tol_psd * norm, tol.abs_floor)


def _check_hermitian(arr: np.ndarray) -> None:
    tol = get_tolerances()
    scale = float(np.max(np.abs(arr)))
    asym = float(np.max(np.abs(arr - arr.conj().T)))
    if asym > max(tol.tol_sym * scale, tol.abs_floor):
        raise NonHermitianInput(
            f"Matrix is not Hermitian: max |M - M*| = {asym:.3e} (scale {scale:.3e})"
        )


def _check_dims(A: HermitianMatrix, B: HermitianMatrix) -> None:
    if A.dim != B.dim:
        raise DimensionMismatch(f"Dimension mismatch: {A.dim} vs {B.dim}")


def spectral_decompose(H: HermitianMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and unitary eigenvectors with U diag(lam) U* = H."""
    return H.spectrum


def _reconstruct(eigenvectors: np.ndarray, values: np.ndarray) -> np.ndarray:
    return (eigenvectors * values) @ eigenvectors.conj().T


def _apply(lam: np.ndarray, U: np.ndarray, g: Callable[[float], float]) -> np.ndarray:
    values = np.empty(lam.shape, dtype=float)
    for i, x in enumerate(lam):
        try:
            values[i] = float(g(float(x)))
        except (ZeroDivisionError, ValueError, OverflowError) as exc:
            raise DomainError(f"Function undefined at eigenvalue {x:.6g}: {exc}") from exc
        if not np.isfinite(values[i]):
            raise DomainError(f"Function is not finite at eigenvalue {x:.6g}")
    return _reconstruct(U, values)


def apply_spectral(A: HermitianMatrix, g: Callable[[float], float]) -> HermitianMatrix:
    """Functional calculus U diag(g(lam)) U*.

    For a PsdMatrix the eigenvalues are clamped to 0 first.
    """
    lam, U = A.spectrum
    return HermitianMatrix._trusted(_apply(lam, U, g))


def apply_spectral_psd(
    A: HermitianMatrix, g: Callable[[float], float], rank: int | None = None
) -> PsdMatrix:
    """Functional calculus for nonnegative g; the result is typed as PSD.

    With ``rank`` given, all but the ``rank`` largest eigenvalues are read as 0.
    """
    lam, U = A.spectrum
    if rank is not None and rank < len(lam):
        lam = np.concatenate([np.zeros(len(lam) - rank), lam[len(lam) - rank :]])
    return PsdMatrix._trusted(_apply(lam, U, g))


def min_eigenvalue(H: HermitianMatrix) -> float:
    return float(H.eigenvalues[0])


def operator_norm(H: HermitianMatrix) -> float:
    """Spectral radius; for PSD input the largest eigenvalue."""
    lam = H.eigenvalues
    return float(max(abs(lam[0]), abs(lam[-1])))


def is_psd(H: HermitianMatrix, tol: float | None = None) -> bool:
    if tol is None:
        tol = get_tolerances().tol_psd
    # PsdMatrix clamps on read, so test the raw spectrum.
    lam = scipy.linalg.eigvalsh(H.entries)
    norm = float(np.max(np.abs(lam)))
    return bool(lam[0] >= -tol * max(1.0, norm))


def loewner_leq(A: HermitianMatrix, B: HermitianMatrix, tol: float | None = None) -> bool:
    """A <= B in the Loewner order, i.e. B - A is PSD within tol."""
    _check_dims(A, B)
    return is_psd(B - A, tol)


def is_invertible(A: HermitianMatrix, tol: float | None = None) -> bool:
    if tol is None:
        tol = get_tolerances().tol_inv
    lam = A.eigenvalues
    norm = float(np.max(np.abs(lam)))
    return bool(norm > 0 and np.min(np.abs(lam)) > tol * norm)


def inv_psd(A: PsdMatrix) -> PsdMatrix:
    """Inverse of a positive definite matrix."""
    tol = get_tolerances()
    lam, U = A.spectrum
    norm = float(lam[-1])
    if norm <= 0 or lam[0] <= tol.tol_inv * norm:
        raise SingularMatrix(
            f"Matrix is numerically singular: min eigenvalue {lam[0]:.3e}, norm {norm:.3e}"
        )
    return PsdMatrix._trusted(_reconstruct(U, 1.0 / lam))


def sqrt_psd(A: PsdMatrix) -> PsdMatrix:
    lam, U = PsdMatrix.from_hermitian(A).spectrum
    return PsdMatrix._trusted(_reconstruct(U, np.sqrt(lam)))


def inv_sqrt_psd(A: PsdMatrix) -> PsdMatrix:
    return sqrt_psd(inv_psd(A))


def congruence(C: HermitianMatrix | np.ndarray, A: HermitianMatrix) -> HermitianMatrix:
    """C A C* for square C (Hermitian or a plain array)."""
    c = C.entries if isinstance(C, HermitianMatrix) else np.asarray(C)
    if c.shape != (A.dim, A.dim):
        raise DimensionMismatch(f"Dimension mismatch: {c.shape} vs {A.dim}")
    result = type(A) if isinstance(A, PsdMatrix) else HermitianMatrix
    return result._trusted(c @ A.entries @ c.conj().T)


def support_basis(H: HermitianMatrix, tol: float | None = None) -> np.ndarray:
    """Isometry whose columns span the range of H (eigenvalues above tol * ||H||)."""
    tolerances = get_tolerances()
    if tol is None:
        tol = tolerances.tol_psd
    lam, U = H.spectrum
    norm = float(np.max(np.abs(lam)))
    keep = np.abs(lam) > max(tol * norm, tolerances.abs_floor)
    return np.asarray(U[:, keep])


def compress(A: HermitianMatrix, V: np.ndarray) -> PsdMatrix:
    """V* A V, the compression of A to the range of the isometry V."""
    return PsdMatrix._trusted(V.conj().T @ A.entries @ V)


def expand(M: HermitianMatrix, V: np.ndarray) -> PsdMatrix:
    """V M V*, the inverse of ``compress`` on operators supported in range(V)."""
    return PsdMatrix._trusted(V @ M.entries @ V.conj().T)


def shorted(B: HermitianMatrix, V: np.ndarray) -> PsdMatrix:
    """Shorted operator of B to range(V), written as a matrix on range(V).

    With W spanning the orthogonal complement of range(V) this is the Schur
    complement V*BV - (V*BW)(W*BW)^-1(W*BV); W*BW must be invertible.
    """
    W = scipy.linalg.null_space(V.conj().T)
    if W.shape[1] == 0:
        return compress(B, V)
    b = B.entries
    b12 = V.conj().T @ b @ W
    b22 = PsdMatrix._trusted(W.conj().T @ b @ W)
    return PsdMatrix._trusted(V.conj().T @ b @ V - b12 @ inv_psd(b22).entries @ b12.conj().T)
