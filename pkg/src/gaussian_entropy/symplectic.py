"""Real symplectic linear algebra on phase-space covariance matrices.

Phase-space vectors are ordered block-wise as (x_1, ..., x_n, y_1, ..., y_n),
so the symplectic form is

    J = [[0, I], [-I, 0]]

and every 2n x 2n matrix in this module acts on that ordering.  A covariance
matrix C is admissible for an n-mode bosonic state when it is real, symmetric
and satisfies the uncertainty relation C + (i/2) J >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import schur

#: Default tolerance for symmetry, symplecticity and uncertainty checks.
DEFAULT_TOL = 1e-9

#: Residual bound enforced on the Williamson reconstruction L^T diag(nu,nu) L.
_WILLIAMSON_RESIDUAL = 1e-8


class NumericalError(RuntimeError):
    """A decomposition failed to meet its reconstruction tolerance."""


def _as_real_matrix(M, name: str = "matrix") -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"{name} must be square, got shape {M.shape}")
    if M.shape[0] % 2 != 0:
        raise ValueError(f"{name} must be 2n x 2n, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError(f"{name} contains non-finite entries")
    return M


def symplectic_form(n: int) -> np.ndarray:
    """Return the 2n x 2n symplectic form J = [[0, I], [-I, 0]].

    Args:
        n: number of modes.

    Returns:
        Real antisymmetric matrix with J @ J = -I.
    """
    if n < 1:
        raise ValueError(f"mode count must be positive, got {n}")
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = np.eye(n)
    J[n:, :n] = -np.eye(n)
    return J


def is_symplectic(L, tol: float = DEFAULT_TOL) -> bool:
    """Check whether L satisfies L^T J L = J within ``tol`` (max-norm)."""
    L = _as_real_matrix(L, "L")
    J = symplectic_form(L.shape[0] // 2)
    return bool(np.abs(L.T @ J @ L - J).max() <= tol)


def uncertainty_eigenvalue(C) -> float:
    """Minimum eigenvalue of the Hermitian matrix C + (i/2) J.

    Nonnegative (within tolerance) exactly when C is an admissible quantum
    covariance matrix.
    """
    C = _as_real_matrix(C, "covariance")
    J = symplectic_form(C.shape[0] // 2)
    H = C + 0.5j * J
    return float(np.linalg.eigvalsh(H)[0])


def is_valid_covariance(C, tol: float = DEFAULT_TOL) -> bool:
    """Check the uncertainty relation C + (i/2) J >= -tol.

    Args:
        C: real 2n x 2n matrix.  Must be symmetric within ``tol``; an
            asymmetric or non-finite input raises ``ValueError`` rather than
            returning False, since it is malformed rather than merely
            sub-uncertainty.
        tol: tolerance on both the symmetry and the minimum eigenvalue.

    Returns:
        True when the minimum eigenvalue of C + (i/2) J is >= -tol.
    """
    C = _as_real_matrix(C, "covariance")
    if np.abs(C - C.T).max() > tol:
        raise ValueError("covariance matrix is not symmetric")
    return uncertainty_eigenvalue(C) >= -tol


def eig_symmetric(A) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a real symmetric matrix.

    Args:
        A: real symmetric matrix.

    Returns:
        Tuple ``(w, Q)`` with eigenvalues ``w`` ascending and orthonormal
        eigenvectors in the columns of ``Q`` such that A = Q diag(w) Q^T.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix contains non-finite entries")
    if np.abs(A - A.T).max() > DEFAULT_TOL * (1 + np.abs(A).max()):
        raise ValueError("matrix is not symmetric")
    w, Q = np.linalg.eigh(A)
    return w, Q


def sqrt_spd(A) -> np.ndarray:
    """Symmetric positive-definite square root of an SPD matrix.

    Args:
        A: real symmetric positive definite matrix.

    Returns:
        Symmetric S with S @ S = A.
    """
    w, Q = eig_symmetric(A)
    if w[0] <= 0:
        raise ValueError(
            f"matrix is not positive definite (min eigenvalue {w[0]:.3e})"
        )
    S = (Q * np.sqrt(w)) @ Q.T
    return (S + S.T) / 2


def symplectic_inverse(L) -> np.ndarray:
    """Inverse of a symplectic matrix via L^{-1} = -J L^T J (no linear solve)."""
    L = _as_real_matrix(L, "L")
    J = symplectic_form(L.shape[0] // 2)
    return -J @ L.T @ J


def complex_action(L, u) -> np.ndarray:
    """Apply a 2n x 2n real symplectic matrix to a complex n-vector.

    With u = x + iy and L in n x n blocks [[A11, A12], [A21, A22]], the image
    is (A11 x + A12 y) + i (A21 x + A22 y), i.e. L acting on the stacked real
    vector (x, y) read back as a complex vector.

    Args:
        L: real 2n x 2n matrix.
        u: complex vector of length n.

    Returns:
        Complex vector L o u of length n.
    """
    L = _as_real_matrix(L, "L")
    u = np.asarray(u, dtype=complex)
    n = L.shape[0] // 2
    if u.shape != (n,):
        raise ValueError(f"expected a length-{n} vector, got shape {u.shape}")
    x, y = u.real, u.imag
    return (L[:n, :n] @ x + L[:n, n:] @ y) + 1j * (L[n:, :n] @ x + L[n:, n:] @ y)


@dataclass(frozen=True)
class WilliamsonForm:
    """Result of a Williamson normal-form decomposition.

    Attributes:
        L: symplectic 2n x 2n matrix with C = L^T diag(nu, nu) L.
        nu: symplectic eigenvalues, sorted descending, each >= 1/2 for an
            admissible covariance.
    """

    L: np.ndarray
    nu: np.ndarray

    def diagonal(self) -> np.ndarray:
        """The diagonal factor diag(nu_1..nu_n, nu_1..nu_n)."""
        return np.diag(np.concatenate([self.nu, self.nu]))


def williamson(C, tol: float = DEFAULT_TOL) -> WilliamsonForm:
    """Williamson normal form of an admissible covariance matrix.

    Finds a symplectic L and symplectic eigenvalues nu (descending) with
    C = L^T diag(nu, nu) L.  The eigenvalues are read off the antisymmetric
    matrix C^{1/2} J C^{1/2}, whose real Schur form consists of 2x2 blocks
    [[0, nu], [-nu, 0]]; this avoids inverting C and stays stable for
    near-pure modes (nu close to 1/2).

    Args:
        C: real symmetric 2n x 2n covariance satisfying the uncertainty
            relation within ``tol``.
        tol: validity tolerance forwarded to :func:`is_valid_covariance`.

    Returns:
        A :class:`WilliamsonForm`.

    Raises:
        ValueError: if C is not an admissible covariance.
        NumericalError: if the reconstruction residuals exceed 1e-8.
    """
    C = _as_real_matrix(C, "covariance")
    if not is_valid_covariance(C, tol):
        raise ValueError(
            "covariance violates the uncertainty relation "
            f"(min eigenvalue of C + (i/2)J is {uncertainty_eigenvalue(C):.3e})"
        )
    C = (C + C.T) / 2
    n = C.shape[0] // 2
    J = symplectic_form(n)
    S = sqrt_spd(C)
    A = S @ J @ S
    T, Q = schur(A)

    # A is real antisymmetric, so T is block diagonal with 2x2 blocks
    # [[0, b], [-b, 0]].  Orient each block so the superdiagonal entry is
    # positive, then regroup the interleaved columns into (x..., y...) order
    # with nu descending.
    pairs = []
    for i in range(n):
        b = T[2 * i, 2 * i + 1]
        if b >= 0:
            pairs.append((b, 2 * i, 2 * i + 1))
        else:
            pairs.append((-b, 2 * i + 1, 2 * i))
    pairs.sort(key=lambda p: -p[0])
    nu = np.array([p[0] for p in pairs])
    perm = [p[1] for p in pairs] + [p[2] for p in pairs]
    Qp = Q[:, perm]

    inv_sqrt = 1 / np.sqrt(np.concatenate([nu, nu]))
    L = (inv_sqrt[:, None] * Qp.T) @ S

    form = WilliamsonForm(L=L, nu=nu)
    res_sympl = np.abs(L.T @ J @ L - J).max()
    res_recon = np.abs(L.T @ form.diagonal() @ L - C).max()
    if res_sympl > _WILLIAMSON_RESIDUAL or res_recon > _WILLIAMSON_RESIDUAL * (
        1 + np.abs(C).max()
    ):
        raise NumericalError(
            "Williamson decomposition failed reconstruction check "
            f"(symplectic residual {res_sympl:.3e}, covariance residual {res_recon:.3e})"
        )
    return form


def squeeze_symplectic(n: int, mode: int, r: float, phi: float = 0.0) -> np.ndarray:
    """Symplectic matrix of a single-mode squeezer.

    Acts on the complex plane of ``mode`` as u -> cosh(r) u - sinh(r) e^{2i phi} conj(u)
    and as the identity elsewhere.

    Args:
        n: total number of modes.
        mode: 0-based mode index.
        r: squeezing magnitude.
        phi: squeezing axis angle.
    """
    _check_mode(n, mode)
    M = np.eye(2 * n)
    c2, s2 = np.cos(2 * phi), np.sin(2 * phi)
    ch, sh = np.cosh(r), np.sinh(r)
    M[mode, mode] = ch - sh * c2
    M[mode, mode + n] = -sh * s2
    M[mode + n, mode] = -sh * s2
    M[mode + n, mode + n] = ch + sh * c2
    return M


def rotation_symplectic(n: int, mode: int, theta: float) -> np.ndarray:
    """Symplectic matrix of a single-mode phase rotation u -> e^{-i theta} u."""
    _check_mode(n, mode)
    M = np.eye(2 * n)
    c, s = np.cos(theta), np.sin(theta)
    M[mode, mode] = c
    M[mode, mode + n] = s
    M[mode + n, mode] = -s
    M[mode + n, mode + n] = c
    return M


def beamsplitter_symplectic(n: int, mode1: int, mode2: int, theta: float) -> np.ndarray:
    """Symplectic matrix of a beamsplitter mixing two modes.

    Acts as the rotation (u_1, u_2) -> (u_1 cos t + u_2 sin t, -u_1 sin t + u_2 cos t)
    identically on the x and y blocks.
    """
    _check_mode(n, mode1)
    _check_mode(n, mode2)
    if mode1 == mode2:
        raise ValueError("beamsplitter requires two distinct modes")
    M = np.eye(2 * n)
    c, s = np.cos(theta), np.sin(theta)
    for off in (0, n):
        M[mode1 + off, mode1 + off] = c
        M[mode1 + off, mode2 + off] = s
        M[mode2 + off, mode1 + off] = -s
        M[mode2 + off, mode2 + off] = c
    return M


def _check_mode(n: int, mode: int) -> None:
    if n < 1:
        raise ValueError(f"mode count must be positive, got {n}")
    if not 0 <= mode < n:
        raise ValueError(f"mode index {mode} out of range for {n} modes")
