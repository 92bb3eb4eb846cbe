"""Two-qubit polarization algebra: states, waveplate projectors, entanglement
metrics.

Basis ordering is {HH, HV, VH, VV} everywhere; serialized density matrices
carry it explicitly.  Waveplate conventions (fixed, covered by the
conformance table in the test data):

* a half-wave plate at angle ``theta`` turns a PBS transmitted-H analyzer
  into a linear-polarization analyzer at angle ``2 * theta``;
* a quarter-wave plate follows R(q) diag(1, i) R(-q), so the pair
  (QWP 45 deg, HWP 0 deg) analyzes right-circular (H + iV)/sqrt(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

BASIS = ("HH", "HV", "VH", "VV")

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


# ---------------------------------------------------------------------------
# Hermitian eigenproblem (cyclic Jacobi, complex)
# ---------------------------------------------------------------------------

def eig_hermitian(matrix, tol: float = 1e-14, max_sweeps: int = 100):
    """Eigenvalues and orthonormal eigenvectors of a Hermitian matrix.

    Cyclic Jacobi rotations with complex phase, iterated until the
    off-diagonal Frobenius norm drops below ``tol`` (relative to the matrix
    norm for matrices larger than unit scale).  Returns ``(w, V)`` with
    eigenvalues ``w`` sorted descending and eigenvectors in the columns of
    ``V``; the residual ``A @ v - w * v`` is at the 1e-10 * ||A|| level.

    Raises :class:`DomainError` if the input is not Hermitian within 1e-10.
    """
    a = np.array(matrix, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DomainError(f"eig_hermitian: expected a square matrix, got shape {a.shape}")
    scale = np.linalg.norm(a)
    if np.max(np.abs(a - a.conj().T)) > 1e-10 * max(1.0, scale):
        raise DomainError("eig_hermitian: input is not Hermitian within 1e-10")
    a = 0.5 * (a + a.conj().T)  # symmetrize round-off
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, scale)

    for _ in range(max_sweeps):
        off = math.sqrt(
            sum(abs(a[i, j]) ** 2 for i in range(n) for j in range(n) if i != j)
        )
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                if abs(g) == 0.0:
                    continue
                # Unitary 2x2 rotation with phase that zeroes a[p, q].
                phi = math.atan2(g.imag, g.real)
                tau = (a[q, q].real - a[p, p].real) / (2.0 * abs(g))
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c * complex(math.cos(phi), math.sin(phi))
                jp = a[:, p] * c - a[:, q] * np.conj(s)
                jq = a[:, p] * s + a[:, q] * c
                a[:, p], a[:, q] = jp, jq
                jp = a[p, :] * c - a[q, :] * s
                jq = a[p, :] * np.conj(s) + a[q, :] * c
                a[p, :], a[q, :] = jp, jq
                vp = v[:, p] * c - v[:, q] * np.conj(s)
                vq = v[:, p] * s + v[:, q] * c
                v[:, p], v[:, q] = vp, vq

    w = np.real(np.diag(a))
    order = np.argsort(w)[::-1]
    return w[order], v[:, order]


def sqrtm_psd(matrix):
    """Matrix square root of a Hermitian PSD matrix.

    Eigenvalues below zero (tolerance-level PSD violations) are clamped to 0
    before rooting, so near-physical reconstructions never produce complex
    roots.
    """
    w, v = eig_hermitian(matrix)
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


# ---------------------------------------------------------------------------
# States
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """A physical two-qubit polarization density matrix in the {HH, HV, VH, VV} basis.

    Construction validates Hermiticity (1e-12), unit trace (1e-12) and
    positive semidefiniteness (eigenvalues >= -1e-10).
    """

    rho: np.ndarray

    def __post_init__(self):
        rho = np.array(self.rho, dtype=complex)
        if rho.shape != (4, 4):
            raise DomainError(f"TwoQubitState: expected 4x4 matrix, got shape {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_TOL:
            raise DomainError("TwoQubitState: matrix is not Hermitian within 1e-12")
        tr = np.trace(rho).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise DomainError(f"TwoQubitState: trace must be 1 within 1e-12, got {tr!r}")
        w, _ = eig_hermitian(rho)
        if w[-1] < -PSD_TOL:
            raise DomainError(
                f"TwoQubitState: negative eigenvalue {w[-1]:.3e} beyond tolerance"
            )
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)

    def probability(self, setting: "AnalyzerSetting") -> float:
        """tr(P rho) for the projector of ``setting``."""
        return float(np.real(np.trace(projector(setting) @ self.rho)))


def bell_psi_plus() -> TwoQubitState:
    """The triplet Bell state (|HV> + |VH>)/sqrt(2) as a density matrix."""
    psi = np.zeros(4, dtype=complex)
    psi[1] = psi[2] = 1.0 / math.sqrt(2.0)
    return TwoQubitState(np.outer(psi, psi.conj()))


def maximally_mixed() -> TwoQubitState:
    """The maximally mixed two-qubit state I/4."""
    return TwoQubitState(np.eye(4, dtype=complex) / 4.0)


# ---------------------------------------------------------------------------
# Analyzer settings and Jones calculus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AnalyzerSetting:
    """Waveplate angles (degrees) for the two analysis arms.

    QWP angles are ``None`` when no quarter-wave plate is in the arm.  All
    angles are normalized into [0, 180).
    """

    hwp_s: float
    hwp_i: float
    qwp_s: float | None = None
    qwp_i: float | None = None

    def __post_init__(self):
        for name in ("hwp_s", "hwp_i", "qwp_s", "qwp_i"):
            value = getattr(self, name)
            if value is None:
                continue
            if not math.isfinite(value):
                raise DomainError(f"AnalyzerSetting.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value) % 180.0)


def jones_hwp(theta_deg: float) -> np.ndarray:
    """Jones matrix of a half-wave plate with fast axis at ``theta_deg``."""
    x = math.radians(2.0 * (theta_deg % 180.0))
    c, s = math.cos(x), math.sin(x)
    return np.array([[c, s], [s, -c]], dtype=complex)


def jones_qwp(theta_deg: float) -> np.ndarray:
    """Jones matrix of a quarter-wave plate with fast axis at ``theta_deg``."""
    x = math.radians(theta_deg % 180.0)
    c, s = math.cos(x), math.sin(x)
    rot = np.array([[c, -s], [s, c]])
    return rot @ np.diag([1.0, 1.0j]) @ rot.T


def analyzer_ket(hwp_deg: float, qwp_deg: float | None = None) -> np.ndarray:
    """Single-arm polarization state accepted by QWP -> HWP -> PBS(transmit H).

    The accepted ket is the chain's adjoint applied to |H>; without a QWP it
    is linear polarization at angle ``2 * hwp_deg``.
    """
    ket = jones_hwp(hwp_deg).conj().T @ np.array([1.0, 0.0], dtype=complex)
    if qwp_deg is not None:
        ket = jones_qwp(qwp_deg).conj().T @ ket
    return ket


def projector(setting: AnalyzerSetting) -> np.ndarray:
    """Rank-1 projector |a><a| (x) |b><b| for a two-arm analyzer setting."""
    ket_s = analyzer_ket(setting.hwp_s, setting.qwp_s)
    ket_i = analyzer_ket(setting.hwp_i, setting.qwp_i)
    ket = np.kron(ket_s, ket_i)
    return np.outer(ket, ket.conj())


# ---------------------------------------------------------------------------
# Entanglement and state metrics
# ---------------------------------------------------------------------------

def concurrence(state: TwoQubitState | np.ndarray) -> float:
    """Wootters concurrence of a physical two-qubit state.

    Computed through the Hermitian route: the lambda_i are the square roots
    of the eigenvalues of sqrt(rho) rho_tilde sqrt(rho) with
    rho_tilde = (sy (x) sy) rho* (sy (x) sy), sorted descending, and
    C = max(0, l1 - l2 - l3 - l4).
    """
    rho = state.rho if isinstance(state, TwoQubitState) else TwoQubitState(state).rho
    rho_tilde = _YY @ rho.conj() @ _YY
    root = sqrtm_psd(rho)
    m = root @ rho_tilde @ root
    w, _ = eig_hermitian(0.5 * (m + m.conj().T))
    lam = np.sqrt(np.clip(w, 0.0, None))
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def purity(state: TwoQubitState) -> float:
    """tr(rho^2), in [1/4, 1] for two qubits."""
    return float(np.real(np.trace(state.rho @ state.rho)))


def fidelity(state: TwoQubitState, target: TwoQubitState) -> float:
    """Fidelity against a pure target: <psi|rho|psi>.

    The target must be pure (purity within 1e-9 of 1); the general mixed-state
    fidelity is not needed here.
    """
    if abs(purity(target) - 1.0) > 1e-9:
        raise DomainError("fidelity: target state must be pure")
    w, v = eig_hermitian(target.rho)
    psi = v[:, 0]
    return float(np.real(psi.conj() @ state.rho @ psi))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def density_matrix_to_json(state: TwoQubitState | np.ndarray) -> dict:
    """JSON-ready dict: 4x4 nested lists of [re, im] plus the basis labels."""
    rho = state.rho if isinstance(state, TwoQubitState) else np.asarray(state, dtype=complex)
    return {
        "basis": list(BASIS),
        "rho": [[[float(z.real), float(z.imag)] for z in row] for row in rho],
    }


def density_matrix_from_json(doc: dict) -> TwoQubitState:
    """Inverse of :func:`density_matrix_to_json`; validates the basis field."""
    if list(doc.get("basis", [])) != list(BASIS):
        raise DomainError(f"density matrix document must carry basis {list(BASIS)}")
    rho = np.array(
        [[complex(entry[0], entry[1]) for entry in row] for row in doc["rho"]],
        dtype=complex,
    )
    return TwoQubitState(rho)
