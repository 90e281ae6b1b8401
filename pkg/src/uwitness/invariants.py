"""Pauli decomposition and local-unitary invariants of a two-qubit state.

The Bloch data (s, p, beta) — one-qubit vectors and the 3x3 correlation
matrix — transform under local unitaries by independent SO(3) rotations.
The Makhlin polynomial invariants built from them determine the state up to
local unitaries; six specific combinations already fix the moments of the
partially transposed state, hence the witness.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .witness import MomentSet

PAULI = tuple(
    np.array(m, dtype=complex)
    for m in (
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    )
)

_EPS = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _EPS[_i, _j, _k] = 1.0
    _EPS[_k, _j, _i] = -1.0


@dataclass(frozen=True)
class BlochDecomposition:
    """Local Bloch vectors s (side a), p (side b) and correlation matrix beta."""

    s: np.ndarray
    p: np.ndarray
    beta: np.ndarray


def decompose(rho: np.ndarray) -> BlochDecomposition:
    """Pauli expectation values of a two-qubit state.

    s_i = tr[(sigma_i x I) rho], p_j = tr[(I x sigma_j) rho],
    beta_ij = tr[(sigma_i x sigma_j) rho]; all real for a valid state.
    """
    rho = np.asarray(rho, dtype=complex)
    s = np.array([np.trace(np.kron(PAULI[i], PAULI[0]) @ rho).real for i in (1, 2, 3)])
    p = np.array([np.trace(np.kron(PAULI[0], PAULI[j]) @ rho).real for j in (1, 2, 3)])
    beta = np.array(
        [[np.trace(np.kron(PAULI[i], PAULI[j]) @ rho).real for j in (1, 2, 3)] for i in (1, 2, 3)]
    )
    return BlochDecomposition(s=s, p=p, beta=beta)


def reconstruct(bloch: BlochDecomposition) -> np.ndarray:
    """Rebuild the density matrix from its Bloch data."""
    rho = np.kron(PAULI[0], PAULI[0]).astype(complex)
    for i in range(3):
        rho += bloch.s[i] * np.kron(PAULI[i + 1], PAULI[0])
        rho += bloch.p[i] * np.kron(PAULI[0], PAULI[i + 1])
        for j in range(3):
            rho += bloch.beta[i, j] * np.kron(PAULI[i + 1], PAULI[j + 1])
    return rho / 4.0


@dataclass(frozen=True)
class MakhlinInvariants:
    """Local-unitary invariants of a two-qubit state.

    i1..i14 follow Makhlin's numbering (the subset needed here); x1..x4 are
    the moment-generating combinations and y1..y6 the minimal six that fix
    all three moments of the partially transposed state.
    """

    i1: float
    i2: float
    i3: float
    i4: float
    i5: float
    i7: float
    i8: float
    i12: float
    i14: float
    x1: float
    x2: float
    x3: float
    x4: float
    y1: float
    y2: float
    y3: float
    y4: float
    y5: float
    y6: float


def makhlin(bloch: BlochDecomposition) -> MakhlinInvariants:
    """Evaluate the invariants from Bloch data."""
    s, p, beta = bloch.s, bloch.p, bloch.beta
    btb = beta.T @ beta
    i1 = float(np.linalg.det(beta))
    i2 = float(np.trace(btb))
    i3 = float(np.trace(btb @ btb))
    i4 = float(s @ s)
    i5 = float((s @ beta) @ (s @ beta))
    i7 = float(p @ p)
    i8 = float((beta @ p) @ (beta @ p))
    i12 = float(s @ beta @ p)
    i14 = float(np.einsum("ijk,lmn,i,l,jm,kn->", _EPS, _EPS, s, p, beta, beta))
    x1 = i2 + i4 + i7
    x2 = i1 + i12
    x3 = i2 ** 2 - i3
    x4 = i5 + i8 + i14 + i4 * i7
    return MakhlinInvariants(
        i1=i1, i2=i2, i3=i3, i4=i4, i5=i5, i7=i7, i8=i8, i12=i12, i14=i14,
        x1=x1, x2=x2, x3=x3, x4=x4,
        y1=i2, y2=i3, y3=i4, y4=i7, y5=i1 + i12, y6=i5 + i8 + i14,
    )


def moments_from_invariants(inv: MakhlinInvariants) -> MomentSet:
    """Moments of the partially transposed state from the six y-invariants.

    Deliberately reads only y1..y6 so the six-parameter sufficiency is a
    structural property of the code, not an accident of algebra:

        4  pi2 = 1 + x1
        16 pi3 = 1 + 3 x1 + 6 x2
        64 pi4 = 1 + 6 x1 + 24 x2 + x1^2 + 2 x3 + 4 x4
    """
    x1 = inv.y1 + inv.y3 + inv.y4
    x2 = inv.y5
    x3 = inv.y1 ** 2 - inv.y2
    x4 = inv.y6 + inv.y3 * inv.y4
    return MomentSet(
        pi2=(1.0 + x1) / 4.0,
        pi3=(1.0 + 3.0 * x1 + 6.0 * x2) / 16.0,
        pi4=(1.0 + 6.0 * x1 + 24.0 * x2 + x1 ** 2 + 2.0 * x3 + 4.0 * x4) / 64.0,
        source="invariants",
    )


def moments_via_invariants(rho: np.ndarray) -> MomentSet:
    """Convenience chain: decompose -> makhlin -> moments."""
    return moments_from_invariants(makhlin(decompose(rho)))


def strip_raw_invariants(inv: MakhlinInvariants) -> MakhlinInvariants:
    """Copy with the i-fields zeroed; moments_from_invariants must not notice."""
    return replace(inv, i1=0.0, i2=0.0, i3=0.0, i4=0.0, i5=0.0, i7=0.0, i8=0.0, i12=0.0, i14=0.0)


def apply_local_unitary(rho: np.ndarray, u_a: np.ndarray, u_b: np.ndarray) -> np.ndarray:
    """(u_a x u_b) rho (u_a x u_b)^dag."""
    u = np.kron(np.asarray(u_a, dtype=complex), np.asarray(u_b, dtype=complex))
    return u @ np.asarray(rho, dtype=complex) @ u.conj().T
