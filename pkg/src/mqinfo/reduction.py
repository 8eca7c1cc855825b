"""Partial traces, purities, and the spin-flip (time-reversal) transform.

Reduced matrices keep qubits in ascending original index.  The pure-state
partial trace contracts amplitudes directly (never forms the full density
matrix), which is what makes the n=10 fast path cheap.
"""

import numpy as np

from .statekit import MixedState, PureState

IMAG_TOL = 1e-10


def _split_axes(n, keep):
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("empty keep set")
    if keep[0] < 1 or keep[-1] > n:
        raise ValueError(f"keep set {keep} outside qubit range 1..{n}")
    keep_axes = [q - 1 for q in keep]
    env_axes = [a for a in range(n) if a not in keep_axes]
    return keep, keep_axes, env_axes


def _pure_block(psi, keep):
    """Amplitudes reshaped to (2^|keep|, 2^|env|) with kept qubits leading."""
    n = psi.num_qubits
    keep, keep_axes, env_axes = _split_axes(n, keep)
    tensor = psi.amplitudes.reshape((2,) * n)
    block = tensor.transpose(keep_axes + env_axes).reshape(2 ** len(keep), -1)
    return block


def partial_trace(source, keep):
    """Reduced density matrix over ``keep`` (1-based qubit indices)."""
    if isinstance(source, PureState):
        block = _pure_block(source, keep)
        rho = block @ block.conj().T
        rho = 0.5 * (rho + rho.conj().T)
        return MixedState(len(set(keep)), rho)

    m = source.num_qubits
    keep, keep_axes, env_axes = _split_axes(m, keep)
    k = len(keep)
    if k == m:
        return source
    tensor = source.matrix.reshape((2,) * (2 * m))
    perm = (
        keep_axes
        + env_axes
        + [m + a for a in keep_axes]
        + [m + a for a in env_axes]
    )
    t = tensor.transpose(perm).reshape(2**k, 2 ** (m - k), 2**k, 2 ** (m - k))
    rho = np.einsum("iaja->ij", t)
    rho = 0.5 * (rho + rho.conj().T)
    return MixedState(k, rho)


def purity(rho):
    """tr(rho^2)."""
    return float(np.sum(np.abs(rho.matrix) ** 2))


def subset_purity(psi, keep):
    """tr(rho_keep^2) for a pure state, via the smaller Schmidt block."""
    block = _pure_block(psi, keep)
    dk, de = block.shape
    gram = block @ block.conj().T if dk <= de else block.conj().T @ block
    return float(np.sum(np.abs(gram) ** 2))


def _flip_conjugate(mat, m):
    dim = 2**m
    idx = np.arange(dim)
    flip = idx ^ (dim - 1)
    signs = 1.0 - 2.0 * (np.bitwise_count(idx.astype(np.uint64)) & 1).astype(float)
    # (Y^m rho* Y^m)[a,b] = (-1)^(pc(a)+pc(b)) conj(rho[~a, ~b])
    return np.outer(signs, signs) * np.conj(mat[np.ix_(flip, flip)])


def spin_flip(rho):
    """Time-reversed density matrix (sigma_y^m) rho* (sigma_y^m); an involution."""
    return MixedState(rho.num_qubits, _flip_conjugate(rho.matrix, rho.num_qubits))


def tilde_overlap(rho):
    """tr(rho rho~) with rho~ the spin-flipped matrix; real, in [0, 1]."""
    tilde = _flip_conjugate(rho.matrix, rho.num_qubits)
    val = np.trace(rho.matrix @ tilde)
    assert abs(val.imag) < IMAG_TOL, f"non-real tilde overlap: {val!r}"
    return float(val.real)
