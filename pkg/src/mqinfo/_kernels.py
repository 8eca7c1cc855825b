"""Hot numeric kernels: Pauli-string action on state vectors and density matrices.

Two implementations are provided: a numba @njit path and a pure-numpy
vectorized path.  Selection happens once at import time via the
``MQINFO_NUMBA`` environment variable:

    MQINFO_NUMBA=0   force the pure-numpy fallback
    (unset or 1)     use numba when importable, numpy otherwise

All kernels take a Pauli string encoded as integer bit masks over the
amplitude index.  ``x_mask`` holds the bits flipped by X and Y letters,
``z_mask`` the bits that pick up a (-1)^bit sign from Z and Y letters.
The Y phase convention is sigma_y|0> = i|1>, sigma_y|1> = -i|0>, i.e. each
Y letter contributes a factor i*(-1)^bit; the accumulated i^(#Y) prefactor
is applied by the caller.
"""

import os

import numpy as np

_flag = os.environ.get("MQINFO_NUMBA", "1").strip().lower()
_want_numba = _flag not in ("0", "off", "false", "no")

HAVE_NUMBA = False
if _want_numba:
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        HAVE_NUMBA = False


# ---------------------------------------------------------------------------
# pure-numpy implementations
# ---------------------------------------------------------------------------

def expect_pure_numpy(psi, x_mask, z_mask):
    """Sum_b conj(psi[b^x]) * (-1)^popcount(b&z) * psi[b], without the i^nY factor."""
    dim = psi.shape[0]
    idx = np.arange(dim, dtype=np.uint64)
    signs = 1.0 - 2.0 * (np.bitwise_count(idx & np.uint64(z_mask)) & 1)
    return np.sum(np.conj(psi[idx ^ np.uint64(x_mask)]) * signs * psi)


def apply_pure_numpy(psi, x_mask, z_mask, phase0):
    """Return P|psi> where phase0 = i^(#Y letters)."""
    dim = psi.shape[0]
    idx = np.arange(dim, dtype=np.uint64)
    signs = 1.0 - 2.0 * (np.bitwise_count(idx & np.uint64(z_mask)) & 1)
    out = np.empty(dim, dtype=np.complex128)
    out[idx ^ np.uint64(x_mask)] = phase0 * signs * psi
    return out


def expect_mixed_numpy(rho, x_mask, z_mask):
    """Sum_b rho[b, b^x] * (-1)^popcount(b&z), without the i^nY factor."""
    dim = rho.shape[0]
    idx = np.arange(dim, dtype=np.uint64)
    signs = 1.0 - 2.0 * (np.bitwise_count(idx & np.uint64(z_mask)) & 1)
    return np.sum(rho[idx, idx ^ np.uint64(x_mask)] * signs)


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _parity(v):
        v ^= v >> 16
        v ^= v >> 8
        v ^= v >> 4
        v ^= v >> 2
        v ^= v >> 1
        return v & 1

    @njit(cache=True)
    def expect_pure_numba(psi, x_mask, z_mask):
        acc = 0.0 + 0.0j
        for b in range(psi.shape[0]):
            term = np.conj(psi[b ^ x_mask]) * psi[b]
            if _parity(b & z_mask):
                acc -= term
            else:
                acc += term
        return acc

    @njit(cache=True)
    def apply_pure_numba(psi, x_mask, z_mask, phase0):
        out = np.empty(psi.shape[0], dtype=np.complex128)
        for b in range(psi.shape[0]):
            if _parity(b & z_mask):
                out[b ^ x_mask] = -phase0 * psi[b]
            else:
                out[b ^ x_mask] = phase0 * psi[b]
        return out

    @njit(cache=True)
    def expect_mixed_numba(rho, x_mask, z_mask):
        acc = 0.0 + 0.0j
        for b in range(rho.shape[0]):
            term = rho[b, b ^ x_mask]
            if _parity(b & z_mask):
                acc -= term
            else:
                acc += term
        return acc

    expect_pure = expect_pure_numba
    apply_pure = apply_pure_numba
    expect_mixed = expect_mixed_numba
    BACKEND = "numba"
else:
    expect_pure_numba = None
    apply_pure_numba = None
    expect_mixed_numba = None

    expect_pure = expect_pure_numpy
    apply_pure = apply_pure_numpy
    expect_mixed = expect_mixed_numpy
    BACKEND = "numpy"
