"""Scalar measures: single-qubit and subset information values, their totals,
linear entropies, the even-n tangle, and two-qubit squared concurrence.

Subset encoding: a subset of qubits {i1 < i2 < ...} is stored as a sorted
tuple of 1-based indices.  Internally the fast path walks bitmasks where bit
(i-1) stands for qubit i.

Two routes exist for the information values:
  * the direct route sums squared Pauli-string expectations (3^|S| strings
    per subset) -- this is the defining formula and serves as the oracle;
  * the fast route derives every subset value from subset purities by
    inclusion-exclusion over sub-subsets, one partial trace per subset.
"""

from dataclasses import dataclass, field

import numpy as np

from .pauli import expectation_mixed, expectation_pure, strings_on_support
from .reduction import subset_purity
from ._kernels import apply_pure as _apply_kernel


def _mask_to_subset(mask):
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _subset_to_mask(subset):
    mask = 0
    for q in subset:
        mask |= 1 << (q - 1)
    return mask


@dataclass
class InfoTable:
    """Information value for every non-empty qubit subset."""

    num_qubits: int
    entries: dict = field(default_factory=dict)

    def get(self, subset):
        return self.entries[tuple(sorted(subset))]

    def subsets(self):
        """Subsets in ascending (size, indices) order."""
        return sorted(self.entries, key=lambda s: (len(s), s))

    def local_total(self):
        return sum(v for s, v in self.entries.items() if len(s) == 1)

    def nonlocal_total(self):
        return sum(v for s, v in self.entries.items() if len(s) >= 2)

    def total(self):
        return sum(self.entries.values())

    def to_json_obj(self):
        return {
            "n": self.num_qubits,
            "entries": [
                {"subset": list(s), "I": self.entries[s]} for s in self.subsets()
            ],
        }

    def to_csv_rows(self):
        """Rows (subset, size, I) with subset rendered as e.g. '1-2-3'."""
        return [
            ("-".join(map(str, s)), len(s), self.entries[s]) for s in self.subsets()
        ]


# ---------------------------------------------------------------------------
# direct (enumeration) route
# ---------------------------------------------------------------------------

def info_single(psi, i):
    """I_i: sum of squared X/Y/Z expectations on qubit i."""
    if not (1 <= i <= psi.num_qubits):
        raise ValueError(f"qubit index {i} outside 1..{psi.num_qubits}")
    return sum(
        expectation_pure(psi, p) ** 2
        for p in strings_on_support(psi.num_qubits, (i,))
    )


def info_subset(psi, subset):
    """I_S for |S| >= 2: the 3^|S|-term squared-expectation sum, minus 1."""
    subset = tuple(sorted(set(subset)))
    if len(subset) < 2:
        raise ValueError(f"subset {subset} too small; need at least 2 qubits")
    f = sum(
        expectation_pure(psi, p) ** 2
        for p in strings_on_support(psi.num_qubits, subset)
    )
    return f - 1.0


def all_infos_enumerated(psi):
    """Complete InfoTable via the direct route (oracle; use for n <= 6)."""
    n = psi.num_qubits
    table = InfoTable(n)
    for mask in range(1, 2**n):
        subset = _mask_to_subset(mask)
        if len(subset) == 1:
            table.entries[subset] = info_single(psi, subset[0])
        else:
            table.entries[subset] = info_subset(psi, subset)
    return table


# ---------------------------------------------------------------------------
# fast route: subset purities + inclusion-exclusion
# ---------------------------------------------------------------------------

def all_infos_fast(psi):
    """Complete InfoTable from subset purities.

    For each subset S let G(S) = 2^|S| tr(rho_S^2).  The Bloch decomposition
    of rho_S gives G(S) = sum over all Pauli strings supported *within* S of
    the squared expectation, so the exact-support sums F_S follow by
    subtracting all proper-subset contributions (F of the empty set is 1).
    """
    n = psi.num_qubits
    f = np.empty(2**n)
    f[0] = 1.0
    masks = sorted(range(1, 2**n), key=lambda m: (m.bit_count(), m))
    for mask in masks:
        size = mask.bit_count()
        g = (2.0**size) * subset_purity(psi, _mask_to_subset(mask))
        acc = f[0]
        sub = (mask - 1) & mask
        while sub:
            acc += f[sub]
            sub = (sub - 1) & mask
        f[mask] = g - acc
    table = InfoTable(n)
    for mask in masks:
        subset = _mask_to_subset(mask)
        val = f[mask] if len(subset) == 1 else f[mask] - 1.0
        table.entries[subset] = float(val)
    return table


def all_infos_mixed(rho):
    """Complete InfoTable for a density matrix, via tr(rho P) expectations.

    The pure-state defining formulas are reused verbatim with mixed-state
    expectations; this is the declared extension backing the total-information
    inequality for mixed states.
    """
    m = rho.num_qubits
    table = InfoTable(m)
    for mask in range(1, 2**m):
        subset = _mask_to_subset(mask)
        f = sum(
            expectation_mixed(rho, p) ** 2 for p in strings_on_support(m, subset)
        )
        table.entries[subset] = f if len(subset) == 1 else f - 1.0
    return table


def local_info(psi):
    """Sum of all single-qubit information values."""
    return sum(info_single(psi, i) for i in range(1, psi.num_qubits + 1))


def nonlocal_info(psi):
    """Sum of I_S over all subsets with at least two qubits."""
    table = all_infos_fast(psi)
    return table.nonlocal_total()


# ---------------------------------------------------------------------------
# linear entropies and tangles
# ---------------------------------------------------------------------------

def tau_linear_entropy(psi, subset):
    """2(1 - tr(rho_S^2)) for a proper non-empty subset S."""
    subset = tuple(sorted(set(subset)))
    if not subset:
        raise ValueError("empty subset")
    if len(subset) >= psi.num_qubits:
        raise ValueError("subset must be a proper subset of the qubits")
    return 2.0 * (1.0 - subset_purity(psi, subset))


def n_tangle(psi):
    """|<psi| sigma_y^n |psi*>|^2 for even qubit count."""
    n = psi.num_qubits
    if n % 2 != 0:
        raise ValueError(f"n-tangle requires an even qubit count, got {n}")
    full = (1 << n) - 1
    flipped = _apply_kernel(np.conj(psi.amplitudes), full, full, 1j**n)
    val = np.vdot(psi.amplitudes, flipped)
    return float(abs(val) ** 2)


def concurrence_sq_2q(psi):
    """Squared concurrence 4|a0 a3 - a1 a2|^2 of a two-qubit pure state."""
    if psi.num_qubits != 2:
        raise ValueError("concurrence is defined here for exactly 2 qubits")
    a = psi.amplitudes
    return float(4.0 * abs(a[0] * a[3] - a[1] * a[2]) ** 2)
