#!/usr/bin/env python3
# Copyright 2026 The VAns Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate H2 / STO-3G qubit Hamiltonians (Jordan-Wigner) as Pauli-sum files.

Integrals come from PySCF (RHF). The second-quantized Hamiltonian is built as
a dense 16x16 matrix over interleaved spin orbitals (qubit 2p + s holds
spatial orbital p with spin s) and projected onto the Pauli basis.

Usage: python3 scripts/gen_h2_hamiltonians.py data/h2
"""
import itertools
import os
import sys

import numpy as np
from pyscf import ao2mo, gto, scf

BOND_LENGTHS = [0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.74, 0.8, 0.9, 1.0,
                1.1, 1.2, 1.4, 1.6, 1.8, 2.0]

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)
LOWER = np.array([[0, 1], [0, 0]], dtype=complex)  # |0><1|: removes a particle
PAULI = {"I": I2, "X": X, "Y": Y, "Z": Z}


def kron_all(mats):
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def annihilator(j, n):
    return kron_all([Z] * j + [LOWER] + [I2] * (n - j - 1))


def h2_qubit_matrix(bond):
    mol = gto.M(atom=f"H 0 0 0; H 0 0 {bond}", basis="sto-3g", unit="Angstrom",
                verbose=0)
    mf = scf.RHF(mol).run()
    c = mf.mo_coeff
    h1 = c.T @ mf.get_hcore() @ c
    norb = c.shape[1]
    eri = ao2mo.restore(1, ao2mo.kernel(mol, c), norb)  # chemists' (pq|rs)
    nq = 2 * norb
    a = [annihilator(j, nq) for j in range(nq)]
    ad = [m.conj().T for m in a]
    H = mol.energy_nuc() * np.eye(2 ** nq, dtype=complex)
    for p, q in itertools.product(range(norb), repeat=2):
        for s in range(2):
            H += h1[p, q] * ad[2 * p + s] @ a[2 * q + s]
    for p, q, r, t in itertools.product(range(norb), repeat=4):
        v = eri[p, q, r, t]
        if abs(v) < 1e-14:
            continue
        for s1, s2 in itertools.product(range(2), repeat=2):
            H += 0.5 * v * (ad[2 * p + s1] @ ad[2 * r + s2] @ a[2 * t + s2]
                            @ a[2 * q + s1])
    return H, nq


def pauli_terms(H, nq):
    dim = 2 ** nq
    terms = []
    for word in itertools.product("IXYZ", repeat=nq):
        P = kron_all([PAULI[w] for w in word])
        coeff = np.trace(P @ H) / dim
        assert abs(coeff.imag) < 1e-12
        if abs(coeff.real) > 1e-12:
            terms.append((coeff.real, "".join(word)))
    return terms


def main(outdir):
    os.makedirs(outdir, exist_ok=True)
    for bond in BOND_LENGTHS:
        H, nq = h2_qubit_matrix(bond)
        terms = pauli_terms(H, nq)
        e0 = np.linalg.eigvalsh(H)[0]
        path = os.path.join(outdir, f"h2_{bond:.2f}.txt")
        with open(path, "w") as f:
            f.write("# H2 molecule, STO-3G basis, Jordan-Wigner encoding\n")
            f.write(f"# bond length {bond:.2f} Angstrom; energies in Hartree\n")
            f.write("# generated by scripts/gen_h2_hamiltonians.py (PySCF RHF integrals)\n")
            f.write(f"# dense-diagonalization ground energy {e0:.12f}\n")
            f.write(f"QUBITS {nq}\n")
            for coeff, word in terms:
                f.write(f"{coeff:.17g} {word}\n")
        print(path, len(terms), e0)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/h2")
