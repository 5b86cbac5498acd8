#!/usr/bin/env python3
# Copyright 2026 The paulimeas Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates tests/fixtures/h2_sto3g_scbk.txt.

H2 at 0.7414 angstrom in STO-3G, qubit Hamiltonian from the symmetry-conserving
Bravyi-Kitaev transform (4 spin orbitals, 2 electrons -> 2 qubits).

Needs: pip install openfermion openfermionpyscf
"""

import argparse
import sys

import openfermion as of
from openfermionpyscf import run_pyscf

BOND_LENGTH = 0.7414


def build_hamiltonian():
    geometry = [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, BOND_LENGTH))]
    mol = of.MolecularData(geometry, "sto-3g", multiplicity=1, charge=0)
    mol = run_pyscf(mol, run_scf=True, run_fci=True)
    fermion = of.get_fermion_operator(mol.get_molecular_hamiltonian())
    qubit = of.symmetry_conserving_bravyi_kitaev(fermion, 4, 2)
    qubit.compress()
    return qubit, mol.fci_energy


def format_terms(qubit, fci):
    lines = [
        "# Copyright 2026 The paulimeas Authors",
        "# SPDX-License-Identifier: Apache-2.0",
        "# H2, STO-3G, bond length %.4f A, symmetry-conserving Bravyi-Kitaev" % BOND_LENGTH,
        "# generated by scripts/generate_h2_fixture.py; FCI energy %.12f Ha" % fci,
        "qubits: %d" % of.count_qubits(qubit),
    ]
    for term, coeff in sorted(qubit.terms.items()):
        if abs(coeff.imag) > 1e-12:
            raise ValueError("complex coefficient for %r" % (term,))
        factors = " ".join("%s%d" % (letter, index) for index, letter in term)
        lines.append(("%.17g %s" % (coeff.real, factors or "I")).rstrip())
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-o", "--output", default="-", help="output path (default stdout)")
    args = parser.parse_args()
    qubit, fci = build_hamiltonian()
    text = format_terms(qubit, fci)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as f:
            f.write(text)


if __name__ == "__main__":
    main()
