#!/usr/bin/env python3
"""Independent oracle for the core linear-algebra test values.

Computes, with numpy only, the derived constants frozen into
tests/test_core.cpp: partial transposes of the swap/maximally-entangled
pair, the commuting-fidelity closed form, the Werner trace-norm value,
and the spectrum of the real embedding of the antisymmetric Pauli.
"""
import numpy as np

d = 2
F = np.zeros((4, 4))
for i in range(d):
    for j in range(d):
        F[j * d + i, i * d + j] = 1.0

psi = np.zeros(4)
for i in range(d):
    psi[i * d + i] = 1.0 / np.sqrt(d)
PSI = np.outer(psi, psi)


def ptranspose(M, da, db):
    out = np.zeros_like(M)
    for i in range(da):
        for j in range(da):
            out[i * db:(i + 1) * db, j * db:(j + 1) * db] = \
                M[i * db:(i + 1) * db, j * db:(j + 1) * db].T
    return out


print("||F^TB - 2 Psi|| =", np.abs(ptranspose(F, 2, 2) - 2 * PSI).max())
print("||Psi^TB - F/2|| =", np.abs(ptranspose(PSI, 2, 2) - F / 2).max())
print("min eig Psi^TB   =", np.linalg.eigvalsh(ptranspose(PSI, 2, 2)).min())

# commuting fidelity: diag(3/4,1/4) vs I/2
fid = np.sqrt(3 / 4 * 1 / 2) + np.sqrt(1 / 4 * 1 / 2)
print("fidelity diag(3/4,1/4) vs I/2 =", repr(fid))

# Werner trace norm at p = 1/4 against p = 1/2
Ps = (np.eye(4) + F) / 2
Pa = (np.eye(4) - F) / 2
def werner(p):
    return p * Ps / 3 + (1 - p) * Pa
diff = werner(0.25) - werner(0.5)
print("trace_norm(w(1/4)-w(1/2)) =", repr(np.abs(np.linalg.eigvalsh(diff)).sum()))

# real embedding of i(|0><1| - |1><0|)
H = np.array([[0, 1j], [-1j, 0]], dtype=complex)
E = np.block([[H.real, -H.imag], [H.imag, H.real]])
print("embed eigs =", np.linalg.eigvalsh(E))

# partial trace over A: with composite index a*db + b, sum the diagonal blocks
w = werner(0.25)
trA = w[0:2, 0:2] + w[2:4, 2:4]
print("tr_A werner(0.25) =\n", trA)
