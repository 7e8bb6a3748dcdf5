"""Truncated Hilbert-space representations and the numeric pairings.

Run: python3 demos/04_representations.py
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from teardrop import representations as R
from teardrop.ncalg import wp

q = Fraction(1, 2)
rep = R.build_rep("wp_pi_s", k=1, l=2, s=1, q=q, N=64)
print("pi_1 on WP(1,2), N=64: relation residual", f"{R.relation_residual(rep):.2e}",
      "adjoint residual of b", f"{R.adjoint_residual(rep.presentation.gen('b'), rep):.2e}")

print("largest eigenvalues of a:", np.round(R.spectrum_of_a(rep)[:4], 6))
ratios = R.decay_ratios(rep, range(4))
print("successive ratios, a:", np.round(ratios["a"], 6), " b:", np.round(ratios["b"], 6))

# the trace of a^m converges to q^{2ms}/(1-q^{2ml})
W = wp(1, 2)
for m in (1, 2, 3):
    exact = float(q ** (2 * m) / (1 - q ** (4 * m)))
    print(f"Tr pi_1(a^{m}) = {R.truncated_trace(W.word(*('a',) * m), 1, 256, q):.15f}  exact {exact:.15f}")

print("\ninterleaver residual for (k,l)=(1,2):", f"{R.interleaver_check(1, 2, q, 128):.2e}")

report = R.index_pairing_report(2, 256, 40, q)
for row in report["rows"]:
    how = "printed product" if row["printed_converged"] else "spectral indicator"
    print(f"<tau_{row['s']}, P^{row['t']}> = {row['value']:+.10f}  via {how}")
