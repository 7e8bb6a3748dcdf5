"""Is 1 (x) u in the image of the canonical map?

For the Hopf fibration (k,l) = (1,1) it is, at tensor degree 2.  The search is
exact linear elimination over Q(q), so a reported witness can be checked by
pushing it back through the canonical map.

Run: python3 demos/03_galois_membership.py
"""
from __future__ import annotations

from teardrop.principal import canonical_map, galois_membership

for (k, l), D in (((1, 1), 2), ((2, 1), 4), ((2, 3), 4), ((1, 2), 4)):
    cert = galois_membership(k, l, D)
    print(f"rho_({k},{l}) up to D={D}: {cert.verdict}  "
          f"(candidates={cert.n_vectors}, rank={cert.rank})")
    if cert.member:
        print("  witness:", cert.witness)
        print("  canonical map of the witness:", canonical_map(cert.witness))

# (1,2) is hit as well; see the decisions ledger for the hand check of this witness
