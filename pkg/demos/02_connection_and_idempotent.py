"""A strong connection on the lens space and the idempotent it produces.

Run: python3 demos/02_connection_and_idempotent.py
"""
from __future__ import annotations

from teardrop.chern import chern_pairing
from teardrop.principal import idempotent, strong_connection, trace_formula, verify_strong

l = 2
om = strong_connection(l, 1)
print(f"omega(u) for l={l} has {len(om)} terms")
for c, left, right in om:
    print(f"  {c}  {' '.join(left) or '1'} (x) {' '.join(right) or '1'}")

rep = verify_strong(l, 3)
print("\nstrong connection axioms for |n| <= 3:", "ok" if rep.ok else rep.violations())

E = idempotent(l, 1)
print(f"\nE[1] is {E.size}x{E.size} over WP(1,{l}); idempotent: {E.is_idempotent()}")
print("Tr E[1] =", E.trace())
print("closed form matches:", E.trace() == trace_formula(l))

# the trace pairs with every tau_s to the same integer
for s in range(1, l + 1):
    print(f"tau_{s}(Tr E[1]) =", chern_pairing(l, s))
