"""Normal forms in the three algebras and the embedding of the teardrop.

Run: python3 demos/01_normal_forms.py
"""
from __future__ import annotations

from teardrop.ncalg import confluence_check, lens, normal_form, parse_element, su2, theta, wp

W = wp(1, 2)
print("WP_q(1,2) has", len(W.rules), "rewriting rules; unresolved overlaps:", len(confluence_check(W)))

# b* a reorders to a b* with a power of q; the sphere relation rewrites b b*
for expr in ("bS*a", "b*bS", "bS*b", "a^2*b*bS"):
    print(f"  {expr:10s} -> {parse_element(W, expr)}")

S = su2()
print("\nSU_q(2):")
for expr in ("alphaS*alpha", "beta*alpha"):
    print(f"  {expr:14s} -> {parse_element(S, expr)}")

L = lens(3)
print("\nLens_q(3):", "d*c ->", parse_element(L, "d*c"))

# theta sends a to beta beta* and b to alpha^l beta^k; every relation must map to zero
for k, l in ((1, 2), (2, 3)):
    th = theta(k, l)
    print(f"\ntheta({k},{l}): relation defects = {len(th.relation_defects())}")
    print("  theta(b) =", th(wp(k, l).gen("b")))

print("\nnormal_form of a raw word in WP(1,2):", normal_form(W, ("bS", "a", "b")))
