#!/usr/bin/env python3
"""Infinitesimal deformations: first order in a square-zero parameter.

Deforming by t*e with t^2 = 0 kills every word with two or more factors,
so only the spine of single-entry vectors contributes.  The surviving
coefficients turn out to be Gaussian binomials, which explains why the
whole first-order obstruction collapses at a root of unity.
"""

from qcurvature import (
    COMPOSITION_SUM_READINGS,
    CycloModulus,
    deformed_power_first_order,
    infinitesimal_coefficients,
    infinitesimal_composition_sum,
    q_binomial,
)

n = 4
print(f"First-order part of (d + t*e)^{n} (coefficient of t):")
print(" ", deformed_power_first_order(n))

print("\nPath-model coefficients, entry m multiplying t * d^m(e) * d^(n-1-m):")
coeffs = infinitesimal_coefficients(n)
for m, c in enumerate(coeffs.coeffs):
    print(f"  m={m}: {c}   (Gaussian binomial ({n} choose {m+1}) = {q_binomial(n, m + 1)})")

print("\nReduced at a primitive 4th root of unity:")
reduced = coeffs.reduced(CycloModulus.of(n))
for m, c in enumerate(reduced.coeffs):
    print(f"  m={m}: {c}")
print("Only the top derivative survives: first-order deformations are")
print("obstructed exactly by d^(n-1) of the deforming endomorphism.")

print("\nThe closed composition-sum formula admits several readings; each is")
print("checked against the path model (True = entry reproduced):")
for convention in COMPOSITION_SUM_READINGS:
    comparison = infinitesimal_composition_sum(n, convention)
    print(f"  {convention:<10} matches: {list(comparison.matches)}")
print("Only the stay-count reading survives scrutiny; the suite keeps the")
print("others around so the comparison itself stays reproducible.")
