#!/usr/bin/env python3
"""Curvature of a deformed differential, generically and at roots of unity.

Deform a differential d by a degree-one element a.  The N-th power of
d + a is computed two independent ways: by normal ordering in the free
operator algebra, and by summing weighted paths.  At a primitive N-th
root of unity everything except the constant coefficient dies, and what
remains is the obstruction to the deformation having vanishing N-th
power: the generalized Maurer-Cartan element.
"""

from qcurvature import (
    deformed_power,
    maurer_cartan_element,
    normal_order,
    path_expansion,
    root_of_unity_expansion,
)

print("The single rewrite rule, moving d past a multiplication operator:")
print("  d * a      ->", normal_order(["d", 0]))
print("  d * d(a)   ->", normal_order(["d", 1]))

print("\nPowers of the deformed differential d + a in normal form:")
for n in (1, 2, 3):
    print(f"  (d + a)^{n} = {deformed_power(n)}")

print("\nThe weighted path model reproduces the same operator exactly:")
for n in range(2, 7):
    assert path_expansion(n).as_operator() == deformed_power(n)
print("  checked coefficient-for-coefficient over Z[q] for n = 2..6")

print("\nAt a primitive N-th root of unity the d-carrying coefficients vanish")
print("and the constant coefficient is the deformation obstruction:")
for n in (2, 3, 4):
    expansion = root_of_unity_expansion(n)
    print(f"  N={n}:")
    for k in range(n - 1, -1, -1):
        print(f"    c[{k}] = {expansion.coefficient(k)}")

print("\nThe obstruction agrees with iterating x -> d(x) + a*x on a:")
for n in (3, 4):
    print(f"  N={n}: D^{n-1} a = {maurer_cartan_element(n)}")

print("\nAside: in a q-symmetric algebra (xy = q^(deg x * deg y) yx) the square")
print("a*a is forced to vanish and d(a)*a regroups as q^2*a*d(a), so the")
print("three-step obstruction collapses to d^2(a) alone.  This package works")
print("in the free setting, where every word is kept.")
