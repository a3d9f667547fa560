#!/usr/bin/env python3
"""Warm-up: generalized octagonal numbers and what a form can represent.

The generalized octagonal numbers are 3x^2 - 2x evaluated over ALL integers,
so the sequence starts 0, 1, 5, 8, 16, 21, ... (x = 0, 1, -1, 2, -2, 3).
A form attaches positive weights to several of these and asks which totals
are reachable.
"""

from octaforms import (
    build_sieve,
    missing_in_range,
    octagonal_numbers_up_to,
    polygonal_number,
    represents,
    witness,
)

print("octagonal numbers up to 100:", octagonal_numbers_up_to(100))
print("same thing via the general polygonal formula:",
      [polygonal_number(8, x) for x in (0, 1, -1, 2, -2, 3, -3)])

# Weight the variables by 2, 3, 4, 6 and see what goes missing.
coeffs = (2, 3, 4, 6)
print(f"\nform with coefficients {coeffs}:")
print("  missing in [2, 100]:", missing_in_range(coeffs, 2, 100))
print("  (18 is the lone exception; everything else from 2 on is hit)")

# Ask for explicit witnesses.
for v in (17, 18, 19, 100):
    xs = witness(coeffs, v)
    if xs is None:
        print(f"  {v}: not represented")
    else:
        terms = " + ".join(f"{c}*P8({x})" for c, x in zip(coeffs, xs))
        print(f"  {v} = {terms}")

# The sieve and the search always agree; the sieve is just bulk.
sieve = build_sieve(coeffs, 300)
assert all((v in sieve) == represents(coeffs, v) for v in range(301))
print("\nsieve and depth-first search agree on [0, 300]")
