#!/usr/bin/env python3
"""The escalation tree for floor 2, carried to its end.

A form is tight for floor n when its nonzero values are exactly n, n+1, ...
Starting from the single coefficient (2), each non-universal candidate is
extended by every coefficient its truant allows.  The recursion closes at
depth 6 and leaves 57 new tight forms and a ten-element criterion set.
"""

from octaforms import (
    check_tight_universal,
    criterion_set,
    new_tight_list,
    psi,
    run_escalation,
)

trace = run_escalation(2, 50_000)
print("depth |  E |  U | NU |  A")
for rec in trace.depths:
    print(f"{rec.k:5d} | {len(rec.E):2d} | {len(rec.U):2d} | {len(rec.NU):2d} | {len(rec.A):2d}")

print("\ntruants at depth 3:",
      {a: rec.value for a, rec in trace.depth(3).psi.items()})
print("first universal members (depth 4):", sorted(new_tight_list(trace, 4)))
print("still-active vectors at depth 5:", list(trace.depth(5).A))

crit = criterion_set(trace)
print("\ncriterion set:", list(crit.values))
print("total new tight forms:", sum(len(r.NU) for r in trace.depths))

# The criterion set turns tightness into a finite check.
for coeffs in ((2, 3, 4, 5), (2, 2, 3), (1, 1, 3, 3)):
    print(f"  {coeffs}: {check_tight_universal(coeffs, 2, crit, 50_000)}")

# The truant of a universal form is only ever 'none up to the bound';
# raising the bound keeps the certificate honest.
print("\npsi of (2,2,3,4) at two bounds:",
      psi((2, 2, 3, 4), 2, 50_000), "/", psi((2, 2, 3, 4), 2, 100_000))
