#!/usr/bin/env python3
"""End-to-end verification of the bundled classification data.

Everything here is also reachable from the command line:

    octaforms verify all --bound 50000

This script drives the same checks through the library, at a reduced range
so it finishes in a few seconds.
"""

from octaforms import criterion_set, run_escalation
from octaforms.lemmas import CONGRUENCE_LEMMAS, congruence_counterexamples
from octaforms.tables import load_table, table_census, verify_table, verify_z_row

# Tables 2..4 against fresh escalations.
for table, n in ((2, 2), (3, 3), (4, 4)):
    rows = load_table(table)
    trace = run_escalation(n, 50_000)
    report = verify_table(rows, n, trace)
    print(f"table for floor {n}: {table_census(rows)} forms, "
          f"matches escalation: {report.equal}, "
          f"criterion {list(criterion_set(trace).values)}")

# The exception-set table, row by row.
print("\nexception sets (bound 20000):")
for row in load_table(1):
    rep = verify_z_row(row, 20_000)
    print(f"  {'ok' if rep.ok else 'FAIL'} {row.prefix}: {list(rep.actual)}")

# The congruence lemmas that power the sufficiency arguments.
print("\ncongruence sweeps (bound 4000):")
for lemma in CONGRUENCE_LEMMAS:
    bad = congruence_counterexamples(lemma, 4000)
    print(f"  {'ok' if not bad else 'FAIL'} <{','.join(map(str, lemma.diag))}>: "
          f"{lemma.description}")
