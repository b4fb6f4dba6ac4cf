#!/usr/bin/env python3
"""Run a slice of the identity registry and inspect the verdict report.

Tiers: CERTIFIED (exact polynomial proof per n) > HOLDS_ON_GRID (exact
agreement at every sampled cell) > FAILS (exact counterexample).  Entries
flagged REPORT_ONLY record conjectures and as-printed source displays
without judging them.
"""

from ghn import run_suite

# A focused run: everything touching the alternating transform family.
report = run_suite("idi1-*", n_max=15, seed=42)
print(report.to_markdown())

# REPORT_ONLY rows keep exact sample cells; here is a reading of a
# question-marked conjecture that agrees everywhere on the grid...
report = run_suite("concl-item3", n_max=12, seed=42)
row = report.results[0]
print(f"{row.id}: {row.tier} over {row.cells} cells; note: {row.note}")

# ...and one whose printed form has exact counterexamples.
report = run_suite("concl-item4", n_max=12, seed=42)
row = report.results[0]
print(f"{row.id}: {row.tier}; first sample: {row.counterexamples[0]}")

# The full ledger is deterministic: same (filter, n_max, seed) in, byte-equal
# JSON out.  The command line equivalent is:
#   ghn verify --filter '*' --n-max 20 --seed 42 --out reports/verdicts.json
r1 = run_suite("ex3.4-*", n_max=10, seed=7)
r2 = run_suite("ex3.4-*", n_max=10, seed=7)
print("deterministic:", r1.to_json() == r2.to_json())
