"""Scanning seeded graph corpora for violations of bound predicates.

Theorem-grade checks failing means an implementation bug (exit 3 in the
CLI); conjecture violations are findings, dumped as re-ingestible JSONL
(exit 2).  The demo runs the clean default corpus, then injects C4 into a
scan of the (false) conjecture gamma == rho to show the counterexample
path end to end.
"""

import io

from gammarho.generators import gen_cycle
from gammarho.harness import (
    DEFAULT_PREDICATES,
    default_scan_items,
    make_item,
    run_scan,
    scan_verdict,
    verify_counterexamples,
    write_counterexamples,
)
from gammarho.reports import summarize

items = default_scan_items()
print(f"default corpus: {len(items)} graphs "
      f"({', '.join(sorted({it.family for it in items}))})")
records, counterexamples = run_scan(items, DEFAULT_PREDICATES, jobs=4)
print(f"{len(records)} predicate evaluations, verdict "
      f"{scan_verdict(records)}, {len(counterexamples)} counterexamples")
for family, stats in sorted(summarize(records)["families"].items()):
    print(f"  {family:<9} records {stats['records']:>4}  "
          f"max gamma/rho {stats['max_gamma_over_rho']}")

# now force a violation: gamma(C4) = 2 but rho(C4) = 1
bait = [make_item("c4", "probe", gen_cycle(4))]
records, counterexamples = run_scan(bait, ("gamma-eq-rho",))
print(f"\ninjected scan verdict: {scan_verdict(records)} (2 = counterexample)")

dump = io.StringIO()
write_counterexamples(counterexamples, dump)
print("dump line:", dump.getvalue().strip())

# the dump replays from the graph6 string alone
replayed = verify_counterexamples(dump.getvalue().splitlines())
for ce in replayed:
    print(f"replayed {ce['graph_id']}: gamma = {ce['gamma']}, "
          f"rho = {ce['rho']}, still_violates = {ce['still_violates']}")
