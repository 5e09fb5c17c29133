"""Run the exhaustive verification suites at a small desk scale.

Every suite streams all connected labeled graphs up to the requested order
and checks one family of claims on each; counterexamples (none expected)
would be printed with a reproducing graph6 string.  The full acceptance runs
push these to n=7; here n=5 keeps the demo quick.

Run:  python demos/06_exhaustive_suites.py
"""

import time

from chordalcenters.suites import run_suites

MAX_N = 5

print(f"checking every connected labeled graph with at most {MAX_N} vertices\n")
for result in run_suites(["all"], MAX_N):
    t0 = time.time()
    status = "ok" if result.ok else f"{len(result.counterexamples)} COUNTEREXAMPLES"
    print(
        f"{result.name:12} {result.graphs_checked:6} graphs"
        f" {result.instances_checked:7} instances  {status}"
    )
    for ce in result.counterexamples:
        print(f"    !! {ce['check']} on graph6 {ce['graph6']}: {ce['detail']}")
print("\nsame thing from the command line:")
print("  chordal-centers enumerate --max-n 5 --suite all")
