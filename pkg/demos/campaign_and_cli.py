"""Small seeded campaign through the library API, and the matching CLI calls.

Run:  python3 demos/campaign_and_cli.py
"""

import numpy as np

from entfrac import run_campaign
from entfrac.campaign import records_csv

records = run_campaign(8, seed=7, family="fig2")
print(records_csv(records), end="")

violations = [r for r in records if not (r.lower_ok and r.upper_ok)]
print(f"\nbound violations: {len(violations)} of {len(records)}")

worst = min(records, key=lambda r: r.c - r.e)
print(f"tightest E <= C margin: index {worst.index}, C - E = {worst.c - worst.e:.6f}")

print(
    "\nsame campaign from the shell:\n"
    "  entfrac --command sample --family fig2 --count 8 --seed 7\n"
    "  entfrac --command fig2 --count 100000 --seed 7 --out scatter.csv   "
    "# adds scatter_bounds.csv\n"
    "  entfrac --command verify --quick\n"
    "  entfrac --command analyze --in state.json --format json"
)
