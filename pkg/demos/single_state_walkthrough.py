"""Analyze a handful of states end to end and print the full report card.

Run:  python3 demos/single_state_walkthrough.py
"""

import numpy as np

from entfrac import PHI1, analyze_state, random_density, werner

np.set_printoptions(precision=6, suppress=True)

FIELDS = (
    ("F", "f"), ("E", "e"), ("C", "c"),
    ("F_DC_max", "f_dc_max"), ("F_T_max", "f_t_max"), ("F_ES_max", "f_es_max"),
    ("B_canonical", "b_canonical"), ("B_max_angles", "b_max_angles"),
    ("B_max_unitaries", "b_max_unitaries"),
)

states = [
    ("bell pair", np.outer(PHI1, PHI1.conj())),
    ("maximally mixed", np.eye(4) / 4.0),
    ("werner p=0.8", werner(0.8)),
    ("random (seed 0, index 5)", random_density(0, 5)),
]

for name, rho in states:
    report = analyze_state(rho)
    print(f"\n{name}")
    for label, attr in FIELDS:
        print(f"  {label:<16} {getattr(report, attr):.6f}")

# every protocol maximum is a function of F alone, so the three "max" columns
# move together as F does
print("\nnote: F_T_max = (1 + 2F)/3 and F_DC_max = F_ES_max = F for every state")
