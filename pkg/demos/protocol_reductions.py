"""Show the three protocol simulations collapsing onto one number.

Dense coding, teleportation, and entanglement swapping are simulated in
full (encodings, measurements, corrections), yet each average lands on the
same base overlap <Phi1| rho |Phi1> -- teleportation after the (1+2v)/3 map.

Run:  python3 demos/protocol_reductions.py
"""

import numpy as np

from entfrac import (
    PHI1,
    dense_coding_fidelity,
    random_density,
    swapping_fidelity,
    swapping_outcomes,
    teleportation_fidelity,
)

print(f"{'state':>8} {'overlap v':>12} {'dense':>12} {'teleport':>12} {'(1+2v)/3':>12} {'swapping':>12}")
for i in range(6):
    rho = random_density(42, i)
    v = (PHI1.conj() @ rho @ PHI1).real
    print(
        f"{i:>8} {v:>12.9f} {dense_coding_fidelity(rho):>12.9f} "
        f"{teleportation_fidelity(rho):>12.9f} {(1 + 2 * v) / 3:>12.9f} "
        f"{swapping_fidelity(rho):>12.9f}"
    )

# the four analyzer outcomes are always equally likely: the analyzed pair
# contains half of a perfect bell pair, whose reduced state is I/2
rho = random_density(42, 0)
probs = [p for p, _ in swapping_outcomes(rho)]
print("\nswapping outcome probabilities:", np.round(probs, 12))
