"""Trace the edges of the E-C window with the two saturating families.

Every two-qubit state obeys E <= C <= (E+1)/2.  One family walks the E = C
edge, the other the C = (E+1)/2 edge, and the werner line cuts through the
interior with linear closed forms.

Run:  python3 demos/boundary_families.py
"""

import numpy as np

from entfrac import concurrence, fully_entangled_fraction, lower_family, upper_family, werner


def measures(rho):
    return fully_entangled_fraction(rho).e, concurrence(rho).c


print("lower edge, E = C = (1-eps) sin(theta) - eps/2")
print(f"{'eps':>6} {'theta':>8} {'E':>10} {'C':>10} {'formula':>10}")
for eps in (0.0, 0.2, 0.4):
    for theta in (np.pi / 6, np.pi / 2):
        e, c = measures(lower_family(eps, theta))
        formula = max(0.0, (1 - eps) * np.sin(theta) - eps / 2)
        print(f"{eps:>6.2f} {theta:>8.4f} {e:>10.6f} {c:>10.6f} {formula:>10.6f}")

print("\nupper edge, E = 2C - 1 with C = 1 - zeta")
print(f"{'zeta':>6} {'E':>10} {'C':>10} {'2C-1':>10}")
for zeta in np.linspace(0.0, 0.5, 6):
    e, c = measures(upper_family(zeta))
    print(f"{zeta:>6.2f} {e:>10.6f} {c:>10.6f} {2 * c - 1:>10.6f}")

print("\nwerner line, F = (1+3p)/4 and E = C = max(0, (3p-1)/2)")
print(f"{'p':>6} {'F':>10} {'E':>10} {'C':>10}")
for p in np.linspace(0.0, 1.0, 6):
    rho = werner(p)
    f = fully_entangled_fraction(rho).f
    e, c = measures(rho)
    print(f"{p:>6.2f} {f:>10.6f} {e:>10.6f} {c:>10.6f}")
