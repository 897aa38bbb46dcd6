"""
Trajectories under the deformed kinetic energies
================================================
"""

import numpy as np

from gupmech.algebra import DeformationParameters, PhaseState
from gupmech.dynamics import (
    Hamiltonian,
    Potential,
    energy_drift,
    hamilton_rhs,
    integrate,
    relativistic_quartic_coefficient,
)

params = DeformationParameters(beta=0.01, mass=1.0)

# A free particle still moves on a straight line, just faster than p/m.
exact = Hamiltonian.exact_1d(params)
v = hamilton_rhs(exact, PhaseState.of(0.0, 1.0))[0][0]
print(f"free particle, p = 1: velocity {v:.12f} (undeformed would be 1)")

traj = integrate(exact, PhaseState.of(0.0, 1.0), 1.0, 0.01)
print(f"position after t = 1: {traj.endpoint.x[0]:.12f}")
print(f"momentum change: {abs(traj.endpoint.p[0] - 1.0):.3e}")

# The first-order model keeps only the leading quartic correction; the
# two velocities separate at order beta^2.
first = Hamiltonian.first_order_1d(params)
v_first = hamilton_rhs(first, PhaseState.of(0.0, 1.0))[0][0]
print(f"\nfirst-order velocity {v_first:.12f}, gap {abs(v - v_first):.3e}"
      f"  (beta^2 = {params.beta**2:.0e})")

# Harmonic oscillator: the quartic term stiffens the spring, so the
# period shrinks below 2 pi.  Watch the turning points stay put while
# the phase advances.
osc = Hamiltonian.first_order_1d(params, Potential.harmonic(1.0))
traj = integrate(osc, PhaseState.of(1.0, 0.0), 2.0 * np.pi, 1e-3)
print(f"\noscillator after one undeformed period:"
      f" x = {traj.endpoint.x[0]:.6f}, p = {traj.endpoint.p[0]:.6f}")
print(f"energy drift over the run: {energy_drift(traj):.3e}")

# Three-dimensional free motion conserves the momentum vector exactly.
exact3 = Hamiltonian.exact_3d(params)
start = PhaseState.of(np.zeros(3), np.array([0.4, -0.2, 0.1]))
traj3 = integrate(exact3, start, 5.0, 0.01)
print(f"\n3d free motion, |p| change over t = 5:"
      f" {np.max(np.abs(traj3.momenta[-1] - start.p)):.3e}")
print(f"endpoint: {traj3.endpoint.x}")

# Push the relativistic first-order model: the sign of the quartic
# coefficient decides whether the deformation adds to or fights the
# usual relativistic correction.
rel = Hamiltonian.relativistic_first_order_1d(
    DeformationParameters(beta=1e-4, mass=1.0), light_speed=10.0)
print(f"\nrelativistic quartic coefficient:"
      f" {relativistic_quartic_coefficient(rel):.6e}")
