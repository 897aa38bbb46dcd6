"""
Deformed phase-space brackets, checked numerically
==================================================

Builds the mapped momentum variables in one and three dimensions and
verifies their bracket relations against the closed forms, using only
centered finite differences.
"""

import numpy as np

from gupmech.algebra import (
    DeformationParameters,
    PhaseState,
    coordinate_function,
    jacobi_residual,
    momentum_function_1d,
    momentum_function_3d,
    momentum_map_1d,
    momentum_map_3d,
    numerical_bracket,
)

params = DeformationParameters(beta=0.01, mass=1.0)

# One dimension: {X, P} should equal 1 + beta P^2.
state = PhaseState.of(0.3, 0.5)
X = coordinate_function()
P = momentum_function_1d(params)
got = numerical_bracket(X, P, state)
P_val = momentum_map_1d(state.p[0], params)
expect = 1.0 + params.beta * P_val**2
print("one-dimensional bracket at (x, p) = (0.3, 0.5):")
print(f"  numerical {got:.12f}   closed form {expect:.12f}")
print(f"  difference {abs(got - expect):.3e}")

# Antisymmetry is exact, not approximate: swapping the arguments
# negates the same floating-point number.
print(f"  {{P, X}} + {{X, P}} = {numerical_bracket(P, X, state) + got!r}")

# Three dimensions: {X_i, P_j} = sqrt(1 + beta P^2) (delta_ij + beta P_i P_j).
state3 = PhaseState.of(np.array([0.1, -0.4, 0.2]), np.array([0.6, 0.3, -0.5]))
P_vec = momentum_map_3d(state3.p, params)
root = np.sqrt(1.0 + params.beta * P_vec @ P_vec)
print("\nthree-dimensional bracket table (numerical vs closed form):")
for i in range(3):
    for j in range(3):
        got = numerical_bracket(coordinate_function(i + 1),
                                momentum_function_3d(params, j + 1), state3)
        expect = root * ((i == j) + params.beta * P_vec[i] * P_vec[j])
        print(f"  {{X{i + 1}, P{j + 1}}} = {got: .10f}"
              f"   expected {expect: .10f}")

# Coordinates commute with coordinates, momenta with momenta.
xx = numerical_bracket(coordinate_function(1), coordinate_function(2), state3)
pp = numerical_bracket(momentum_function_3d(params, 1),
                       momentum_function_3d(params, 3), state3)
print(f"\n{{X1, X2}} = {xx!r}   {{P1, P3}} = {pp!r}")

# The Jacobi identity holds for any third function; try the product x1 p2.
res = jacobi_residual(coordinate_function(1), momentum_function_3d(params, 2),
                      lambda s: float(s.x[0]) * float(s.p[1]), state3)
print(f"jacobi residual with x1*p2: {res:.3e}")
