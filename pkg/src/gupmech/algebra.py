"""Deformed phase-space algebra realized on ordinary canonical variables.

A quadratic-in-momentum deformation of the canonical bracket is
represented by keeping (x, p) canonical and mapping the physical
momentum through a nonlinear change of variables: a tangent map in
one dimension, an inverse-square-root map in three.  The closed-form
brackets these maps induce live here, together with a central
finite-difference bracket engine used to verify them, and a nested
Jacobi-identity residual.

Axis arguments on the three-dimensional helpers are numbered 1 to 3.
"""

import math
from dataclasses import dataclass

import numpy as np

EPS = float(np.finfo(float).eps)

# Central differences balance truncation against rounding at h ~ eps^(1/3).
# Nested brackets differentiate already-noisy values, so the outer pass
# widens the step to eps^(1/4) to keep the noise amplification down.
BRACKET_STEP = EPS ** (1.0 / 3.0)
NESTED_BRACKET_STEP = EPS ** 0.25


class DomainError(ValueError):
    """A state or parameter left the validity region of a map or model."""


@dataclass(frozen=True)
class DeformationParameters:
    """Deformation strength beta >= 0 and particle mass > 0.

    gamma = sqrt(beta) * mass is the mass-free combination that controls
    kinematics; it is exposed as a derived property so that
    gamma**2 == beta * mass**2 holds to machine precision by construction.
    """

    beta: float
    mass: float

    def __post_init__(self):
        if not (isinstance(self.beta, (int, float)) and math.isfinite(self.beta)):
            raise ValueError("beta must be a finite number")
        if not (isinstance(self.mass, (int, float)) and math.isfinite(self.mass)):
            raise ValueError("mass must be a finite number")
        if self.beta < 0.0:
            raise ValueError(f"beta must be nonnegative, got {self.beta}")
        if self.mass <= 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")

    @property
    def gamma(self) -> float:
        return math.sqrt(self.beta) * self.mass

    @property
    def sqrt_beta(self) -> float:
        return math.sqrt(self.beta)

    @classmethod
    def from_gamma(cls, gamma: float, mass: float) -> "DeformationParameters":
        """Build from gamma instead of beta (beta = gamma**2 / mass**2)."""
        if gamma < 0.0:
            raise ValueError(f"gamma must be nonnegative, got {gamma}")
        if mass <= 0.0:
            raise ValueError(f"mass must be positive, got {mass}")
        return cls(beta=(gamma / mass) ** 2, mass=mass)


@dataclass(frozen=True)
class PhaseState:
    """Canonical pair (x, p) with one or three components each."""

    x: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        x = np.atleast_1d(np.asarray(self.x, dtype=float)).copy()
        p = np.atleast_1d(np.asarray(self.p, dtype=float)).copy()
        if x.shape != p.shape or x.ndim != 1 or x.size not in (1, 3):
            raise ValueError(
                f"x and p must both have 1 or 3 components, got shapes {x.shape} and {p.shape}"
            )
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(p))):
            raise ValueError("phase-space components must be finite")
        x.setflags(write=False)
        p.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "p", p)

    @classmethod
    def of(cls, x, p) -> "PhaseState":
        return cls(x=np.asarray(x, dtype=float), p=np.asarray(p, dtype=float))

    @property
    def dim(self) -> int:
        return self.x.size


def momentum_map_1d(p: float, params: DeformationParameters) -> float:
    """Deformed momentum in one dimension, P = tan(sqrt(beta) p) / sqrt(beta).

    Defined on the branch sqrt(beta) |p| < pi/2; beta = 0 passes p through
    untouched rather than evaluating the limit numerically.
    """
    p = float(p)
    if params.beta == 0.0:
        return p
    sb = params.sqrt_beta
    z = sb * p
    if abs(z) >= math.pi / 2.0:
        raise DomainError(
            f"canonical momentum {p} is outside the tangent branch "
            f"(need sqrt(beta)*|p| < pi/2, got {abs(z):.6g})"
        )
    return math.tan(z) / sb

def momentum_map_3d(p, params: DeformationParameters) -> np.ndarray:
    """Deformed momentum in three dimensions, P_i = p_i / sqrt(1 - beta p^2)."""
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if params.beta == 0.0:
        return p.copy()
    bp2 = params.beta * float(p @ p)
    if bp2 >= 1.0:
        raise DomainError(
            f"canonical momentum is outside the map domain (need beta*|p|^2 < 1, got {bp2:.6g})"
        )
    return p / math.sqrt(1.0 - bp2)

def bracket_xp_1d(P: float, params: DeformationParameters) -> float:
    """Closed-form deformed bracket {X, P} = 1 + beta P^2 in one dimension."""
    return 1.0 + params.beta * float(P) ** 2

def bracket_xp_3d(P, i: int, j: int, params: DeformationParameters) -> float:
    """Closed-form {X_i, P_j} = sqrt(1 + beta P^2) (delta_ij + beta P_i P_j).

    i and j are axis numbers in {1, 2, 3}.
    """
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise IndexError(f"axis numbers must lie in 1..3, got i={i}, j={j}")
    P = np.atleast_1d(np.asarray(P, dtype=float))
    if P.size != 3:
        raise ValueError(f"P must have 3 components, got {P.size}")
    b = params.beta
    delta = 1.0 if i == j else 0.0
    return math.sqrt(1.0 + b * float(P @ P)) * (delta + b * P[i - 1] * P[j - 1])


def _shifted(state: PhaseState, slot: str, index: int, amount: float) -> PhaseState:
    x = state.x.copy()
    p = state.p.copy()
    if slot == "x":
        x[index] += amount
    else:
        p[index] += amount
    return PhaseState(x=x, p=p)


def numerical_bracket(f, g, state: PhaseState, step_scale: float = BRACKET_STEP) -> float:
    """Canonical Poisson bracket of two phase-space scalars by central differences.

    Parameters
    ----------
    f, g : callables mapping a PhaseState to a float.
    state : point of evaluation.
    step_scale : relative step; per coordinate the step is
        step_scale * max(1, |coordinate|).

    Returns sum_i (df/dx_i dg/dp_i - df/dp_i dg/dx_i).  Raises DomainError
    if any probed value fails to be finite, which usually means the state
    sits too close to a representation boundary.
    """
    total = 0.0
    for i in range(state.dim):
        hx = step_scale * max(1.0, abs(state.x[i]))
        hp = step_scale * max(1.0, abs(state.p[i]))
        f_xp = f(_shifted(state, "x", i, +hx))
        f_xm = f(_shifted(state, "x", i, -hx))
        f_pp = f(_shifted(state, "p", i, +hp))
        f_pm = f(_shifted(state, "p", i, -hp))
        g_xp = g(_shifted(state, "x", i, +hx))
        g_xm = g(_shifted(state, "x", i, -hx))
        g_pp = g(_shifted(state, "p", i, +hp))
        g_pm = g(_shifted(state, "p", i, -hp))
        values = (f_xp, f_xm, f_pp, f_pm, g_xp, g_xm, g_pp, g_pm)
        if not all(math.isfinite(v) for v in values):
            raise DomainError(
                "non-finite function value while probing the bracket; "
                "the state is too close to a domain boundary"
            )
        # Divide each difference by its own step before multiplying; the
        # grouped form rounds differently under argument swap and breaks
        # exact antisymmetry.
        df_dx = (f_xp - f_xm) / (2.0 * hx)
        df_dp = (f_pp - f_pm) / (2.0 * hp)
        dg_dx = (g_xp - g_xm) / (2.0 * hx)
        dg_dp = (g_pp - g_pm) / (2.0 * hp)
        total += df_dx * dg_dp - df_dp * dg_dx
    return total


def jacobi_residual(f, g, h, state: PhaseState) -> float:
    """|{f,{g,h}} + {g,{h,f}} + {h,{f,g}}| with all brackets taken numerically.

    Inner brackets use the standard step; the outer pass uses the wider
    NESTED_BRACKET_STEP so that finite-difference noise from the inner
    evaluations is not amplified.  For smooth scalars the result is pure
    numerical noise; anything well above ~1e-6 signals a broken bracket.
    """

    def gh(s):
        return numerical_bracket(g, h, s)

    def hf(s):
        return numerical_bracket(h, f, s)

    def fg(s):
        return numerical_bracket(f, g, s)

    outer = NESTED_BRACKET_STEP
    return abs(
        numerical_bracket(f, gh, state, outer)
        + numerical_bracket(g, hf, state, outer)
        + numerical_bracket(h, fg, state, outer)
    )


def coordinate_function(axis: int = 1):
    """Scalar map returning position component `axis` (numbered from 1)."""
    if axis not in (1, 2, 3):
        raise IndexError(f"axis numbers must lie in 1..3, got {axis}")
    return lambda state: float(state.x[axis - 1])


def momentum_function_1d(params: DeformationParameters):
    """Scalar map returning the deformed momentum of a one-dimensional state."""
    return lambda state: momentum_map_1d(state.p[0], params)


def momentum_function_3d(params: DeformationParameters, axis: int):
    """Scalar map returning deformed momentum component `axis` (numbered from 1)."""
    if axis not in (1, 2, 3):
        raise IndexError(f"axis numbers must lie in 1..3, got {axis}")
    return lambda state: float(momentum_map_3d(state.p, params)[axis - 1])
