"""Velocity-momentum inversion, Lagrangians, and action evaluation.

The velocity form of the deformed models comes in two flavors: closed
first-order inversions good for small deformation, and an exact numeric
inversion (safeguarded Newton on the monotone branch of dH/dp).  The
matching Lagrangians carry a quartic velocity correction at first order
and a square-root form whose free action is a Euclidean arc length in
(ut, x) space, measured by `euclidean_interval`.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .algebra import DeformationParameters, DomainError, PhaseState
from .dynamics import (
    Hamiltonian,
    Potential,
    THREE_D_MODELS,
    hamiltonian_value,
    kinetic_velocity_slope,
    monotone_momentum_limit,
    radial_velocity,
    speed_limit,
)

L_FIRST_ORDER_1D = "first-order-1d"
L_SQRT_1D = "sqrt-1d"
L_FIRST_ORDER_3D = "first-order-3d"
L_RELATIVISTIC = "relativistic"
ALL_LAGRANGIANS = frozenset({L_FIRST_ORDER_1D, L_SQRT_1D, L_FIRST_ORDER_3D, L_RELATIVISTIC})

# Beyond this the first-order momentum formula is an extrapolation.
SMALL_DEFORMATION_BOUND = 0.1


@dataclass(frozen=True)
class Lagrangian:
    """A Lagrangian model tag plus parameters and an external potential.

    `scale_velocity` is the square-root velocity scale u for sqrt-1d and
    the (effective) light speed for the relativistic form.
    """

    model: str
    params: DeformationParameters
    potential: Potential = field(default_factory=Potential)
    scale_velocity: float = 0.0

    def __post_init__(self):
        if self.model not in ALL_LAGRANGIANS:
            raise ValueError(f"unknown Lagrangian model {self.model!r}")
        if self.model in (L_SQRT_1D, L_RELATIVISTIC) and not self.scale_velocity > 0.0:
            raise ValueError(f"model {self.model} needs scale_velocity > 0")

    @property
    def dim(self) -> int:
        return 3 if self.model == L_FIRST_ORDER_3D else 1

    @classmethod
    def first_order_1d(cls, params, potential=None) -> "Lagrangian":
        return cls(L_FIRST_ORDER_1D, params, potential or Potential())

    @classmethod
    def first_order_3d(cls, params, potential=None) -> "Lagrangian":
        return cls(L_FIRST_ORDER_3D, params, potential or Potential())

    @classmethod
    def sqrt_1d(cls, params, scale_velocity, potential=None) -> "Lagrangian":
        return cls(L_SQRT_1D, params, potential or Potential(),
                   scale_velocity=float(scale_velocity))

    @classmethod
    def relativistic(cls, params, light_speed, potential=None) -> "Lagrangian":
        return cls(L_RELATIVISTIC, params, potential or Potential(),
                   scale_velocity=float(light_speed))


def momentum_from_velocity_first_order(xdot, params: DeformationParameters):
    """First-order momentum: 1d p = m v (1 - 4/3 beta m^2 v^2); 3d uses 1 - 2 beta m^2 v^2.

    Accurate to O(beta^2).  Warns once the deformation measure
    beta m^2 v^2 exceeds SMALL_DEFORMATION_BOUND.
    """
    m = params.mass
    b = params.beta
    if np.ndim(xdot) == 0:
        v = float(xdot)
        measure = b * m * m * v * v
        if measure > SMALL_DEFORMATION_BOUND:
            warnings.warn(
                f"beta*m^2*v^2 = {measure:.3g} is outside the small-deformation regime; "
                "the first-order inversion is an extrapolation here",
                RuntimeWarning,
                stacklevel=2,
            )
        return m * v * (1.0 - (4.0 / 3.0) * b * m * m * v * v)
    v = np.asarray(xdot, dtype=float)
    vsq = float(v @ v)
    measure = b * m * m * vsq
    if measure > SMALL_DEFORMATION_BOUND:
        warnings.warn(
            f"beta*m^2*|v|^2 = {measure:.3g} is outside the small-deformation regime; "
            "the first-order inversion is an extrapolation here",
            RuntimeWarning,
            stacklevel=2,
        )
    return m * v * (1.0 - 2.0 * b * m * m * vsq)


def _bracket_high(kind: Hamiltonian, s: float) -> float:
    """Find hi with radial_velocity(kind, hi) >= s on the monotone branch."""
    m = kind.params.mass
    blim = monotone_momentum_limit(kind)
    if math.isfinite(blim):
        # velocity may stay finite at the branch edge (relativistic case)
        try:
            if radial_velocity(kind, blim) >= s:
                return blim
        except DomainError:
            pass
        # otherwise approach the edge geometrically; velocity diverges there
        for k in range(1, 54):
            cand = blim * (1.0 - 0.5 ** k)
            if radial_velocity(kind, cand) >= s:
                return cand
        raise RuntimeError("could not bracket the momentum inversion near the branch edge")
    hi = max(m * s, 1e-30)
    for _ in range(200):
        if radial_velocity(kind, hi) >= s:
            return hi
        hi *= 2.0
    raise RuntimeError("could not bracket the momentum inversion")


def _solve_radial(kind: Hamiltonian, s: float) -> float:
    """Solve radial_velocity(kind, q) = s for q >= 0 by safeguarded Newton.

    Initial guess m*s, bisection fallback on the bracketing interval,
    residual tolerance 1e-12 relative, hard cap of 64 iterations.
    """
    if s == 0.0:
        return 0.0
    sup = speed_limit(kind)
    if s > sup:
        raise DomainError(
            f"no momentum on the monotone branch reaches speed {s:.6g} "
            f"(attainable speeds stay below {sup:.6g})"
        )
    if math.isfinite(sup) and s == sup:
        q_sup = monotone_momentum_limit(kind)
        if not math.isfinite(q_sup):
            # speed approached only asymptotically; no momentum attains it
            raise DomainError(
                f"no momentum on the monotone branch reaches speed {s:.6g} "
                f"(attainable speeds stay below {sup:.6g})"
            )
        return q_sup
    tol = 1e-12 * max(1.0, s)
    lo = 0.0
    hi = _bracket_high(kind, s)
    q = min(max(kind.params.mass * s, 0.0), hi)
    if q == 0.0:
        q = 0.5 * hi
    for _ in range(64):
        r = radial_velocity(kind, q) - s
        if abs(r) <= tol:
            return q
        if r < 0.0:
            lo = q
        else:
            hi = q
        slope = kinetic_velocity_slope(kind, q)
        step_ok = slope > 0.0 and math.isfinite(slope)
        qn = q - r / slope if step_ok else math.nan
        q = qn if lo < qn < hi else 0.5 * (lo + hi)
    raise RuntimeError("momentum inversion did not converge within 64 iterations")


def momentum_from_velocity_exact(xdot, kind: Hamiltonian):
    """Invert the analytic velocity relation dH/dp = xdot numerically.

    Returns a float for one-dimensional models and a 3-array for
    three-dimensional ones (momentum parallel to the velocity).  Raises
    DomainError when no momentum on the monotone branch reaches the
    requested speed.
    """
    if kind.model in THREE_D_MODELS:
        v = np.asarray(xdot, dtype=float)
        if v.shape != (3,):
            raise ValueError(f"model {kind.model} expects a 3-component velocity")
        s = float(np.linalg.norm(v))
        if s == 0.0:
            return np.zeros(3)
        return _solve_radial(kind, s) * (v / s)
    v = float(np.asarray(xdot, dtype=float).reshape(-1)[0]) if np.ndim(xdot) else float(xdot)
    q = _solve_radial(kind, abs(v))
    return math.copysign(q, v) if v != 0.0 else 0.0


def lagrangian_value(kind: Lagrangian, x, xdot) -> float:
    """L(x, xdot) for the given model.

    Constant offsets follow the convention that the kinetic part vanishes
    at rest, except for the relativistic form which keeps its -m c^2 rest
    term (see rest_term).
    """
    m = kind.params.mass
    b = kind.params.beta
    model = kind.model
    if model == L_FIRST_ORDER_3D:
        v = np.asarray(xdot, dtype=float)
        vsq = float(v @ v)
        return m * vsq / 2.0 - (b * m ** 3 / 2.0) * vsq * vsq - kind.potential.energy(x)
    v = float(xdot)
    if model == L_FIRST_ORDER_1D:
        return m * v * v / 2.0 - (b * m ** 3 / 3.0) * v ** 4 - kind.potential.energy(x)
    w = kind.scale_velocity
    if model == L_SQRT_1D:
        return m * w * w * (math.sqrt(1.0 + (v / w) ** 2) - 1.0) - kind.potential.energy(x)
    # relativistic
    if abs(v) >= w:
        raise DomainError(
            f"relativistic Lagrangian needs |v| < {w:.6g}, got {abs(v):.6g}"
        )
    return -m * w * w * math.sqrt(1.0 - (v / w) ** 2) - kind.potential.energy(x)


def rest_term(kind: Lagrangian) -> float:
    """Constant value of the kinetic part at v = 0 (nonzero only when relativistic)."""
    if kind.model == L_RELATIVISTIC:
        return -kind.params.mass * kind.scale_velocity ** 2
    return 0.0


def dynamical_lagrangian(kind: Lagrangian, x, xdot) -> float:
    """lagrangian_value with the rest constant removed, for action comparisons."""
    return lagrangian_value(kind, x, xdot) - rest_term(kind)


def lagrangian_from_hamiltonian(hkind: Hamiltonian):
    """The Legendre transform L(x, v) = v . p*(v) - H(x, p*(v)) as a callable.

    Uses the exact numeric inversion for p*(v); pairing the result with
    `hkind` in legendre_roundtrip_residual closes to round-off by
    construction.
    """

    def value(x, xdot) -> float:
        p = momentum_from_velocity_exact(xdot, hkind)
        if hkind.dim == 3:
            state = PhaseState(np.asarray(x, dtype=float), p)
            return float(np.dot(xdot, p)) - hamiltonian_value(hkind, state)
        state = PhaseState(np.array([float(x)]), np.array([p]))
        return float(xdot) * p - hamiltonian_value(hkind, state)

    return value


def legendre_roundtrip_residual(lagrangian, hamiltonian: Hamiltonian, xdot, x=None) -> float:
    """|L(x, v) + H(x, p*(v)) - v . p*(v)| with the exact numeric p*(v).

    `lagrangian` is either a Lagrangian or any callable (x, v) -> float.
    Potentials cancel between L and H when both models carry the same one,
    so the residual probes only the kinetic pairing.  Evaluated at the
    origin unless x is given.
    """
    if x is None:
        x = np.zeros(hamiltonian.dim) if hamiltonian.dim == 3 else 0.0
    p = momentum_from_velocity_exact(xdot, hamiltonian)
    if isinstance(lagrangian, Lagrangian):
        lag = lagrangian_value(lagrangian, x, xdot)
    else:
        lag = float(lagrangian(x, xdot))
    if hamiltonian.dim == 3:
        state = PhaseState(np.asarray(x, dtype=float), p)
        vp = float(np.dot(xdot, p))
    else:
        state = PhaseState(np.array([float(x)]), np.array([p]))
        vp = float(xdot) * p
    return abs(lag + hamiltonian_value(hamiltonian, state) - vp)


@dataclass(frozen=True)
class PathSample:
    """A sampled configuration-space path with derived velocities.

    Velocities come from second-order finite differences of the samples
    (np.gradient); they are stored so that slicing a path preserves them,
    which keeps the trapezoid action exactly additive across a split.
    """

    times: np.ndarray       # (n,)
    positions: np.ndarray   # (n, d)
    velocities: np.ndarray = None  # (n, d)

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        pos = np.asarray(self.positions, dtype=float)
        if pos.ndim == 1:
            pos = pos[:, None]
        if times.ndim != 1 or times.size < 2:
            raise ValueError("a path needs at least two samples")
        if not np.all(np.diff(times) > 0.0):
            raise ValueError("path times must be strictly increasing")
        if pos.shape[0] != times.size or pos.shape[1] not in (1, 3):
            raise ValueError(
                f"positions must be (n,), (n,1) or (n,3) matching times, got {pos.shape}"
            )
        if self.velocities is None:
            order = 2 if times.size >= 3 else 1
            vel = np.gradient(pos, times, axis=0, edge_order=order)
        else:
            vel = np.asarray(self.velocities, dtype=float)
            if vel.ndim == 1:
                vel = vel[:, None]
            if vel.shape != pos.shape:
                raise ValueError("velocities must match positions in shape")
        for arr in (times, pos, vel):
            arr.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "velocities", vel)

    @property
    def dim(self) -> int:
        return self.positions.shape[1]

    def __len__(self) -> int:
        return self.times.size

    def split(self, k: int):
        """Two sub-paths sharing sample k, both keeping the parent velocities."""
        if not 0 < k < len(self) - 1:
            raise ValueError(f"split index must be interior, got {k} of {len(self)}")
        left = PathSample(self.times[: k + 1], self.positions[: k + 1],
                          self.velocities[: k + 1])
        right = PathSample(self.times[k:], self.positions[k:], self.velocities[k:])
        return left, right

    @classmethod
    def from_trajectory(cls, traj) -> "PathSample":
        return cls(traj.times, traj.positions)


def action_along_path(kind: Lagrangian, path: PathSample) -> float:
    """Trapezoid quadrature of L along the path (second-order accurate)."""
    if path.dim != kind.dim:
        raise ValueError(
            f"model {kind.model} expects {kind.dim}-component paths, got {path.dim}"
        )
    values = np.empty(len(path))
    for k in range(len(path)):
        if kind.dim == 1:
            values[k] = lagrangian_value(kind, path.positions[k, 0], path.velocities[k, 0])
        else:
            values[k] = lagrangian_value(kind, path.positions[k], path.velocities[k])
    return float(np.trapezoid(values, path.times))


def euclidean_interval(e1, e2, u: float) -> float:
    """Euclidean-signature interval u^2 dt^2 + |dx|^2 between two events."""
    if not u > 0.0:
        raise ValueError(f"the velocity scale u must be positive, got {u}")
    if e1.dim != e2.dim:
        raise ValueError("events must have the same dimension")
    dt = e2.t - e1.t
    dx = e2.x - e1.x
    return u * u * dt * dt + float(dx @ dx)
