"""Hamiltonian particle models on the deformed phase space.

Six interchangeable kinetic-energy models share one state layout and
one fixed-step integrator:

    exact-1d                      tangent-map kinetic energy
    first-order-1d                quadratic plus quartic correction
    exact-3d                      rational kinetic energy
    first-order-3d                quadratic plus quartic correction
    relativistic-first-order-1d   rest energy plus corrected quartic
    effective-sqrt                square-root form with a velocity scale

Hamilton's equations come with analytic derivatives; a central
finite-difference fallback is kept for cross-checking them.  The
integrator is classic fixed-step RK4 and records energy along the way.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import BRACKET_STEP, DeformationParameters, DomainError, PhaseState

EXACT_1D = "exact-1d"
FIRST_ORDER_1D = "first-order-1d"
EXACT_3D = "exact-3d"
FIRST_ORDER_3D = "first-order-3d"
REL_FIRST_ORDER_1D = "relativistic-first-order-1d"
EFFECTIVE_SQRT = "effective-sqrt"

ONE_D_MODELS = frozenset({EXACT_1D, FIRST_ORDER_1D, REL_FIRST_ORDER_1D, EFFECTIVE_SQRT})
THREE_D_MODELS = frozenset({EXACT_3D, FIRST_ORDER_3D})
ALL_MODELS = ONE_D_MODELS | THREE_D_MODELS

POTENTIAL_FREE = "free"
POTENTIAL_HARMONIC = "harmonic"
POTENTIAL_UNIFORM_FIELD = "uniform-field"
POTENTIAL_KINDS = (POTENTIAL_FREE, POTENTIAL_HARMONIC, POTENTIAL_UNIFORM_FIELD)


@dataclass(frozen=True)
class Potential:
    """External potential: free, isotropic harmonic, or a uniform field.

    The uniform field acts along axis 1 with U = -force * x1, so a positive
    `force` pushes the particle toward larger x1.
    """

    kind: str = POTENTIAL_FREE
    stiffness: float = 0.0
    force: float = 0.0

    def __post_init__(self):
        if self.kind not in POTENTIAL_KINDS:
            raise ValueError(f"unknown potential kind {self.kind!r}")

    @classmethod
    def free(cls) -> "Potential":
        return cls()

    @classmethod
    def harmonic(cls, stiffness: float) -> "Potential":
        return cls(kind=POTENTIAL_HARMONIC, stiffness=float(stiffness))

    @classmethod
    def uniform_field(cls, force: float) -> "Potential":
        return cls(kind=POTENTIAL_UNIFORM_FIELD, force=float(force))

    def energy(self, x) -> float:
        if self.kind == POTENTIAL_FREE:
            return 0.0
        if np.ndim(x) == 0:
            x1 = float(x)
            if self.kind == POTENTIAL_HARMONIC:
                return 0.5 * self.stiffness * x1 * x1
            return -self.force * x1
        x = np.asarray(x, dtype=float)
        if self.kind == POTENTIAL_HARMONIC:
            return 0.5 * self.stiffness * float(x @ x)
        return -self.force * float(x[0])

    def gradient(self, x):
        """dU/dx with the same scalar/vector shape as x."""
        scalar = np.ndim(x) == 0
        if self.kind == POTENTIAL_FREE:
            return 0.0 if scalar else np.zeros_like(np.asarray(x, dtype=float))
        if scalar:
            if self.kind == POTENTIAL_HARMONIC:
                return self.stiffness * float(x)
            return -self.force
        x = np.asarray(x, dtype=float)
        if self.kind == POTENTIAL_HARMONIC:
            return self.stiffness * x
        g = np.zeros_like(x)
        g[0] = -self.force
        return g


@dataclass(frozen=True)
class Hamiltonian:
    """A kinetic model tag plus its parameters and an external potential.

    `light_speed` matters only to the relativistic model; `scale_velocity`
    and `sqrt_sign` only to the effective square-root model.
    """

    model: str
    params: DeformationParameters
    potential: Potential = field(default_factory=Potential)
    light_speed: float = 0.0
    scale_velocity: float = 0.0
    sqrt_sign: int = -1

    def __post_init__(self):
        if self.model not in ALL_MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.model == REL_FIRST_ORDER_1D and not self.light_speed > 0.0:
            raise ValueError("the relativistic model needs light_speed > 0")
        if self.model == EFFECTIVE_SQRT:
            if not self.scale_velocity > 0.0:
                raise ValueError("the effective square-root model needs scale_velocity > 0")
            if self.sqrt_sign not in (-1, 1):
                raise ValueError(f"sqrt_sign must be -1 or +1, got {self.sqrt_sign}")

    @property
    def dim(self) -> int:
        return 3 if self.model in THREE_D_MODELS else 1

    @classmethod
    def exact_1d(cls, params, potential=None) -> "Hamiltonian":
        return cls(EXACT_1D, params, potential or Potential())

    @classmethod
    def first_order_1d(cls, params, potential=None) -> "Hamiltonian":
        return cls(FIRST_ORDER_1D, params, potential or Potential())

    @classmethod
    def exact_3d(cls, params, potential=None) -> "Hamiltonian":
        return cls(EXACT_3D, params, potential or Potential())

    @classmethod
    def first_order_3d(cls, params, potential=None) -> "Hamiltonian":
        return cls(FIRST_ORDER_3D, params, potential or Potential())

    @classmethod
    def relativistic_first_order_1d(cls, params, light_speed, potential=None) -> "Hamiltonian":
        return cls(REL_FIRST_ORDER_1D, params, potential or Potential(),
                   light_speed=float(light_speed))

    @classmethod
    def effective_sqrt(cls, params, scale_velocity, sign=-1, potential=None) -> "Hamiltonian":
        return cls(EFFECTIVE_SQRT, params, potential or Potential(),
                   scale_velocity=float(scale_velocity), sqrt_sign=int(sign))


def relativistic_quartic_coefficient(kind: Hamiltonian) -> float:
    """Coefficient of p^4 in the relativistic model, -(1/(8 m^2 c^2) - beta/3)/m.

    Flips sign when beta grows past 3/(8 m^2 c^2), at which point the
    deformation correction overtakes the relativistic one.
    """
    if kind.model != REL_FIRST_ORDER_1D:
        raise ValueError("only defined for the relativistic model")
    m = kind.params.mass
    c = kind.light_speed
    return -(1.0 / (8.0 * m * m * c * c) - kind.params.beta / 3.0) / m


def _kappa(kind: Hamiltonian) -> float:
    m = kind.params.mass
    c = kind.light_speed
    return 1.0 / (8.0 * m * m * c * c) - kind.params.beta / 3.0


def rest_energy(kind: Hamiltonian) -> float:
    """Constant offset of the model energy at p = 0 with no potential."""
    if kind.model == REL_FIRST_ORDER_1D:
        return kind.params.mass * kind.light_speed ** 2
    return 0.0


def momentum_limit(kind: Hamiltonian) -> float:
    """Half-width of the momentum domain (|p|, radial for 3d); inf if unbounded."""
    b = kind.params.beta
    if kind.model == EXACT_1D and b > 0.0:
        return (math.pi / 2.0) / math.sqrt(b)
    if kind.model == EXACT_3D and b > 0.0:
        return 1.0 / math.sqrt(b)
    if kind.model == EFFECTIVE_SQRT and kind.sqrt_sign < 0:
        return kind.params.mass * kind.scale_velocity
    return math.inf


def monotone_momentum_limit(kind: Hamiltonian) -> float:
    """Upper end of the branch on which velocity grows with momentum."""
    if kind.model == REL_FIRST_ORDER_1D:
        kappa = _kappa(kind)
        if kappa > 0.0:
            return 1.0 / math.sqrt(12.0 * kappa)
    return momentum_limit(kind)


def speed_limit(kind: Hamiltonian) -> float:
    """Supremum of |dx/dt| attainable on the monotone branch; inf if none."""
    if kind.model == EFFECTIVE_SQRT and kind.sqrt_sign > 0:
        return kind.scale_velocity
    if kind.model == REL_FIRST_ORDER_1D and _kappa(kind) > 0.0:
        return _kinetic_velocity_scalar(kind, monotone_momentum_limit(kind))
    return math.inf


def _check_domain_1d(kind: Hamiltonian, p: float) -> None:
    lim = momentum_limit(kind)
    if abs(p) >= lim:
        raise DomainError(
            f"momentum {p:.6g} outside the {kind.model} domain (|p| < {lim:.6g})"
        )


def _kinetic_energy_scalar(kind: Hamiltonian, p: float) -> float:
    m = kind.params.mass
    b = kind.params.beta
    model = kind.model
    if model == EXACT_1D:
        if b == 0.0:
            return p * p / (2.0 * m)
        _check_domain_1d(kind, p)
        t = math.tan(math.sqrt(b) * p)
        return t * t / (2.0 * m * b)
    if model == FIRST_ORDER_1D:
        return p * p / (2.0 * m) + b / (3.0 * m) * p ** 4
    if model == REL_FIRST_ORDER_1D:
        return m * kind.light_speed ** 2 + p * p / (2.0 * m) - _kappa(kind) * p ** 4 / m
    # effective square-root
    w = kind.scale_velocity
    y = (p / (m * w)) ** 2
    if kind.sqrt_sign < 0:
        _check_domain_1d(kind, p)
        return m * w * w * (1.0 - math.sqrt(1.0 - y))
    return m * w * w * (math.sqrt(1.0 + y) - 1.0)


def _kinetic_energy_vector(kind: Hamiltonian, p: np.ndarray) -> float:
    m = kind.params.mass
    b = kind.params.beta
    psq = float(p @ p)
    if kind.model == EXACT_3D:
        by = b * psq
        if by >= 1.0:
            raise DomainError(
                f"momentum outside the {kind.model} domain (beta*|p|^2 = {by:.6g} >= 1)"
            )
        return psq / (2.0 * m * (1.0 - by))
    return psq / (2.0 * m) + b / (2.0 * m) * psq * psq


def _kinetic_velocity_scalar(kind: Hamiltonian, p: float) -> float:
    m = kind.params.mass
    b = kind.params.beta
    model = kind.model
    if model == EXACT_1D:
        if b == 0.0:
            return p / m
        _check_domain_1d(kind, p)
        sb = math.sqrt(b)
        z = sb * p
        c = math.cos(z)
        return math.tan(z) / (c * c) / (m * sb)
    if model == FIRST_ORDER_1D:
        return p / m + 4.0 * b / (3.0 * m) * p ** 3
    if model == REL_FIRST_ORDER_1D:
        return p / m - 4.0 * _kappa(kind) * p ** 3 / m
    w = kind.scale_velocity
    y = (p / (m * w)) ** 2
    if kind.sqrt_sign < 0:
        _check_domain_1d(kind, p)
        return (p / m) / math.sqrt(1.0 - y)
    return (p / m) / math.sqrt(1.0 + y)


def _kinetic_velocity_vector(kind: Hamiltonian, p: np.ndarray) -> np.ndarray:
    m = kind.params.mass
    b = kind.params.beta
    psq = float(p @ p)
    if kind.model == EXACT_3D:
        by = b * psq
        if by >= 1.0:
            raise DomainError(
                f"momentum outside the {kind.model} domain (beta*|p|^2 = {by:.6g} >= 1)"
            )
        return p / (m * (1.0 - by) ** 2)
    return p / m * (1.0 + 2.0 * b * psq)


def kinetic_velocity_slope(kind: Hamiltonian, q: float) -> float:
    """Radial derivative d|dx/dt| / d|p| at |p| = q >= 0 (Newton helper)."""
    m = kind.params.mass
    b = kind.params.beta
    model = kind.model
    if model == EXACT_1D:
        if b == 0.0:
            return 1.0 / m
        z = math.sqrt(b) * q
        c = math.cos(z)
        sec2 = 1.0 / (c * c)
        t = math.tan(z)
        return sec2 * (sec2 + 2.0 * t * t) / m
    if model == FIRST_ORDER_1D:
        return (1.0 + 4.0 * b * q * q) / m
    if model == REL_FIRST_ORDER_1D:
        return (1.0 - 12.0 * _kappa(kind) * q * q) / m
    if model == EXACT_3D:
        bq = b * q * q
        return (1.0 + 3.0 * bq) / (m * (1.0 - bq) ** 3)
    if model == FIRST_ORDER_3D:
        return (1.0 + 6.0 * b * q * q) / m
    w = kind.scale_velocity
    y = (q / (m * w)) ** 2
    if kind.sqrt_sign < 0:
        return (1.0 - y) ** -1.5 / m
    return (1.0 + y) ** -1.5 / m


def radial_velocity(kind: Hamiltonian, q: float) -> float:
    """|dx/dt| as a function of |p| = q >= 0 on the monotone branch."""
    if kind.model in THREE_D_MODELS:
        v = _kinetic_velocity_vector(kind, np.array([q, 0.0, 0.0]))
        return float(v[0])
    return _kinetic_velocity_scalar(kind, q)


def _require_dim(kind: Hamiltonian, state: PhaseState) -> None:
    if state.dim != kind.dim:
        raise ValueError(
            f"model {kind.model} expects {kind.dim}-component states, got {state.dim}"
        )


def hamiltonian_value(kind: Hamiltonian, state: PhaseState) -> float:
    """Total energy of the state under the given model."""
    _require_dim(kind, state)
    if kind.dim == 1:
        return _kinetic_energy_scalar(kind, state.p[0]) + kind.potential.energy(state.x[0])
    return _kinetic_energy_vector(kind, state.p) + kind.potential.energy(state.x)


def hamilton_rhs(kind: Hamiltonian, state: PhaseState):
    """Analytic (dx/dt, dp/dt) = (dH/dp, -dH/dx) as a pair of arrays."""
    _require_dim(kind, state)
    if kind.dim == 1:
        xdot = _kinetic_velocity_scalar(kind, state.p[0])
        pdot = -kind.potential.gradient(state.x[0])
        return np.array([xdot]), np.array([pdot])
    xdot = _kinetic_velocity_vector(kind, state.p)
    pdot = -kind.potential.gradient(state.x)
    return xdot, pdot


def hamilton_rhs_fd(kind: Hamiltonian, state: PhaseState):
    """(dx/dt, dp/dt) by central differences of the energy; test fallback."""
    _require_dim(kind, state)
    d = state.dim
    xdot = np.empty(d)
    pdot = np.empty(d)
    for i in range(d):
        hp = BRACKET_STEP * max(1.0, abs(state.p[i]))
        hx = BRACKET_STEP * max(1.0, abs(state.x[i]))
        pp = state.p.copy()
        pm = state.p.copy()
        pp[i] += hp
        pm[i] -= hp
        xdot[i] = (
            hamiltonian_value(kind, PhaseState(state.x, pp))
            - hamiltonian_value(kind, PhaseState(state.x, pm))
        ) / (2.0 * hp)
        xp = state.x.copy()
        xm = state.x.copy()
        xp[i] += hx
        xm[i] -= hx
        pdot[i] = -(
            hamiltonian_value(kind, PhaseState(xp, state.p))
            - hamiltonian_value(kind, PhaseState(xm, state.p))
        ) / (2.0 * hx)
    return xdot, pdot


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled phase-space history with per-sample energy."""

    times: np.ndarray      # (n+1,)
    positions: np.ndarray  # (n+1, d)
    momenta: np.ndarray    # (n+1, d)
    energies: np.ndarray   # (n+1,)
    step: float

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        pos = np.asarray(self.positions, dtype=float)
        mom = np.asarray(self.momenta, dtype=float)
        en = np.asarray(self.energies, dtype=float)
        n = times.size
        if pos.shape[0] != n or mom.shape != pos.shape or en.size != n:
            raise ValueError("trajectory arrays must share their leading length")
        if n > 1 and not np.all(np.diff(times) > 0.0):
            raise ValueError("trajectory times must be strictly increasing")
        for arr in (times, pos, mom, en):
            arr.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "momenta", mom)
        object.__setattr__(self, "energies", en)

    def __len__(self) -> int:
        return self.times.size

    def state(self, k: int) -> PhaseState:
        return PhaseState(self.positions[k], self.momenta[k])

    @property
    def endpoint(self) -> PhaseState:
        return self.state(-1)


def integrate(kind: Hamiltonian, initial: PhaseState, t_end: float, dt: float) -> Trajectory:
    """Classic fixed-step RK4 from t = 0 to t_end.

    The requested dt is rounded so that a whole number of uniform steps
    lands exactly on t_end.  A DomainError raised mid-run is re-raised
    with the offending step index attached (attribute `step_index`).
    """
    _require_dim(kind, initial)
    if not (math.isfinite(t_end) and t_end > 0.0):
        raise ValueError(f"t_end must be positive and finite, got {t_end}")
    if not (math.isfinite(dt) and dt > 0.0):
        raise ValueError(f"dt must be positive and finite, got {dt}")
    n = max(1, int(round(t_end / dt)))
    h = t_end / n
    d = kind.dim
    times = np.linspace(0.0, t_end, n + 1)
    positions = np.empty((n + 1, d))
    momenta = np.empty((n + 1, d))
    energies = np.empty(n + 1)

    try:
        energies[0] = hamiltonian_value(kind, initial)
    except DomainError as exc:
        raise DomainError(f"initial state outside the model domain: {exc}") from exc
    positions[0] = initial.x
    momenta[0] = initial.p

    pot = kind.potential
    if d == 1:
        x = float(initial.x[0])
        p = float(initial.p[0])
        for k in range(n):
            try:
                vx1 = _kinetic_velocity_scalar(kind, p)
                vp1 = -pot.gradient(x)
                vx2 = _kinetic_velocity_scalar(kind, p + 0.5 * h * vp1)
                vp2 = -pot.gradient(x + 0.5 * h * vx1)
                vx3 = _kinetic_velocity_scalar(kind, p + 0.5 * h * vp2)
                vp3 = -pot.gradient(x + 0.5 * h * vx2)
                vx4 = _kinetic_velocity_scalar(kind, p + h * vp3)
                vp4 = -pot.gradient(x + h * vx3)
                x += h / 6.0 * (vx1 + 2.0 * vx2 + 2.0 * vx3 + vx4)
                p += h / 6.0 * (vp1 + 2.0 * vp2 + 2.0 * vp3 + vp4)
                energies[k + 1] = _kinetic_energy_scalar(kind, p) + pot.energy(x)
            except DomainError as exc:
                err = DomainError(
                    f"trajectory left the model domain at step {k + 1} of {n} "
                    f"(t = {(k + 1) * h:.6g}): {exc}"
                )
                err.step_index = k + 1
                raise err from exc
            positions[k + 1, 0] = x
            momenta[k + 1, 0] = p
    else:
        x = initial.x.copy()
        p = initial.p.copy()
        for k in range(n):
            try:
                vx1 = _kinetic_velocity_vector(kind, p)
                vp1 = -pot.gradient(x)
                vx2 = _kinetic_velocity_vector(kind, p + 0.5 * h * vp1)
                vp2 = -pot.gradient(x + 0.5 * h * vx1)
                vx3 = _kinetic_velocity_vector(kind, p + 0.5 * h * vp2)
                vp3 = -pot.gradient(x + 0.5 * h * vx2)
                vx4 = _kinetic_velocity_vector(kind, p + h * vp3)
                vp4 = -pot.gradient(x + h * vx3)
                x = x + h / 6.0 * (vx1 + 2.0 * vx2 + 2.0 * vx3 + vx4)
                p = p + h / 6.0 * (vp1 + 2.0 * vp2 + 2.0 * vp3 + vp4)
                energies[k + 1] = _kinetic_energy_vector(kind, p) + pot.energy(x)
            except DomainError as exc:
                err = DomainError(
                    f"trajectory left the model domain at step {k + 1} of {n} "
                    f"(t = {(k + 1) * h:.6g}): {exc}"
                )
                err.step_index = k + 1
                raise err from exc
            positions[k + 1] = x
            momenta[k + 1] = p

    return Trajectory(times=times, positions=positions, momenta=momenta,
                      energies=energies, step=h)


def energy_drift(traj: Trajectory) -> float:
    """max_k |E_k - E_0| / max(|E_0|, 1e-30) over the recorded samples."""
    if len(traj) < 2:
        return 0.0
    e0 = traj.energies[0]
    return float(np.max(np.abs(traj.energies - e0)) / max(abs(e0), 1e-30))
