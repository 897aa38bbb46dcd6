"""Frame transformations with a finite velocity scale u instead of a light cone.

The exact boost is a Euclidean rotation in the (ut, x) plane through
tan(phi) = V/u, so the quantity u^2 dt^2 + dx^2 is invariant, boosts
compose through a tangent-addition law, and no velocity bound exists:
the composition is singular on the hyperbola V1 V2 = u^2 rather than at
a limiting speed.  A first-order and an ordinary (undeformed) law are
kept alongside for convergence and control experiments, together with
a standard Lorentz boost parameterized by an effective light speed.

Boosts act along axis 1; remaining components pass through unchanged.
"""

import math
from dataclasses import dataclass

import numpy as np

from .algebra import DomainError, PhaseState
from .dynamics import Hamiltonian, POTENTIAL_FREE, hamilton_rhs, integrate

GALILEAN_EXACT = "exact"
GALILEAN_FIRST_ORDER = "first-order"
GALILEAN_ORDINARY = "ordinary"
GALILEAN_LAWS = (GALILEAN_EXACT, GALILEAN_FIRST_ORDER, GALILEAN_ORDINARY)


@dataclass(frozen=True)
class Event:
    """A time stamp plus a spatial point with one or three components."""

    t: float
    x: np.ndarray

    def __post_init__(self):
        x = np.atleast_1d(np.asarray(self.x, dtype=float)).copy()
        if x.ndim != 1 or x.size not in (1, 3):
            raise ValueError(f"event position must have 1 or 3 components, got {x.shape}")
        if not (math.isfinite(self.t) and np.all(np.isfinite(x))):
            raise ValueError("event coordinates must be finite")
        x.setflags(write=False)
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "x", x)

    @classmethod
    def of(cls, t, x) -> "Event":
        return cls(t=float(t), x=np.asarray(x, dtype=float))

    @property
    def dim(self) -> int:
        return self.x.size


@dataclass(frozen=True)
class GalileanBoost:
    """Boost of velocity V at scale u > 0 under one of the three laws."""

    velocity: float
    scale: float
    law: str = GALILEAN_EXACT

    def __post_init__(self):
        if self.law not in GALILEAN_LAWS:
            raise ValueError(f"unknown boost law {self.law!r}")
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise ValueError(f"the velocity scale u must be positive, got {self.scale}")
        if not math.isfinite(self.velocity):
            raise ValueError("boost velocity must be finite")


@dataclass(frozen=True)
class LorentzBoost:
    """Standard boost at an effective light speed; requires |V| < light_speed."""

    velocity: float
    light_speed: float

    def __post_init__(self):
        if not (math.isfinite(self.light_speed) and self.light_speed > 0.0):
            raise ValueError(f"light_speed must be positive, got {self.light_speed}")
        if not math.isfinite(self.velocity):
            raise ValueError("boost velocity must be finite")
        if abs(self.velocity) >= self.light_speed:
            raise DomainError(
                f"boost velocity {self.velocity:.6g} must stay below the "
                f"light speed {self.light_speed:.6g}"
            )


def galilean_apply(boost: GalileanBoost, event: Event) -> Event:
    """Map moving-frame coordinates (t', x') to the rest frame.

    Exact law:        x = (x' + V t') / sqrt(1 + V^2/u^2)
                      t = (t' - x' V/u^2) / sqrt(1 + V^2/u^2)
    First-order law:  x = (x' + V t') (1 - V^2/(2u^2))
                      t = t' (1 - V^2/(2u^2)) - x' V/u^2
    Ordinary law:     x = x' + V t',  t = t'
    """
    V = boost.velocity
    u = boost.scale
    t = event.t
    x1 = event.x[0]
    if boost.law == GALILEAN_EXACT:
        denom = math.sqrt(1.0 + (V / u) ** 2)
        t_new = (t - x1 * V / (u * u)) / denom
        x_new = (x1 + V * t) / denom
    elif boost.law == GALILEAN_FIRST_ORDER:
        factor = 1.0 - V * V / (2.0 * u * u)
        t_new = t * factor - x1 * V / (u * u)
        x_new = (x1 + V * t) * factor
    else:
        t_new = t
        x_new = x1 + V * t
    out = event.x.copy()
    out[0] = x_new
    return Event(t=t_new, x=out)


def galilean_inverse(boost: GalileanBoost) -> GalileanBoost:
    """The boost undoing this one: same law and scale, velocity -V.

    Exact composition with the original gives the identity to round-off;
    for the other laws the pairing is approximate by construction.
    """
    return GalileanBoost(velocity=-boost.velocity, scale=boost.scale, law=boost.law)


def galilean_compose(first: GalileanBoost, second: GalileanBoost) -> GalileanBoost:
    """Tangent-addition composition V = (V1 + V2) / (1 - V1 V2 / u^2).

    Both boosts must use the exact law and share the scale u.  The law is
    singular on V1 V2 = u^2, where the composed rotation reaches a quarter
    turn and no boost velocity represents it.
    """
    if first.law != GALILEAN_EXACT or second.law != GALILEAN_EXACT:
        raise ValueError("composition is defined for the exact law only")
    if first.scale != second.scale:
        raise ValueError(
            f"cannot compose boosts with different scales {first.scale} and {second.scale}"
        )
    u = first.scale
    v1 = first.velocity
    v2 = second.velocity
    denom = 1.0 - v1 * v2 / (u * u)
    if denom == 0.0:
        raise DomainError(
            f"boost composition is singular at V1*V2 = u^2 (V1={v1:.6g}, V2={v2:.6g})"
        )
    return GalileanBoost(velocity=(v1 + v2) / denom, scale=u, law=GALILEAN_EXACT)


def velocity_compose(v: float, boost: GalileanBoost) -> float:
    """Velocity seen from the rest frame: (v + V) / (1 - v V / u^2)."""
    V = boost.velocity
    u = boost.scale
    denom = 1.0 - v * V / (u * u)
    if denom == 0.0:
        raise DomainError(
            f"velocity composition is singular at v*V = u^2 (v={v:.6g}, V={V:.6g})"
        )
    return (v + V) / denom


def lorentz_apply(boost: LorentzBoost, event: Event) -> Event:
    """Standard boost x = (x' + V t') gamma, t = (t' + x' V/c^2) gamma."""
    V = boost.velocity
    c = boost.light_speed
    gamma = 1.0 / math.sqrt(1.0 - (V / c) ** 2)
    t = event.t
    x1 = event.x[0]
    out = event.x.copy()
    out[0] = (x1 + V * t) * gamma
    return Event(t=(t + x1 * V / (c * c)) * gamma, x=out)


def minkowski_interval(e1: Event, e2: Event, light_speed: float) -> float:
    """Minkowski interval c^2 dt^2 - |dx|^2 between two events."""
    if not light_speed > 0.0:
        raise ValueError(f"light_speed must be positive, got {light_speed}")
    if e1.dim != e2.dim:
        raise ValueError("events must have the same dimension")
    dt = e2.t - e1.t
    dx = e2.x - e1.x
    return light_speed ** 2 * dt * dt - float(dx @ dx)


def covariance_residual(kind: Hamiltonian, boost: GalileanBoost,
                        initial: PhaseState, t_end: float, dt: float) -> float:
    """How far a boosted free trajectory is from the composed uniform motion.

    Integrates the free particle, maps every sampled event through the
    boost, fits a straight line x1(t) in the new frame, and returns the
    maximum deviation from that line plus the mismatch between the fitted
    slope and the tangent-addition composition of the particle velocity.
    Exact-law boosts give round-off; the ordinary law applied to deformed
    dynamics leaves a finite slope defect, which is the control experiment.
    """
    if kind.potential.kind != POTENTIAL_FREE:
        raise ValueError("the covariance probe is defined for free motion")
    traj = integrate(kind, initial, t_end, dt)
    t_new = np.empty(len(traj))
    x_new = np.empty(len(traj))
    for k in range(len(traj)):
        ev = galilean_apply(boost, Event(traj.times[k], traj.positions[k]))
        t_new[k] = ev.t
        x_new[k] = ev.x[0]
    slope, intercept = np.polyfit(t_new, x_new, 1)
    deviation = float(np.max(np.abs(x_new - (slope * t_new + intercept))))
    v0 = float(hamilton_rhs(kind, initial)[0][0])
    return deviation + abs(slope - velocity_compose(v0, boost))
