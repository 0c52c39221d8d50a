"""Rotation-blur gating controller.

Turns a stream of controller yaw deltas into a per-frame Gaussian blur
strength (sigma, in pixels at a 1080-row reference resolution).  The rules:

* A frame *qualifies* when the smoothed yaw acceleration magnitude reaches
  ``a_min_deg_s2``.
* Blur arms only after ``activation_frames`` consecutive qualifying frames;
  a single sub-threshold frame resets the pending run.  Small flicks and
  aim adjustments therefore never blur.
* While active, the target sigma is ``gain_px_per_deg_s2 * |a|`` clamped to
  ``sigma_max_px``, and the output follows it through a first-order
  attack/release envelope so the screen fades between sharp and blurred
  instead of jumping.
* Active ends when yaw speed drops below ``v_stop_deg_s``; sigma then
  releases toward zero and the controller returns to Idle once it falls
  under ``sigma_eps_px``.
* Head-pose deltas ride along in the input samples but never influence the
  output: blur reacts to controller-commanded rotation only.

All transitions are pure functions over explicit state values; replaying
the same samples against the same config is bit-reproducible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from enum import Enum

from .errors import InvalidConfig, NonFiniteInput, NonMonotonicTime


class Phase(Enum):
    IDLE = "Idle"
    PENDING = "Pending"
    ACTIVE = "Active"
    RELEASING = "Releasing"


@dataclass(frozen=True)
class InputSample:
    """One frame of input: controller deltas plus tracked head deltas (degrees)."""

    t_us: int
    ctrl_yaw_delta_deg: float
    ctrl_pitch_delta_deg: float = 0.0
    head_yaw_delta_deg: float = 0.0
    head_pitch_delta_deg: float = 0.0
    head_roll_delta_deg: float = 0.0


@dataclass(frozen=True)
class ControllerConfig:
    a_min_deg_s2: float = 200.0
    activation_frames: int = 5
    gain_px_per_deg_s2: float = 0.01
    sigma_max_px: float = 8.0
    ema_alpha: float = 0.5
    attack_tau_s: float = 0.05
    release_tau_s: float = 0.3
    v_stop_deg_s: float = 10.0
    sigma_eps_px: float = 0.05
    deg_per_count: float = 0.022

    def validate(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not math.isfinite(value) or value <= 0:
                raise InvalidConfig(f"{f.name} must be positive and finite, got {value}")
        if self.ema_alpha > 1.0:
            raise InvalidConfig(f"ema_alpha must be in (0, 1], got {self.ema_alpha}")
        if self.activation_frames != int(self.activation_frames) or self.activation_frames < 1:
            raise InvalidConfig(f"activation_frames must be an integer >= 1, got {self.activation_frames}")
        if self.sigma_eps_px >= self.sigma_max_px:
            raise InvalidConfig("sigma_eps_px must be smaller than sigma_max_px")


@dataclass(frozen=True)
class KinematicState:
    """Smoothed yaw velocity/acceleration; last_t_us is None before the first sample."""

    v_deg_s: float = 0.0
    a_deg_s2: float = 0.0
    last_t_us: int | None = None


@dataclass(frozen=True)
class ControllerState:
    phase: Phase
    pending_count: int
    sigma_px: float
    kin: KinematicState


@dataclass(frozen=True)
class BlurFrameOutput:
    t_us: int
    sigma_px: float
    phase: Phase
    v_deg_s: float
    a_deg_s2: float


def estimate_kinematics(
    prev: KinematicState,
    yaw_delta_deg: float,
    t_us: int,
    config: ControllerConfig,
) -> KinematicState:
    """Update smoothed yaw velocity and acceleration from one frame delta.

    Raw velocity is the backward difference of yaw, raw acceleration the
    backward difference of the smoothed velocity; both are EMA-smoothed
    with ``ema_alpha`` (alpha 1 gives plain finite differences).  Time is
    measured from session start, so the first sample differences against
    t = 0; a first sample at exactly t = 0 carries no interval and leaves
    the kinematics at zero.
    """
    if not math.isfinite(yaw_delta_deg):
        raise NonFiniteInput(f"yaw delta must be finite, got {yaw_delta_deg}")
    if prev.last_t_us is None:
        if t_us < 0:
            raise NonMonotonicTime(f"timestamps start at 0, got {t_us}")
        if t_us == 0:
            return KinematicState(0.0, 0.0, 0)
        ref_t_us = 0
    else:
        if t_us <= prev.last_t_us:
            raise NonMonotonicTime(f"t_us {t_us} does not advance past {prev.last_t_us}")
        ref_t_us = prev.last_t_us
    dt_s = (t_us - ref_t_us) / 1e6
    alpha = config.ema_alpha
    raw_v = yaw_delta_deg / dt_s
    # convex-combination form: alpha = 1 reduces to plain finite differences
    v = alpha * raw_v + (1.0 - alpha) * prev.v_deg_s
    raw_a = (v - prev.v_deg_s) / dt_s
    a = alpha * raw_a + (1.0 - alpha) * prev.a_deg_s2
    return KinematicState(v_deg_s=v, a_deg_s2=a, last_t_us=t_us)


def reset(config: ControllerConfig) -> ControllerState:
    config.validate()
    return ControllerState(phase=Phase.IDLE, pending_count=0, sigma_px=0.0, kin=KinematicState())


def step(
    state: ControllerState,
    sample: InputSample,
    config: ControllerConfig,
) -> tuple[ControllerState, BlurFrameOutput]:
    """Advance the gating machine by one frame.

    Head deltas in the sample are deliberately ignored.
    """
    kin = estimate_kinematics(state.kin, sample.ctrl_yaw_delta_deg, sample.t_us, config)
    prev_t = state.kin.last_t_us if state.kin.last_t_us is not None else 0
    dt_s = (sample.t_us - prev_t) / 1e6

    qualifying = abs(kin.a_deg_s2) >= config.a_min_deg_s2

    if state.phase in (Phase.IDLE, Phase.PENDING):
        if qualifying:
            run = state.pending_count + 1
            if run >= config.activation_frames:
                phase, count = Phase.ACTIVE, 0
            else:
                phase, count = Phase.PENDING, run
        else:
            phase, count = Phase.IDLE, 0
    elif state.phase is Phase.ACTIVE:
        if abs(kin.v_deg_s) < config.v_stop_deg_s:
            phase, count = Phase.RELEASING, 0
        else:
            phase, count = Phase.ACTIVE, 0
    else:
        phase, count = Phase.RELEASING, 0

    if phase in (Phase.IDLE, Phase.PENDING):
        sigma = 0.0
    elif phase is Phase.ACTIVE:
        target = min(config.gain_px_per_deg_s2 * abs(kin.a_deg_s2), config.sigma_max_px)
        tau = config.attack_tau_s if target > state.sigma_px else config.release_tau_s
        sigma = state.sigma_px + (target - state.sigma_px) * (1.0 - math.exp(-dt_s / tau))
    else:
        sigma = state.sigma_px * math.exp(-dt_s / config.release_tau_s)
        if sigma < config.sigma_eps_px:
            phase, sigma = Phase.IDLE, 0.0

    new_state = ControllerState(phase=phase, pending_count=count, sigma_px=sigma, kin=kin)
    output = BlurFrameOutput(
        t_us=sample.t_us,
        sigma_px=sigma,
        phase=phase,
        v_deg_s=kin.v_deg_s,
        a_deg_s2=kin.a_deg_s2,
    )
    return new_state, output
