"""Shared trace constructions used by unit and acceptance tests.

The ramp traces are designed by hand for the default config (ema_alpha 0.5,
10 ms frames): driving the smoothed velocity up by 100 deg/s per frame
holds the smoothed acceleration far above the 200 deg/s^2 threshold, and a
single engineered deceleration frame cancels it back to exactly zero.
Tests audit the produced qualifying pattern instead of trusting the
construction.
"""
from __future__ import annotations

import numpy as np

from rotoblur.controller import ControllerConfig, InputSample, reset, step

FRAME_US = 10_000

# Smoothed accel == threshold region for exactly 4 frames, then 0.
FOUR_QUALIFYING_DELTAS = [2.0, 3.0, 4.0, 5.0, 2.125, 3.0625, 3.0625, 3.0625]
# Fifth consecutive qualifying frame arms the blur.
FIVE_QUALIFYING_DELTAS = [2.0, 3.0, 4.0, 5.0, 6.0, 5.0, 5.0, 5.0]
# Constant smoothed accel of 400 deg/s^2: first frame doubles the raw step
# so the EMA lands on 400 immediately, then +4 deg/s per frame holds it.
CONSTANT_ACCEL_DELTAS = [0.16] + [(8 + 4 * i) / 100 for i in range(2, 61)]


def make_samples(deltas, dt_us: int = FRAME_US, head=None) -> list[InputSample]:
    samples = []
    for i, delta in enumerate(deltas, start=1):
        head_row = head[i - 1] if head is not None else (0.0, 0.0, 0.0)
        samples.append(
            InputSample(
                t_us=dt_us * i,
                ctrl_yaw_delta_deg=float(delta),
                ctrl_pitch_delta_deg=0.0,
                head_yaw_delta_deg=float(head_row[0]),
                head_pitch_delta_deg=float(head_row[1]),
                head_roll_delta_deg=float(head_row[2]),
            )
        )
    return samples


def run_samples(samples, config: ControllerConfig):
    state = reset(config)
    outputs = []
    for sample in samples:
        state, out = step(state, sample, config)
        outputs.append(out)
    return outputs


def random_samples(rng: np.random.Generator, n_frames: int, head_scale: float = 0.0) -> list[InputSample]:
    """Bursty random yaw motion with irregular frame times."""
    t_us = 0
    samples = []
    burst = 0.0
    for _ in range(n_frames):
        t_us += int(rng.integers(2_000, 30_000))
        if rng.random() < 0.1:
            burst = float(rng.uniform(-4.0, 4.0))
        if rng.random() < 0.3:
            burst = 0.0
        delta = burst + float(rng.normal(0.0, 0.05))
        head = rng.normal(0.0, head_scale, size=3) if head_scale else (0.0, 0.0, 0.0)
        samples.append(
            InputSample(
                t_us=t_us,
                ctrl_yaw_delta_deg=delta,
                ctrl_pitch_delta_deg=0.0,
                head_yaw_delta_deg=float(head[0]),
                head_pitch_delta_deg=float(head[1]),
                head_roll_delta_deg=float(head[2]),
            )
        )
    return samples


def random_config(rng: np.random.Generator) -> ControllerConfig:
    sigma_max = float(rng.uniform(1.0, 10.0))
    return ControllerConfig(
        a_min_deg_s2=float(rng.uniform(20.0, 500.0)),
        activation_frames=int(rng.integers(1, 9)),
        gain_px_per_deg_s2=float(rng.uniform(0.001, 0.05)),
        sigma_max_px=sigma_max,
        ema_alpha=float(rng.uniform(0.05, 1.0)),
        attack_tau_s=float(rng.uniform(0.01, 0.2)),
        release_tau_s=float(rng.uniform(0.05, 0.5)),
        v_stop_deg_s=float(rng.uniform(1.0, 50.0)),
        sigma_eps_px=float(rng.uniform(0.001, 0.5)),
    )
