"""Bit-exact CSV formats for input traces, sigma series, and session events.

Floats are serialized with repr(), the shortest decimal form that
round-trips the underlying binary value, and timestamps are integer
microseconds, so parse(write(x)) == x holds exactly and replays diff
cleanly across runs.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, fields

from .controller import (
    BlurFrameOutput,
    ControllerConfig,
    InputSample,
    Phase,
    reset,
    step,
)
from .errors import EmptyInput, MalformedHeader, NonMonotonicTime, NonNumericField

TRACE_HEADER = "t_us,ctrl_yaw_delta_deg,ctrl_pitch_delta_deg,head_yaw_delta_deg,head_pitch_delta_deg,head_roll_delta_deg"
SIGMA_HEADER = "t_us,sigma_px,phase,v_deg_s,a_deg_s2"
EVENTS_HEADER = "t_us,event,value"

EVENT_TYPES = ("rb_toggled", "fms_prompt", "fms_response", "fms_timeout", "pause", "resume")

_PHASES = {phase.value: phase for phase in Phase}


@dataclass(frozen=True)
class Trace:
    samples: tuple[InputSample, ...]
    meta: dict[str, str]


@dataclass(frozen=True)
class SigmaSeries:
    outputs: tuple[BlurFrameOutput, ...]
    config_fingerprint: str


@dataclass(frozen=True)
class SessionEvent:
    t_us: int
    event: str
    value: str


def config_fingerprint(config: ControllerConfig) -> str:
    lines = [f"{f.name}={getattr(config, f.name)!r}" for f in sorted(fields(config), key=lambda f: f.name)]
    return hashlib.sha256("\n".join(lines).encode("ascii")).hexdigest()


def _parse_int_field(token: str, line_no: int, name: str) -> int:
    if not token.isdigit():
        raise NonNumericField(f"line {line_no}: {name} must be a non-negative integer, got {token!r}")
    return int(token)


def _parse_float_field(token: str, line_no: int, name: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise NonNumericField(f"line {line_no}: {name} is not a number: {token!r}") from None
    if not math.isfinite(value):
        raise NonNumericField(f"line {line_no}: {name} must be finite, got {token!r}")
    return value


def _split_document(text: str, expected_header: str) -> tuple[dict[str, str], list[tuple[int, str]]]:
    """Return leading '# key=value' meta lines and (line_no, row) data lines."""
    meta: dict[str, str] = {}
    rows: list[tuple[int, str]] = []
    header_seen = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not header_seen:
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" not in body:
                    raise MalformedHeader(f"line {line_no}: meta line must be '# key=value'")
                key, value = body.split("=", 1)
                meta[key.strip()] = value
                continue
            if line != expected_header:
                raise MalformedHeader(f"line {line_no}: expected header {expected_header!r}")
            header_seen = True
            continue
        rows.append((line_no, line))
    if not header_seen:
        raise MalformedHeader("missing header row")
    return meta, rows


def parse_trace(text: str) -> Trace:
    meta, rows = _split_document(text, TRACE_HEADER)
    samples: list[InputSample] = []
    prev_t: int | None = None
    names = TRACE_HEADER.split(",")
    for line_no, row in rows:
        parts = row.split(",")
        if len(parts) != 6:
            raise NonNumericField(f"line {line_no}: expected 6 fields, got {len(parts)}")
        t_us = _parse_int_field(parts[0], line_no, names[0])
        if prev_t is not None and t_us <= prev_t:
            raise NonMonotonicTime(f"line {line_no}: t_us {t_us} does not advance past {prev_t}")
        prev_t = t_us
        values = [_parse_float_field(parts[i], line_no, names[i]) for i in range(1, 6)]
        samples.append(InputSample(t_us, *values))
    return Trace(samples=tuple(samples), meta=meta)


def _fmt(value: float) -> str:
    # repr of a builtin float: shortest decimal form that round-trips
    return repr(float(value))


def write_trace(trace: Trace) -> str:
    lines = [f"# {key}={value}" for key, value in sorted(trace.meta.items())]
    lines.append(TRACE_HEADER)
    for s in trace.samples:
        lines.append(
            f"{int(s.t_us)},{_fmt(s.ctrl_yaw_delta_deg)},{_fmt(s.ctrl_pitch_delta_deg)},"
            f"{_fmt(s.head_yaw_delta_deg)},{_fmt(s.head_pitch_delta_deg)},{_fmt(s.head_roll_delta_deg)}"
        )
    return "\n".join(lines) + "\n"


def parse_sigma_series(text: str) -> SigmaSeries:
    meta, rows = _split_document(text, SIGMA_HEADER)
    if "config_fingerprint" not in meta:
        raise MalformedHeader("missing '# config_fingerprint=...' line")
    outputs: list[BlurFrameOutput] = []
    prev_t: int | None = None
    for line_no, row in rows:
        parts = row.split(",")
        if len(parts) != 5:
            raise NonNumericField(f"line {line_no}: expected 5 fields, got {len(parts)}")
        t_us = _parse_int_field(parts[0], line_no, "t_us")
        if prev_t is not None and t_us <= prev_t:
            raise NonMonotonicTime(f"line {line_no}: t_us {t_us} does not advance past {prev_t}")
        prev_t = t_us
        sigma = _parse_float_field(parts[1], line_no, "sigma_px")
        if parts[2] not in _PHASES:
            raise NonNumericField(f"line {line_no}: unknown phase {parts[2]!r}")
        v = _parse_float_field(parts[3], line_no, "v_deg_s")
        a = _parse_float_field(parts[4], line_no, "a_deg_s2")
        outputs.append(BlurFrameOutput(t_us, sigma, _PHASES[parts[2]], v, a))
    return SigmaSeries(outputs=tuple(outputs), config_fingerprint=meta["config_fingerprint"])


def write_sigma_series(series: SigmaSeries) -> str:
    lines = [f"# config_fingerprint={series.config_fingerprint}", SIGMA_HEADER]
    for o in series.outputs:
        lines.append(f"{int(o.t_us)},{_fmt(o.sigma_px)},{o.phase.value},{_fmt(o.v_deg_s)},{_fmt(o.a_deg_s2)}")
    return "\n".join(lines) + "\n"


def parse_events(text: str) -> tuple[SessionEvent, ...]:
    _, rows = _split_document(text, EVENTS_HEADER)
    events: list[SessionEvent] = []
    prev_t: int | None = None
    for line_no, row in rows:
        parts = row.split(",")
        if len(parts) != 3:
            raise NonNumericField(f"line {line_no}: expected 3 fields, got {len(parts)}")
        t_us = _parse_int_field(parts[0], line_no, "t_us")
        if prev_t is not None and t_us < prev_t:
            raise NonMonotonicTime(f"line {line_no}: t_us {t_us} went backwards from {prev_t}")
        prev_t = t_us
        if parts[1] not in EVENT_TYPES:
            raise NonNumericField(f"line {line_no}: unknown event {parts[1]!r}")
        events.append(SessionEvent(t_us, parts[1], parts[2]))
    return tuple(events)


def write_events(events: tuple[SessionEvent, ...] | list[SessionEvent]) -> str:
    lines = [EVENTS_HEADER]
    for e in events:
        lines.append(f"{e.t_us},{e.event},{e.value}")
    return "\n".join(lines) + "\n"


def replay(trace: Trace, config: ControllerConfig) -> SigmaSeries:
    """Run the gating controller over every sample of a recorded trace."""
    if not trace.samples:
        raise EmptyInput("trace has no samples to replay")
    state = reset(config)
    outputs: list[BlurFrameOutput] = []
    for sample in trace.samples:
        state, out = step(state, sample, config)
        outputs.append(out)
    return SigmaSeries(outputs=tuple(outputs), config_fingerprint=config_fingerprint(config))
