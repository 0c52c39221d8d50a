"""Rotation-blur comfort middleware: input-kinematics gating, reference
Gaussian blur, deterministic trace replay, and sickness-study analytics."""

from .analytics import (
    DeltaPartition,
    FmsCurvePoint,
    FmsRecord,
    PairedTs,
    SsqResponse,
    SsqScores,
    SummaryStats,
    WilcoxonResult,
    fms_mean_curve,
    partition_delta,
    prescreen,
    score_ssq,
    summarize,
    wilcoxon_signed_rank,
)
from .blur import ImageBuffer, Kernel1D, blur, blur_reference_2d, make_kernel
from .configfile import format_config, load_config, parse_config
from .controller import (
    BlurFrameOutput,
    ControllerConfig,
    ControllerState,
    InputSample,
    KinematicState,
    Phase,
    estimate_kinematics,
    reset,
    step,
)
from .traceio import (
    SessionEvent,
    SigmaSeries,
    Trace,
    config_fingerprint,
    parse_events,
    parse_sigma_series,
    parse_trace,
    replay,
    write_events,
    write_sigma_series,
    write_trace,
)

__version__ = "0.1.0"

__all__ = [
    "BlurFrameOutput",
    "ControllerConfig",
    "ControllerState",
    "DeltaPartition",
    "FmsCurvePoint",
    "FmsRecord",
    "ImageBuffer",
    "InputSample",
    "Kernel1D",
    "KinematicState",
    "PairedTs",
    "Phase",
    "SessionEvent",
    "SigmaSeries",
    "SsqResponse",
    "SsqScores",
    "SummaryStats",
    "Trace",
    "WilcoxonResult",
    "blur",
    "blur_reference_2d",
    "config_fingerprint",
    "estimate_kinematics",
    "fms_mean_curve",
    "format_config",
    "load_config",
    "make_kernel",
    "parse_config",
    "parse_events",
    "parse_sigma_series",
    "parse_trace",
    "partition_delta",
    "prescreen",
    "replay",
    "reset",
    "score_ssq",
    "step",
    "summarize",
    "wilcoxon_signed_rank",
    "write_events",
    "write_sigma_series",
    "write_trace",
]
