"""Command-line entry point.

Subcommands wrap the library one-to-one and stay deterministic: identical
inputs produce identical output bytes.  Exit codes: 0 success, 1 domain
error (diagnostic on stderr), 2 usage error.
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import netpbm
from .blur import DEFAULT_TRUNCATION, ImageBuffer, blur, blur_reference_2d, make_kernel
from .configfile import load_config
from .controller import ControllerConfig
from .errors import RotoblurError
from .studyio import (
    build_report,
    parse_fms_csv,
    parse_pairs_csv,
    parse_ssq_csv,
    write_ssq_scores_csv,
)
from .traceio import parse_trace, replay, write_sigma_series
from .analytics import DEFAULT_PRESCREEN_CUTOFF, prescreen, score_ssq

CONFIG_ENV_VAR = "ROTOBLUR_CONFIG"
VERIFY_RMS_LIMIT = 1e-6


def _nonneg_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value >= 0.0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _pos_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _fmt_weight(value: float) -> str:
    text = repr(value)
    return text[:-2] if text.endswith(".0") else text


def _cmd_replay(args: argparse.Namespace) -> int:
    if args.config is not None:
        config = load_config(args.config)
    elif os.environ.get(CONFIG_ENV_VAR):
        config = load_config(os.environ[CONFIG_ENV_VAR])
    else:
        config = ControllerConfig()
    trace = parse_trace(_read_text(args.trace))
    series = replay(trace, config)
    _write_text(args.out, write_sigma_series(series))
    return 0


def _cmd_blur_image(args: argparse.Namespace) -> int:
    img = netpbm.read_image(args.infile)
    kernel = make_kernel(args.sigma, args.truncation)
    netpbm.write_image(args.out, blur(img, kernel))
    return 0


def _cmd_kernel(args: argparse.Namespace) -> int:
    kernel = make_kernel(args.sigma, args.truncation)
    for weight in kernel.weights:
        print(_fmt_weight(float(weight)))
    if args.verify:
        rng = np.random.default_rng(0)
        img = ImageBuffer.from_array(rng.random((32, 32, 1)))
        separable = blur(img, kernel)
        reference = blur_reference_2d(img, args.sigma, args.truncation)
        rms = float(np.sqrt(np.mean((separable.data - reference.data) ** 2)))
        if rms > VERIFY_RMS_LIMIT:
            print(f"verify: rms {rms} exceeds {VERIFY_RMS_LIMIT}", file=sys.stderr)
            return 1
        print(f"verify: rms {rms} ok")
    return 0


def _cmd_ssq_score(args: argparse.Namespace) -> int:
    responses = parse_ssq_csv(_read_text(args.infile))
    scored = [(r, score_ssq(r)) for r in responses]
    _write_text(args.out, write_ssq_scores_csv(scored))
    return 0


def _cmd_ssq_prescreen(args: argparse.Namespace) -> int:
    responses = parse_ssq_csv(_read_text(args.infile))
    print("participant_id,session,ts,decision")
    for response in responses:
        scores = score_ssq(response)
        decision = "accept" if prescreen(scores.ts, args.cutoff) else "reject"
        print(f"{response.participant_id},{response.session},{scores.ts!r},{decision}")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    pairs = parse_pairs_csv(_read_text(args.pairs))
    fms_records = parse_fms_csv(_read_text(args.fms))
    _write_text(args.out, build_report(pairs, fms_records))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rotoblur", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_replay = sub.add_parser("replay", help="replay a trace through the gating controller")
    p_replay.add_argument("--trace", required=True)
    p_replay.add_argument("--config", default=None,
                          help=f"controller config file (default: ${CONFIG_ENV_VAR} or built-in defaults)")
    p_replay.add_argument("--out", required=True)
    p_replay.set_defaults(func=_cmd_replay, input_paths=("trace", "config"))

    p_blur = sub.add_parser("blur-image", help="blur a PPM/PGM image")
    p_blur.add_argument("--in", dest="infile", required=True)
    p_blur.add_argument("--sigma", type=_nonneg_float, required=True)
    p_blur.add_argument("--truncation", type=_pos_float, default=DEFAULT_TRUNCATION)
    p_blur.add_argument("--out", required=True)
    p_blur.set_defaults(func=_cmd_blur_image, input_paths=("infile",))

    p_kernel = sub.add_parser("kernel", help="print Gaussian kernel weights")
    p_kernel.add_argument("--sigma", type=_nonneg_float, required=True)
    p_kernel.add_argument("--truncation", type=_pos_float, default=DEFAULT_TRUNCATION)
    p_kernel.add_argument("--verify", action="store_true",
                          help="cross-check the separable blur against the direct 2D reference")
    p_kernel.set_defaults(func=_cmd_kernel, input_paths=())

    p_ssq = sub.add_parser("ssq", help="questionnaire scoring and pre-screening")
    ssq_sub = p_ssq.add_subparsers(dest="ssq_command", required=True)
    p_score = ssq_sub.add_parser("score", help="score SSQ responses to subscales and TS")
    p_score.add_argument("--in", dest="infile", required=True)
    p_score.add_argument("--out", required=True)
    p_score.set_defaults(func=_cmd_ssq_score, input_paths=("infile",))
    p_pre = ssq_sub.add_parser("prescreen", help="accept/reject participants by TS cutoff")
    p_pre.add_argument("--in", dest="infile", required=True)
    p_pre.add_argument("--cutoff", type=_nonneg_float, default=DEFAULT_PRESCREEN_CUTOFF)
    p_pre.set_defaults(func=_cmd_ssq_prescreen, input_paths=("infile",))

    p_analyze = sub.add_parser("analyze", help="paired-TS and rating-curve analysis report")
    p_analyze.add_argument("--pairs", required=True)
    p_analyze.add_argument("--fms", required=True)
    p_analyze.add_argument("--out", required=True)
    p_analyze.set_defaults(func=_cmd_analyze, input_paths=("pairs", "fms"))

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    for attr in args.input_paths:
        path = getattr(args, attr)
        if path is not None and not os.path.isfile(path):
            parser.error(f"no such file: {path}")
    try:
        return args.func(args)
    except RotoblurError as exc:
        print(f"rotoblur: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
