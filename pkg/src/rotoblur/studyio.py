"""CSV schemas for study data and the plain-text analysis report.

Three inputs: SSQ responses, paired total-sickness scores, and timed 0-6
ratings.  Headers are matched exactly and every diagnostic carries the
offending line number.
"""
from __future__ import annotations

import math

from .analytics import (
    FmsRecord,
    PairedTs,
    SESSIONS,
    SsqResponse,
    SsqScores,
    fms_mean_curve,
    partition_delta,
    score_ssq,
    summarize,
    wilcoxon_signed_rank,
)
from .errors import AllZeroDifferences, EmptyInput, MalformedHeader, NonNumericField

SSQ_HEADER = "participant_id,session," + ",".join(f"item_{i}" for i in range(1, 17))
SSQ_SCORES_HEADER = "participant_id,session,raw_n,raw_o,raw_d,n_score,o_score,d_score,ts"
PAIRS_HEADER = "participant_id,ts_nrb,ts_rb"
FMS_HEADER = "participant_id,session,t_min,rating"


def _rows(text: str, expected_header: str) -> list[tuple[int, list[str]]]:
    lines = text.splitlines()
    if not lines or lines[0] != expected_header:
        raise MalformedHeader(f"line 1: expected header {expected_header!r}")
    out = []
    for line_no, line in enumerate(lines[1:], start=2):
        out.append((line_no, line.split(",")))
    return out


def _parse_float(token: str, line_no: int, name: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise NonNumericField(f"line {line_no}: {name} is not a number: {token!r}") from None
    if not math.isfinite(value):
        raise NonNumericField(f"line {line_no}: {name} must be finite, got {token!r}")
    return value


def _parse_session(token: str, line_no: int) -> str:
    if token not in SESSIONS:
        raise NonNumericField(f"line {line_no}: session must be one of {SESSIONS}, got {token!r}")
    return token


def parse_ssq_csv(text: str) -> list[SsqResponse]:
    responses = []
    for line_no, parts in _rows(text, SSQ_HEADER):
        if len(parts) != 18:
            raise NonNumericField(f"line {line_no}: expected 18 fields, got {len(parts)}")
        session = _parse_session(parts[1], line_no)
        items = []
        for i, token in enumerate(parts[2:], start=1):
            if not token.isdigit():
                raise NonNumericField(f"line {line_no}: item_{i} must be an integer, got {token!r}")
            items.append(int(token))
        responses.append(SsqResponse(participant_id=parts[0], session=session, items=tuple(items)))
    return responses


def write_ssq_scores_csv(scored: list[tuple[SsqResponse, SsqScores]]) -> str:
    lines = [SSQ_SCORES_HEADER]
    for response, s in scored:
        lines.append(
            f"{response.participant_id},{response.session},{s.raw_n},{s.raw_o},{s.raw_d},"
            f"{s.n_score!r},{s.o_score!r},{s.d_score!r},{s.ts!r}"
        )
    return "\n".join(lines) + "\n"


def parse_pairs_csv(text: str) -> list[PairedTs]:
    pairs = []
    for line_no, parts in _rows(text, PAIRS_HEADER):
        if len(parts) != 3:
            raise NonNumericField(f"line {line_no}: expected 3 fields, got {len(parts)}")
        pairs.append(
            PairedTs(
                participant_id=parts[0],
                ts_nrb=_parse_float(parts[1], line_no, "ts_nrb"),
                ts_rb=_parse_float(parts[2], line_no, "ts_rb"),
            )
        )
    return pairs


def parse_fms_csv(text: str) -> list[FmsRecord]:
    records = []
    for line_no, parts in _rows(text, FMS_HEADER):
        if len(parts) != 4:
            raise NonNumericField(f"line {line_no}: expected 4 fields, got {len(parts)}")
        session = _parse_session(parts[1], line_no)
        t_min = _parse_float(parts[2], line_no, "t_min")
        if t_min <= 0:
            raise NonNumericField(f"line {line_no}: t_min must be positive, got {parts[2]!r}")
        if not parts[3].isdigit():
            raise NonNumericField(f"line {line_no}: rating must be an integer, got {parts[3]!r}")
        records.append(
            FmsRecord(participant_id=parts[0], session=session, t_min=t_min, rating=int(parts[3]))
        )
    return records


def _fmt(value: float) -> str:
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    return repr(value)


def build_report(pairs: list[PairedTs], fms_records: list[FmsRecord]) -> str:
    """Key/value report with per-session summaries, the delta partition,
    the signed-rank result, and the mean rating curves."""
    if not pairs:
        raise EmptyInput("report needs at least one pair")
    lines: list[str] = []
    lines.append("[pairs]")
    lines.append(f"n = {len(pairs)}")
    for label, values in (
        ("ts_nrb", [p.ts_nrb for p in pairs]),
        ("ts_rb", [p.ts_rb for p in pairs]),
    ):
        stats = summarize(values)
        lines.append("")
        lines.append(f"[{label}]")
        for name in ("mean", "sd", "median", "q1", "q3", "min", "max"):
            lines.append(f"{name} = {_fmt(getattr(stats, name))}")
    part = partition_delta(pairs)
    lines.append("")
    lines.append("[partition]")
    lines.append(f"declined = {len(part.declined)}")
    lines.append(f"unchanged = {len(part.unchanged)}")
    lines.append(f"increased = {len(part.increased)}")
    lines.append(f"mean_delta_declined = {_fmt(part.mean_delta_declined)}")
    lines.append(f"mean_delta_non_declined = {_fmt(part.mean_delta_non_declined)}")
    lines.append(f"mean_nrb_declined = {_fmt(part.mean_nrb_declined)}")
    lines.append(f"mean_nrb_non_declined = {_fmt(part.mean_nrb_non_declined)}")
    lines.append("")
    lines.append("[wilcoxon]")
    try:
        result = wilcoxon_signed_rank(pairs)
        lines.append(f"w_plus = {_fmt(result.w_plus)}")
        lines.append(f"n_eff = {result.n_eff}")
        lines.append(f"p_two_sided = {_fmt(result.p_two_sided)}")
        lines.append(f"method = {result.method}")
    except AllZeroDifferences:
        lines.append("note = all paired differences are zero; test undefined")
    for session in SESSIONS:
        lines.append("")
        lines.append(f"[fms {session}]")
        lines.append("t_min,mean_rating,n")
        try:
            curve = fms_mean_curve(fms_records, session)
        except EmptyInput:
            continue
        for point in curve:
            lines.append(f"{point.t_min!r},{point.mean_rating!r},{point.n}")
    return "\n".join(lines) + "\n"
