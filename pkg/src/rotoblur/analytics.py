"""Sickness-study analytics: SSQ scoring, pre-screening, paired-difference
summaries, and the Wilcoxon signed-rank test.

Scoring follows the standard 16-item Simulator Sickness Questionnaire with
its Nausea / Oculomotor / Disorientation subscales.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import groupby

import numpy as np

from .errors import (
    AllZeroDifferences,
    EmptyInput,
    ItemOutOfRange,
    NegativeTs,
    RatingOutOfRange,
    WrongItemCount,
)

# SSQ item-to-subscale mapping and unit weights per Kennedy, Lane, Berbaum &
# Lilienthal (1993), "Simulator Sickness Questionnaire: An Enhanced Method
# for Quantifying Simulator Sickness".  Items are 0-based indices into the
# canonical 16-item order:
#   0 general discomfort, 1 fatigue, 2 headache, 3 eye strain,
#   4 difficulty focusing, 5 increased salivation, 6 sweating, 7 nausea,
#   8 difficulty concentrating, 9 fullness of head, 10 blurred vision,
#   11 dizziness (eyes open), 12 dizziness (eyes closed), 13 vertigo,
#   14 stomach awareness, 15 burping.
SSQ_ITEM_COUNT = 16
SSQ_NAUSEA_ITEMS = (0, 5, 6, 7, 8, 14, 15)
SSQ_OCULOMOTOR_ITEMS = (0, 1, 2, 3, 4, 8, 10)
SSQ_DISORIENTATION_ITEMS = (4, 7, 9, 10, 11, 12, 13)
SSQ_NAUSEA_WEIGHT = 9.54
SSQ_OCULOMOTOR_WEIGHT = 7.58
SSQ_DISORIENTATION_WEIGHT = 13.92
SSQ_TOTAL_WEIGHT = 3.74

DEFAULT_PRESCREEN_CUTOFF = 7.48
SESSIONS = ("NRB", "RB")


@dataclass(frozen=True)
class SsqResponse:
    participant_id: str
    session: str
    items: tuple[int, ...]


@dataclass(frozen=True)
class SsqScores:
    raw_n: int
    raw_o: int
    raw_d: int
    n_score: float
    o_score: float
    d_score: float
    ts: float


@dataclass(frozen=True)
class PairedTs:
    """Per-participant total-sickness pair; delta = ts_rb - ts_nrb."""

    participant_id: str
    ts_nrb: float
    ts_rb: float

    @property
    def delta(self) -> float:
        return self.ts_rb - self.ts_nrb


@dataclass(frozen=True)
class FmsRecord:
    participant_id: str
    session: str
    t_min: float
    rating: int


@dataclass(frozen=True)
class WilcoxonResult:
    w_plus: float
    n_eff: int
    p_two_sided: float
    method: str  # "exact" or "normal-approx"


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    sd: float
    median: float
    q1: float
    q3: float
    min: float
    max: float


@dataclass(frozen=True)
class DeltaPartition:
    declined: tuple[PairedTs, ...]
    unchanged: tuple[PairedTs, ...]
    increased: tuple[PairedTs, ...]
    mean_delta_declined: float
    mean_delta_non_declined: float
    mean_nrb_declined: float
    mean_nrb_non_declined: float


@dataclass(frozen=True)
class FmsCurvePoint:
    t_min: float
    mean_rating: float
    n: int


def score_ssq(response: SsqResponse) -> SsqScores:
    """Raw subscale sums over the Kennedy mapping, scaled to the published
    unit weights; total sickness is 3.74 times the combined raw sum."""
    items = response.items
    if len(items) != SSQ_ITEM_COUNT:
        raise WrongItemCount(f"expected {SSQ_ITEM_COUNT} items, got {len(items)}")
    for idx, value in enumerate(items, start=1):
        if not isinstance(value, int) or value < 0 or value > 3:
            raise ItemOutOfRange(f"item_{idx} must be an integer in 0..3, got {value!r}")
    raw_n = sum(items[i] for i in SSQ_NAUSEA_ITEMS)
    raw_o = sum(items[i] for i in SSQ_OCULOMOTOR_ITEMS)
    raw_d = sum(items[i] for i in SSQ_DISORIENTATION_ITEMS)
    return SsqScores(
        raw_n=raw_n,
        raw_o=raw_o,
        raw_d=raw_d,
        n_score=SSQ_NAUSEA_WEIGHT * raw_n,
        o_score=SSQ_OCULOMOTOR_WEIGHT * raw_o,
        d_score=SSQ_DISORIENTATION_WEIGHT * raw_d,
        ts=SSQ_TOTAL_WEIGHT * (raw_n + raw_o + raw_d),
    )


def prescreen(ts: float, cutoff: float = DEFAULT_PRESCREEN_CUTOFF) -> bool:
    """True (accept) iff ts does not exceed the cutoff; the bound itself passes."""
    if ts < 0:
        raise NegativeTs(f"ts must be >= 0, got {ts}")
    return ts <= cutoff


def summarize(values: list[float]) -> SummaryStats:
    """Sample statistics: sd uses the n-1 denominator (0 for a singleton),
    quartiles interpolate linearly between order statistics."""
    if len(values) == 0:
        raise EmptyInput("summarize needs at least one value")
    arr = np.asarray(values, dtype=np.float64)
    q1, median, q3 = np.quantile(arr, [0.25, 0.5, 0.75], method="linear")
    sd = float(np.std(arr, ddof=1)) if arr.size > 1 else 0.0
    return SummaryStats(
        mean=float(np.mean(arr)),
        sd=sd,
        median=float(median),
        q1=float(q1),
        q3=float(q3),
        min=float(np.min(arr)),
        max=float(np.max(arr)),
    )


def partition_delta(pairs: list[PairedTs]) -> DeltaPartition:
    """Split pairs by the sign of delta; the non-declined group pools the
    unchanged and increased participants.  Empty-group means are NaN."""
    if len(pairs) == 0:
        raise EmptyInput("partition_delta needs at least one pair")
    declined = tuple(p for p in pairs if p.delta < 0)
    unchanged = tuple(p for p in pairs if p.delta == 0)
    increased = tuple(p for p in pairs if p.delta > 0)
    non_declined = unchanged + increased

    def _mean(values: list[float]) -> float:
        return sum(values) / len(values) if values else math.nan

    return DeltaPartition(
        declined=declined,
        unchanged=unchanged,
        increased=increased,
        mean_delta_declined=_mean([p.delta for p in declined]),
        mean_delta_non_declined=_mean([p.delta for p in non_declined]),
        mean_nrb_declined=_mean([p.ts_nrb for p in declined]),
        mean_nrb_non_declined=_mean([p.ts_nrb for p in non_declined]),
    )


def _average_ranks(values: list[float]) -> list[float]:
    """1-based ranks, ties resolved to the average of their positions."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _exact_two_sided_p(ranks: list[float], w_plus: float) -> float:
    # Distribution of W+ over all 2^n sign assignments, via the
    # subset-sum polynomial on doubled ranks (average ranks are
    # half-integers, so doubling makes them exact ints).
    doubled = [round(2.0 * r) for r in ranks]
    counts = [0] * (sum(doubled) + 1)
    counts[0] = 1
    for d in doubled:
        for s in range(len(counts) - 1, d - 1, -1):
            counts[s] += counts[s - d]
    total = 1 << len(ranks)
    w2 = round(2.0 * w_plus)
    upper = sum(counts[w2:])
    lower = sum(counts[: w2 + 1])
    tail = min(upper, lower)
    if 2 * tail >= total:
        return 1.0
    return (2 * tail) / total


def _normal_approx_two_sided_p(ranks: list[float], w_plus: float) -> float:
    # Mean and variance of W+ under the null with midrank ties baked into
    # the rank values; 0.5 continuity correction toward the mean.
    mean = sum(ranks) / 2.0
    var = sum(r * r for r in ranks) / 4.0
    d = w_plus - mean
    if abs(d) <= 0.5:
        return 1.0
    z = (abs(d) - 0.5) / math.sqrt(var)
    return min(1.0, math.erfc(z / math.sqrt(2.0)))


def wilcoxon_signed_rank(pairs: list[PairedTs], exact_limit: int = 20) -> WilcoxonResult:
    """Paired signed-rank test on delta = ts_rb - ts_nrb.

    Zero differences are discarded; |delta| ties get average ranks.  Up to
    ``exact_limit`` effective pairs the two-sided p comes from the exact
    null distribution over all sign assignments; beyond that, from a
    tie-aware normal approximation with continuity correction.  Two-sided p
    doubles the smaller tail, capped at 1.
    """
    if len(pairs) == 0:
        raise EmptyInput("wilcoxon_signed_rank needs at least one pair")
    deltas = [p.delta for p in pairs if p.delta != 0.0]
    if not deltas:
        raise AllZeroDifferences("every paired difference is zero")
    ranks = _average_ranks([abs(d) for d in deltas])
    w_plus = sum(r for r, d in zip(ranks, deltas) if d > 0)
    n_eff = len(deltas)
    if n_eff <= exact_limit:
        p = _exact_two_sided_p(ranks, w_plus)
        method = "exact"
    else:
        p = _normal_approx_two_sided_p(ranks, w_plus)
        method = "normal-approx"
    return WilcoxonResult(w_plus=w_plus, n_eff=n_eff, p_two_sided=p, method=method)


def fms_mean_curve(records: list[FmsRecord], session: str) -> list[FmsCurvePoint]:
    """Mean 0-6 sickness rating per report time for one session, ascending."""
    for r in records:
        if not isinstance(r.rating, int) or r.rating < 0 or r.rating > 6:
            raise RatingOutOfRange(f"rating must be an integer in 0..6, got {r.rating!r}")
    selected = sorted((r for r in records if r.session == session), key=lambda r: r.t_min)
    if not selected:
        raise EmptyInput(f"no records for session {session!r}")
    curve = []
    for t_min, group in groupby(selected, key=lambda r: r.t_min):
        ratings = [g.rating for g in group]
        curve.append(FmsCurvePoint(t_min=t_min, mean_rating=sum(ratings) / len(ratings), n=len(ratings)))
    return curve
