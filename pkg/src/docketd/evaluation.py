"""Five-point Likert aggregation and descriptive-rating summaries.

All arithmetic runs on Decimals at two-decimal resolution with half-up
rounding, which is what reproduces the published summary tables from their
group means.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from typing import Mapping, Union


class OutOfRange(Exception):
    """Mean outside [1.00, 5.00]."""


class UnknownGroup(Exception):
    """Criterion group outside {Quality, Usability, Satisfaction}."""


GROUPS = ("Quality", "Usability", "Satisfaction")

# (lower bound, upper bound, label); bounds inclusive at two decimals.
RATING_BANDS: tuple[tuple[Decimal, Decimal, str], ...] = (
    (Decimal("4.50"), Decimal("5.00"), "Excellent"),
    (Decimal("3.50"), Decimal("4.49"), "Very Good"),
    (Decimal("2.50"), Decimal("3.49"), "Good"),
    (Decimal("1.50"), Decimal("2.49"), "Fair"),
    (Decimal("1.00"), Decimal("1.49"), "Poor"),
)

Number = Union[int, float, str, Decimal]

_TWO_PLACES = Decimal("0.01")


def _quantize(value: Number) -> Decimal:
    if isinstance(value, float):
        value = str(value)  # avoid binary float artifacts like 4.2699999...
    return Decimal(value).quantize(_TWO_PLACES, rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class SummaryRow:
    group: str
    mean: Decimal
    label: str


@dataclass(frozen=True)
class EvaluationSummary:
    rows: tuple[SummaryRow, ...]
    overall_mean: Decimal
    overall_label: str


def descriptive_rating(mean: Number) -> str:
    """Label of the band containing the mean, e.g. 4.27 -> "Very Good"."""
    value = _quantize(mean)
    if value < Decimal("1.00") or value > Decimal("5.00"):
        raise OutOfRange(f"mean {value} outside [1.00, 5.00]")
    for lower, upper, label in RATING_BANDS:
        if lower <= value <= upper:
            return label
    raise OutOfRange(f"mean {value} fell between bands")  # unreachable at 2 decimals


def summarize(group_means: Mapping[str, Number]) -> EvaluationSummary:
    """Label each group mean and compute the overall mean of the group means.

    The overall mean is the arithmetic mean of the group means, rounded
    half-up to two decimals.
    """
    if not group_means:
        raise UnknownGroup("at least one criterion group is required")
    for group in group_means:
        if group not in GROUPS:
            raise UnknownGroup(f"unknown criterion group: {group!r}")
    rows = tuple(
        SummaryRow(group, _quantize(group_means[group]), descriptive_rating(group_means[group]))
        for group in GROUPS
        if group in group_means
    )
    overall = (sum(row.mean for row in rows) / len(rows)).quantize(
        _TWO_PLACES, rounding=ROUND_HALF_UP
    )
    return EvaluationSummary(rows=rows, overall_mean=overall, overall_label=descriptive_rating(overall))
