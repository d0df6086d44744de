"""Country rankings, ranking comparisons, and per-country time series.

Rankings use competition ranks on values rounded half-away-from-zero to three
decimals: tied entries share a rank and the next distinct value's rank is one
plus the number of strictly better entries ("1224").  Lower value means more
equal, so rank 1 is the most equal country.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .composite import DEFAULT_WEIGHT, alternative_index, composite
from .errors import DomainError, EmptyInputError, JoinError, NotFoundError
from .panel import CountryYearRecord, Panel, ratio_of, t_over_b_of


class Indicator(enum.Enum):
    GINI = "gini"
    INDEX_I = "index"
    RATIO_TB = "ratio"
    ALT = "alt"


RANK_DECIMALS = 3


def round_half_away(value: float, ndigits: int = RANK_DECIMALS) -> float:
    """Round to ``ndigits`` decimals with ties going away from zero."""
    if not math.isfinite(value):
        return value
    quantum = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class RankEntry:
    rank: int
    country: str
    value: float


@dataclass(frozen=True)
class RankTable:
    entries: tuple[RankEntry, ...]
    indicator: Indicator

    def rank_of(self, country: str) -> int:
        for entry in self.entries:
            if entry.country == country:
                return entry.rank
        raise NotFoundError(country)


@dataclass(frozen=True)
class RankComparison:
    """Per-country rank pairs between two tables over the same country set."""

    changed: int
    unchanged: int
    per_country: dict[str, tuple[int, int]]


@dataclass(frozen=True)
class SeriesPoint:
    year: int
    gini: float
    t_over_b: float
    index_i: float


def indicator_value(
    record: CountryYearRecord,
    indicator: Indicator,
    weight: float = DEFAULT_WEIGHT,
) -> float:
    if indicator is Indicator.GINI:
        return record.gini
    if indicator is Indicator.INDEX_I:
        return composite(record.gini, ratio_of(record), weight).index_i
    if indicator is Indicator.RATIO_TB:
        return t_over_b_of(record)
    if indicator is Indicator.ALT:
        return alternative_index(record.gini, t_over_b_of(record))
    raise DomainError(f"unknown indicator {indicator!r}")


def rank_values(values: dict[str, float], indicator: Indicator) -> RankTable:
    """Competition-rank a country -> value mapping (values already computed).

    Values are rounded to three decimals before ranking so that ties printed
    at table precision are honored.
    """
    if not values:
        raise EmptyInputError("nothing to rank")
    rounded = [(round_half_away(v), c) for c, v in values.items()]
    rounded.sort()
    entries = []
    current_rank = 1
    for pos, (value, country) in enumerate(rounded, start=1):
        if pos > 1 and value != rounded[pos - 2][0]:
            current_rank = pos
        entries.append(RankEntry(rank=current_rank, country=country, value=value))
    table = RankTable(entries=tuple(entries), indicator=indicator)
    return table


def rank(panel: Panel, indicator: Indicator, weight: float = DEFAULT_WEIGHT) -> RankTable:
    """Rank a single-year, single-source panel under one indicator."""
    if not panel.records:
        raise EmptyInputError("cannot rank an empty panel")
    keys = {(r.year, r.source) for r in panel.records}
    if len(keys) > 1:
        raise DomainError("rank expects a single-year, single-source panel")
    values = {
        r.country: indicator_value(r, indicator, weight) for r in panel.records
    }
    return rank_values(values, indicator)


def compare_rankings(a: RankTable, b: RankTable) -> RankComparison:
    """Count countries whose rank differs between two tables.

    Any rank difference counts as changed, including moves within tie
    groups.  The tables must cover the same country set.
    """
    countries_a = {e.country for e in a.entries}
    countries_b = {e.country for e in b.entries}
    if countries_a != countries_b:
        only_a = sorted(countries_a - countries_b)
        only_b = sorted(countries_b - countries_a)
        raise JoinError(
            f"country sets differ: only in first {only_a}, only in second {only_b}"
        )
    ranks_a = {e.country: e.rank for e in a.entries}
    ranks_b = {e.country: e.rank for e in b.entries}
    per_country = {c: (ranks_a[c], ranks_b[c]) for c in sorted(countries_a)}
    changed = sum(1 for ra, rb in per_country.values() if ra != rb)
    return RankComparison(
        changed=changed,
        unchanged=len(per_country) - changed,
        per_country=per_country,
    )


def series(panel: Panel, country: str, weight: float = DEFAULT_WEIGHT) -> list[SeriesPoint]:
    """Year-ascending (gini, T/B, index) trajectory for one country."""
    recs = [r for r in panel.records if r.country == country]
    if not recs:
        raise NotFoundError(country)
    recs.sort(key=lambda r: (r.year, r.source.value))
    return [
        SeriesPoint(
            year=r.year,
            gini=r.gini,
            t_over_b=t_over_b_of(r),
            index_i=composite(r.gini, ratio_of(r), weight).index_i,
        )
        for r in recs
    ]
