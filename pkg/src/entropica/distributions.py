"""Discrete distributions over finite alphabets of integer symbol ids."""

from __future__ import annotations

import enum
import math
from functools import cached_property
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .errors import (
    DuplicateSymbolError,
    EmptyAlphabetError,
    EmptyInputError,
    EntropicaError,
    NegativeProbabilityError,
    NotNormalizedError,
)

DEFAULT_TOLERANCE = 1e-9


class Origin(enum.Enum):
    COUNTS = "counts"
    PROBABILITIES = "probabilities"
    EMPIRICAL = "empirical"


@dataclass(frozen=True)
class SymbolDistribution:
    """Immutable weighted alphabet, entries sorted by symbol id.

    ``counts`` is kept alongside the float weights for count and empirical
    origins so callers that care about exact fractions can use integers.
    ``labels`` is an optional display string per entry.
    """

    symbols: Tuple[int, ...]
    weights: Tuple[float, ...]
    total: float
    origin: Origin
    counts: Optional[Tuple[int, ...]] = None
    labels: Optional[Tuple[str, ...]] = None

    def __len__(self) -> int:
        return len(self.symbols)

    @cached_property
    def probabilities(self) -> Tuple[float, ...]:
        if self.counts is not None:
            n = sum(self.counts)
            return tuple(c / n for c in self.counts)
        return tuple(w / self.total for w in self.weights)

    @property
    def support(self) -> Tuple[int, ...]:
        """Symbols with nonzero probability."""
        return tuple(s for s, w in zip(self.symbols, self.weights) if w > 0)

    def index(self, symbol: int) -> int:
        """Position of ``symbol`` in canonical order, or -1 if absent."""
        return self._index_map.get(symbol, -1)

    @cached_property
    def _index_map(self):
        return {s: i for i, s in enumerate(self.symbols)}

    def label(self, symbol: int) -> str:
        i = self.index(symbol)
        if self.labels is not None and i >= 0:
            return self.labels[i]
        return str(symbol)

    def items(self):
        """Yield ``(symbol, probability)`` pairs in canonical order."""
        return zip(self.symbols, self.probabilities)


def _canonical(
    pairs: Iterable[Tuple[int, float]], labels: Optional[Mapping[int, str]]
) -> Tuple[list, Optional[Tuple[str, ...]]]:
    pairs = list(pairs)
    if not pairs:
        raise EmptyAlphabetError("distribution has no entries")
    seen = set()
    for sym, _ in pairs:
        if not isinstance(sym, int) or isinstance(sym, bool) or sym < 0:
            raise EntropicaError(f"symbol id must be a non-negative integer, got {sym!r}")
        if sym in seen:
            raise DuplicateSymbolError(f"symbol {sym} appears more than once")
        seen.add(sym)
    pairs.sort(key=lambda p: p[0])
    lab = None
    if labels:
        lab = tuple(labels.get(s, str(s)) for s, _ in pairs)
    return pairs, lab


def from_counts(
    counts: Iterable[Tuple[int, int]] | Mapping[int, int],
    labels: Optional[Mapping[int, str]] = None,
    *,
    _origin: Origin = Origin.COUNTS,
) -> SymbolDistribution:
    """Distribution whose weights are occurrence counts.

    Zero counts are kept as zero-probability symbols.

    >>> d = from_counts([(97, 2), (98, 1), (99, 1)])
    >>> d.probabilities
    (0.5, 0.25, 0.25)
    """
    if isinstance(counts, Mapping):
        counts = counts.items()
    pairs, lab = _canonical(counts, labels)
    for sym, c in pairs:
        if not isinstance(c, int) or c < 0:
            raise EntropicaError(f"count for symbol {sym} must be a non-negative integer")
    total = sum(c for _, c in pairs)
    if total == 0:
        raise EmptyAlphabetError("all counts are zero")
    return SymbolDistribution(
        symbols=tuple(s for s, _ in pairs),
        weights=tuple(float(c) for _, c in pairs),
        total=float(total),
        origin=_origin,
        counts=tuple(c for _, c in pairs),
        labels=lab,
    )


def from_probabilities(
    pairs: Iterable[Tuple[int, float]] | Mapping[int, float],
    tolerance: float = DEFAULT_TOLERANCE,
    labels: Optional[Mapping[int, str]] = None,
) -> SymbolDistribution:
    if isinstance(pairs, Mapping):
        pairs = pairs.items()
    pairs, lab = _canonical(((s, float(p)) for s, p in pairs), labels)
    for sym, p in pairs:
        if p < 0 or math.isnan(p):
            raise NegativeProbabilityError(f"probability for symbol {sym} is {p}")
    for sym, p in pairs:
        if p > 1:
            raise NotNormalizedError(f"probability for symbol {sym} exceeds 1")
    total = math.fsum(p for _, p in pairs)
    if abs(total - 1.0) > tolerance:
        raise NotNormalizedError(f"probabilities sum to {total!r}, not 1")
    if total <= 0:
        raise EmptyAlphabetError("all probabilities are zero")
    return SymbolDistribution(
        symbols=tuple(s for s, _ in pairs),
        weights=tuple(p for _, p in pairs),
        total=total,
        origin=Origin.PROBABILITIES,
        labels=lab,
    )


def empirical_from_bytes(data: bytes | bytearray | memoryview) -> SymbolDistribution:
    """Byte-frequency distribution of ``data``; only bytes present appear."""
    if len(data) == 0:
        raise EmptyInputError("no data to analyze")
    return counts_to_empirical(Counter(bytes(data)))


def counts_to_empirical(counter: Mapping[int, int]) -> SymbolDistribution:
    if not counter:
        raise EmptyInputError("no data to analyze")
    return from_counts(
        [(s, c) for s, c in counter.items() if c > 0], _origin=Origin.EMPIRICAL
    )


def probability(dist: SymbolDistribution, symbol: int) -> float:
    i = dist.index(symbol)
    if i < 0:
        return 0.0
    return dist.probabilities[i]


# -- text format: "<id>\t<value>" per line, '#' comments ---------------------

def parse_distribution_text(text: str, tolerance: float = DEFAULT_TOLERANCE) -> SymbolDistribution:
    """Parse the tab-separated distribution format.

    If every value is an integer literal the result is count-origin,
    otherwise the values are taken as probabilities.
    """
    raw: list = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("\t") if "\t" in stripped else stripped.split()
        if len(parts) != 2:
            raise EntropicaError(f"line {lineno}: expected '<symbol>\\t<value>'")
        try:
            sym = int(parts[0])
        except ValueError:
            raise EntropicaError(f"line {lineno}: bad symbol id {parts[0]!r}") from None
        raw.append((lineno, sym, parts[1]))
    if not raw:
        raise EmptyAlphabetError("distribution file has no entries")

    if all(_is_int_literal(v) for _, _, v in raw):
        return from_counts([(s, int(v)) for _, s, v in raw])
    pairs = []
    for lineno, sym, v in raw:
        try:
            pairs.append((sym, float(v)))
        except ValueError:
            raise EntropicaError(f"line {lineno}: bad value {v!r}") from None
    return from_probabilities(pairs, tolerance)


def _is_int_literal(s: str) -> bool:
    return s.isdigit()


def format_distribution_text(dist: SymbolDistribution) -> str:
    lines = []
    if dist.counts is not None:
        values: Sequence = dist.counts
    else:
        values = [repr(w) for w in dist.weights]
    for s, v in zip(dist.symbols, values):
        lines.append(f"{s}\t{v}")
    return "\n".join(lines) + "\n"
