"""Surprisal, Shannon entropy and the entropy-versus-raw-storage report."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from .distributions import SymbolDistribution
from .errors import AlphabetMismatchError, BadBaseError, DomainError

if TYPE_CHECKING:
    from .coding import CodeTable


def check_base(base) -> int:
    if isinstance(base, bool) or not isinstance(base, int) or base < 2:
        raise BadBaseError(f"base must be an integer >= 2, got {base!r}")
    return base


def unit_name(base: int) -> str:
    if base == 2:
        return "bits"
    if base == 3:
        return "trits"
    return f"digits (base {base})"


def surprisal(p: float, base: int = 2) -> float:
    """Return log_base(1/p), the digit cost of an outcome of probability p."""
    check_base(base)
    if not 0.0 < p <= 1.0:
        raise DomainError(f"surprisal needs 0 < p <= 1, got {p!r}")
    if p == 1.0:
        return 0.0
    return -math.log(p) / math.log(base)


def entropy_term(p: float, base: int = 2) -> float:
    """One summand ``-p * log_base(p)``; zero at p = 0 and p = 1."""
    check_base(base)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"probability must lie in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log(p) / math.log(base)


def entropy(dist: SymbolDistribution, base: int = 2) -> float:
    """Shannon entropy of ``dist`` in base-``base`` digits per symbol.

    The terms are combined with :func:`math.fsum`, so the result does not
    depend on symbol order and zero-probability entries change nothing.
    """
    check_base(base)
    return math.fsum(entropy_term(p, base) for p in dist.probabilities)


def raw_storage_digits(alphabet_size: int, base: int = 2) -> int:
    """Fixed-width digits needed to tell ``alphabet_size`` values apart (at least 1)."""
    check_base(base)
    if alphabet_size < 1:
        raise DomainError("alphabet size must be positive")
    digits, capacity = 1, base
    while capacity < alphabet_size:
        digits += 1
        capacity *= base
    return digits


@dataclass(frozen=True)
class EntropyReport:
    entropy: float
    base: int
    alphabet_size: int
    raw_digits: int
    avg_code_length: Optional[float] = None
    redundancy: Optional[float] = None

    @property
    def unit(self) -> str:
        return unit_name(self.base)

    def as_dict(self) -> dict:
        return {
            "entropy": self.entropy,
            "base": self.base,
            "unit": self.unit,
            "alphabet_size": self.alphabet_size,
            "raw_digits": self.raw_digits,
            "avg_code_length": self.avg_code_length,
            "redundancy": self.redundancy,
        }


def report(
    dist: SymbolDistribution, base: int = 2, table: Optional["CodeTable"] = None
) -> EntropyReport:
    """Contrast a distribution's information content with its raw storage.

    ``alphabet_size`` counts every symbol of the distribution, including
    zero-probability ones, since that is what fixed-width storage pays for.
    """
    check_base(base)
    h = entropy(dist, base)
    n = len(dist)
    avg = red = None
    if table is not None:
        if table.base != base:
            raise AlphabetMismatchError(
                f"code table is base {table.base}, report asked for base {base}"
            )
        from .coding import average_code_length

        avg = average_code_length(table, dist)
        red = avg - h
    return EntropyReport(
        entropy=h,
        base=base,
        alphabet_size=n,
        raw_digits=raw_storage_digits(n, base),
        avg_code_length=avg,
        redundancy=red,
    )
