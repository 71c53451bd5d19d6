"""Seeded example sources and a reproducible sampler.

The generator is xorshift64* seeded through one round of splitmix64, written
out in full so any implementation can match it bit for bit::

    seed mixing (splitmix64):
        z = (seed + 0x9E3779B97F4A7C15) mod 2**64
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
        state = z ^ (z >> 31)            (replaced by 0x9E3779B97F4A7C15 if 0)
    each draw:
        x = state
        x ^= x >> 12
        x ^= (x << 25) mod 2**64
        x ^= x >> 27
        state = x
        output = x * 0x2545F4914F6CDD1D mod 2**64

A 64-bit output ``u`` selects an entry by inverting the cumulative weights in
canonical symbol order. With integer counts summing to ``T`` the target is
``(u * T) >> 64``; with float weights it is ``(u >> 11) * 2**-53 * total``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, replace
from itertools import accumulate
from typing import Dict, List

from .distributions import SymbolDistribution, from_counts
from .errors import EntropicaError, UnknownModelError

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_STAR = 0x2545F4914F6CDD1D


def splitmix64(seed: int) -> int:
    z = (seed + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int = 0):
        if not 0 <= seed <= MASK64:
            raise EntropicaError("seed must be an unsigned 64-bit integer")
        self.state = splitmix64(seed) or _GOLDEN

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * _STAR) & MASK64

    def take(self, n: int) -> List[int]:
        out = [0] * n
        x = self.state
        for i in range(n):
            x ^= x >> 12
            x ^= (x << 25) & MASK64
            x ^= x >> 27
            out[i] = (x * _STAR) & MASK64
        self.state = x
        return out


@dataclass(frozen=True)
class SourceModel:
    name: str
    dist: SymbolDistribution
    seed: int = 0

    def with_seed(self, seed: int) -> "SourceModel":
        return replace(self, seed=seed)


def _letters(first: str, n: int) -> Dict[int, int]:
    return {ord(first) + i: 1 for i in range(n)}


def _model_dists() -> Dict[str, SymbolDistribution]:
    # symbol ids are ASCII codes so byte output reads naturally
    tri = {ord("a"): 9}
    tri.update(_letters("b", 18))  # 18 unit-count companions: total 27
    return {
        "constant-coin": from_counts({ord("H"): 1}, {ord("H"): "H"}),
        "fair-coin": from_counts({ord("H"): 1, ord("T"): 1}, {ord("H"): "H", ord("T"): "T"}),
        "fair-die": from_counts(_letters("1", 6), {s: chr(s) for s in _letters("1", 6)}),
        # 0.8 / 0.04 expressed as 20/25 and 1/25 so sampling stays exact
        "biased-die-80": from_counts(
            {**_letters("1", 6), ord("3"): 20}, {s: chr(s) for s in _letters("1", 6)}
        ),
        "abc-half-quarter": from_counts(
            {ord("a"): 2, ord("b"): 1, ord("c"): 1}, {s: chr(s) for s in b"abc"}
        ),
        "tri27": from_counts(tri, {s: chr(s) for s in tri}),
    }


BUILTIN_MODELS = tuple(_model_dists())


def builtin(name: str, seed: int = 0) -> SourceModel:
    dists = _model_dists()
    if name not in dists:
        raise UnknownModelError(
            f"unknown model {name!r}; choose from {', '.join(BUILTIN_MODELS)}"
        )
    return SourceModel(name, dists[name], seed)


def sample(model: SourceModel, n: int) -> List[int]:
    """Draw ``n`` symbols from ``model`` starting from its seed.

    The call does not advance any shared state: the same model and ``n``
    always give the same sequence.
    """
    if n < 0:
        raise EntropicaError("sample size must be non-negative")
    dist = model.dist
    draws = XorShift64Star(model.seed).take(n)
    symbols = dist.symbols
    if dist.counts is not None:
        total = sum(dist.counts)
        cum = list(accumulate(dist.counts))
        return [symbols[bisect_right(cum, (u * total) >> 64)] for u in draws]

    cum_f = list(accumulate(dist.weights))
    last = max(i for i, w in enumerate(dist.weights) if w > 0)
    scale = dist.total * 2.0 ** -53
    return [symbols[min(bisect_right(cum_f, (u >> 11) * scale), last)] for u in draws]
