"""n-ary Huffman construction and prefix-code checks.

Tie-breaking is fixed so tables are reproducible: the heap orders nodes by
``(weight, smallest real symbol id inside, creation sequence)`` and the
children of a merge get digits ``0..base-1`` in the order they were popped.
For ``base > 2`` zero-weight dummy leaves are added until
``(k - 1) % (base - 1) == 0``; dummies never receive a codeword.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple

from .distributions import SymbolDistribution
from .entropy import check_base
from .errors import AlphabetMismatchError, EmptyAlphabetError, EntropicaError

Codeword = Tuple[int, ...]

_DUMMY = -1


@dataclass(frozen=True)
class CodeTable:
    """Mapping from symbol id to a codeword of base-``base`` digits."""

    base: int
    entries: Mapping[int, Codeword] = field(default_factory=dict)

    def __post_init__(self):
        check_base(self.base)
        canon: Dict[int, Codeword] = {}
        for sym in sorted(self.entries):
            word = tuple(self.entries[sym])
            if not word:
                raise EntropicaError(f"empty codeword for symbol {sym}")
            if any(not 0 <= d < self.base for d in word):
                raise EntropicaError(f"codeword for symbol {sym} has a digit outside base {self.base}")
            canon[sym] = word
        object.__setattr__(self, "entries", canon)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, symbol: int) -> bool:
        return symbol in self.entries

    def __getitem__(self, symbol: int) -> Codeword:
        return self.entries[symbol]

    @property
    def symbols(self) -> Tuple[int, ...]:
        return tuple(self.entries)

    def lengths(self) -> Dict[int, int]:
        return {s: len(w) for s, w in self.entries.items()}

    def codeword_str(self, symbol: int) -> str:
        return digits_to_str(self.entries[symbol])

    def to_text(self) -> str:
        """Serialize as ``base <b>`` followed by ``<id>\\t<digits>`` lines."""
        lines = [f"base {self.base}"]
        lines.extend(f"{s}\t{digits_to_str(w)}" for s, w in self.entries.items())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CodeTable":
        base = None
        entries: Dict[int, Codeword] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if base is None:
                head = stripped.split()
                if len(head) != 2 or head[0] != "base":
                    raise EntropicaError("code table must start with 'base <b>'")
                base = int(head[1])
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise EntropicaError(f"line {lineno}: expected '<symbol>\\t<codeword>'")
            sym = int(parts[0])
            if sym in entries:
                raise EntropicaError(f"line {lineno}: symbol {sym} listed twice")
            entries[sym] = str_to_digits(parts[1])
        if base is None:
            raise EntropicaError("code table is empty")
        return cls(base, entries)


def digits_to_str(word: Iterable[int]) -> str:
    return "".join(chr(48 + d) for d in word)


def str_to_digits(text: str) -> Codeword:
    word = tuple(ord(c) - 48 for c in text)
    if any(d < 0 for d in word):
        raise EntropicaError(f"bad codeword {text!r}")
    return word


def build_huffman(dist: SymbolDistribution, base: int = 2) -> CodeTable:
    """Optimal prefix-free code over the nonzero-probability symbols of ``dist``.

    Count-origin distributions merge on their integer counts, so paper-style
    examples are built with exact arithmetic.

    >>> from entropica.distributions import from_counts
    >>> t = build_huffman(from_counts({97: 2, 98: 1, 99: 1}))
    >>> [t.codeword_str(s) for s in (97, 98, 99)]
    ['0', '10', '11']
    """
    check_base(base)
    weights = dist.counts if dist.counts is not None else dist.weights
    leaves = [(w, s) for s, w in zip(dist.symbols, weights) if w > 0]
    if not leaves:
        raise EmptyAlphabetError("no symbol has nonzero probability")
    if len(leaves) == 1:
        return CodeTable(base, {leaves[0][1]: (0,)})

    # heap items: (weight, min real symbol id, seq, node)
    # node is a symbol id (leaf), _DUMMY, or a tuple of child nodes
    heap = []
    seq = 0
    pad = (-(len(leaves) - 1)) % (base - 1)
    for _ in range(pad):
        heap.append((0, _DUMMY, seq, _DUMMY))
        seq += 1
    for w, s in leaves:
        heap.append((w, s, seq, s))
        seq += 1
    heapq.heapify(heap)

    while len(heap) > 1:
        children = [heapq.heappop(heap) for _ in range(base)]
        weight = children[0][0]
        for c in children[1:]:
            weight = weight + c[0]
        min_id = min(c[1] for c in children if c[1] != _DUMMY)
        heapq.heappush(heap, (weight, min_id, seq, tuple(c[3] for c in children)))
        seq += 1

    entries: Dict[int, Codeword] = {}
    stack = [(heap[0][3], ())]
    while stack:
        node, prefix = stack.pop()
        if isinstance(node, tuple):
            for digit, child in enumerate(node):
                stack.append((child, prefix + (digit,)))
        elif node != _DUMMY:
            entries[node] = prefix
    return CodeTable(base, entries)


def average_code_length(table: CodeTable, dist: SymbolDistribution) -> float:
    """Expected codeword length ``sum p(i) * len(code(i))`` under ``dist``."""
    terms = []
    for sym, p in dist.items():
        if p == 0:
            continue
        if sym not in table:
            raise AlphabetMismatchError(f"symbol {sym} has no codeword")
        terms.append(p * len(table[sym]))
    return math.fsum(terms)


def kraft_sum(table: CodeTable) -> float:
    b = table.base
    return math.fsum(b ** -len(w) for w in table.entries.values())


def is_prefix_free(table: CodeTable) -> bool:
    """True iff no codeword is a prefix of another.

    Identical codewords for two symbols also count as a violation, since such
    a table cannot be decoded.
    """
    words = sorted(table.entries.values())
    # in lexicographic order, any word with a prefix in the set directly follows
    # either that prefix or another word sharing it
    for prev, cur in zip(words, words[1:]):
        if cur[: len(prev)] == prev:
            return False
    return True
