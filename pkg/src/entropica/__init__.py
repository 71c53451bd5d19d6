"""Entropy measurement, Huffman code construction and a small bit-exact codec."""

from .errors import EntropicaError
from .distributions import (
    Origin,
    SymbolDistribution,
    empirical_from_bytes,
    from_counts,
    from_probabilities,
    probability,
)
from .entropy import (
    EntropyReport,
    entropy,
    entropy_term,
    raw_storage_digits,
    report,
    surprisal,
)
from .coding import (
    CodeTable,
    average_code_length,
    build_huffman,
    is_prefix_free,
    kraft_sum,
)
from .codec import DigitStream, decode, encode, read_container, write_container
from .sources import BUILTIN_MODELS, SourceModel, builtin, sample

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_MODELS",
    "CodeTable",
    "DigitStream",
    "EntropicaError",
    "EntropyReport",
    "Origin",
    "SourceModel",
    "SymbolDistribution",
    "average_code_length",
    "build_huffman",
    "builtin",
    "decode",
    "empirical_from_bytes",
    "encode",
    "entropy",
    "entropy_term",
    "from_counts",
    "from_probabilities",
    "is_prefix_free",
    "kraft_sum",
    "probability",
    "raw_storage_digits",
    "read_container",
    "report",
    "sample",
    "surprisal",
    "write_container",
]
