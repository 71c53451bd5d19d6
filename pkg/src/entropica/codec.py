"""Prefix-code encoding/decoding and the ``.shen`` container format.

Container layout (big-endian throughout)::

    magic            4 bytes   b"SHEN"
    version          1 byte    0x01
    base             1 byte    must be 2
    entry count      2 bytes
    entries          per entry: symbol id (2 bytes), codeword length (1 byte),
                     codeword bits MSB-first, zero-padded to a byte boundary
    symbol count     8 bytes
    payload          concatenated codewords MSB-first, last byte zero-padded
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from .coding import CodeTable, is_prefix_free, kraft_sum
from .entropy import check_base
from .errors import (
    BadMagicError,
    BadPaddingError,
    CorruptTableError,
    EntropicaError,
    TruncatedError,
    UnknownPrefixError,
    UnknownSymbolError,
    UnsupportedBaseError,
    UnsupportedVersionError,
)

MAGIC = b"SHEN"
VERSION = 1
MAX_CODEWORD_LENGTH = 255
MAX_SYMBOL_ID = 0xFFFF

_HEADER = struct.Struct(">4sBBH")
_ENTRY = struct.Struct(">HB")
_COUNT = struct.Struct(">Q")

_BITS_TO_DIGITS = bytes.maketrans(b"01", b"\x00\x01")
_DIGITS_TO_BITS = bytes.maketrans(b"\x00\x01", b"01")


@dataclass(frozen=True)
class DigitStream:
    """A sequence of base-``base`` digits, one digit value per byte."""

    digits: bytes
    base: int = 2

    def __post_init__(self):
        check_base(self.base)
        if self.base > 256:
            raise EntropicaError("digit streams hold bases up to 256")
        digits = bytes(self.digits)
        if digits and max(digits) >= self.base:
            raise EntropicaError(f"digit outside base {self.base}")
        object.__setattr__(self, "digits", digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "".join(chr(48 + d) for d in self.digits)

    @classmethod
    def from_str(cls, text: str, base: int = 2) -> "DigitStream":
        return cls(bytes(ord(c) - 48 for c in text if not c.isspace()), base)


def encode(table: CodeTable, symbols: Iterable[int]) -> DigitStream:
    """Concatenate the codewords of ``symbols``; no separators are emitted."""
    words = {s: bytes(w) for s, w in table.entries.items()}
    try:
        digits = b"".join([words[s] for s in symbols])
    except KeyError as exc:
        raise UnknownSymbolError(f"symbol {exc.args[0]} is not in the code table") from None
    return DigitStream(digits, table.base)


def _build_trie(table: CodeTable) -> list:
    # internal nodes are lists indexed by digit; leaves are symbol ids (int)
    root: list = [None] * table.base
    for sym, word in table.entries.items():
        node = root
        for d in word[:-1]:
            nxt = node[d]
            if nxt is None:
                nxt = node[d] = [None] * table.base
            elif not isinstance(nxt, list):
                raise CorruptTableError("code table is not prefix-free")
            node = nxt
        if node[word[-1]] is not None:
            raise CorruptTableError("code table is not prefix-free")
        node[word[-1]] = sym
    return root


def iter_decode(table: CodeTable, digits: Sequence[int]) -> Iterator[Tuple[int, int]]:
    """Walk the code trie over ``digits``, yielding ``(symbol, end_position)``.

    Each digit is read exactly once; a symbol is emitted as soon as its last
    digit arrives. Stops cleanly when the input is exhausted at a codeword
    boundary and raises :class:`TruncatedError` otherwise.
    """
    root = _build_trie(table)
    pos, n = 0, len(digits)
    while pos < n:
        node = root
        while True:
            if pos >= n:
                raise TruncatedError("stream ends inside a codeword")
            nxt = node[digits[pos]]
            pos += 1
            if nxt is None:
                raise UnknownPrefixError(f"no codeword matches the digits ending at position {pos}")
            if isinstance(nxt, list):
                node = nxt
            else:
                yield nxt, pos
                break


def decode(table: CodeTable, stream: Union[DigitStream, Sequence[int]], count: int) -> List[int]:
    """Decode exactly ``count`` symbols; any digits left over must be zeros."""
    if not isinstance(stream, DigitStream):
        stream = DigitStream(bytes(stream), table.base)
    digits = stream.digits
    if stream.base != table.base:
        raise EntropicaError(f"stream is base {stream.base}, table is base {table.base}")
    if count < 0:
        raise EntropicaError("symbol count must be non-negative")
    out, end = _decode_prefix(table, digits, count)
    if any(digits[end:]):
        raise BadPaddingError("nonzero digits after the last symbol")
    return out


def _decode_prefix(table: CodeTable, digits: bytes, count: int) -> Tuple[List[int], int]:
    if count == 0:
        return [], 0
    if not table.entries:
        raise UnknownPrefixError("empty code table cannot decode symbols")
    out: List[int] = []
    end = 0
    for sym, end in iter_decode(table, digits):
        out.append(sym)
        if len(out) == count:
            return out, end
    raise TruncatedError(f"stream ended after {len(out)} of {count} symbols")


# -- bit packing -------------------------------------------------------------

def pack_bits(digits: bytes) -> bytes:
    """Pack 0/1 digit bytes MSB-first, zero-padding the final byte."""
    if not digits:
        return b""
    nbytes = (len(digits) + 7) // 8
    bits = digits.translate(_DIGITS_TO_BITS) + b"0" * (nbytes * 8 - len(digits))
    return int(bits, 2).to_bytes(nbytes, "big")


def unpack_bits(data: bytes) -> bytes:
    if not data:
        return b""
    bits = format(int.from_bytes(data, "big"), f"0{len(data) * 8}b")
    return bits.encode("ascii").translate(_BITS_TO_DIGITS)


# -- container ---------------------------------------------------------------

def _check_table(table: CodeTable) -> None:
    if not is_prefix_free(table):
        raise CorruptTableError("code table is not prefix-free")
    if table.entries and kraft_sum(table) > 1 + 1e-12:
        raise CorruptTableError("code table violates the Kraft inequality")


def write_container(table: CodeTable, symbols: Iterable[int]) -> bytes:
    if table.base != 2:
        raise UnsupportedBaseError("packed containers only carry base-2 codes")
    _check_table(table)
    if len(table) > 0xFFFF:
        raise EntropicaError("too many table entries for the container format")
    symbols = list(symbols)
    parts = [_HEADER.pack(MAGIC, VERSION, table.base, len(table))]
    for sym, word in table.entries.items():
        if sym > MAX_SYMBOL_ID:
            raise EntropicaError(f"symbol id {sym} does not fit in 16 bits")
        if len(word) > MAX_CODEWORD_LENGTH:
            raise EntropicaError(f"codeword for symbol {sym} is longer than {MAX_CODEWORD_LENGTH} bits")
        parts.append(_ENTRY.pack(sym, len(word)))
        parts.append(pack_bits(bytes(word)))
    parts.append(_COUNT.pack(len(symbols)))
    parts.append(pack_bits(encode(table, symbols).digits))
    return b"".join(parts)


def read_container(data: bytes) -> Tuple[CodeTable, List[int]]:
    data = bytes(data)
    if data[:4] != MAGIC:
        raise BadMagicError("not a .shen container")
    if len(data) < _HEADER.size:
        raise TruncatedError("container header is incomplete")
    _, version, base, n_entries = _HEADER.unpack_from(data, 0)
    if version != VERSION:
        raise UnsupportedVersionError(f"container version {version} is not supported")
    if base != 2:
        raise UnsupportedBaseError(f"container base {base} is not supported")

    pos = _HEADER.size
    entries = {}
    for _ in range(n_entries):
        if pos + _ENTRY.size > len(data):
            raise TruncatedError("code table is incomplete")
        sym, length = _ENTRY.unpack_from(data, pos)
        pos += _ENTRY.size
        if length == 0:
            raise CorruptTableError(f"zero-length codeword for symbol {sym}")
        if sym in entries:
            raise CorruptTableError(f"symbol {sym} appears twice in the table")
        nbytes = (length + 7) // 8
        if pos + nbytes > len(data):
            raise TruncatedError("code table is incomplete")
        bits = unpack_bits(data[pos:pos + nbytes])
        pos += nbytes
        if any(bits[length:]):
            raise CorruptTableError(f"nonzero padding in codeword for symbol {sym}")
        entries[sym] = tuple(bits[:length])
    table = CodeTable(base, entries)
    _check_table(table)

    if pos + _COUNT.size > len(data):
        raise TruncatedError("symbol count is missing")
    (count,) = _COUNT.unpack_from(data, pos)
    pos += _COUNT.size

    payload = unpack_bits(data[pos:])
    symbols, end = _decode_prefix(table, payload, count)
    leftover = payload[end:]
    if len(leftover) >= 8:
        raise BadPaddingError("trailing bytes after the payload")
    if any(leftover):
        raise BadPaddingError("nonzero pad bits after the payload")
    return table, symbols
