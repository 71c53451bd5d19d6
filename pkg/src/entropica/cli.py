"""``entropica`` command-line front end.

Exit codes: 0 success, 1 internal error, 2 bad input or format.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path
from typing import Optional

from . import __version__
from .codec import read_container, write_container, encode as encode_symbols
from .coding import CodeTable, average_code_length, build_huffman, kraft_sum, is_prefix_free
from .distributions import (
    SymbolDistribution,
    counts_to_empirical,
    parse_distribution_text,
)
from .entropy import check_base, entropy, entropy_term, report as make_report, surprisal, unit_name
from .errors import EmptyInputError, EntropicaError
from .sources import BUILTIN_MODELS, builtin, sample

CHUNK_SIZE = 1 << 16
REPORT_BASES = (2, 3)


class Output:
    """Writes records either as ``key: value`` text or as JSON lines."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def record(self, kind: str, fields: dict, text: Optional[str] = None):
        if self.fmt == "json-lines":
            self.stream.write(json.dumps({"record": kind, **fields}) + "\n")
        else:
            self.stream.write((text if text is not None else _text_fields(fields)) + "\n")


def _num(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def _text_fields(fields: dict) -> str:
    return "\n".join(f"{k}: {_num(v)}" for k, v in fields.items())


def _read_counts(path: str) -> Counter:
    counts: Counter = Counter()
    with open(path, "rb") as fh:
        while True:
            chunk = fh.read(CHUNK_SIZE)
            if not chunk:
                break
            counts.update(chunk)
    return counts


def _load_dist(args) -> SymbolDistribution:
    if getattr(args, "dist", None):
        return parse_distribution_text(Path(args.dist).read_text())
    if getattr(args, "model", None):
        return builtin(args.model).dist
    if getattr(args, "input", None):
        counts = _read_counts(args.input)
        if not counts:
            raise EmptyInputError(f"{args.input}: file is empty")
        return counts_to_empirical(counts)
    raise EntropicaError("need an input file, --dist or --model")


def _write_out(args, data: bytes | str) -> None:
    if args.out:
        mode = "wb" if isinstance(data, bytes) else "w"
        with open(args.out, mode) as fh:
            fh.write(data)
    elif isinstance(data, bytes):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        sys.stdout.write(data)


# -- commands ----------------------------------------------------------------

def cmd_analyze(args, out: Output) -> None:
    dist = _load_dist(args)
    table = build_huffman(dist, args.base)
    rep = make_report(dist, args.base, table)
    n = sum(dist.counts) if dist.counts is not None else None
    fields = {"input": args.input, "symbols": n, **rep.as_dict()}
    unit = unit_name(args.base)
    text = "\n".join([
        f"input: {args.input}",
        f"symbols: {n}",
        f"alphabet_size: {rep.alphabet_size}",
        f"entropy: {_num(rep.entropy)} {unit}/symbol",
        f"raw_digits: {rep.raw_digits}",
        f"huffman_avg: {_num(rep.avg_code_length)}",
        f"redundancy: {_num(rep.redundancy)}",
    ])
    out.record("analyze", fields, text)
    if args.plot:
        _plot(dist, args.base, args.plot, table, args.input)


def cmd_build_code(args, out: Output) -> None:
    dist = _load_dist(args)
    table = build_huffman(dist, args.base)
    _write_out(args, table.to_text())
    if args.out:
        out.record("build-code", {
            "out": args.out,
            "base": table.base,
            "entries": len(table),
            "avg_code_length": average_code_length(table, dist),
            "kraft_sum": kraft_sum(table),
        })


def cmd_encode(args, out: Output) -> None:
    if args.base != 2:
        raise EntropicaError(".shen containers require --base 2")
    data = Path(args.input).read_bytes()
    if not data:
        raise EmptyInputError(f"{args.input}: file is empty")
    dist = counts_to_empirical(Counter(data))
    table = build_huffman(dist, 2)
    symbols = list(data)
    blob = write_container(table, symbols)
    with open(args.out, "wb") as fh:
        fh.write(blob)
    payload_bits = len(encode_symbols(table, symbols))
    out.record("encode", {
        "input": args.input,
        "out": args.out,
        "symbols": len(symbols),
        "payload_bits": payload_bits,
        "container_bytes": len(blob),
        "bits_per_symbol": payload_bits / len(symbols),
        "entropy": entropy(dist, 2),
    })


def cmd_decode(args, out: Output) -> None:
    table, symbols = read_container(Path(args.input).read_bytes())
    if any(s > 255 for s in symbols):
        raise EntropicaError("container holds symbols that are not byte values")
    with open(args.out, "wb") as fh:
        fh.write(bytes(symbols))


def cmd_simulate(args, out: Output) -> None:
    model = builtin(args.model, args.seed)
    symbols = sample(model, args.n)
    if args.bytes:
        _write_out(args, bytes(symbols))
    else:
        label = {s: model.dist.label(s) for s in model.dist.symbols}
        _write_out(args, "".join(label[s] + "\n" for s in symbols))


def cmd_report(args, out: Output) -> None:
    dist = _load_dist(args)
    table = CodeTable.from_text(Path(args.table).read_text()) if args.table else None
    if table is not None and not is_prefix_free(table):
        raise EntropicaError(f"{args.table}: code table is not prefix-free")

    bases = [args.base] + [b for b in REPORT_BASES if b != args.base]
    for b in bases:
        rep = make_report(dist, b, table if table is not None and table.base == b else None)
        fields = rep.as_dict()
        out.record("entropy", fields, "\n".join([
            f"base {b} ({rep.unit}):",
            f"  entropy: {_num(rep.entropy)}",
            f"  raw_digits: {rep.raw_digits}",
        ] + ([
            f"  avg_code_length: {_num(rep.avg_code_length)}",
            f"  redundancy: {_num(rep.redundancy)}",
        ] if rep.avg_code_length is not None else [])))

    if out.fmt == "text":
        out.stream.write(f"per-symbol terms (base {args.base}):\n")
        out.stream.write("  symbol  label  probability  surprisal  term" + ("  code" if table else "") + "\n")
    for sym, p in dist.items():
        fields = {
            "base": args.base,
            "symbol": sym,
            "label": dist.label(sym),
            "probability": p,
            "surprisal": surprisal(p, args.base) if p > 0 else None,
            "term": entropy_term(p, args.base),
        }
        if table is not None:
            fields["codeword"] = table.codeword_str(sym) if sym in table else None
        row = f"  {sym:>6}  {fields['label']:>5}  {_num(p):>11}  {_num(fields['surprisal']):>9}  {_num(fields['term']):>8}"
        if table is not None:
            row += f"  {fields['codeword'] or '-'}"
        out.record("symbol", fields, row)

    if table is not None and out.fmt == "text":
        out.stream.write(f"table: base {table.base}, {len(table)} entries, kraft sum {_num(kraft_sum(table))}\n")
    if args.plot:
        _plot(dist, args.base, args.plot, table if table is not None and table.base == args.base else None,
              args.model or args.dist)


def _plot(dist, base, path, table, title):
    from .plotting import plot_symbol_costs

    plot_symbol_costs(dist, base, path, table, title=str(title) if title else None)


# -- parser ------------------------------------------------------------------

def _base(value: str) -> int:
    try:
        return check_base(int(value))
    except (ValueError, EntropicaError):
        raise argparse.ArgumentTypeError(f"base must be an integer >= 2, got {value!r}") from None


def _u64(value: str) -> int:
    n = int(value, 0)
    if not 0 <= n < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return n


def _nonneg(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", type=_base, default=2, help="logarithm / code base (default 2)")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")

    parser = argparse.ArgumentParser(prog="entropica", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="entropy report for a file's bytes")
    p.add_argument("input")
    p.add_argument("--plot", metavar="PATH", help="also write a per-symbol cost figure")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("build-code", parents=[common], help="build a Huffman code table")
    p.add_argument("input", nargs="?")
    p.add_argument("--dist")
    p.add_argument("--model", choices=BUILTIN_MODELS)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build_code)

    p = sub.add_parser("encode", parents=[common], help="compress a file into a .shen container")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="restore a file from a .shen container")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", parents=[common], help="sample a built-in source")
    p.add_argument("--model", required=True, choices=BUILTIN_MODELS)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--bytes", action="store_true", help="write raw symbol bytes instead of labels")
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("report", parents=[common], help="entropy in several bases for a distribution")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--dist")
    src.add_argument("--model", choices=BUILTIN_MODELS)
    p.add_argument("--table", help="code table file to compare against")
    p.add_argument("--plot", metavar="PATH", help="also write a per-symbol cost figure")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        args.func(args, out)
    except (EntropicaError, OSError, UnicodeDecodeError) as exc:
        print(f"entropica: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"entropica: internal error: {exc!r}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
