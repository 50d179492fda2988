"""Text formats: code files, matrix files, and the JSON report document.

Code file layout: optional comment lines starting with '#', then one
header line of key=value tokens (q=3 or q=2,3,3 for mixed profiles, n=5,
optional name=...), then one codeword per line.  Symbols print as digit
strings when every alphabet size is at most 10 and as comma-separated
integers otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .words import AlphabetSpec, CodeBook


class CodeFileError(ValueError):
    """Malformed code file; message carries the offending line number."""


def write_code_file(c: CodeBook) -> str:
    q_token = (
        str(c.alphabet.sizes[0])
        if c.alphabet.is_uniform
        else ",".join(str(q) for q in c.alphabet.sizes)
    )
    header = f"q={q_token} n={c.n}"
    if c.name:
        header += f" name={c.name}"
    for key in sorted(c.meta):
        value = str(c.meta[key])
        if any(ch.isspace() for ch in f"{key}{value}"):
            raise ValueError(f"metadata entry {key!r} contains whitespace")
        header += f" {key}={value}"
    lines = ["# asymcodes code file v1", header]
    digits = all(q <= 10 for q in c.alphabet.sizes)
    for w in c.words:
        lines.append(
            "".join(str(s) for s in w.symbols)
            if digits
            else ",".join(str(s) for s in w.symbols)
        )
    return "\n".join(lines) + "\n"


def parse_code_file(text: str) -> CodeBook:
    header = None
    header_line = 0
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line
            header_line = lineno
        else:
            body.append((lineno, line))
    if header is None:
        raise CodeFileError("line 0: missing header line")

    fields = {}
    for tok in header.split():
        if "=" not in tok:
            raise CodeFileError(f"line {header_line}: bad header token {tok!r}")
        key, _, value = tok.partition("=")
        fields[key] = value
    if "q" not in fields or "n" not in fields:
        raise CodeFileError(f"line {header_line}: header needs q= and n=")
    try:
        n = int(fields["n"])
        sizes = tuple(int(x) for x in fields["q"].split(","))
    except ValueError as e:
        raise CodeFileError(f"line {header_line}: {e}") from e
    if len(sizes) == 1:
        sizes = sizes * n
    if len(sizes) != n:
        raise CodeFileError(f"line {header_line}: q profile length != n")
    alphabet = AlphabetSpec(sizes)
    digits = all(q <= 10 for q in sizes)

    rows = []
    seen = set()
    for lineno, line in body:
        if digits and "," not in line:
            symbols = tuple(int(ch) for ch in line)
        else:
            symbols = tuple(int(x) for x in line.split(","))
        if len(symbols) != n:
            raise CodeFileError(f"line {lineno}: expected {n} symbols, got {len(symbols)}")
        for i, (s, q) in enumerate(zip(symbols, sizes)):
            if not 0 <= s < q:
                raise CodeFileError(
                    f"line {lineno}: symbol {s} at coordinate {i + 1} outside 0..{q - 1}"
                )
        if symbols in seen:
            raise CodeFileError(f"line {lineno}: duplicate codeword")
        seen.add(symbols)
        rows.append(symbols)
    meta = {k: v for k, v in fields.items() if k not in ("q", "n", "name")}
    return CodeBook.from_symbols(
        alphabet, rows, name=fields.get("name", ""), meta=meta
    )


@dataclass
class ReportDocument:
    """Deterministic JSON-serializable record of one command run."""

    command: list[str]
    parameters: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    seed: int | None = None

    def to_json(self) -> str:
        doc = {
            "tool": "asymcodes",
            "version": __version__,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "flags": self.flags,
            "seed": self.seed,
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"

    @staticmethod
    def from_json(text: str) -> "ReportDocument":
        doc = json.loads(text)
        return ReportDocument(
            command=doc["command"],
            parameters=doc["parameters"],
            results=doc["results"],
            flags=doc["flags"],
            seed=doc["seed"],
        )
