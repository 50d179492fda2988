"""Words, code books, and the distance metrics of the asymmetric error model.

Everything here is a pure function over immutable values.  A Word is a
fixed-length sequence of integer symbols, each drawn from a per-coordinate
alphabet {0..q_i-1}; a CodeBook is a duplicate-free, lexicographically
ordered set of words over one alphabet profile.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_ENUM_CAP = int(os.environ.get("ASYMCODES_ENUM_CAP", 10**6))


class AlphabetMismatch(ValueError):
    """Two operands do not share the same alphabet profile."""


class EnumerationCapExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured cap."""


class DecodingError(Exception):
    """Base class for decoder outcomes that do not produce a codeword."""


class DecodeFailure(DecodingError):
    """No codeword is consistent with the received word."""


class DecodeAmbiguity(DecodingError):
    """More than one codeword is consistent with the received word."""

    def __init__(self, candidates):
        self.candidates = tuple(candidates)
        super().__init__(f"{len(self.candidates)} codewords qualify")


@dataclass(frozen=True)
class AlphabetSpec:
    """Per-coordinate alphabet sizes; coordinate i ranges over 0..sizes[i]-1."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(q) for q in self.sizes))
        if len(self.sizes) < 1:
            raise ValueError("alphabet needs at least one coordinate")
        if any(q < 2 for q in self.sizes):
            raise ValueError("every alphabet size must be >= 2")

    @classmethod
    def uniform(cls, q: int, n: int) -> "AlphabetSpec":
        return cls((q,) * n)

    @property
    def n(self) -> int:
        return len(self.sizes)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.sizes)) == 1

    @property
    def q(self) -> int:
        """Common symbol count; only defined for uniform alphabets."""
        if not self.is_uniform:
            raise ValueError("alphabet profile is mixed; no single q")
        return self.sizes[0]

    def __len__(self) -> int:
        return len(self.sizes)


@dataclass(frozen=True)
class Word:
    """An immutable word over an alphabet profile."""

    symbols: tuple[int, ...]
    alphabet: AlphabetSpec

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if len(self.symbols) != len(self.alphabet):
            raise ValueError(
                f"word length {len(self.symbols)} != alphabet length {len(self.alphabet)}"
            )
        for i, (s, q) in enumerate(zip(self.symbols, self.alphabet.sizes)):
            if not 0 <= s < q:
                raise ValueError(f"symbol {s} at coordinate {i} outside 0..{q - 1}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self) -> str:
        if all(q <= 10 for q in self.alphabet.sizes):
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)


def _as_symbols(x) -> tuple[int, ...]:
    return x.symbols if isinstance(x, Word) else tuple(x)


@dataclass(frozen=True, eq=False)
class CodeBook:
    """A duplicate-free set of words, iterated in lexicographic order."""

    alphabet: AlphabetSpec
    words: tuple[Word, ...]
    name: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        seen = set()
        for w in self.words:
            if w.alphabet != self.alphabet:
                raise AlphabetMismatch("all words must share the code book alphabet")
            if w.symbols in seen:
                raise ValueError(f"duplicate codeword {w}")
            seen.add(w.symbols)
        ordered = tuple(sorted(self.words, key=lambda w: w.symbols))
        object.__setattr__(self, "words", ordered)

    @classmethod
    def from_symbols(
        cls,
        alphabet: AlphabetSpec,
        rows: Iterable[Sequence[int]],
        name: str = "",
        meta: dict | None = None,
    ) -> "CodeBook":
        words = tuple(Word(_as_symbols(r), alphabet) for r in rows)
        return cls(alphabet, words, name=name, meta=dict(meta or {}))

    @cached_property
    def symbol_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(w.symbols for w in self.words)

    @cached_property
    def symbol_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.symbol_rows)

    def matrix(self) -> np.ndarray:
        """Codewords as an int64 array, one row per word, lex order."""
        return np.array(self.symbol_rows, dtype=np.int64).reshape(len(self), len(self.alphabet))

    @property
    def n(self) -> int:
        return len(self.alphabet)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, item) -> bool:
        return _as_symbols(item) in self.symbol_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, CodeBook):
            return NotImplemented
        return self.alphabet == other.alphabet and self.symbol_rows == other.symbol_rows

    def __hash__(self) -> int:
        return hash((self.alphabet, self.symbol_rows))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<CodeBook{label} n={self.n} size={len(self)}>"


@dataclass(frozen=True)
class WeightEnumerator:
    """Hamming-weight counts A_w for w = 0..n."""

    length: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.length + 1:
            raise ValueError("counts must have one entry per weight 0..n")
        if any(c < 0 for c in self.counts):
            raise ValueError("weight counts must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def evaluate(self, X: int, Y: int) -> int:
        """Sum over w of A_w * X^(n-w) * Y^w, in exact integer arithmetic."""
        n = self.length
        return sum(a * X ** (n - w) * Y**w for w, a in enumerate(self.counts))


def weight_w(x: Word | Sequence[int]) -> int:
    """Integer sum of the symbols (not the Hamming weight)."""
    return sum(_as_symbols(x))


def hamming_weight(x: Word | Sequence[int]) -> int:
    """Number of nonzero symbols."""
    return sum(1 for s in _as_symbols(x) if s)


def _check_same_profile(x, y):
    xs, ys = _as_symbols(x), _as_symbols(y)
    if len(xs) != len(ys):
        raise AlphabetMismatch("words have different lengths")
    if isinstance(x, Word) and isinstance(y, Word) and x.alphabet != y.alphabet:
        raise AlphabetMismatch("words have different alphabet profiles")
    return xs, ys


def total_increase(x, y) -> int:
    """Sum over coordinates of max(y_i - x_i, 0): symbol gain going x -> y."""
    xs, ys = _check_same_profile(x, y)
    return sum(b - a for a, b in zip(xs, ys) if b > a)


def asym_distance(x, y) -> int:
    """Asymmetric distance: the larger of the two one-sided gains."""
    xs, ys = _check_same_profile(x, y)
    up = down = 0
    for a, b in zip(xs, ys):
        if b > a:
            up += b - a
        elif a > b:
            down += a - b
    return max(up, down)


def _row_asym_min(row: np.ndarray, rest: np.ndarray) -> int:
    diff = rest - row
    up = np.where(diff > 0, diff, 0).sum(axis=1)
    down = np.where(diff < 0, -diff, 0).sum(axis=1)
    return int(np.maximum(up, down).min())


def min_asym_distance(c: CodeBook, stop_at: int | None = None) -> int:
    """Exhaustive minimum asymmetric distance over all codeword pairs.

    With stop_at set, returns early once a pair at distance <= stop_at is
    seen (the returned value is then only guaranteed to be <= stop_at).
    """
    if len(c) < 2:
        raise ValueError("need at least two codewords")
    mat = c.matrix()
    best = None
    for i in range(len(c) - 1):
        d = _row_asym_min(mat[i], mat[i + 1 :])
        if best is None or d < best:
            best = d
            if stop_at is not None and best <= stop_at:
                return best
    return best


def is_t_code(c: CodeBook, t: int) -> bool:
    """True iff every pair of distinct codewords has asymmetric distance > t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if len(c) < 2:
        return True
    return min_asym_distance(c, stop_at=t) > t


def weight_enumerator(c: CodeBook) -> WeightEnumerator:
    """Counts of codewords by Hamming weight."""
    n = c.n
    counts = [0] * (n + 1)
    for w in c.symbol_rows:
        counts[sum(1 for s in w if s)] += 1
    return WeightEnumerator(n, tuple(counts))


def evaluate_enumerator(w: WeightEnumerator, X: int, Y: int) -> int:
    return w.evaluate(X, Y)


def decode_asymmetric(c: CodeBook, received: Word | Sequence[int], t: int):
    """Exhaustive decoder for the pure-decrement channel.

    Returns the unique codeword x with x >= received coordinatewise and
    total decrement at most t; raises DecodeAmbiguity / DecodeFailure
    otherwise.
    """
    rs = _as_symbols(received)
    if len(rs) != c.n:
        raise AlphabetMismatch("received word length does not match the code")
    if isinstance(received, Word) and received.alphabet != c.alphabet:
        raise AlphabetMismatch("received word alphabet does not match the code")
    candidates = []
    for word in c.words:
        xs = word.symbols
        drop = 0
        for a, r in zip(xs, rs):
            if a < r:
                drop = t + 1
                break
            drop += a - r
            if drop > t:
                break
        if drop <= t:
            candidates.append(word)
    if not candidates:
        raise DecodeFailure(f"no codeword within {t} decrements of {rs}")
    if len(candidates) > 1:
        raise DecodeAmbiguity(candidates)
    return candidates[0]


def d_ell_distance(x, y, ell: int, wrap: bool = False) -> int:
    """Limited-magnitude distance counting erroneous coordinates.

    Without wrap: n+1 if any coordinate differs by more than ell, else the
    larger of the two "strictly above" coordinate counts.  With wrap,
    "above" is judged by which direction reaches the other symbol within
    ell steps mod q; this needs q > 2*ell or the direction is ambiguous.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    xs, ys = _check_same_profile(x, y)
    n = len(xs)
    if not wrap:
        m_xy = m_yx = 0
        for a, b in zip(xs, ys):
            if abs(a - b) > ell:
                return n + 1
            if a > b:
                m_xy += 1
            elif b > a:
                m_yx += 1
        return max(m_xy, m_yx)
    if isinstance(x, Word):
        q = x.alphabet.q
    elif isinstance(y, Word):
        q = y.alphabet.q
    else:
        q = max(max(xs), max(ys)) + 1
    if q <= 2 * ell:
        raise ValueError(f"wrap-around direction is ambiguous for q={q}, ell={ell}")
    m_xy = m_yx = 0
    for a, b in zip(xs, ys):
        d = (a - b) % q
        if d == 0:
            continue
        if d <= ell:
            m_xy += 1
        elif q - d <= ell:
            m_yx += 1
        else:
            return n + 1
    return max(m_xy, m_yx)


def is_lm_code(c: CodeBook, t_tilde: int, ell: int, wrap: bool = False) -> bool:
    """True iff all distinct pairs have limited-magnitude distance >= t_tilde + 1."""
    if t_tilde < 1:
        raise ValueError("t_tilde must be >= 1")
    if not c.alphabet.is_uniform:
        raise ValueError("limited-magnitude distances need a uniform alphabet")
    q = c.alphabet.q
    if wrap and q <= 2 * ell:
        raise ValueError(f"wrap-around direction is ambiguous for q={q}, ell={ell}")
    if len(c) < 2:
        return True
    mat = c.matrix()
    n = c.n
    need = t_tilde + 1
    for i in range(len(c) - 1):
        rest = mat[i + 1 :]
        diff = rest - mat[i]
        if wrap:
            d = diff % q
            above_y = (d > 0) & (d <= ell)
            above_x = d >= q - ell
            over = (d > 0) & ~above_y & ~above_x
        else:
            above_y = diff > 0
            above_x = diff < 0
            over = np.abs(diff) > ell
        m = np.maximum(above_x.sum(axis=1), above_y.sum(axis=1))
        m = np.where(over.any(axis=1), n + 1, m)
        if int(m.min()) < need:
            return False
    return True
