"""Linear codes over Z_q (q prime): parity checks, the paired-coordinate
concatenation, doubling, and a syndrome decoder.

The concatenation takes an outer [m, k]_q code correcting one +-1 symbol
error and produces a [2m, m+k]_q code for the pure-decrement channel: the
word carries one free symbol a_j per coordinate pair plus the outer symbol
as the in-pair difference.  Fixing the first free symbol to zero and
dropping that coordinate gives the odd-length [2m-1, m+k-1]_q variant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .words import (
    DEFAULT_ENUM_CAP,
    AlphabetSpec,
    CodeBook,
    DecodeFailure,
    EnumerationCapExceeded,
    _as_symbols,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class MatrixModZq:
    """Generator or parity-check matrix with entries mod q."""

    q: int
    rows: tuple[tuple[int, ...], ...]
    role: str = "generator"

    def __post_init__(self):
        if self.role not in ("generator", "parity"):
            raise ValueError("role must be 'generator' or 'parity'")
        if self.q < 2:
            raise ValueError("q must be >= 2")
        rows = tuple(tuple(int(x) % self.q for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        if self.role == "parity":
            for j in range(self.ncols):
                if all(r[j] == 0 for r in rows):
                    raise ValueError(f"parity-check column {j} is all zero")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def to_text(self) -> str:
        head = f"{self.q} {self.nrows} {self.ncols} {self.role}"
        body = "\n".join(" ".join(str(x) for x in r) for r in self.rows)
        return head + ("\n" + body if body else "") + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MatrixModZq":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty matrix text")
        try:
            q, r, ncols, role = lines[0].split()
            q, r, ncols = int(q), int(r), int(ncols)
        except ValueError as e:
            raise ValueError(f"bad matrix header {lines[0]!r}") from e
        rows = []
        for ln in lines[1 : r + 1]:
            row = tuple(int(x) for x in ln.split())
            if len(row) != ncols:
                raise ValueError(f"row {len(rows)} has {len(row)} entries, expected {ncols}")
            rows.append(row)
        if len(rows) != r:
            raise ValueError(f"expected {r} rows, found {len(rows)}")
        return cls(q, tuple(rows), role)


def _rref(rows: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over the field Z_q (q prime)."""
    mat = [r[:] for r in rows]
    pivots = []
    lead = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((i for i in range(lead, len(mat)) if mat[i][col] % q), None)
        if pivot is None:
            continue
        mat[lead], mat[pivot] = mat[pivot], mat[lead]
        inv = pow(mat[lead][col], -1, q)
        mat[lead] = [(x * inv) % q for x in mat[lead]]
        for i in range(len(mat)):
            if i != lead and mat[i][col] % q:
                f = mat[i][col]
                mat[i] = [(a - f * b) % q for a, b in zip(mat[i], mat[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(mat):
            break
    return mat[:lead], pivots


def rank(M: MatrixModZq) -> int:
    if not _is_prime(M.q):
        raise ValueError("rank over Z_q needs q prime")
    return len(_rref([list(r) for r in M.rows], M.q)[0])


def nullspace(M: MatrixModZq) -> MatrixModZq:
    """Basis of {x : M x^T = 0} as a generator matrix (q prime)."""
    if not _is_prime(M.q):
        raise ValueError("nullspace over Z_q needs q prime")
    q, n = M.q, M.ncols
    red, pivots = _rref([list(r) for r in M.rows], q)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        vec = [0] * n
        vec[j] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-red[i][j]) % q
        basis.append(tuple(vec))
    return MatrixModZq(q, tuple(basis), "generator")


def hamming_parity_check(q: int, r: int) -> MatrixModZq:
    """Parity check whose columns are all nonzero vectors with leading 1,
    in lexicographic order: (q^r - 1)/(q - 1) columns, distance 3."""
    if not _is_prime(q):
        raise ValueError("q must be prime")
    if r < 2:
        raise ValueError("r must be >= 2")
    cols = [
        v
        for v in itertools.product(range(q), repeat=r)
        if any(v) and next(x for x in v if x) == 1
    ]
    rows = tuple(tuple(c[i] for c in cols) for i in range(r))
    return MatrixModZq(q, rows, "parity")


def lee_parity_check(q: int, r: int, full: bool = True) -> MatrixModZq:
    """Parity check for single +-1 errors: columns are the vectors whose
    first nonzero entry lies in {1..(q-1)/2}, lexicographic.

    full=False keeps only columns with a nonzero first row, the shorter
    variant with r*... q^(r-1) fewer columns; full=True keeps all
    (q^r - 1)/2 of them.
    """
    if not _is_prime(q) or q % 2 == 0:
        raise ValueError("q must be an odd prime")
    if r < 1:
        raise ValueError("r must be >= 1")
    half = (q - 1) // 2
    cols = [
        v
        for v in itertools.product(range(q), repeat=r)
        if any(v) and next(x for x in v if x) <= half
    ]
    if not full:
        cols = [v for v in cols if v[0] != 0]
    rows = tuple(tuple(c[i] for c in cols) for i in range(r))
    return MatrixModZq(q, rows, "parity")


def is_single_rq_correcting(H: MatrixModZq) -> bool:
    """True iff every +-1 single-symbol error has a distinct nonzero syndrome:
    no zero column, no column equal to plus or minus another, 2*col != 0."""
    if H.role != "parity":
        raise ValueError("expected a parity-check matrix")
    if H.nrows == 0:
        return False
    q = H.q
    seen = set()
    for j in range(H.ncols):
        col = H.column(j)
        if not any(col):
            return False
        neg = tuple((-x) % q for x in col)
        if col == neg:
            return False
        if col in seen or neg in seen:
            return False
        seen.add(col)
        seen.add(neg)
    return True


def codewords_of(M: MatrixModZq, cap: int = DEFAULT_ENUM_CAP, name: str = "") -> CodeBook:
    """Explicit enumeration of the linear code M defines (span or kernel)."""
    if M.role == "parity":
        gen = nullspace(M)
    else:
        gen = M
    q, n = gen.q, gen.ncols
    k = gen.nrows
    if q**k > cap:
        raise EnumerationCapExceeded(f"q^k = {q}^{k} exceeds enumeration cap {cap}")
    rows = set()
    G = np.array(gen.rows, dtype=np.int64).reshape(k, n)
    for coef in itertools.product(range(q), repeat=k):
        word = (np.array(coef, dtype=np.int64) @ G) % q if k else np.zeros(n, dtype=np.int64)
        rows.add(tuple(int(x) for x in word))
    return CodeBook.from_symbols(AlphabetSpec.uniform(q, n), sorted(rows), name=name)


def min_hamming_distance(M: MatrixModZq, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Minimum nonzero Hamming weight of the linear code (exhaustive)."""
    book = codewords_of(M, cap=cap)
    weights = [sum(1 for s in w if s) for w in book.symbol_rows if any(w)]
    if not weights:
        raise ValueError("code has no nonzero codeword")
    return min(weights)


@dataclass(frozen=True)
class ConcatCode:
    """Paired-coordinate concatenated code with its outer parity check."""

    q: int
    m: int
    k: int
    generator: MatrixModZq
    outer_check: MatrixModZq
    shortened: bool

    @property
    def length(self) -> int:
        return 2 * self.m - (1 if self.shortened else 0)

    @property
    def dimension(self) -> int:
        return self.m + self.k - (1 if self.shortened else 0)

    def encode(self, message) -> tuple[int, ...]:
        msg = _as_symbols(message)
        if len(msg) != self.dimension:
            raise ValueError(f"message length must be {self.dimension}")
        G = np.array(self.generator.rows, dtype=np.int64)
        word = (np.array(msg, dtype=np.int64) @ G) % self.q
        return tuple(int(x) for x in word)

    def codebook(self, cap: int = DEFAULT_ENUM_CAP) -> CodeBook:
        label = f"concat-[{self.length},{self.dimension}]_{self.q}"
        return codewords_of(self.generator, cap=cap, name=label)


def concat_code(
    outer_gen: MatrixModZq, shorten_to_odd: bool = False, check: bool = True
) -> ConcatCode:
    """Concatenate an outer [m, k]_q code into a [2m, m+k]_q decrement code.

    Generator rows: for each pair j a row with 1 at both pair positions
    (the free inner symbol), plus each outer generator row placed on the
    second position of every pair.  With shorten_to_odd, the first free
    symbol is fixed to zero and its coordinate dropped: [2m-1, m+k-1]_q.
    """
    if outer_gen.role != "generator":
        raise ValueError("outer code must be given by a generator matrix")
    q, m = outer_gen.q, outer_gen.ncols
    if not _is_prime(q):
        raise ValueError("q must be prime")
    basis, _ = _rref([list(r) for r in outer_gen.rows], q)
    k = len(basis)
    if k == m:
        raise ValueError("outer code is the full space; it corrects nothing")
    outer_check = nullspace(MatrixModZq(q, tuple(tuple(r) for r in basis), "generator"))
    H = MatrixModZq(q, outer_check.rows, "parity")
    if check and not is_single_rq_correcting(H):
        raise ValueError("outer code does not correct a single +-1 symbol error")

    rows = []
    for j in range(m):
        row = [0] * (2 * m)
        row[2 * j] = 1
        row[2 * j + 1] = 1
        rows.append(row)
    for g in basis:
        row = [0] * (2 * m)
        for j in range(m):
            row[2 * j + 1] = g[j] % q
        rows.append(row)
    if shorten_to_odd:
        rows = [r[1:] for r in rows[1:]]
    gen = MatrixModZq(q, tuple(tuple(r) for r in rows), "generator")
    return ConcatCode(q, m, k, gen, H, shorten_to_odd)


def double_code(c: CodeBook) -> CodeBook:
    """Repeat every symbol twice in place; doubles the asymmetric distance."""
    sizes = tuple(q for q in c.alphabet.sizes for _ in (0, 1))
    rows = [tuple(s for s in w for _ in (0, 1)) for w in c.symbol_rows]
    return CodeBook.from_symbols(
        AlphabetSpec(sizes), rows, name=f"double({c.name})" if c.name else ""
    )


def decode_concat(H_outer: MatrixModZq, received, shortened: bool = False) -> tuple[int, ...]:
    """Correct at most one decrement error in a concatenated codeword.

    Recovers the outer word as in-pair differences, syndrome-locates the
    single +-1 outer error, and bumps the one decremented coordinate back
    up mod q, so wrap-around decrements (0 -> q-1) are corrected too.
    Raises DecodeFailure when no single decrement explains the syndrome.
    """
    if H_outer.role != "parity":
        raise ValueError("expected the outer parity-check matrix")
    q, m = H_outer.q, H_outer.ncols
    y = list(_as_symbols(received))
    expect = 2 * m - 1 if shortened else 2 * m
    if len(y) != expect:
        raise ValueError(f"received word must have length {expect}")

    if shortened:
        d = [y[0]] + [(y[2 * j] - y[2 * j - 1]) % q for j in range(1, m)]
    else:
        d = [(y[2 * j + 1] - y[2 * j]) % q for j in range(m)]
    syndrome = tuple(sum(h[j] * d[j] for j in range(m)) % q for h in H_outer.rows)
    if not any(syndrome):
        return tuple(y)
    for j in range(m):
        col = H_outer.column(j)
        neg = tuple((-x) % q for x in col)
        if syndrome == col:
            # first-of-pair coordinate decremented
            pos = None if (shortened and j == 0) else (2 * j - 1 if shortened else 2 * j)
        elif syndrome == neg:
            pos = 0 if (shortened and j == 0) else (2 * j if shortened else 2 * j + 1)
        else:
            continue
        if pos is None:
            raise DecodeFailure("syndrome matches no feasible single decrement")
        y[pos] = (y[pos] + 1) % q
        return tuple(y)
    raise DecodeFailure("syndrome matches no single +-1 outer error")
