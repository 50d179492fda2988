"""Finite abelian groups, group-checksum codes, and coordinate pairings.

The codes built here fix an abelian group G of order n+1, assign the n
non-identity elements (in lexicographic component order) as coordinate
coefficients, and keep the words whose weighted element sum hits a chosen
target.  Cyclic G gives the classic checksum codes on {1..n}; the general
construction allows any abelian group and, with the element-order
condition, nonbinary symbols.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod

import numpy as np

from .words import (
    DEFAULT_ENUM_CAP,
    AlphabetSpec,
    CodeBook,
    EnumerationCapExceeded,
)

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups Z_d1 + ... + Z_dk."""

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(d) for d in self.factors))
        if any(d < 2 for d in self.factors):
            raise ValueError("cyclic factors must be >= 2")
        if self.order < 2:
            raise ValueError("group order must be >= 2")

    @classmethod
    def cyclic(cls, m: int) -> "AbelianGroup":
        return cls((m,))

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        """Parse '7' or '3x3' or '2x2x3' into a group."""
        return cls(tuple(int(tok) for tok in text.lower().split("x")))

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.factors)

    def contains(self, g: GroupElement) -> bool:
        return len(g) == len(self.factors) and all(
            0 <= x < d for x, d in zip(g, self.factors)
        )

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % d for x, d in zip(a, self.factors))

    def element_order(self, a: GroupElement) -> int:
        out = 1
        for x, d in zip(a, self.factors):
            o = d // gcd(x, d)
            out = out * o // gcd(out, o)
        return out

    @cached_property
    def nonidentity_elements(self) -> tuple[GroupElement, ...]:
        ranges = [range(d) for d in self.factors]
        return tuple(e for e in itertools.product(*ranges) if any(e))

    def __str__(self) -> str:
        return "x".join(str(d) for d in self.factors)


def group_elements(G: AbelianGroup) -> tuple[GroupElement, ...]:
    """All non-identity elements in lexicographic component order."""
    return G.nonidentity_elements


def best_cr_group(n: int) -> AbelianGroup:
    """The order-(n+1) group, elementary abelian per prime, that maximizes
    the size of the zero-sum checksum code of length n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n + 1
    factors = []
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors.append(p)
            m //= p
        p += 1
    if m > 1:
        factors.append(m)
    return AbelianGroup(tuple(sorted(factors)))


def cr_code(
    G: AbelianGroup,
    g: GroupElement | None = None,
    q: int = 2,
    cap: int = DEFAULT_ENUM_CAP,
    name: str = "",
) -> CodeBook:
    """Checksum code over G: words x in {0..q-1}^n with sum x_i * g_i = g.

    g_i runs over the non-identity elements of G in lexicographic order,
    so n = |G| - 1.  For q > 2 every non-identity element must have order
    at least q; groups violating that are rejected.
    """
    if g is None:
        g = G.identity
    if not G.contains(g):
        raise ValueError(f"target {g} is not an element of {G}")
    if q < 2:
        raise ValueError("q must be >= 2")
    coeffs = G.nonidentity_elements
    n = len(coeffs)
    if q > 2:
        low = [e for e in coeffs if G.element_order(e) < q]
        if low:
            raise ValueError(
                f"group {G} has elements of order < q={q} (e.g. {low[0]}); "
                "the nonbinary construction requires order >= q"
            )
    if q**n > cap:
        raise EnumerationCapExceeded(f"q^n = {q}^{n} exceeds enumeration cap {cap}")

    total = q**n
    values = np.arange(total, dtype=np.int64)
    digits = np.empty((total, n), dtype=np.int64)
    for i in range(n):
        digits[:, i] = (values // q ** (n - 1 - i)) % q
    mask = np.ones(total, dtype=bool)
    for j, d in enumerate(G.factors):
        comp = np.array([e[j] for e in coeffs], dtype=np.int64)
        sums = (digits @ comp) % d
        mask &= sums == g[j]
    rows = [tuple(int(s) for s in row) for row in digits[mask]]
    label = name or f"cr-{G}-g{''.join(map(str, g))}-q{q}"
    return CodeBook.from_symbols(AlphabetSpec.uniform(q, n), rows, name=label)


def vt_code(n: int, g: int = 0, q: int = 2, cap: int = DEFAULT_ENUM_CAP) -> CodeBook:
    """Cyclic-group checksum code: sum of i * x_i = g mod n+1, coefficients 1..n."""
    if not 0 <= g <= n:
        raise ValueError("g must satisfy 0 <= g <= n")
    return cr_code(AbelianGroup.cyclic(n + 1), (g,), q, cap=cap, name=f"vt-{n}-g{g}-q{q}")


@dataclass(frozen=True)
class Pairing:
    """Disjoint ordered coordinate pairs, optionally one leftover coordinate.

    Coordinates are 0-based.  Each pair (a, b) is read in that order when
    two bits are squeezed into one trit.  The singleton, present only for
    odd lengths, passes through unchanged.
    """

    pairs: tuple[tuple[int, int], ...]
    singleton: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs)
        )
        seen = set()
        for a, b in self.pairs:
            if a == b:
                raise ValueError("a pair must join two distinct coordinates")
            for c in (a, b):
                if c in seen:
                    raise ValueError(f"coordinate {c} appears twice")
                seen.add(c)
        if self.singleton is not None and self.singleton in seen:
            raise ValueError("singleton coordinate also appears in a pair")

    @property
    def n(self) -> int:
        return 2 * len(self.pairs) + (1 if self.singleton is not None else 0)

    def covered(self) -> frozenset[int]:
        out = {c for p in self.pairs for c in p}
        if self.singleton is not None:
            out.add(self.singleton)
        return frozenset(out)

    def check_covers(self, n: int):
        if self.covered() != frozenset(range(n)) or self.n != n:
            raise ValueError(f"pairing does not cover coordinates 0..{n - 1} exactly")


def canonical_pairing(arg: AbelianGroup | int, mode: str = "inverse") -> Pairing:
    """The two stock pairings.

    mode='inverse': arg is a group (or a length n, read as the cyclic group
    of order n+1); coordinate of element h is paired with the coordinate of
    -h.  Requires odd group order so no element is self-inverse.
    mode='vt-odd': arg is an odd length n; pair coordinate i with n-1-i
    (0-based) and leave the middle coordinate as a bit.
    """
    if mode == "inverse":
        G = arg if isinstance(arg, AbelianGroup) else AbelianGroup.cyclic(int(arg) + 1)
        if G.order % 2 == 0:
            raise ValueError(
                f"group {G} has even order; some element is self-inverse"
            )
        elems = G.nonidentity_elements
        index = {e: i for i, e in enumerate(elems)}
        pairs = []
        used = set()
        for i, h in enumerate(elems):
            if i in used:
                continue
            j = index[G.neg(h)]
            used.update((i, j))
            pairs.append((i, j))
        return Pairing(tuple(pairs))
    if mode == "vt-odd":
        n = int(arg)
        if n % 2 == 0:
            raise ValueError("vt-odd pairing requires odd length")
        pairs = tuple((i, n - 1 - i) for i in range((n - 1) // 2))
        return Pairing(pairs, singleton=(n - 1) // 2)
    raise ValueError(f"unknown pairing mode {mode!r}")
