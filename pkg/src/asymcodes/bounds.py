"""Sphere-packing bounds, perfectness certification, and the two summary
tables (rate ratios and 1-code sizes by length).

All bound arithmetic is exact big-integer; floats appear only in the final
display of the rate ratio s.  Literature figures in the size table are
stored reference constants with provenance labels, never recomputed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, log2

from .cyclic import builtin_table_generators
from .groups import best_cr_group, cr_code
from .linearq import MatrixModZq, hamming_parity_check
from .words import CodeBook, hamming_weight, is_lm_code


def sphere_bound(q: int, n: int, t_tilde: int, ell: int) -> int:
    """Largest |C| allowed by ball packing for t_tilde errors of magnitude
    at most ell each: floor(q^n / sum_{i<=t} C(n,i) ell^i)."""
    if q < 2 or n < 1 or t_tilde < 0 or ell < 1:
        raise ValueError("parameters must be positive (t_tilde >= 0)")
    denom = sum(comb(n, i) * ell**i for i in range(t_tilde + 1))
    return q**n // denom


def is_perfect(c: CodeBook, t_tilde: int, ell: int, check: bool = True) -> bool:
    """True iff c meets the wrap-around sphere-packing bound with equality.

    With check=True the code is first verified to actually correct t_tilde
    wrap-around limited-magnitude errors.
    """
    if check and not is_lm_code(c, t_tilde, ell, wrap=True):
        raise ValueError("code fails the limited-magnitude verification")
    return len(c) == sphere_bound(c.alphabet.q, c.n, t_tilde, ell)


def best_d3_dimension(q: int, n: int) -> int:
    """Largest dimension of a distance-3 linear code of length n over F_q:
    n - r with r minimal such that (q^r - 1) / (q - 1) >= n."""
    if q not in (2, 3):
        raise ValueError("supported for q in {2, 3}")
    if n < 3:
        raise ValueError("n must be >= 3")
    r = 2
    while (q**r - 1) // (q - 1) < n:
        r += 1
    return n - r


def canonical_d3_ternary_check(m: int) -> MatrixModZq:
    """Deterministic [m, m-r, 3]_3 representative: the first m columns of
    the lexicographic length-(3^r-1)/2 parity check."""
    if m < 3:
        raise ValueError("m must be >= 3")
    r = 2
    while (3**r - 1) // 2 < m:
        r += 1
    H = hamming_parity_check(3, r)
    rows = tuple(row[:m] for row in H.rows)
    return MatrixModZq(3, rows, "parity")


def kernel_image_size(H: MatrixModZq) -> int:
    """Binary image size W(2, 1) of the kernel code of H, computed exactly
    through the dual weight distribution (no kernel enumeration).

    The identity W_C(x, y) = |D|^-1 * W_D(x + (q-1) y, x - y) with D the
    row space of H gives W_C(2, 1) = |D|^-1 * sum_d (q+1)^(m - wgt(d)).
    """
    q, m = H.q, H.ncols
    dual_rows = set()
    for coef in itertools.product(range(q), repeat=H.nrows):
        word = tuple(
            sum(cf * row[j] for cf, row in zip(coef, H.rows)) % q for j in range(m)
        )
        dual_rows.add(word)
    total = sum((q + 1) ** (m - hamming_weight(d)) for d in dual_rows)
    size, rem = divmod(total, len(dual_rows))
    if rem:
        raise ArithmeticError("dual transform did not divide exactly")
    return size


@dataclass(frozen=True)
class RateRatioRow:
    n: int
    ternary_image_size: int
    binary_dimension: int
    s: float
    reference_s: float | None
    within_tolerance: bool | None


# Published reference ratios for the comparison table (index: binary length).
REFERENCE_RATE_RATIOS: dict[int, float] = {
    6: 1.107, 8: 1.250, 10: 1.000, 12: 0.940, 14: 0.936, 16: 1.026, 18: 1.020,
    20: 1.017, 22: 1.014, 24: 1.013, 26: 1.012, 28: 0.967, 30: 0.946, 32: 0.987,
    34: 0.988, 36: 0.988, 38: 0.989, 40: 0.990, 42: 0.990, 44: 0.991, 46: 0.991,
    48: 0.992, 50: 0.992, 52: 0.992, 54: 0.993, 56: 0.993, 58: 0.993, 60: 0.994,
    62: 0.994, 64: 1.012, 66: 1.011, 68: 1.011, 70: 1.010, 72: 1.010, 74: 1.010,
    76: 1.010, 78: 1.009, 80: 1.009, 82: 0.987, 84: 0.988, 86: 0.988, 88: 0.988,
}


def rate_ratio(m: int) -> float:
    """Ratio of the rates at binary length 2m: bits carried by the ternary
    image of the canonical [m, m-r, 3]_3 code over the best linear binary
    distance-3 dimension.  Reported to 3 decimals."""
    image = kernel_image_size(canonical_d3_ternary_check(m))
    dim = best_d3_dimension(2, 2 * m)
    return round(log2(image) / dim, 3)


def rate_ratio_row(m: int, tolerance: float = 0.001) -> RateRatioRow:
    image = kernel_image_size(canonical_d3_ternary_check(m))
    dim = best_d3_dimension(2, 2 * m)
    s = round(log2(image) / dim, 3)
    ref = REFERENCE_RATE_RATIOS.get(2 * m)
    ok = None if ref is None else abs(s - ref) <= tolerance + 1e-12
    return RateRatioRow(2 * m, image, dim, s, ref, ok)


def table1_report(max_n: int = 88) -> dict:
    """Computed rate ratios against the stored reference values.

    Rows whose canonical code representative differs from the one behind
    the reference value may deviate past the third decimal; those rows are
    flagged, not hidden.
    """
    rows = [rate_ratio_row(m) for m in range(3, max_n // 2 + 1)]
    return {
        "table": "rate-ratio",
        "tolerance": 0.001,
        "rows": [
            {
                "n": r.n,
                "ternary_image_size": r.ternary_image_size,
                "binary_dimension": r.binary_dimension,
                "s": r.s,
                "reference_s": r.reference_s,
                "within_tolerance": r.within_tolerance,
            }
            for r in rows
        ],
    }


# Reference constants for the size table.  The first two columns are
# recomputed by this package; the last two are literature figures kept as
# data (partition-method constructions and best known bounds), with
# provenance labels only.
TABLE2_REFERENCE: dict[int, dict] = {
    6: {"cr": 10, "cyclic": 12, "partition": None, "known_bounds": "12"},
    7: {"cr": 16, "cyclic": 16, "partition": None, "known_bounds": "18"},
    8: {"cr": 32, "cyclic": 29, "partition": None, "known_bounds": "36"},
    9: {"cr": 52, "cyclic": 53, "partition": None, "known_bounds": "62"},
    10: {"cr": 94, "cyclic": 98, "partition": 104, "known_bounds": "112-117"},
    11: {"cr": 172, "cyclic": 154, "partition": 180, "known_bounds": "198-210"},
    12: {"cr": 316, "cyclic": 336, "partition": 336, "known_bounds": "379-410"},
    13: {"cr": 586, "cyclic": 612, "partition": 652, "known_bounds": "699-786"},
    14: {"cr": 1096, "cyclic": 1200, "partition": 1228, "known_bounds": "1273-1500"},
    15: {"cr": 2048, "cyclic": 2144, "partition": 2288, "known_bounds": "2288-2828"},
    16: {"cr": 3856, "cyclic": 3952, "partition": 4280, "known_bounds": "4280-5486"},
}
PARTITION_PROVENANCE = "partition-method constructions, literature values"
KNOWN_BOUNDS_PROVENANCE = "best known size bounds, literature values"


def _binary_image_size(code: CodeBook) -> int:
    m = code.n
    return sum(2 ** (m - hamming_weight(w)) for w in code.symbol_rows)


def table2_report() -> dict:
    """Group-checksum sizes and bundled-generator image sizes for lengths
    6..16, next to the stored literature constants; mismatches against the
    stored expectations are flagged."""
    rows = []
    for n in range(6, 17):
        group = best_cr_group(n)
        cr_size = len(cr_code(group, None, 2))
        if n % 2 == 0:
            closure = builtin_table_generators(n // 2)
            cyclic_size = _binary_image_size(closure)
        else:
            part0, part1 = builtin_table_generators(n // 2, extended=True)
            cyclic_size = _binary_image_size(part0) + _binary_image_size(part1)
        ref = TABLE2_REFERENCE[n]
        rows.append(
            {
                "n": n,
                "cr_group": str(group),
                "cr_size": cr_size,
                "cyclic_image_size": cyclic_size,
                "partition": ref["partition"],
                "known_bounds": ref["known_bounds"],
                "cr_matches_reference": cr_size == ref["cr"],
                "cyclic_matches_reference": cyclic_size == ref["cyclic"],
            }
        )
    return {
        "table": "one-code-sizes",
        "provenance": {
            "cr_size": "computed: zero-sum group checksum code over the listed group",
            "cyclic_image_size": "computed: bundled shift-closed generators, image size",
            "partition": PARTITION_PROVENANCE,
            "known_bounds": KNOWN_BOUNDS_PROVENANCE,
        },
        "rows": rows,
    }


def format_table(report: dict) -> str:
    """Aligned plain-text rendering of a table report."""
    rows = report["rows"]
    if not rows:
        return "(empty table)\n"
    cols = list(rows[0].keys())
    widths = {c: max(len(str(c)), max(len(str(r[c])) for r in rows)) for c in cols}
    out = ["  ".join(str(c).ljust(widths[c]) for c in cols)]
    for r in rows:
        out.append("  ".join(str(r[c]).ljust(widths[c]) for c in cols))
    return "\n".join(out) + "\n"
