"""The canonical k-dimensional constant weight code of weight 2^(k-1) m."""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import Codeword, LinearCode, code_from_rows
from .supports import admissible_params


@dataclass(frozen=True)
class CanonicalSpec:
    k: int
    m: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise ValueError("k and m must be positive")
        verdict = admissible_params(self.k, self.weight, self.n)
        if not verdict:
            raise ValueError(verdict.reason)

    @property
    def weight(self) -> int:
        return (1 << (self.k - 1)) * self.m

    @property
    def body_length(self) -> int:
        return ((1 << self.k) - 1) * self.m


def _spec(k: int, m: int, n: int | None) -> CanonicalSpec:
    return CanonicalSpec(k, m, ((1 << k) - 1) * m if n is None else n)


def canonical_rows(k: int, m: int, n: int | None = None) -> list[Codeword]:
    """Rows ``c_1..c_k`` of the construction, before canonicalization.

    Row ``i`` alternates blocks of ``2^(k-i) m`` ones and zeros, starting
    with ones, cut after ``(2^k - 1) m`` coordinates; any remaining
    coordinates up to ``n`` are zero.
    """
    spec = _spec(k, m, n)
    body = spec.body_length
    rows = []
    for i in range(1, k + 1):
        block = (1 << (k - i)) * m
        bits = 0
        for p in range(1, body + 1):
            if ((p - 1) // block) % 2 == 0:
                bits |= 1 << (spec.n - p)
        rows.append(Codeword(spec.n, bits))
    return rows


def canonical_code(k: int, m: int, n: int | None = None) -> LinearCode:
    """The code spanned by :func:`canonical_rows`; ``n`` defaults to ``(2^k-1)m``."""
    spec = _spec(k, m, n)
    return code_from_rows(spec.n, (r.bits for r in canonical_rows(k, m, spec.n)))


def canonical_cell_of(k: int, m: int, n: int, p: int) -> int | None:
    """Cell mask of coordinate ``p`` in the canonical rows, or None for padding.

    With ``b = (p - 1) // m``, row ``i`` has a 1 at ``p`` iff bit ``k - i``
    of ``b`` is clear.
    """
    spec = CanonicalSpec(k, m, n)
    if not 1 <= p <= n:
        raise ValueError(f"coordinate {p} outside 1..{n}")
    if p > spec.body_length:
        return None
    b = (p - 1) // m
    return sum(1 << (i - 1) for i in range(1, k + 1) if not (b >> (k - i)) & 1)


def extend_with_zeros(code: LinearCode, n: int) -> LinearCode:
    """Append ``n - code.length`` zero coordinates to every codeword."""
    if n < code.length:
        raise ValueError(f"cannot shrink length {code.length} to {n}")
    shift = n - code.length
    # appending zeros on the right keeps RREF
    return LinearCode(n, tuple(r << shift for r in code.rows))
