"""GF(2) codewords and binary linear codes backed by int bitsets.

Coordinates are 1-based at every public boundary. Internally coordinate ``p``
of a length-``n`` word lives in bit ``n - p``, so comparing the integers
compares the words lexicographically as '0'/'1' strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ENUMERATION_CAP = 20


class CapExceeded(ValueError):
    """Raised when an exhaustive routine is asked to go beyond its size cap."""


@dataclass(frozen=True)
class Codeword:
    """A binary word of fixed length, bit-packed into a Python int."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("codeword length must be positive")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits do not fit in length {self.length}")

    @classmethod
    def from_string(cls, text: str) -> Codeword:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary word: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_support(cls, n: int, coords: Iterable[int]) -> Codeword:
        bits = 0
        for p in coords:
            if not 1 <= p <= n:
                raise ValueError(f"coordinate {p} outside 1..{n}")
            bits |= 1 << (n - p)
        return cls(n, bits)

    @classmethod
    def zero(cls, n: int) -> Codeword:
        return cls(n, 0)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")

    def __add__(self, other: Codeword) -> Codeword:
        return add(self, other)

    def __getitem__(self, p: int) -> int:
        """Symbol at 1-based coordinate ``p``."""
        if not 1 <= p <= self.length:
            raise IndexError(p)
        return (self.bits >> (self.length - p)) & 1

    @property
    def support(self) -> frozenset[int]:
        return support(self)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()


def support(c: Codeword) -> frozenset[int]:
    """Return the 1-based positions holding a 1."""
    n, b = c.length, c.bits
    out = []
    while b:
        low = b & -b
        out.append(n - low.bit_length() + 1)
        b ^= low
    return frozenset(out)


def weight(c: Codeword) -> int:
    return c.bits.bit_count()


def add(c1: Codeword, c2: Codeword) -> Codeword:
    if c1.length != c2.length:
        raise ValueError(f"length mismatch: {c1.length} vs {c2.length}")
    return Codeword(c1.length, c1.bits ^ c2.bits)


def rref(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon form of int rows, ordered by increasing pivot column.

    Zero rows and dependent rows are dropped, so the result length is the rank.
    """
    basis: dict[int, int] = {}  # pivot bit -> row
    for r in rows:
        for piv, b in basis.items():
            if (r >> piv) & 1:
                r ^= b
        if r:
            piv = r.bit_length() - 1
            for q in basis:
                if (basis[q] >> piv) & 1:
                    basis[q] ^= r
            basis[piv] = r
    # highest bit is the leftmost coordinate
    return [basis[piv] for piv in sorted(basis, reverse=True)]


@dataclass(frozen=True)
class LinearCode:
    """A nonzero binary linear code stored by its canonical RREF basis.

    Build instances with :func:`span_basis`; the constructor assumes ``rows``
    is already canonical.
    """

    length: int
    rows: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.length

    @property
    def dimension(self) -> int:
        return len(self.rows)

    k = dimension

    @property
    def basis(self) -> tuple[Codeword, ...]:
        return tuple(Codeword(self.length, r) for r in self.rows)

    def __len__(self) -> int:
        return 1 << len(self.rows)

    def __contains__(self, c: Codeword) -> bool:
        if c.length != self.length:
            return False
        r = c.bits
        for b in self.rows:
            if (r >> (b.bit_length() - 1)) & 1:
                r ^= b
        return r == 0

    def __str__(self) -> str:
        return format_code(self)


def span_basis(generators: Sequence[Codeword]) -> LinearCode:
    """Canonical reduced basis of the span of ``generators``.

    Raises:
        ValueError: on empty input, mixed lengths, or an all-zero span.
    """
    if not generators:
        raise ValueError("empty generator list")
    n = generators[0].length
    if any(g.length != n for g in generators):
        raise ValueError("generators have different lengths")
    rows = rref(g.bits for g in generators)
    if not rows:
        raise ValueError("generators span the zero code")
    return LinearCode(n, tuple(rows))


def code_from_rows(n: int, rows: Iterable[int]) -> LinearCode:
    """Like :func:`span_basis` but for raw int rows of length ``n``."""
    rows = rref(rows)
    if not rows:
        raise ValueError("generators span the zero code")
    return LinearCode(n, tuple(rows))


def span_words(rows: Sequence[int]) -> list[int]:
    """All 2^k combinations of ``rows``; entry j is the XOR of rows selected by bits of j."""
    words = [0] * (1 << len(rows))
    for j in range(1, len(words)):
        low = j & -j
        words[j] = words[j ^ low] ^ rows[low.bit_length() - 1]
    return words


def enumerate_codewords(code: LinearCode) -> list[Codeword]:
    if code.dimension > ENUMERATION_CAP:
        raise CapExceeded(f"dimension {code.dimension} exceeds enumeration cap {ENUMERATION_CAP}")
    return [Codeword(code.length, w) for w in span_words(code.rows)]


def is_constant_weight(code: LinearCode) -> tuple[bool, int | None]:
    """Decide constant weight by enumerating every nonzero codeword.

    Returns ``(True, w)`` when all nonzero words have weight ``w``, otherwise
    ``(False, None)``.
    """
    if code.dimension > ENUMERATION_CAP:
        raise CapExceeded(f"dimension {code.dimension} exceeds enumeration cap {ENUMERATION_CAP}")
    words = span_words(code.rows)
    w = words[1].bit_count()
    for x in words[2:]:
        if x.bit_count() != w:
            return False, None
    return True, w


@dataclass(frozen=True)
class CodeParams:
    """Dimension, weight and length of a (putative) constant weight code."""

    k: int
    w: int
    n: int

    @property
    def m(self) -> int | None:
        """Common cell size w / 2^(k-1), or None when it is not an integer."""
        q, r = divmod(self.w, 1 << (self.k - 1))
        return q if r == 0 else None


# -- text format ------------------------------------------------------------


def format_code(code: LinearCode) -> str:
    lines = [f"{code.length} {code.dimension}"]
    lines += [format(r, f"0{code.length}b") for r in code.rows]
    return "\n".join(lines) + "\n"


def parse_rows(text: str) -> list[Codeword]:
    """Parse the code file format and return the rows exactly as written.

    The header is ``"n k"``; then ``k`` lines of ``n`` binary characters.
    Rows must be linearly independent. Blank trailing lines are ignored.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ValueError("empty code file")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise ValueError(f"bad header {lines[0]!r}; expected 'n k'")
    n, k = map(int, header)
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"expected {k} rows, found {len(body)}")
    rows = []
    for i, line in enumerate(body, start=2):
        line = line.strip()
        if len(line) != n:
            raise ValueError(f"line {i}: expected {n} symbols, found {len(line)}")
        if set(line) - {"0", "1"}:
            raise ValueError(f"line {i}: symbols outside {{0,1}}")
        rows.append(Codeword(n, int(line, 2)))
    if len(rref(r.bits for r in rows)) != k:
        raise ValueError("rows are linearly dependent")
    return rows


def parse_code(text: str) -> LinearCode:
    return span_basis(parse_rows(text))


def read_code(path) -> LinearCode:
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def write_code(code: LinearCode, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_code(code))
