"""Coordinate permutations, their action on codes, and equivalence certificates.

Convention: ``compose(a, b)`` applies ``a`` first, then ``b``. A permutation
acts on a word by moving the symbol at coordinate ``j`` to ``sigma(j)``, so
``support(apply(sigma, c)) == {sigma(j) for j in support(c)}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import Codeword, LinearCode, code_from_rows
from .supports import check_characterization


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}``; ``images[j - 1]`` is ``sigma(j)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> Permutation:
        return cls(tuple(mapping.get(j, j) for j in range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"symbol {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"repeated symbol {x}")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def is_identity(self) -> bool:
        return all(x == j for j, x in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element, sorted."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def then(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __str__(self) -> str:
        return render_cycles(self)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return Permutation(tuple(b.images[x - 1] for x in a.images))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for j, x in enumerate(a.images, start=1):
        inv[x - 1] = j
    return Permutation(tuple(inv))


def render_cycles(sigma: Permutation) -> str:
    cycles = sigma.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 3 2 4)(5 6)"``.

    Symbols are separated by whitespace (commas are tolerated). ``"()"`` is the
    identity.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty cycle string")
    pos = 0
    cycles = []
    for match in _CYCLE.finditer(text):
        if text[pos:match.start()].strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        pos = match.end()
        body = match.group(1).replace(",", " ").split()
        if not all(tok.isdigit() for tok in body):
            raise ValueError(f"malformed cycle notation: {text!r}")
        if body:
            cycles.append([int(tok) for tok in body])
    if text[pos:].strip() or pos == 0:
        raise ValueError(f"malformed cycle notation: {text!r}")
    return Permutation.from_cycles(n, cycles)


def permute_bits(sigma: Permutation, n: int, bits: int) -> int:
    out = 0
    img = sigma.images
    while bits:
        low = bits & -bits
        j = n - low.bit_length() + 1
        out |= 1 << (n - img[j - 1])
        bits ^= low
    return out


def apply(sigma: Permutation, c: Codeword) -> Codeword:
    """Coordinate ``i`` of the result is coordinate ``sigma^-1(i)`` of ``c``."""
    if sigma.degree != c.length:
        raise ValueError(f"degree {sigma.degree} does not match length {c.length}")
    return Codeword(c.length, permute_bits(sigma, c.length, c.bits))


def permute_code(sigma: Permutation, code: LinearCode) -> LinearCode:
    if sigma.degree != code.length:
        raise ValueError(f"degree {sigma.degree} does not match length {code.length}")
    n = code.length
    return code_from_rows(n, (permute_bits(sigma, n, r) for r in code.rows))


def fixes(sigma: Permutation, code: LinearCode) -> bool:
    return permute_code(sigma, code) == code


class NotConstantWeight(ValueError):
    pass


def equivalence_permutation(c1: LinearCode, c2: LinearCode) -> Permutation:
    """A permutation mapping constant weight code ``c1`` onto ``c2``.

    Cells of the canonical bases are matched index by index, pairing
    sorted elements; the coordinates outside both supports are paired in
    sorted order too. The result is checked before it is returned.

    Raises:
        NotConstantWeight: if either code fails the cell-size test.
        ValueError: if the parameters (k, w, n) differ.
    """
    v1, v2 = check_characterization(c1), check_characterization(c2)
    for name, v in (("first", v1), ("second", v2)):
        if not v:
            raise NotConstantWeight(f"{name} code: {v.reason}")
    if (v1.k, v1.weight, v1.n) != (v2.k, v2.weight, v2.n):
        raise ValueError(
            f"parameter mismatch: (k,w,n)={(v1.k, v1.weight, v1.n)} vs {(v2.k, v2.weight, v2.n)}"
        )
    n = c1.length
    mapping: dict[int, int] = {}
    for I, a in v1.partition.cells.items():
        mapping.update(zip(sorted(a), sorted(v2.partition.cells[I])))
    rest1 = sorted(set(range(1, n + 1)) - v1.partition.ground)
    rest2 = sorted(set(range(1, n + 1)) - v2.partition.ground)
    mapping.update(zip(rest1, rest2))
    sigma = Permutation(tuple(mapping[j] for j in range(1, n + 1)))
    if permute_code(sigma, c1) != c2:
        raise RuntimeError("internal error: cell transport did not map the codes")
    return sigma
