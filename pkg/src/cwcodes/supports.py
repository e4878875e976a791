"""Repeated symmetric differences and the support partition of a basis.

A family of ``k`` coordinate sets ``A_1..A_k`` is cut into cells ``A^I``: the
coordinates lying in exactly the sets indexed by ``I``. Index subsets are
stored as int masks, bit ``i - 1`` standing for set ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import Codeword, LinearCode, support

CoordSet = frozenset[int]


def subset_mask(indices: Iterable[int]) -> int:
    """Mask of a 1-based index subset, e.g. ``{1, 3} -> 0b101``."""
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"index {i} is not 1-based")
        mask |= 1 << (i - 1)
    return mask


def mask_members(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


def format_subset(items: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(items)) + "}"


def symmetric_difference(sets: Sequence[Iterable[int]]) -> CoordSet:
    """Elements lying in an odd number of the given sets."""
    if not sets:
        raise ValueError("need at least one set")
    out: set[int] = set()
    for s in sets:
        out.symmetric_difference_update(s)
    return frozenset(out)


def cell(sets: Sequence[Iterable[int]], I: int) -> CoordSet:
    """Coordinates lying in every ``A_i`` with ``i`` in ``I`` and in no other ``A_j``."""
    sets = [frozenset(s) for s in sets]
    if not 0 < I < (1 << len(sets)):
        raise ValueError(f"index mask {I} is not a nonempty subset of [{len(sets)}]")
    inside = [s for i, s in enumerate(sets) if (I >> i) & 1]
    outside = [s for i, s in enumerate(sets) if not (I >> i) & 1]
    return frozenset(inside[0].intersection(*inside[1:]).difference(*outside))


@dataclass(frozen=True)
class SupportPartition:
    """The cells ``A^I`` of a family of ``k`` sets.

    ``cells`` holds all ``2^k - 1`` nonempty masks as keys, including empty cells.
    """

    k: int
    ground: CoordSet
    cells: dict[int, CoordSet]

    def __getitem__(self, I: int) -> CoordSet:
        return self.cells[I]

    def sizes(self) -> dict[int, int]:
        return {I: len(c) for I, c in self.cells.items()}

    def owner(self) -> dict[int, int]:
        """Map each ground-set coordinate to the mask of its cell."""
        return {p: I for I, c in self.cells.items() for p in c}

    def member_set(self, i: int) -> CoordSet:
        """Rebuild ``A_i`` as the union of cells whose index set contains ``i``."""
        bit = 1 << (i - 1)
        return frozenset().union(*(c for I, c in self.cells.items() if I & bit))

    def render(self) -> str:
        return "\n".join(
            f"I={format_subset(mask_members(I))} -> {format_subset(c)}"
            for I, c in sorted(self.cells.items())
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "cells": [
                {"I": list(mask_members(I)), "coords": sorted(c)}
                for I, c in sorted(self.cells.items())
            ],
        }


def partition(sets: Sequence[Iterable[int]]) -> SupportPartition:
    """Split the union of ``sets`` into the cells ``A^I``."""
    sets = [frozenset(s) for s in sets]
    k = len(sets)
    if k < 1:
        raise ValueError("need at least one set")
    membership: dict[int, int] = {}
    for i, s in enumerate(sets):
        for x in s:
            membership[x] = membership.get(x, 0) | (1 << i)
    buckets: dict[int, set[int]] = {I: set() for I in range(1, 1 << k)}
    for x, I in membership.items():
        buckets[I].add(x)
    cells = {I: frozenset(b) for I, b in buckets.items()}
    return SupportPartition(k, frozenset(membership), cells)


def basis_partition(rows: Sequence[Codeword]) -> SupportPartition:
    return partition([support(r) for r in rows])


def relative_symmetric_difference(p: SupportPartition, J: int) -> CoordSet:
    """Symmetric difference of the ``J``-indexed sets, read off the cells.

    It is the disjoint union of the cells ``A^I`` with ``|I & J|`` odd.
    """
    if J <= 0:
        raise ValueError("J must be nonempty")
    return frozenset().union(*(c for I, c in p.cells.items() if (I & J).bit_count() & 1))


def intersection_of(p: SupportPartition, S: int) -> CoordSet:
    """Intersection of the ``S``-indexed sets: union of cells with ``S`` contained in ``I``."""
    if S <= 0:
        raise ValueError("S must be nonempty")
    return frozenset().union(*(c for I, c in p.cells.items() if I & S == S))


@dataclass(frozen=True)
class Characterization:
    """Outcome of the cell-size test on a basis.

    When ``constant_weight`` is false, ``reason`` names the failed condition
    and, for a bad cell, ``offending``/``offending_size`` identify the
    smallest offending mask.
    """

    constant_weight: bool
    k: int
    n: int
    weight: int | None
    m: int | None
    partition: SupportPartition
    reason: str = ""
    offending: int | None = None
    offending_size: int | None = None

    def __bool__(self) -> bool:
        return self.constant_weight

    def summary(self) -> str:
        if self.constant_weight:
            return f"constant weight, w={self.weight}, m={self.m}"
        return f"not constant weight: {self.reason}"

    def to_json(self) -> dict:
        out = {
            "constant_weight": self.constant_weight,
            "k": self.k,
            "n": self.n,
            "w": self.weight,
            "m": self.m,
            "reason": self.reason or None,
            "offending": list(mask_members(self.offending)) if self.offending else None,
            "offending_size": self.offending_size,
        }
        out.update(partition=self.partition.to_json()["cells"])
        return out


def characterize_rows(rows: Sequence[Codeword]) -> Characterization:
    """Cell-size test on an explicit list of independent basis rows.

    The rows generate a constant weight code iff they share one weight ``w``
    and every one of the ``2^k - 1`` cells has exactly ``w / 2^(k-1)``
    coordinates. No codeword enumeration is done here.
    """
    if not rows:
        raise ValueError("empty basis")
    k, n = len(rows), rows[0].length
    part = basis_partition(rows)

    def violation(reason, I=None, size=None, w=None):
        return Characterization(False, k, n, w, None, part, reason, I, size)

    if any(r.bits == 0 for r in rows):
        return violation("zero basis row")
    weights = {r.weight for r in rows}
    if len(weights) > 1:
        return violation(f"basis rows have unequal weights {sorted(weights)}")
    (w,) = weights
    m, rem = divmod(w, 1 << (k - 1))
    if rem:
        return violation(f"weight {w} is not a multiple of 2^(k-1)={1 << (k - 1)}", w=w)
    for I in range(1, 1 << k):
        size = len(part.cells[I])
        if size != m:
            return violation(
                f"cell I={format_subset(mask_members(I))} has size {size}, expected {m}",
                I, size, w,
            )
    return Characterization(True, k, n, w, m, part)


def check_characterization(code: LinearCode | Sequence[Codeword]) -> Characterization:
    """Certify (or refute) constant weight from the support partition.

    Accepts a :class:`LinearCode` (its canonical basis is used) or an explicit
    sequence of basis rows. For ``k = 1`` the single cell is the support and
    the test degenerates to "true", matching the enumeration verdict.
    """
    rows = code.basis if isinstance(code, LinearCode) else list(code)
    return characterize_rows(rows)


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    m: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.admissible


def admissible_params(k: int, w: int, n: int) -> Admissibility:
    """Check the necessary conditions on (dimension, weight, length).

    For ``k >= 2`` the weight must be a multiple of ``2^(k-1)`` and the
    length at least ``(2^k - 1) m`` with ``m = w / 2^(k-1)``; these are also
    sufficient (the canonical construction realizes them).
    """
    if k < 1 or w < 1 or n < 1:
        raise ValueError("k, w and n must be positive")
    if k == 1:
        if w <= n:
            return Admissibility(True, w)
        return Admissibility(False, reason=f"weight {w} exceeds length {n}")
    m, rem = divmod(w, 1 << (k - 1))
    if rem:
        return Admissibility(False, reason=f"weight {w} is not a multiple of 2^(k-1)={1 << (k - 1)}")
    body = ((1 << k) - 1) * m
    if n < body:
        return Admissibility(False, reason=f"length {n} below (2^k-1)m={body}")
    return Admissibility(True, m)
