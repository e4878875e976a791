"""Permutation automorphism groups and code counts for constant weight codes.

Closed forms (exact ints):

    |PAut(C)| = (n - (2^k-1) m)! * (m!)^(2^k-1) * prod_{i<k} (2^k - 2^i)
    #codes    = n! / |PAut(C)|

Alongside them live exact search oracles: a pruned exhaustive stabilizer
search, a census of all codes with given parameters, and closure enumeration
of generated groups.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Sequence

import numpy as np

from .construct import CanonicalSpec, canonical_code
from .gf2 import CapExceeded, LinearCode, code_from_rows
from .equivalence import NotConstantWeight, Permutation, compose, fixes, render_cycles
from .supports import admissible_params, check_characterization

BRUTE_FORCE_CAP = 8
BRUTE_FORCE_CEILING = 10
CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class PAutReport:
    n: int
    k: int
    order: int
    generators: list[Permutation]
    orbits: list[list[int]]
    method: str

    @property
    def transitive(self) -> bool:
        return len(self.orbits) == 1

    def to_json(self, with_generators: bool = True) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "order": str(self.order),
            "generators": [render_cycles(g) for g in self.generators] if with_generators else [],
            "orbits": self.orbits,
            "transitive": self.transitive,
            "method": self.method,
        }


@dataclass(frozen=True)
class CountReport:
    k: int
    m: int
    n: int
    count: int
    method: str

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m, "n": self.n, "count": str(self.count), "method": self.method}


def _require(k: int, m: int, n: int) -> None:
    if k < 2:
        raise ValueError("formulas need k >= 2")
    if m < 1:
        raise ValueError("m must be positive")
    verdict = admissible_params(k, (1 << (k - 1)) * m, n)
    if not verdict:
        raise ValueError(verdict.reason)


def gl_order(k: int) -> int:
    """Order of GL(k, 2): the number of ordered bases of a k-dim space over GF(2)."""
    return prod((1 << k) - (1 << i) for i in range(k))


def paut_order_formula(k: int, m: int, n: int) -> int:
    _require(k, m, n)
    cells = (1 << k) - 1
    return factorial(n - cells * m) * factorial(m) ** cells * gl_order(k)


def code_count_binomial_form(k: int, m: int, n: int) -> int:
    cells = (1 << k) - 1
    num = comb(n, cells * m) * prod(comb(((1 << k) - i) * m, m) for i in range(1, cells + 1))
    q, r = divmod(num, gl_order(k))
    assert r == 0
    return q


def code_count_multinomial_form(k: int, m: int, n: int) -> int:
    cells = (1 << k) - 1
    multinomial = factorial(cells * m) // factorial(m) ** cells
    q, r = divmod(comb(n, cells * m) * multinomial, gl_order(k))
    assert r == 0
    return q


def code_count_formula(k: int, m: int, n: int) -> int:
    """Number of distinct k-dim constant weight codes of weight 2^(k-1) m and length n.

    Both closed forms are evaluated and must agree with each other and with
    ``n! / |PAut|``.
    """
    _require(k, m, n)
    a = code_count_binomial_form(k, m, n)
    b = code_count_multinomial_form(k, m, n)
    if a != b or a * paut_order_formula(k, m, n) != factorial(n):
        raise RuntimeError(f"count formulas disagree at {(k, m, n)}")
    return a


def count_report(k: int, m: int, n: int) -> CountReport:
    return CountReport(k, m, n, code_count_formula(k, m, n), "formula")


def census(k: int, m: int, n: int) -> set[LinearCode]:
    """Every constant weight code with the given parameters, by exhaustion.

    Walks all assignments of pairwise disjoint m-subsets of ``[n]`` to the
    ``2^k - 1`` nonzero index masks, builds row ``i`` as the union of cells
    whose mask contains ``i``, and dedupes by canonical basis.
    """
    cells = (1 << k) - 1
    codes: set[LinearCode] = set()

    def place(mask: int, free: tuple[int, ...], rows: list[int]) -> None:
        if mask > cells:
            codes.add(code_from_rows(n, rows))
            return
        for chosen in itertools.combinations(free, m):
            bits = sum(1 << (n - p) for p in chosen)
            new_rows = [r | bits if (mask >> i) & 1 else r for i, r in enumerate(rows)]
            rest = tuple(p for p in free if p not in chosen)
            place(mask + 1, rest, new_rows)

    place(1, tuple(range(1, n + 1)), [0] * k)
    return codes


def census_count(k: int, m: int, n: int) -> CountReport:
    _require(k, m, n)
    return CountReport(k, m, n, len(census(k, m, n)), "exhaustive")


# -- permutation groups -----------------------------------------------------


def orbits(generators: Sequence[Permutation], n: int) -> list[list[int]]:
    """Connected components of ``{1..n}`` under the generators, sorted."""
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        if g.degree != n:
            raise ValueError(f"generator degree {g.degree} != {n}")
        for j, x in enumerate(g.images, start=1):
            a, b = find(j), find(x)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for j in range(1, n + 1):
        groups.setdefault(find(j), []).append(j)
    return sorted(groups.values())


def group_elements(generators: Sequence[Permutation], n: int, cap: int = CLOSURE_CAP) -> np.ndarray:
    """All elements of the generated group as rows of 0-based images.

    Breadth-first closure under right multiplication by generators; raises
    :class:`CapExceeded` once more than ``cap`` elements are found.
    """
    if n > 255:
        raise ValueError("closure enumeration supports degree <= 255")
    gens = [np.asarray(g.images, dtype=np.uint8) - 1 for g in generators]
    for g in gens:
        if g.shape != (n,):
            raise ValueError("generator degree mismatch")
    ident = np.arange(n, dtype=np.uint8)
    seen = {ident.tobytes()}
    found = [ident[None, :]]
    frontier = ident[None, :]
    while len(frontier):
        fresh = []
        for g in gens:
            cand = g[frontier]  # x then g
            for row in cand:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
            if len(seen) > cap:
                raise CapExceeded(f"group closure exceeded {cap} elements")
        frontier = np.array(fresh, dtype=np.uint8).reshape(-1, n)
        found.append(frontier)
    return np.concatenate(found)


def group_order(generators: Sequence[Permutation], n: int, cap: int = CLOSURE_CAP) -> int:
    return len(group_elements(generators, n, cap))


def _adjacent_transpositions(coords: Sequence[int], n: int) -> list[Permutation]:
    coords = sorted(coords)
    return [Permutation.from_cycles(n, [(a, b)]) for a, b in zip(coords, coords[1:])]


def _column_classes(code: LinearCode) -> dict[int, list[int]]:
    """Group coordinates by their column in the basis matrix (bit i = row i+1)."""
    n = code.length
    classes: dict[int, list[int]] = {}
    for p in range(1, n + 1):
        col = sum(1 << i for i, r in enumerate(code.rows) if (r >> (n - p)) & 1)
        classes.setdefault(col, []).append(p)
    return classes


def brute_force_paut(code: LinearCode, cap: int = BRUTE_FORCE_CAP) -> PAutReport:
    """Exact permutation automorphism group by exhaustive search.

    Any automorphism maps equal basis-matrix columns to equal columns and the
    zero column class to itself, so the search runs over maps between
    column classes of equal size, built from images of a column basis.
    Each candidate class map is checked directly (``sigma(C) == C``) on its
    sorted-pairing representative; a passing map accounts for the
    ``prod(|class|!)`` permutations in its fiber.
    """
    n, k = code.length, code.dimension
    if n > min(cap, BRUTE_FORCE_CEILING):
        raise CapExceeded(f"length {n} exceeds brute-force cap {min(cap, BRUTE_FORCE_CEILING)}")
    classes = _column_classes(code)
    nonzero = sorted(c for c in classes if c)
    size = {c: len(v) for c, v in classes.items()}

    # pick a column basis and express every column in it
    reduce_track: dict[int, tuple[int, int]] = {}  # pivot bit -> (reduced vector, combo)
    basis_cols: list[int] = []
    for c in nonzero:
        v, combo = c, 0
        for piv, (vec, cmb) in reduce_track.items():
            if (v >> piv) & 1:
                v ^= vec
                combo ^= cmb
        if v:
            combo ^= 1 << len(basis_cols)
            basis_cols.append(c)
            reduce_track[v.bit_length() - 1] = (v, combo)
    coeff: dict[int, int] = {}
    for c in nonzero:
        v, combo = c, 0
        for piv, (vec, cmb) in reduce_track.items():
            if (v >> piv) & 1:
                v ^= vec
                combo ^= cmb
        assert v == 0
        coeff[c] = combo

    reps: list[Permutation] = []
    valid = 0
    nonzero_set = set(nonzero)

    def search(level: int, images: list[int], span: set[int]) -> None:
        nonlocal valid
        if level == len(basis_cols):
            target = {}
            for c in nonzero:
                img = 0
                combo = coeff[c]
                for i, b in enumerate(images):
                    if (combo >> i) & 1:
                        img ^= b
                if img not in nonzero_set or size[img] != size[c]:
                    return
                target[c] = img
            mapping = {}
            for c, img in target.items():
                mapping.update(zip(classes[c], classes[img]))
            for p in classes.get(0, []):
                mapping[p] = p
            sigma = Permutation(tuple(mapping[p] for p in range(1, n + 1)))
            if not fixes(sigma, code):
                raise RuntimeError("internal error: class map failed the direct check")
            valid += 1
            if not sigma.is_identity():
                reps.append(sigma)
            return
        src = basis_cols[level]
        for img in nonzero:
            if size[img] != size[src] or img in span:
                continue
            search(level + 1, images + [img], span | {x ^ img for x in span} | {img})

    search(0, [], {0})
    fiber = prod(factorial(len(v)) for v in classes.values())
    gens = list(reps)
    for v in classes.values():
        gens += _adjacent_transpositions(v, n)
    return PAutReport(n, k, valid * fiber, gens, orbits(gens, n), "brute-force")


def naive_paut_order(code: LinearCode) -> int:
    """Count automorphisms by testing every one of the n! permutations."""
    n = code.length
    if n > BRUTE_FORCE_CAP:
        raise CapExceeded(f"length {n} too large for the naive search")
    return sum(
        fixes(Permutation(tuple(p)), code)
        for p in itertools.permutations(range(1, n + 1))
    )


# -- structured generators --------------------------------------------------


def _transvection(k: int):
    # v -> v + v_1 e_2  (add row 1 to row 2)
    return lambda v: v ^ ((v & 1) << 1)


def _row_shift(k: int):
    full = (1 << k) - 1
    return lambda v: ((v << 1) | (v >> (k - 1))) & full


def structured_paut_generators(code: LinearCode, closure_limit: int = 8) -> PAutReport:
    """Generators of PAut(C) built from the support partition.

    Three families: transpositions inside each cell, transpositions on the
    coordinates outside every support, and for each of two GL(k, 2)
    generators the permutation carrying cell ``A^I`` onto ``A^(gI)``. Every
    generator is checked to fix the code. For ``n <= closure_limit`` the
    generated order is computed by closure and must equal the formula;
    otherwise the formula value is reported.
    """
    verdict = check_characterization(code)
    if not verdict:
        raise NotConstantWeight(verdict.reason)
    k, n, m = verdict.k, code.length, verdict.m
    if k < 2:
        raise ValueError("structured generators need k >= 2")
    cells = verdict.partition.cells
    gens: list[Permutation] = []
    for I in sorted(cells):
        gens += _adjacent_transpositions(cells[I], n)
    padding = sorted(set(range(1, n + 1)) - verdict.partition.ground)
    gens += _adjacent_transpositions(padding, n)
    for act in (_transvection(k), _row_shift(k)):
        mapping = {p: p for p in padding}
        for I, a in cells.items():
            mapping.update(zip(sorted(a), sorted(cells[act(I)])))
        g = Permutation(tuple(mapping[p] for p in range(1, n + 1)))
        if not g.is_identity():
            gens.append(g)
    for g in gens:
        if not fixes(g, code):
            raise RuntimeError(f"internal error: generator {g} does not fix the code")
    expected = paut_order_formula(k, m, n)
    if n <= closure_limit:
        order = group_order(gens, n)
        if order != expected:
            raise RuntimeError(f"generated order {order} != formula {expected}")
    else:
        order = expected
    return PAutReport(n, k, order, gens, orbits(gens, n), "generated")


def formula_report(code: LinearCode) -> PAutReport:
    """Formula order with orbit data taken from the structured generators."""
    rep = structured_paut_generators(code, closure_limit=0)
    return PAutReport(rep.n, rep.k, rep.order, rep.generators, rep.orbits, "formula")


# -- explicit S_3 subgroups -------------------------------------------------


def _block_perm(n: int, cycles: list[tuple[int, ...]]) -> Permutation:
    return Permutation.from_cycles(n, cycles)


def remark_tau2_cycles(k: int) -> list[tuple[int, ...]]:
    """The m = 2 three-cycle generator exactly as indexed over i = 2..k."""
    out = []
    for i in range(2, k + 1):
        t = 1 << (i + 1)
        out += [(t - 7, t - 5, t - 3), (t - 6, t - 4, t - 2)]
    return out


def s3_subgroup_generators(k: int, m: int, n: int | None = None) -> tuple[Permutation, Permutation]:
    """An involution and a 3-cycle-type element generating an S_3 inside PAut.

    For ``m >= 3`` these are ``(1 2)`` and ``(1 2 3)`` (three coordinates of
    one cell). For ``m = 1`` and ``m = 2`` the body splits into blocks of
    ``4m`` coordinates that agree on rows ``1..k-2``; inside each block the
    elements permute the three nonzero patterns of the last two rows.

    For ``m = 2`` the 3-cycle element indexed over ``i = 2..k`` covers only
    some blocks once ``k >= 4``; when it fails verification a warning is
    issued and the block-uniform version is returned instead.
    """
    spec = CanonicalSpec(k, m, ((1 << k) - 1) * m if n is None else n)
    if k < 2:
        raise ValueError("need k >= 2")
    n = spec.n
    code = canonical_code(k, m, n)
    blocks = range(1 << (k - 2))
    if m >= 3:
        a = _block_perm(n, [(1, 2)])
        b = _block_perm(n, [(1, 2, 3)])
    elif m == 1:
        a = _block_perm(n, [(4 * j + 2, 4 * j + 3) for j in blocks])
        b = _block_perm(n, [(4 * j + 1, 4 * j + 2, 4 * j + 3) for j in blocks])
    else:
        a = _block_perm(n, [c for j in blocks for c in ((8 * j + 3, 8 * j + 5), (8 * j + 4, 8 * j + 6))])
        b = _block_perm(n, remark_tau2_cycles(k))
        if not fixes(b, code):
            warnings.warn(
                f"index pattern over i=2..k for the m=2 three-cycle does not fix the code at k={k}; "
                "using one 3-cycle pair per 8-block instead",
                stacklevel=2,
            )
            b = _block_perm(
                n,
                [c for j in blocks for c in ((8 * j + 1, 8 * j + 3, 8 * j + 5), (8 * j + 2, 8 * j + 4, 8 * j + 6))],
            )
    for g in (a, b):
        if not fixes(g, code):
            raise RuntimeError(f"internal error: {g} does not fix the canonical code")
    return a, b


def commute(a: Permutation, b: Permutation) -> bool:
    return compose(a, b) == compose(b, a)


# -- group codes ------------------------------------------------------------


@dataclass(frozen=True)
class GroupCodeVerdict:
    possible: bool
    orbits: list[list[int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.possible

    @property
    def reason(self) -> str:
        if self.possible:
            return "PAut is transitive; a transitive subgroup of order n is not ruled out"
        return "impossible: PAut not transitive"


def group_code_necessary(code: LinearCode, cap: int = BRUTE_FORCE_CAP) -> GroupCodeVerdict:
    """Necessary condition for being a group code: PAut(C) must be transitive.

    Only ever rules codes out; "possible" makes no existence claim.
    """
    rep = brute_force_paut(code, cap)
    return GroupCodeVerdict(rep.transitive, rep.orbits)


def multiple_of_six_check(k: int, m: int, n: int) -> bool:
    return paut_order_formula(k, m, n) % 6 == 0
