import random

import pytest
from hypothesis import given, strategies as st

from cwcodes import (
    Codeword, NotConstantWeight, Permutation, apply, canonical_code, check_characterization,
    compose, equivalence_permutation, extend_with_zeros, inverse, is_constant_weight,
    parse_cycles, permute_code, render_cycles, support,
)

from conftest import code
from helpers import random_perm_images

W = Codeword.from_string


def test_apply_examples():
    assert apply(parse_cycles("(1 2)", 2), W("10")) == W("01")
    assert apply(Permutation.identity(5), W("10110")) == W("10110")
    sigma1 = parse_cycles("(1 4 5 2 3 6)", 6)
    assert apply(sigma1, W("111100")) == W("001111")
    with pytest.raises(ValueError):
        apply(sigma1, W("101"))


def test_permute_code_examples(D):
    assert permute_code(Permutation.identity(6), D) == D
    assert permute_code(parse_cycles("(1 4 5 2 3 6)", 6), D) == D
    assert permute_code(parse_cycles("(1 3 2 4)(5 6)", 6), D) == D
    c = code("1100", "1010")
    image = permute_code(parse_cycles("(3 4)", 4), c)
    assert image == code("1100", "1001") and image != c


def test_compose_inverse():
    b = parse_cycles("(1 3)(2 4)", 4)
    assert compose(Permutation.identity(4), b) == b
    assert render_cycles(inverse(parse_cycles("(1 2 3)", 3))) == "(1 3 2)"
    # (1 2) first, then (2 3): 1->2->3, 2->1, 3->2
    assert render_cycles(compose(parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3))) == "(1 3 2)"
    with pytest.raises(ValueError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_cycle_io():
    s2 = parse_cycles("(1 3 2 4)(5 6)", 6)
    assert s2.images == (3, 4, 2, 1, 6, 5)
    assert parse_cycles("()", 5) == Permutation.identity(5)
    assert render_cycles(Permutation.identity(5)) == "()"
    assert render_cycles(parse_cycles("(5 6)(3 1 2)", 6)) == "(1 2 3)(5 6)"
    assert parse_cycles("(1,2)", 3) == parse_cycles("(1 2)", 3)


@pytest.mark.parametrize("text", ["(2 3)(2 4)", "(1 5)", "1 2", "(1 2", "(1 a)", "(1 2) x", ""])
def test_cycle_parse_errors(text):
    with pytest.raises(ValueError):
        parse_cycles(text, 4)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


perms = st.integers(1, 12).flatmap(lambda n: st.permutations(range(1, n + 1)).map(tuple))


@given(perms)
def test_render_parse_round_trip(img):
    p = Permutation(img)
    assert parse_cycles(render_cycles(p), p.degree) == p
    assert compose(p, inverse(p)).is_identity()


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(
    st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)), st.integers(0, 2**n - 1), st.just(n))))
def test_group_action(t):
    a, b, bits, n = t
    a, b, c = Permutation(tuple(a)), Permutation(tuple(b)), Codeword(n, bits)
    assert support(apply(a, c)) == {a(j) for j in support(c)}
    assert apply(compose(a, b), c) == apply(b, apply(a, c))


def test_equivalence_examples(D):
    assert equivalence_permutation(D, D).is_identity()
    c1 = code("1100", "1010")
    c2 = code("0110", "0101")
    sigma = equivalence_permutation(c1, c2)
    assert sigma.images == (2, 3, 4, 1)
    assert permute_code(sigma, c1) == c2


def test_equivalence_errors(D):
    with pytest.raises(ValueError):
        equivalence_permutation(D, extend_with_zeros(canonical_code(2, 1, 3), 6))
    with pytest.raises(NotConstantWeight):
        equivalence_permutation(D, code("111000", "000111"))


def test_equivalence_round_trip_and_cell_transport():
    rng = random.Random(11)
    for _ in range(100):
        k = rng.randint(1, 4)
        m = rng.randint(1, 3)
        body = ((1 << k) - 1) * m
        if body > 12:
            continue
        n = rng.randint(body, 12)
        c1 = canonical_code(k, m, n)
        tau = Permutation(random_perm_images(rng, n))
        c2 = permute_code(tau, c1)
        sigma = equivalence_permutation(c1, c2)
        assert permute_code(sigma, c1) == c2
        p1 = check_characterization(c1).partition
        p2 = check_characterization(c2).partition
        for I, a in p1.cells.items():
            assert {sigma(x) for x in a} == p2.cells[I]
        assert is_constant_weight(c2) == is_constant_weight(c1)
