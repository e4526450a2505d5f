import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affplane.errors import InputError
from affplane.gf import (FiniteField, field_arith, fixed_field,
                         galois_subgroup, is_irreducible, make_field, norm,
                         norm_image, smallest_irreducible,
                         verify_field_tables)

FIELD_ORDERS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
                (2, 4), (5, 2), (3, 3)]


def brute_force_irreducible(poly, p):
    """Oracle: a polynomial is reducible iff it has a monic factor of any
    degree between 1 and deg-1, found by exhaustive trial division."""
    poly = list(poly)
    deg = len(poly) - 1
    for d in range(1, deg):
        for tail in itertools.product(range(p), repeat=d):
            cand = list(tail) + [1]
            rem = _poly_mod(poly, cand, p)
            if not rem:
                return False
    return True


def _poly_mod(num, den, p):
    num = list(num)
    deg = len(den) - 1
    while len(num) - 1 >= deg and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < deg:
            break
        shift = len(num) - 1 - deg
        factor = (num[-1] * pow(den[-1], -1, p)) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
    while num and num[-1] == 0:
        num.pop()
    return num


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_smallest_irreducible_matches_oracle(p, n):
    found = smallest_irreducible(p, n)
    assert brute_force_irreducible(found, p)
    for tail in itertools.product(range(p), repeat=n):
        poly = list(tail) + [1]
        if tuple(poly) == found:
            break
        assert not brute_force_irreducible(poly, p)


def test_frozen_moduli():
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 4).modulus == (1, 0, 0, 1, 1)
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_is_irreducible_rejects_products():
    # (t+1)^2 = t^2 + 2t + 1 over GF(3)
    assert not is_irreducible([1, 2, 1], 3)
    assert is_irreducible([1, 1], 3)
    assert not is_irreducible([5], 7)


@pytest.mark.parametrize("p,n", FIELD_ORDERS)
def test_field_tables_verify(p, n):
    K = make_field(p, n)
    assert K.q == p ** n
    verify_field_tables(K)


def test_frozen_gf9_arithmetic(k9):
    # element 3 encodes t, element 4 encodes t+1; modulus t^2+1
    assert k9.mul(3, 3) == 2
    assert k9.inv(3) == 6
    # (t+1)^2 = t^2 + 2t + 1 = 2t since t^2 = -1 = 2; 2t encodes 6
    assert k9.mul(4, 4) == 6


def test_make_field_rejects_bad_input():
    with pytest.raises(InputError):
        make_field(6, 1)
    with pytest.raises(InputError):
        make_field(2, 0)
    with pytest.raises(InputError):
        make_field(2, 13)  # 8192 > default bound


def test_generator_spans_nonzero(k9):
    assert sorted(k9.exp_table) == list(range(1, 9))
    assert k9.log_table[0] == -1
    for i, v in enumerate(k9.exp_table):
        assert k9.log_table[v] == i


def test_field_arith_dispatch(k9):
    assert field_arith(k9, "add", 3, 4) == k9.add(3, 4)
    assert field_arith(k9, "mul", 3, 3) == 2
    assert field_arith(k9, "neg", 3) == k9.neg(3)
    assert field_arith(k9, "inv", 3) == 6
    with pytest.raises(InputError):
        field_arith(k9, "inv", 0)
    with pytest.raises(InputError):
        field_arith(k9, "mul", 3)
    with pytest.raises(InputError):
        field_arith(k9, "add", 11, 1)
    with pytest.raises(InputError):
        field_arith(k9, "frob", 1)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_gf9_field_laws_hypothesis(a, b, c):
    K = make_field(3, 2)
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.sub(a, a) == 0


# ---------------------------------------------------------------------------
# Galois machinery

def test_galois_subgroup_rejects_nondivisor(k9):
    with pytest.raises(InputError):
        galois_subgroup(k9, 3)


def test_galois_group_structure(k16):
    G = galois_subgroup(k16, 2)
    assert G.order == 2
    # the nontrivial element is x -> x^4
    assert all(G.perms[1][x] == k16.pow(x, 4) for x in range(16))
    F = fixed_field(k16, G)
    assert len(F) == 4


def test_fixed_field_gf9(k9):
    G = galois_subgroup(k9, 1)
    assert fixed_field(k9, G) == (0, 1, 2)


def test_frozen_norms(k9):
    G = galois_subgroup(k9, 1)
    assert norm(k9, G, 3) == 1
    assert norm(k9, G, 4) == 2
    assert norm(k9, G, 0) == 0
    assert norm_image(k9, G) == (1, 2)


def test_norm_exhaustive_oracle(k9):
    """Oracle: N(x) = x^(1+3) in GF(9) for the order-2 group."""
    G = galois_subgroup(k9, 1)
    for x in range(9):
        assert norm(k9, G, x) == k9.pow(x, 4)


@pytest.mark.parametrize("p,n,d", [(3, 2, 1), (2, 4, 2), (2, 4, 1),
                                   (5, 2, 1), (3, 3, 1)])
def test_norm_multiplicative_and_invariant(p, n, d):
    K = make_field(p, n)
    G = galois_subgroup(K, d)
    fixed = set(fixed_field(K, G))
    for x in range(K.q):
        nx = norm(K, G, x)
        assert nx in fixed or (x == 0 and nx == 0)
        for g in G.perms:
            assert norm(K, G, g[x]) == nx
        for y in range(K.q):
            assert norm(K, G, K.mul(x, y)) == K.mul(nx, norm(K, G, y))


def test_norm_rejects_out_of_range(k9):
    G = galois_subgroup(k9, 1)
    with pytest.raises(InputError):
        norm(k9, G, 9)
