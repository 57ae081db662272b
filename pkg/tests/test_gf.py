import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mincode.errors import CompositeP, DivisionByZero, EvenP, FieldTooLarge, Reducible
from mincode.gf import field_of_order, is_irreducible, make_field, split_prime_power

SMALL_ORDERS = [3, 5, 7, 9, 11, 13, 25, 27, 49, 81]


def has_root(poly, p):
    return any(sum(c * x**i for i, c in enumerate(poly)) % p == 0 for x in range(p))


def test_prime_field_gf3():
    F = make_field(3, 1)
    assert F.q == 3
    assert F.add(2, 2) == 1
    assert F.inv(2) == 2


def test_gf9_default_modulus_is_smallest_rootless_quadratic():
    # oracle: walk monic quadratics in (c0, c1) order, first without a root
    expected = next((c0, c1, 1) for c0, c1 in itertools.product(range(3), repeat=2) if not has_root((c0, c1, 1), 3))
    F = make_field(3, 2)
    assert F.irreducible == expected == (1, 0, 1)


def test_gf9_multiplication_matches_hand_rule(gf9):
    # modulus t^2 + 1: (a0 + a1 t)(b0 + b1 t) = (a0 b0 - a1 b1) + (a0 b1 + a1 b0) t
    for a, b in itertools.product(range(9), repeat=2):
        a0, a1 = a % 3, a // 3
        b0, b1 = b % 3, b // 3
        expected = (a0 * b0 - a1 * b1) % 3 + 3 * ((a0 * b1 + a1 * b0) % 3)
        assert gf9.mul(a, b) == expected


def test_gf9_every_inverse(gf9):
    for a in range(1, 9):
        assert gf9.mul(a, gf9.inv(a)) == 1


def test_errors():
    with pytest.raises(EvenP):
        make_field(2, 1)
    with pytest.raises(CompositeP):
        make_field(9, 1)
    with pytest.raises(Reducible):
        make_field(3, 2, [2, 0, 1])  # t^2 + 2 = (t - 1)(t + 1)
    with pytest.raises(FieldTooLarge):
        make_field(3, 11)
    with pytest.raises(DivisionByZero):
        make_field(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        make_field(5).inv(0)


def test_explicit_modulus_is_respected():
    F = make_field(3, 2, [2, 1, 1])  # t^2 + t + 2 is irreducible over GF(3)
    assert not has_root((2, 1, 1), 3)
    assert F.irreducible == (2, 1, 1)
    # t * t = -t - 2 = 2t + 1
    assert F.mul(3, 3) == 1 + 2 * 3


def test_is_irreducible_degree_three():
    # cubic is irreducible iff rootless
    for low in itertools.product(range(3), repeat=3):
        poly = list(low) + [1]
        assert is_irreducible(poly, 3) == (not has_root(poly, 3))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    assert np.array_equal(F.vadd(F.vadd(a, b), c), F.vadd(a, F.vadd(b, c)))
    assert np.array_equal(F.vmul(F.vmul(a, b), c), F.vmul(a, F.vmul(b, c)))
    assert np.array_equal(F.vmul(a, F.vadd(b, c)), F.vadd(F.vmul(a, b), F.vmul(a, c)))
    assert np.array_equal(F.vadd(a, b), F.vadd(b, a))
    assert np.array_equal(F.vmul(a, b), F.vmul(b, a))
    x = np.arange(q)
    assert not F.vadd(x, F.vneg(x)).any()
    assert np.all(F.vmul(x[1:], F.vinv(x[1:])) == 1)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_frobenius_fixes_every_element(q):
    F = field_of_order(q)
    for a in range(q):
        r = 1
        for _ in range(q):
            r = F.mul(r, a)
        assert r == a


@pytest.mark.parametrize("q", [3**7, 5**5, 7**4])
def test_field_axioms_random_triples(q):
    F = field_of_order(q)
    rng = np.random.default_rng(q)
    a, b, c = rng.integers(0, q, size=(3, 10_000))
    assert np.array_equal(F.vadd(F.vadd(a, b), c), F.vadd(a, F.vadd(b, c)))
    assert np.array_equal(F.vmul(a, F.vadd(b, c)), F.vadd(F.vmul(a, b), F.vmul(a, c)))
    assert not F.vadd(a, F.vneg(a)).any()
    nz = a[a != 0]
    assert np.all(F.vmul(nz, F.vinv(nz)) == 1)


@pytest.mark.parametrize("q", [9, 27, 125])
def test_encoding_round_trip(q):
    F = field_of_order(q)
    assert F.encode(F.decode(0)) == 0 and F.encode(F.decode(1)) == 1
    assert sorted(F.encode(F.decode(a)) for a in range(q)) == list(range(q))


@given(st.sampled_from(SMALL_ORDERS), st.data())
def test_scalar_and_vector_ops_agree(q, data):
    F = field_of_order(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    assert F.add(a, b) == int(F.vadd(a, b))
    assert F.mul(a, b) == int(F.vmul(a, b))
    assert F.neg(a) == int(F.vneg(a))
    assert F.sub(a, b) == int(F.vsub(a, b))
    if b:
        assert F.mul(F.div(a, b), b) == a


def test_split_prime_power():
    assert split_prime_power(81) == (3, 4)
    assert split_prime_power(7) == (7, 1)
    with pytest.raises(CompositeP):
        split_prime_power(12)


def test_pow_matches_repeated_multiplication():
    F = make_field(5, 2)
    for a in range(25):
        r = 1
        for e in range(6):
            assert F.pow(a, e) == r
            r = F.mul(r, a)
