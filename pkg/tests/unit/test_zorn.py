import random
from fractions import Fraction

import pytest

from splitg2.algebra.fields import RATIONALS, prime_field
from splitg2.algebra.zorn import (
    BASIS_NAMES,
    Coord8,
    Vec3,
    ZornMatrix,
    basis_by_name,
    basis_product_table,
    coords_of,
    cross,
    describe,
    dot,
    octonion_basis,
    random_zorn,
    unit_zorn,
    zero_zorn,
    zlin,
    zmul,
    zorn_from_values,
    zorn_of_coords,
)
from splitg2.errors import FieldMismatch, ParseError

F = RATIONALS


def e(name: str) -> ZornMatrix:
    return basis_by_name(name, F)


def vec(*values) -> Vec3:
    return Vec3.of(F, values)


def test_cross_product():
    assert cross(vec(1, 0, 0), vec(0, 1, 0)) == vec(0, 0, 1)
    assert cross(vec(1, 2, 3), vec(4, 5, 6)) == vec(-3, 6, -3)
    u = vec(3, -7, 2)
    assert cross(u, u) == vec(0, 0, 0)


def test_dot_product():
    assert dot(vec(1, 0, 0), vec(1, 0, 0)) == F.element(1)
    assert dot(vec(1, 2, 3), vec(4, 5, 6)) == F.element(32)
    assert dot(vec(5, 6, 7), vec(0, 0, 0)).is_zero()


def test_vectors_must_share_a_field():
    with pytest.raises(FieldMismatch):
        cross(vec(1, 0, 0), Vec3.of(prime_field(5), (0, 1, 0)))


def test_basis_elements():
    basis = octonion_basis(F)
    assert [describe(z) for z in basis] == list(BASIS_NAMES)
    assert coords_of(basis[0]).raw() == [1, 0, 0, 0, 0, 0, 0, 0]
    c3 = basis[4]
    assert c3.x == vec(0, 0, 1) and c3.a.is_zero() and c3.b.is_zero()
    unit = unit_zorn(F)
    assert unit.a == F.element(1) and unit.b == F.element(1)
    assert unit.x.to_dict() == ["0", "0", "0"]


def test_identity_suite():
    unit, zero = unit_zorn(F), zero_zorn(F)
    assert e("A") + e("B") == unit
    assert zmul(e("A"), e("A")) == e("A")
    for name in ("C1", "C2", "C3"):
        assert zmul(e(name), e(name)) == zero
    assert zmul(e("C1"), zmul(e("C2"), e("C3"))) == e("A")
    assert zmul(zmul(e("C1"), e("C2")), e("C3")) == e("B")
    assert zmul(e("C2"), e("C3")) == e("D1")
    assert e("D2") == -zmul(e("C1"), e("C3"))
    assert zmul(e("C1"), e("C2")) == e("D3")


def test_zlin():
    one, zero = F.element(1), F.element(0)
    p = zorn_from_values(F, [1, 2, 3, 4, 5, 6, 7, 8])
    q = zorn_from_values(F, [8, 7, 6, 5, 4, 3, 2, 1])
    assert zlin(one, e("A"), one, e("B")) == unit_zorn(F)
    assert zlin(one, p, zero, q) == p
    assert zlin(one, p, -one, p) == zero_zorn(F)


def test_coordinates():
    assert coords_of(e("D2")).raw() == [0, 0, 0, 0, 0, 0, 1, 0]
    assert coords_of(unit_zorn(F)).raw() == [1, 1, 0, 0, 0, 0, 0, 0]
    c = Coord8(tuple(F.element(v) for v in (0, 0, 1, 1, 1, 0, 0, 0)))
    assert zorn_of_coords(c) == e("C1") + e("C2") + e("C3")
    rng = random.Random(7)
    for _ in range(20):
        z = random_zorn(rng, F)
        assert zorn_of_coords(coords_of(z)) == z


def test_coord8_needs_eight_entries():
    with pytest.raises(ValueError):
        Coord8(tuple(F.element(0) for _ in range(7)))


def test_basis_products_are_signed_basis_elements():
    table = basis_product_table(F)
    for row in table:
        for product in row:
            nonzero = [v for v in product if v]
            assert all(v in (1, -1) for v in nonzero)
            assert len(nonzero) <= 1
    # e_A e_A = A, e_C1 e_C2 = D3
    assert table[0][0] == [1, 0, 0, 0, 0, 0, 0, 0]
    assert table[2][3] == [0, 0, 0, 0, 0, 0, 0, 1]


@pytest.mark.parametrize("field", [RATIONALS, prime_field(7)])
def test_algebra_properties_on_random_elements(field):
    rng = random.Random(2024)
    unit = unit_zorn(field)
    for _ in range(50):
        z, w, v = (random_zorn(rng, field) for _ in range(3))
        a = field.element(rng.randint(-5, 5))
        b = field.element(rng.randint(-5, 5))
        # unit
        assert zmul(unit, z) == z and zmul(z, unit) == z
        # bilinearity
        assert zmul(zlin(a, z, b, w), v) == zlin(a, zmul(z, v), b, zmul(w, v))
        assert zmul(v, zlin(a, z, b, w)) == zlin(a, zmul(v, z), b, zmul(v, w))
        # alternativity
        zz = zmul(z, z)
        assert zmul(zz, w) == zmul(z, zmul(z, w))
        assert zmul(w, zz) == zmul(zmul(w, z), z)


def test_describe():
    assert describe(zero_zorn(F)) == "0"
    assert describe(unit_zorn(F)) == "Y"
    assert describe(-e("D2")) == "-D2"
    assert describe(zorn_from_values(F, [1, 0, -2, 0, 0, 0, 0, 0])) == "A - 2C1"


def test_basis_names():
    assert basis_by_name("ZERO", F) == zero_zorn(F)
    assert basis_by_name("Y", F) == unit_zorn(F)
    with pytest.raises(ParseError):
        basis_by_name("c1", F)


def test_json_round_trip():
    z = zorn_from_values(F, [1, Fraction(-1, 2), 0, 3, 0, 0, 7, 0])
    assert ZornMatrix.from_dict(z.to_dict(), F) == z
    assert z.to_dict() == {"a": "1", "x": ["0", "3", "0"], "y": ["0", "7", "0"], "b": "-1/2"}


def test_json_errors_are_positioned():
    with pytest.raises(ParseError) as info:
        ZornMatrix.from_dict({"a": "1", "x": ["0", "0"], "y": ["0", "0", "0"], "b": "0"}, F)
    assert info.value.position == "$.x"
    with pytest.raises(ParseError) as info:
        ZornMatrix.from_dict({"a": "1", "x": ["0", "q", "0"], "y": ["0", "0", "0"], "b": "0"}, F)
    assert info.value.position == "$.x[1]"
