import random
from fractions import Fraction

import pytest

from splitg2.algebra.exactlin import (
    Matrix,
    commutator,
    from_flat,
    flatten,
    identity,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    nullspace,
    rank,
    rank_mod_p,
    rref,
    smith_diagonal,
    trace,
    transpose,
    zeros,
)
from splitg2.algebra.fields import RATIONALS, FieldSpec, prime_field
from splitg2.errors import FieldMismatch, NotInteger, ParseError, ShapeMismatch
from splitg2.lie.dergen import assemble_leibniz_system

Q = RATIONALS
GF2 = prime_field(2)


def m(rows, field: FieldSpec = Q) -> Matrix:
    return Matrix.from_rows(field, rows)


def random_matrix(rng: random.Random, field: FieldSpec, rows: int, cols: int) -> Matrix:
    # sparse enough to produce rank deficiency now and then
    return m(
        [[rng.choice([0, 0, 0, 1, -1, 2, 3]) for _ in range(cols)] for _ in range(rows)],
        field,
    )


def test_rref_examples():
    reduced, pivots = rref(identity(Q, 3))
    assert reduced == identity(Q, 3) and pivots == [0, 1, 2]

    reduced, pivots = rref(m([[2, 4], [1, 2]]))
    assert reduced == m([[1, 2], [0, 0]]) and pivots == [0]

    reduced, pivots = rref(m([[1, 1], [1, 2]], GF2))
    assert reduced == m([[1, 0], [0, 1]], GF2) and pivots == [0, 1]


def test_nullspace_examples():
    kernel = nullspace(zeros(Q, 3, 3))
    assert kernel.dim == 3
    assert kernel.vectors == identity(Q, 3)
    assert kernel.free_columns == [0, 1, 2]

    assert nullspace(identity(Q, 4)).dim == 0

    kernel = nullspace(m([[1, 2, 3]]))
    assert kernel.free_columns == [1, 2]
    assert kernel.vectors == m([[-2, 1, 0], [-3, 0, 1]])


@pytest.mark.parametrize("field", [Q, GF2, prime_field(3), prime_field(7)])
def test_rank_nullity_on_random_matrices(field: FieldSpec):
    rng = random.Random(99)
    for _ in range(30):
        a = random_matrix(rng, field, rng.randint(1, 7), rng.randint(1, 7))
        kernel = nullspace(a)
        assert rank(a) + kernel.dim == a.cols
        if kernel.dim:
            assert mat_mul(a, transpose(kernel.vectors)).is_zero()
        reduced, _ = rref(a)
        assert rref(reduced)[0] == reduced


def test_mat_mul():
    a = m([[1, 2], [3, 4]])
    assert mat_mul(identity(Q, 2), a) == a
    assert mat_mul(m([[0, 1], [0, 0]]), m([[0, 1], [0, 0]])).is_zero()
    assert mat_mul(m([[1, 0, 0]]), m([[1, 2], [3, 4], [5, 6]])) == m([[1, 2]])
    with pytest.raises(ShapeMismatch):
        mat_mul(a, m([[1, 2, 3]]))
    with pytest.raises(FieldMismatch):
        mat_mul(a, m([[1, 0], [0, 1]], GF2))


def test_commutator():
    a = m([[1, 2], [3, 4]])
    b = m([[0, 1], [Fraction(1, 2), 5]])
    assert commutator(a, a).is_zero()
    assert commutator(a, b) == mat_scale(Q.element(-1), commutator(b, a))
    with pytest.raises(ShapeMismatch):
        commutator(a, m([[1, 2, 3], [4, 5, 6]]))


def test_elementwise_helpers():
    a = m([[1, 2], [3, 4]])
    assert mat_sub(mat_add(a, a), a) == a
    assert trace(a) == Q.element(5)
    assert flatten(a) == [1, 2, 3, 4]
    assert from_flat(Q, flatten(a), 2, 2) == a
    with pytest.raises(ShapeMismatch):
        from_flat(Q, [1, 2, 3], 2, 2)
    with pytest.raises(ShapeMismatch):
        trace(m([[1, 2]]))


def test_smith_examples():
    assert smith_diagonal(identity(Q, 3)) == [1, 1, 1]
    assert smith_diagonal(m([[2, 0], [0, 6]])) == [2, 6]
    assert smith_diagonal(m([[2, 0], [0, 3]])) == [1, 6]
    assert smith_diagonal(zeros(Q, 2, 3)) == []


def test_smith_rejects_non_integers():
    with pytest.raises(NotInteger):
        smith_diagonal(m([[Fraction(1, 2)]]))
    with pytest.raises(NotInteger):
        smith_diagonal(identity(GF2, 2))


def test_smith_predicts_rank_mod_p():
    rng = random.Random(5)
    for _ in range(30):
        rows = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(rng.randint(2, 6))]
        divisors = smith_diagonal(m(rows))
        # divisibility chain
        assert all(b % a == 0 for a, b in zip(divisors, divisors[1:]))
        assert len(divisors) == rank(m(rows))
        for p in (2, 3, 5, 7):
            assert rank_mod_p(divisors, p) == rank(m(rows, prime_field(p)))


def test_smith_divisors_form_a_positive_chain():
    assert smith_diagonal(m([[2, 0, 0], [0, 3, 0], [0, 0, 4]])) == [1, 2, 12]
    assert smith_diagonal(m([[-4, 0], [0, -6]])) == [2, 12]
    assert smith_diagonal(m([[1, 2], [2, 4], [-1, -2]])) == [1]


def test_smith_of_the_leibniz_system():
    divisors = smith_diagonal(assemble_leibniz_system(Q))
    assert len(divisors) == 64 - 14
    assert all(d > 0 for d in divisors)
    assert all(b % a == 0 for a, b in zip(divisors, divisors[1:]))
    for p in (5, 7, 11):
        assert 64 - rank_mod_p(divisors, p) == 14


def test_raw_rows_are_stored_canonically():
    reduced, pivots = rref(Matrix.from_raw(Q, [[2, 4], [1, 3]]))
    assert reduced == identity(Q, 2)
    assert pivots == [0, 1]
    assert all(isinstance(v, Fraction) for row in reduced.data for v in row)

    gf7 = prime_field(7)
    assert Matrix.from_raw(gf7, [[9, -1]]).data == ((2, 6),)
    assert Matrix(gf7, 1, 1, ((16,),)) == Matrix.from_rows(gf7, [[2]])
    with pytest.raises(TypeError):
        Matrix.from_raw(Q, [[0.5]])


def test_json_round_trip_and_errors():
    a = m([[1, Fraction(-2, 3)], [0, 5]])
    assert Matrix.from_dict(a.to_dict(), Q) == a
    assert a.to_dict() == {"rows": 2, "cols": 2, "entries": [["1", "-2/3"], ["0", "5"]]}
    with pytest.raises(ParseError) as info:
        Matrix.from_dict({"rows": 2, "cols": 2, "entries": [["1", "2"], ["3"]]}, Q)
    assert info.value.position == "$.entries[1]"
    with pytest.raises(ParseError) as info:
        Matrix.from_dict({"rows": 1, "cols": 2, "entries": [["1", "1/0"]]}, Q)
    assert info.value.position == "$.entries[0][1]"
