from fractions import Fraction

import pytest

from splitg2.algebra.exactlin import Matrix, identity
from splitg2.algebra.fields import RATIONALS, prime_field
from splitg2.cache import cached_derivations, cached_table
from splitg2.errors import FieldMismatch, NotClosed, ParameterizationMismatch, ParseError
from splitg2.lie.dergen import DerivationSpace, recon, unit_map
from splitg2.lie.liestruct import (
    N,
    BracketTable,
    KillingMatrix,
    bracket,
    derived_algebra_rank,
    format_bracket,
    killing_form,
    reduce_table,
    structure_table,
    verify_antisymmetry,
    verify_jacobi,
    verify_killing_invariance,
    zero_table,
)

Q = RATIONALS


@pytest.fixture(scope="module")
def table() -> BracketTable:
    return cached_table(Q)


def corrupt(t: BracketTable, i: int, j: int, k: int, value) -> BracketTable:
    """Overwrites c[i][j][k] (1-based) and nothing else."""
    c = [[list(vec) for vec in row] for row in t.c]
    c[i - 1][j - 1][k - 1] = t.field.canon(value)
    return BracketTable(field=t.field, c=tuple(tuple(tuple(v) for v in row) for row in c))


@pytest.mark.parametrize(
    "i, j, expected",
    [
        (1, 2, "-2x14"),
        (1, 4, "x1"),
        (1, 13, "3x7"),
        (1, 12, "2x4-x8"),
        (12, 13, "-2x3"),
        (14, 3, "x4+x8"),
        (13, 14, "-2x1"),
        (4, 8, "0"),
        (5, 5, "0"),
    ],
)
def test_table_cells(table: BracketTable, i: int, j: int, expected: str):
    assert table.cell(i, j) == expected


def test_bracket_examples(table: BracketTable):
    space = cached_derivations(Q)
    x = space.basis
    assert recon(bracket(x[0], x[1]))["v13"] == Q.element(-2)
    assert table.coefficient(1, 2, 14) == Q.element(-2)
    assert [v.value for v in table.bracket_vector(1, 12)][3] == 2
    for d in x:
        assert bracket(d, d).is_zero()


@pytest.mark.timeout(5)
def test_table_from_a_solved_space():
    space = cached_derivations(Q)
    assert structure_table(space) == cached_table(Q)


def test_parallel_table_is_identical(table: BracketTable):
    assert structure_table(cached_derivations(Q), max_workers=4) == table


def test_table_axioms(table: BracketTable):
    assert verify_antisymmetry(table).ok
    assert verify_jacobi(table).ok
    assert all(not table.c[i][i][k] for i in range(N) for k in range(N))


def test_constants_are_small_integers(table: BracketTable):
    values = {v for row in table.c for vec in row for v in vec}
    assert all(Fraction(v).denominator == 1 for v in values)
    assert values <= set(range(-3, 4))


def test_derived_algebra_is_everything(table: BracketTable):
    assert derived_algebra_rank(table) == N


def test_corrupted_table_fails_the_axioms(table: BracketTable):
    broken = corrupt(table, 1, 2, 14, -3)
    report = verify_antisymmetry(broken)
    assert not report.ok
    assert {"i": 1, "j": 2, "k": 14, "value": "-1"} in report.violations
    assert not verify_jacobi(broken).ok


def test_zero_table():
    t = zero_table(Q)
    assert verify_antisymmetry(t).ok
    assert verify_jacobi(t).ok
    assert derived_algebra_rank(t) == 0
    assert t.cell(1, 2) == "0"


def test_killing_form(table: BracketTable):
    k = killing_form(table)
    assert k.is_symmetric
    assert k.rank == N
    assert verify_killing_invariance(table, k).ok
    assert verify_killing_invariance(table, k).to_dict()["check"] == "killing-invariance"


def test_killing_invariance_catches_a_wrong_form(table: BracketTable):
    assert not verify_killing_invariance(table, KillingMatrix(identity(Q, N))).ok


@pytest.mark.parametrize("p", [5, 7, 11])
def test_reduced_table_matches_the_prime_field_table(table: BracketTable, p: int):
    field = prime_field(p)
    assert reduce_table(table, field) == cached_table(field)


def test_reduce_table_needs_rationals():
    with pytest.raises(FieldMismatch):
        reduce_table(zero_table(prime_field(5)), prime_field(7))


def test_unpinned_space_is_rejected():
    space = DerivationSpace(field=Q, dim=14, basis=[], pinned=False)
    with pytest.raises(ParameterizationMismatch) as info:
        structure_table(space)
    assert "x0" not in str(info.value)
    assert "pinned=False" in str(info.value)

    short = cached_derivations(Q)
    with pytest.raises(ParameterizationMismatch):
        structure_table(DerivationSpace(field=Q, dim=13, basis=short.basis[:13], pinned=True))


def test_basis_outside_the_derivations_is_not_closed():
    basis = list(cached_derivations(Q).basis)
    basis[0] = unit_map(Q, 0, 1)
    with pytest.raises(NotClosed) as info:
        structure_table(DerivationSpace(field=Q, dim=14, basis=basis, pinned=True))
    assert info.value.i >= 1 and info.value.j >= 1
    assert "x0" not in str(info.value)


def test_format_bracket():
    assert format_bracket([0] * N, Q) == "0"
    assert format_bracket([0, 0, 0, 2, 0, 0, 0, -1] + [0] * 6, Q) == "2x4-x8"
    assert format_bracket([0] * 13 + [Fraction(-1, 2)], Q) == "-1/2x14"
    assert format_bracket([1] + [0] * 13, Q) == "x1"


def test_json_round_trip(table: BracketTable):
    data = table.to_dict()
    assert data["n"] == N
    assert data["brackets"][0] == {"i": 1, "j": 2, "terms": [{"k": 14, "c": "-2"}]}
    assert BracketTable.from_dict(data, Q) == table


def test_from_dict_errors():
    with pytest.raises(ParseError) as info:
        BracketTable.from_dict({"n": 3, "brackets": []}, Q)
    assert info.value.position == "$.n"

    with pytest.raises(ParseError) as info:
        BracketTable.from_dict({"n": N, "brackets": [{"i": 2, "j": 1, "terms": []}]}, Q)
    assert info.value.position == "$.brackets[0]"

    bad_term = {"n": N, "brackets": [{"i": 1, "j": 2, "terms": [{"k": 15, "c": "1"}]}]}
    with pytest.raises(ParseError) as info:
        BracketTable.from_dict(bad_term, Q)
    assert info.value.position == "$.brackets[0].terms[0].k"


def test_bracket_of_non_derivations_is_still_a_commutator():
    a = Matrix.from_rows(Q, [[0, 1], [0, 0]])
    b = Matrix.from_rows(Q, [[0, 0], [1, 0]])
    assert bracket(a, b) == Matrix.from_rows(Q, [[1, 0], [0, -1]])
