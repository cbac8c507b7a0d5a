import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from splitg2.algebra.fields import FieldSpec, Raw, Scalar, parse_scalar
from splitg2.errors import FieldMismatch, NotInteger, ParseError, ShapeMismatch
from splitg2.helper import expect_dict
from splitg2.my_types import MatrixDict, Utils

logger = logging.getLogger(__name__)


@dataclass(frozen=True, repr=False)
class Matrix(Utils):
    """
    Dense matrix over a field. Entries are kept as canonical raw values
    (see `FieldSpec`); `entry` and `entries` hand them out as `Scalar`s.
    """

    field: FieldSpec
    rows: int
    cols: int
    data: Tuple[Tuple[Raw, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ShapeMismatch(
                f"Matrix data does not have shape {self.rows}x{self.cols}"
            )
        canon = self.field.canon
        object.__setattr__(
            self, "data", tuple(tuple(canon(v) for v in row) for row in self.data)
        )

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence]) -> "Matrix":
        data = tuple(tuple(row) for row in rows)
        cols = len(data[0]) if data else 0
        return cls(field=field, rows=len(data), cols=cols, data=data)

    @classmethod
    def from_raw(cls, field: FieldSpec, rows: Sequence[Sequence[Raw]]) -> "Matrix":
        data = tuple(tuple(row) for row in rows)
        cols = len(data[0]) if data else 0
        return cls(field=field, rows=len(data), cols=cols, data=data)

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.data[i][j])

    @property
    def entries(self) -> List[List[Scalar]]:
        return [[Scalar(self.field, v) for v in row] for row in self.data]

    def row(self, i: int) -> List[Scalar]:
        return [Scalar(self.field, v) for v in self.data[i]]

    def is_zero(self) -> bool:
        return not any(v for row in self.data for v in row)

    def to_dict(self) -> MatrixDict:
        fmt = self.field.format
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[fmt(v) for v in row] for row in self.data],
        }

    @classmethod
    def from_dict(cls, data: Dict, field: FieldSpec) -> "Matrix":
        data = expect_dict(data, position="$")
        try:
            rows, cols, entries = data["rows"], data["cols"], data["entries"]
        except KeyError as e:
            raise ParseError(f"Missing key {e.args[0]!r}", position="$")
        if not isinstance(entries, list) or len(entries) != rows:
            raise ParseError(f"Expected {rows} rows", position="$.entries")
        parsed = []
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != cols:
                raise ParseError(f"Expected {cols} entries", position=f"$.entries[{i}]")
            parsed.append(
                [
                    parse_scalar(v, field, position=f"$.entries[{i}][{j}]").value
                    for j, v in enumerate(row)
                ]
            )
        return cls(field=field, rows=rows, cols=cols, data=tuple(map(tuple, parsed)))


@dataclass(frozen=True)
class NullspaceBasis:
    dim: int
    free_columns: List[int]
    vectors: Matrix


def identity(field: FieldSpec, n: int) -> Matrix:
    one, zero = field.one, field.zero
    return Matrix.from_raw(field, [[one if i == j else zero for j in range(n)] for i in range(n)])


def zeros(field: FieldSpec, rows: int, cols: int) -> Matrix:
    return Matrix.from_raw(field, [[field.zero] * cols for _ in range(rows)])


def _check_field(a: Matrix, b: Matrix) -> FieldSpec:
    if a.field is not b.field and a.field != b.field:
        raise FieldMismatch(a.field.label, b.field.label)
    return a.field


def _check_same_shape(a: Matrix, b: Matrix):
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeMismatch(f"Shapes differ: {a.rows}x{a.cols} and {b.rows}x{b.cols}")


def transpose(m: Matrix) -> Matrix:
    return Matrix.from_raw(m.field, list(zip(*m.data)) if m.rows else [])


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    field = _check_field(a, b)
    _check_same_shape(a, b)
    return Matrix.from_raw(
        field, [[field.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.data, b.data)]
    )


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    field = _check_field(a, b)
    _check_same_shape(a, b)
    return Matrix.from_raw(
        field, [[field.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.data, b.data)]
    )


def mat_scale(c: Scalar, m: Matrix) -> Matrix:
    if c.field != m.field:
        raise FieldMismatch(c.field.label, m.field.label)
    field = m.field
    return Matrix.from_raw(field, [[field.mul(c.value, v) for v in row] for row in m.data])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    field = _check_field(a, b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for row in a.data:
        acc = [field.zero] * b.cols
        for k, v in enumerate(row):
            if not v:
                continue
            for j, w in enumerate(b.data[k]):
                if w:
                    acc[j] = field.add(acc[j], field.mul(v, w))
        out.append(acc)
    return Matrix.from_raw(field, out)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """c[x, y] = x.y - y.x"""
    _check_field(a, b)
    if a.rows != a.cols or (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeMismatch("Commutator needs two square matrices of the same size")
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(m: Matrix) -> Scalar:
    if m.rows != m.cols:
        raise ShapeMismatch("Trace of a non-square matrix")
    total = m.field.zero
    for i in range(m.rows):
        total = m.field.add(total, m.data[i][i])
    return Scalar(m.field, total)


def flatten(m: Matrix) -> List[Raw]:
    """Row-major entries."""
    return [v for row in m.data for v in row]


def from_flat(field: FieldSpec, values: Sequence[Raw], rows: int, cols: int) -> Matrix:
    if len(values) != rows * cols:
        raise ShapeMismatch(f"{len(values)} values do not fill a {rows}x{cols} matrix")
    return Matrix.from_raw(field, [values[i * cols : (i + 1) * cols] for i in range(rows)])


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form. The pivot of each column is the first nonzero
    entry at or below the current pivot row, scanning columns left to right.
    """
    field = m.field
    work = [list(row) for row in m.data]
    pivots: List[int] = []
    r = 0
    for col in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if work[i][col]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]

        prow = work[r]
        inv = field.inv(prow[col])
        if inv != field.one:
            prow[col:] = [field.mul(inv, v) for v in prow[col:]]
        support = [j for j in range(col, m.cols) if prow[j]]

        for i in range(m.rows):
            if i == r:
                continue
            factor = work[i][col]
            if not factor:
                continue
            target = work[i]
            for j in support:
                target[j] = field.sub(target[j], field.mul(factor, prow[j]))
        pivots.append(col)
        r += 1
    return Matrix.from_raw(field, work), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> NullspaceBasis:
    """
    Kernel basis parameterized by the non-pivot columns in ascending order:
    vector k carries 1 at free_columns[k] and 0 at every other free column.
    """
    field = m.field
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    vectors = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, p in enumerate(pivots):
            entry = reduced.data[i][f]
            if entry:
                v[p] = field.neg(entry)
        vectors.append(v)
    logger.debug(
        f"Nullspace of {m.rows}x{m.cols} matrix over {field.label}: "
        f"rank {len(pivots)}, dim {len(free)}"
    )
    basis = Matrix.from_raw(field, vectors) if vectors else Matrix(field, 0, m.cols, ())
    return NullspaceBasis(dim=len(free), free_columns=free, vectors=basis)


def _integer_rows(m: Matrix) -> List[List[int]]:
    if m.field.modulus is not None:
        raise NotInteger(f"Smith normal form needs an integer matrix, got entries in {m.field.label}")
    rows = []
    for i, row in enumerate(m.data):
        out = []
        for j, v in enumerate(row):
            v = Fraction(v)
            if v.denominator != 1:
                raise NotInteger(f"Entry ({i}, {j}) = {v} is not an integer")
            out.append(v.numerator)
        rows.append(out)
    return rows


def _distinct_rows(rows: List[List[int]]) -> List[List[int]]:
    # Duplicates (up to sign) and zero rows reduce to zero rows under
    # unimodular row operations, so they do not change the elementary divisors.
    seen = set()
    out = []
    for row in rows:
        lead = next((v for v in row if v), 0)
        if not lead:
            continue
        key = tuple(row) if lead > 0 else tuple(-v for v in row)
        if key not in seen:
            seen.add(key)
            out.append(list(key))
    return out


def smith_diagonal(m: Matrix) -> List[int]:
    """
    Elementary divisors d1 | d2 | ... of an integer matrix (nonzero ones only).
    The rank over GF(p) is the number of divisors not divisible by p.
    """
    rows = _distinct_rows(_integer_rows(m))
    if not rows:
        return []
    dm = DomainMatrix([[ZZ(v) for v in row] for row in rows], (len(rows), len(rows[0])), ZZ)
    divisors = sorted(abs(int(d)) for d in invariant_factors(dm) if d)
    # any unimodular diagonal normalizes to the divisibility chain by gcd/lcm swaps
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            g = gcd(divisors[i], divisors[j])
            divisors[i], divisors[j] = g, divisors[i] * divisors[j] // g
    logger.debug(f"Smith form of {len(rows)} distinct rows: {len(divisors)} divisors")
    return divisors


def rank_mod_p(divisors: Sequence[int], p: int) -> int:
    return sum(1 for d in divisors if d % p)
