"""
Split octonions as Zorn vector matrices (a, x; y, b) with scalar diagonal
and 3-vector off-diagonal entries.

The ordered basis is (A, B, C1, C2, C3, D1, D2, D3); every 8x8 matrix in the
package is written against this order.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from splitg2.algebra.fields import FieldSpec, Scalar, parse_scalar
from splitg2.errors import FieldMismatch, ParseError
from splitg2.helper import expect_dict, expect_list
from splitg2.my_types import Utils, ZornMatrixDict

BASIS_NAMES: Tuple[str, ...] = ("A", "B", "C1", "C2", "C3", "D1", "D2", "D3")

# Names accepted wherever an octonion literal is expected (case-sensitive).
ZERO_NAME = "ZERO"
UNIT_NAME = "Y"


def _common_field(*scalars: Scalar) -> FieldSpec:
    field = scalars[0].field
    for s in scalars[1:]:
        if s.field is not field and s.field != field:
            raise FieldMismatch(field.label, s.field.label)
    return field


@dataclass(frozen=True, repr=False)
class Vec3(Utils):
    e1: Scalar
    e2: Scalar
    e3: Scalar

    def __post_init__(self):
        _common_field(self.e1, self.e2, self.e3)

    @property
    def field(self) -> FieldSpec:
        return self.e1.field

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.e1, self.e2, self.e3))

    def to_dict(self):
        return [str(self.e1), str(self.e2), str(self.e3)]

    @classmethod
    def of(cls, field: FieldSpec, values: Sequence) -> "Vec3":
        e1, e2, e3 = (field.element(v) for v in values)
        return cls(e1, e2, e3)

    def scale(self, c: Scalar) -> "Vec3":
        return Vec3(c * self.e1, c * self.e2, c * self.e3)

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.e1 + other.e1, self.e2 + other.e2, self.e3 + other.e3)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.e1 - other.e1, self.e2 - other.e2, self.e3 - other.e3)


def cross(u: Vec3, v: Vec3) -> Vec3:
    """vec[{x, y, z}, {u, v, w}] = {y w - z v, z u - x w, x v - y u}"""
    _common_field(u.e1, v.e1)
    x, y, z = u
    a, b, c = v
    return Vec3(y * c - z * b, z * a - x * c, x * b - y * a)


def dot(u: Vec3, v: Vec3) -> Scalar:
    _common_field(u.e1, v.e1)
    return u.e1 * v.e1 + u.e2 * v.e2 + u.e3 * v.e3


@dataclass(frozen=True, repr=False)
class ZornMatrix(Utils):
    a: Scalar
    x: Vec3
    y: Vec3
    b: Scalar

    def __post_init__(self):
        _common_field(self.a, self.x.e1, self.y.e1, self.b)

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in coords_of(self))

    def to_dict(self) -> ZornMatrixDict:
        return {
            "a": str(self.a),
            "x": self.x.to_dict(),
            "y": self.y.to_dict(),
            "b": str(self.b),
        }

    @classmethod
    def from_dict(cls, data: Dict, field: FieldSpec) -> "ZornMatrix":
        data = expect_dict(data, position="$")
        for key in ("a", "x", "y", "b"):
            if key not in data:
                raise ParseError(f"Missing key {key!r}", position="$")
        x = expect_list(data["x"], 3, position="$.x")
        y = expect_list(data["y"], 3, position="$.y")
        return cls(
            a=parse_scalar(data["a"], field, position="$.a"),
            x=Vec3(*(parse_scalar(v, field, f"$.x[{i}]") for i, v in enumerate(x))),
            y=Vec3(*(parse_scalar(v, field, f"$.y[{i}]") for i, v in enumerate(y))),
            b=parse_scalar(data["b"], field, position="$.b"),
        )

    def __add__(self, other: "ZornMatrix") -> "ZornMatrix":
        one = self.field.element(1)
        return zlin(one, self, one, other)

    def __sub__(self, other: "ZornMatrix") -> "ZornMatrix":
        one = self.field.element(1)
        return zlin(one, self, -one, other)

    def __neg__(self) -> "ZornMatrix":
        zero = self.field.element(0)
        return zlin(-self.field.element(1), self, zero, self)

    def __mul__(self, other: "ZornMatrix") -> "ZornMatrix":
        return zmul(self, other)


def zmul(p: ZornMatrix, q: ZornMatrix) -> ZornMatrix:
    """
    (a, x; y, b)(c, z; t, d) =
        (a c + x.t,  a z + d x - y^t;  c y + b t + x^z,  b d + y.z)
    """
    _common_field(p.a, q.a)
    a, x, y, b = p.a, p.x, p.y, p.b
    c, z, t, d = q.a, q.x, q.y, q.b
    return ZornMatrix(
        a=a * c + dot(x, t),
        x=z.scale(a) + x.scale(d) - cross(y, t),
        y=y.scale(c) + t.scale(b) + cross(x, z),
        b=b * d + dot(y, z),
    )


def zlin(a: Scalar, p: ZornMatrix, b: Scalar, q: ZornMatrix) -> ZornMatrix:
    _common_field(a, p.a, b, q.a)
    return ZornMatrix(
        a=a * p.a + b * q.a,
        x=p.x.scale(a) + q.x.scale(b),
        y=p.y.scale(a) + q.y.scale(b),
        b=a * p.b + b * q.b,
    )


@dataclass(frozen=True)
class Coord8:
    """Coefficients of (A, B, C1, C2, C3, D1, D2, D3)."""

    c: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.c) != 8:
            raise ValueError(f"Coord8 needs 8 coordinates, got {len(self.c)}")
        _common_field(*self.c)

    @property
    def field(self) -> FieldSpec:
        return self.c[0].field

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.c)

    def __getitem__(self, index: int) -> Scalar:
        return self.c[index]

    def raw(self) -> List:
        return [s.value for s in self.c]


def coords_of(z: ZornMatrix) -> Coord8:
    """Coor[(a, x; y, b)] = {a, b, x1, x2, x3, y1, y2, y3}"""
    return Coord8((z.a, z.b, z.x.e1, z.x.e2, z.x.e3, z.y.e1, z.y.e2, z.y.e3))


def zorn_of_coords(c: Coord8) -> ZornMatrix:
    return ZornMatrix(a=c[0], x=Vec3(c[2], c[3], c[4]), y=Vec3(c[5], c[6], c[7]), b=c[1])


def zorn_from_values(field: FieldSpec, values: Sequence) -> ZornMatrix:
    return zorn_of_coords(Coord8(tuple(field.element(v) for v in values)))


def zero_zorn(field: FieldSpec) -> ZornMatrix:
    """theta"""
    return zorn_from_values(field, [0] * 8)


def unit_zorn(field: FieldSpec) -> ZornMatrix:
    """Upsilon = A + B"""
    return zorn_from_values(field, [1, 1, 0, 0, 0, 0, 0, 0])


def octonion_basis(field: FieldSpec) -> List[ZornMatrix]:
    basis = []
    for i in range(8):
        values = [0] * 8
        values[i] = 1
        basis.append(zorn_from_values(field, values))
    return basis


def basis_by_name(name: str, field: FieldSpec) -> ZornMatrix:
    if name == ZERO_NAME:
        return zero_zorn(field)
    if name == UNIT_NAME:
        return unit_zorn(field)
    if name not in BASIS_NAMES:
        raise ParseError(
            f"Unknown basis name {name!r}; expected one of "
            f"{', '.join(BASIS_NAMES + (UNIT_NAME, ZERO_NAME))}"
        )
    return octonion_basis(field)[BASIS_NAMES.index(name)]


def basis_product_table(field: FieldSpec) -> List[List[List]]:
    """
    Structure constants of the octonions: table[i][j] is the raw coordinate
    list of e_i e_j.
    """
    basis = octonion_basis(field)
    return [[coords_of(zmul(ei, ej)).raw() for ej in basis] for ei in basis]


def describe(z: ZornMatrix) -> str:
    """
    Basis expansion in the names A, B, C1..C3, D1..D3, e.g. `D3`, `-D2`, `A - 2C1`;
    the zero matrix is `0` and the unit is `Y`.
    """
    if z.is_zero():
        return "0"
    if z == unit_zorn(z.field):
        return UNIT_NAME
    terms = []
    for name, c in zip(BASIS_NAMES, coords_of(z)):
        if c.is_zero():
            continue
        terms.append((str(c), name))
    return join_terms(terms)


def join_terms(terms: List[Tuple[str, str]], spaced: bool = True) -> str:
    """
    Joins (coefficient text, symbol) pairs into a signed sum. Coefficients
    equal to 1 or -1 are elided.
    """
    out = ""
    for n, (coef, symbol) in enumerate(terms):
        negative = coef.startswith("-")
        magnitude = coef[1:] if negative else coef
        body = symbol if magnitude == "1" else f"{magnitude}{symbol}"
        if n == 0:
            out = f"-{body}" if negative else body
        elif spaced:
            out += f" - {body}" if negative else f" + {body}"
        else:
            out += f"-{body}" if negative else f"+{body}"
    return out


def random_zorn(rng: random.Random, field: FieldSpec, bound: int = 9) -> ZornMatrix:
    """
    A pseudo-random octonion; over Q the coordinates are small fractions.
    """
    values = []
    for _ in range(8):
        num = rng.randint(-bound, bound)
        if field.modulus is None:
            values.append(Fraction(num, rng.randint(1, bound)))
        else:
            values.append(num)
    return zorn_from_values(field, values)
