import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, model_validator

from splitg2.errors import DivisionByZero, FieldMismatch, InvalidModulus, ParseError
from splitg2.my_types import FieldKind

# Canonical representation of an element: a reduced Fraction over Q,
# an int in [0, p) over GF(p).
Raw = Union[Fraction, int]

_SCALAR_RE = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")
_FIELD_RE = re.compile(r"^fp:(\d+)$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec(BaseModel):
    """
    The base field: the rationals, or GF(p) for a prime p.

    Arithmetic helpers (`add`, `mul`, ...) work on canonical raw values so the
    elimination kernels can run without wrapping every entry in a `Scalar`.
    """

    model_config = ConfigDict(frozen=True)

    kind: FieldKind = "rationals"
    modulus: Optional[int] = None

    @model_validator(mode="after")
    def check_modulus(self) -> "FieldSpec":
        if self.kind == "prime":
            if self.modulus is None or not is_prime(self.modulus):
                raise InvalidModulus(f"Modulus {self.modulus} is not prime")
        elif self.modulus is not None:
            raise InvalidModulus("The rationals take no modulus")
        return self

    @property
    def characteristic(self) -> int:
        return self.modulus or 0

    @property
    def label(self) -> str:
        """Flag syntax: `q` or `fp:<p>`."""
        if self.modulus is None:
            return "q"
        return f"fp:{self.modulus}"

    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.modulus is None else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.modulus is None else 1

    def canon(self, value: Union[Raw, "Scalar"]) -> Raw:
        if isinstance(value, float):
            raise TypeError(f"Floating point value {value!r} is not an exact element of {self.label}")
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(value.field.label, self.label)
            return value.value
        if self.modulus is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise DivisionByZero(
                    f"{value} has no image in GF({self.modulus}): denominator vanishes"
                )
            return value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
        return int(value) % self.modulus

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.modulus is None:
            return a + b
        return (a + b) % self.modulus

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.modulus is None:
            return a - b
        return (a - b) % self.modulus

    def neg(self, a: Raw) -> Raw:
        if self.modulus is None:
            return -a
        return -a % self.modulus

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.modulus is None:
            return a * b
        return a * b % self.modulus

    def inv(self, a: Raw) -> Raw:
        a = self.canon(a)
        if not a:
            raise DivisionByZero(f"0 has no inverse in {self.label}")
        if self.modulus is None:
            return Fraction(1) / a
        return pow(a, -1, self.modulus)

    def element(self, value: Union[Raw, "Scalar"]) -> "Scalar":
        return Scalar(self, value)

    def format(self, a: Raw) -> str:
        return str(a)


RATIONALS = FieldSpec()


def prime_field(p: int) -> FieldSpec:
    if not is_prime(p):
        raise InvalidModulus(f"Modulus {p} is not prime")
    return FieldSpec(kind="prime", modulus=p)


def field_from_label(label: str) -> FieldSpec:
    """
    Parses the `--field` flag syntax: `q` or `fp:<p>`.
    """
    text = label.strip()
    if text.lower() == "q":
        return RATIONALS
    match = _FIELD_RE.match(text)
    if not match:
        raise ParseError(f"Unknown field {label!r}, expected 'q' or 'fp:<p>'")
    return prime_field(int(match.group(1)))


@dataclass(frozen=True)
class Scalar:
    field: FieldSpec
    value: Raw

    def __post_init__(self):
        # stored canonical whatever the caller passed
        object.__setattr__(self, "value", self.field.canon(self.value))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field.label})"

    def is_zero(self) -> bool:
        return not self.value

    def _coerce(self, other: Union["Scalar", Raw]) -> "Scalar":
        if isinstance(other, Scalar):
            return other
        return self.field.element(other)

    def __add__(self, other):
        return scalar_add(self, self._coerce(other))

    def __radd__(self, other):
        return scalar_add(self._coerce(other), self)

    def __sub__(self, other):
        return scalar_sub(self, self._coerce(other))

    def __rsub__(self, other):
        return scalar_sub(self._coerce(other), self)

    def __mul__(self, other):
        return scalar_mul(self, self._coerce(other))

    def __rmul__(self, other):
        return scalar_mul(self._coerce(other), self)

    def __neg__(self):
        return scalar_neg(self)

    def __truediv__(self, other):
        return scalar_mul(self, scalar_inv(self._coerce(other)))


def _check_same_field(a: Scalar, b: Scalar) -> FieldSpec:
    if a.field is not b.field and a.field != b.field:
        raise FieldMismatch(a.field.label, b.field.label)
    return a.field


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    field = _check_same_field(a, b)
    return Scalar(field, field.add(a.value, b.value))


def scalar_sub(a: Scalar, b: Scalar) -> Scalar:
    field = _check_same_field(a, b)
    return Scalar(field, field.sub(a.value, b.value))


def scalar_neg(a: Scalar) -> Scalar:
    return Scalar(a.field, a.field.neg(a.value))


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    field = _check_same_field(a, b)
    return Scalar(field, field.mul(a.value, b.value))


def scalar_inv(a: Scalar) -> Scalar:
    return Scalar(a.field, a.field.inv(a.value))


def format_scalar(a: Scalar) -> str:
    return str(a)


def parse_scalar(
    text: Union[str, int], field: FieldSpec, position: Optional[str] = None
) -> Scalar:
    """
    Decodes the scalar text encoding. JSON integers are accepted as a
    convenience and reduced into the field.
    """
    if isinstance(text, bool):
        raise ParseError(f"Expected a scalar, got {text!r}", position=position)
    if isinstance(text, int):
        return field.element(text)
    if not isinstance(text, str):
        raise ParseError(f"Expected a scalar, got {text!r}", position=position)

    match = _SCALAR_RE.match(text.strip())
    if not match:
        raise ParseError(f"Malformed scalar {text!r}", position=position)
    sign, num, den = match.groups()

    if field.modulus is not None:
        if den is not None or sign:
            raise ParseError(
                f"GF({field.modulus}) residues are written as integers in [0, {field.modulus})",
                position=position,
            )
        residue = int(num)
        if residue >= field.modulus:
            raise ParseError(
                f"Residue {residue} out of range for GF({field.modulus})",
                position=position,
            )
        return Scalar(field, residue)

    if den is not None and int(den) == 0:
        raise ParseError(f"Zero denominator in {text!r}", position=position)
    value = Fraction(int(num), int(den) if den is not None else 1)
    return Scalar(field, -value if sign else value)
