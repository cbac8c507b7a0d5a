import json
from abc import abstractmethod
from typing import Dict, List, Literal, Union

from typing_extensions import TypedDict

OutputFormat = Literal["text", "json", "latex"]

FieldKind = Literal["rationals", "prime"]

# Text encoding of a scalar: "n" or "n/d" over Q, a residue in [0, p) over GF(p).
ScalarText = str


class Utils:
    def __str__(self):
        return json.dumps(self.to_dict(), indent=2)

    def __repr__(self):
        return json.dumps(self.to_dict(), indent=2)

    @abstractmethod
    def to_dict(self):
        pass


class ZornMatrixDict(TypedDict):
    a: ScalarText
    x: List[ScalarText]
    y: List[ScalarText]
    b: ScalarText


class MatrixDict(TypedDict):
    rows: int
    cols: int
    entries: List[List[ScalarText]]


class DerivationSpaceDict(TypedDict, total=False):
    field: str
    dim: int
    pinned: bool
    basis: List[MatrixDict]


class BracketTermDict(TypedDict):
    k: int
    c: ScalarText


class BracketDict(TypedDict):
    i: int
    j: int
    terms: List[BracketTermDict]


class BracketTableDict(TypedDict):
    n: int
    brackets: List[BracketDict]


class ViolationDict(TypedDict, total=False):
    i: int
    j: int
    k: int
    l: int
    value: ScalarText


class AxiomReportDict(TypedDict):
    check: str
    ok: bool
    violations: List[ViolationDict]


class CheckResultDict(TypedDict):
    name: str
    passed: bool
    detail: str


class VerificationReportDict(TypedDict):
    field: str
    passed: int
    total: int
    checks: List[CheckResultDict]


class CharacteristicReportDict(TypedDict):
    prime: int
    smith_rank: int
    dim_from_smith: int
    nullspace_dim: int
    agree: bool


# Golden table entry [i, j, k, c], 1-based: c is the coefficient of x_k in [x_i, x_j].
GoldenTriple = List[int]

JsonValue = Union[Dict, List, str, int, bool, None]

