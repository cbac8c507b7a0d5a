"""
Derivations of the split octonions.

A derivation is stored as an 8x8 `Matrix` whose row i holds the coordinates
of the image of basis element i, so applying it to an octonion is the row
vector `coords_of(z)` times the matrix.
"""

import logging
import random
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from splitg2.algebra.exactlin import (
    Matrix,
    from_flat,
    nullspace,
    rref,
)
from splitg2.algebra.fields import FieldSpec, Raw, Scalar, field_from_label, parse_scalar
from splitg2.algebra.zorn import (
    Coord8,
    ZornMatrix,
    basis_product_table,
    coords_of,
    octonion_basis,
    zmul,
    zorn_of_coords,
)
from splitg2.errors import (
    FieldMismatch,
    NotInSpan,
    ParameterizationMismatch,
    ParseError,
    ShapeMismatch,
)
from splitg2.helper import expect_dict
from splitg2.my_types import DerivationSpaceDict, Utils

logger = logging.getLogger(__name__)

# Parameter k (0-based) labels basis element x_{k+1}.
PARAM_NAMES: Tuple[str, ...] = (
    "u11", "u12", "u13",
    "u31", "u32", "u33",
    "u41", "u42", "u43",
    "u51", "u52",
    "v11", "v12", "v13",
)  # fmt: skip

# 0-based (row, column) each parameter is read from by `recon`.
RECON_POSITIONS: Tuple[Tuple[int, int], ...] = (
    (0, 2), (0, 3), (0, 4),
    (2, 2), (2, 3), (2, 4),
    (3, 2), (3, 3), (3, 4),
    (4, 2), (4, 3),
    (0, 5), (0, 6), (0, 7),
)  # fmt: skip

# The generic derivation, row i = image of (A, B, C1, C2, C3, D1, D2, D3)[i].
DERIVATION_PATTERN: Tuple[Tuple[str, ...], ...] = (
    ("0", "0", "u11", "u12", "u13", "v11", "v12", "v13"),
    ("0", "0", "-u11", "-u12", "-u13", "-v11", "-v12", "-v13"),
    ("-v11", "v11", "u31", "u32", "u33", "0", "u13", "-u12"),
    ("-v12", "v12", "u41", "u42", "u43", "-u13", "0", "u11"),
    ("-v13", "v13", "u51", "u52", "-u31-u42", "u12", "-u11", "0"),
    ("-u11", "u11", "0", "v13", "-v12", "-u31", "-u41", "-u51"),
    ("-u12", "u12", "-v13", "0", "v11", "-u32", "-u42", "-u52"),
    ("-u13", "u13", "v12", "-v11", "0", "-u33", "-u43", "u31+u42"),
)

_TERM_RE = re.compile(r"([+-]?)([uv]\d\d)")

DIM = 8


def _parse_linear_form(text: str) -> Dict[int, int]:
    if text == "0":
        return {}
    form: Dict[int, int] = {}
    for sign, name in _TERM_RE.findall(text):
        k = PARAM_NAMES.index(name)
        form[k] = form.get(k, 0) + (-1 if sign == "-" else 1)
    return form


LINEAR_FORMS: Tuple[Tuple[Dict[int, int], ...], ...] = tuple(
    tuple(_parse_linear_form(cell) for cell in row) for row in DERIVATION_PATTERN
)


# Map8 is an 8x8 Matrix under the rows-are-images convention.
Map8 = Matrix


def _check_map(d: Map8):
    if (d.rows, d.cols) != (DIM, DIM):
        raise ShapeMismatch(f"Expected an 8x8 map, got {d.rows}x{d.cols}")


@dataclass(frozen=True, repr=False)
class DerivationParams(Utils):
    """
    The 14 coordinates (u11, ..., v13) of a derivation in the basis x1..x14.
    """

    field: FieldSpec
    values: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.values) != len(PARAM_NAMES):
            raise ValueError(f"Expected {len(PARAM_NAMES)} parameters, got {len(self.values)}")
        for v in self.values:
            if v.field != self.field:
                raise FieldMismatch(v.field.label, self.field.label)

    @classmethod
    def of(cls, field: FieldSpec, values: Sequence) -> "DerivationParams":
        return cls(field, tuple(field.element(v) for v in values))

    @classmethod
    def unit(cls, field: FieldSpec, k: int) -> "DerivationParams":
        """Parameter k (0-based) set to 1, the rest 0: basis element x_{k+1}."""
        return cls.of(field, [1 if i == k else 0 for i in range(len(PARAM_NAMES))])

    def __getitem__(self, name: str) -> Scalar:
        return self.values[PARAM_NAMES.index(name)]

    def raw(self) -> List[Raw]:
        return [v.value for v in self.values]

    def to_dict(self) -> Dict[str, str]:
        return {name: str(v) for name, v in zip(PARAM_NAMES, self.values)}

    @classmethod
    def from_dict(cls, data: Dict, field: FieldSpec) -> "DerivationParams":
        data = expect_dict(data, position="$")
        if set(data) != set(PARAM_NAMES):
            raise ParseError(f"Expected exactly the keys {', '.join(PARAM_NAMES)}", position="$")
        return cls(
            field, tuple(parse_scalar(data[n], field, position=f"$.{n}") for n in PARAM_NAMES)
        )


@dataclass(frozen=True, repr=False)
class DerivationSpace(Utils):
    """
    A basis of Der(O_s) over `field`. When `pinned` is true the basis is
    x1..x14 in the (u11, ..., v13) labeling; otherwise it is the raw
    free-column nullspace basis and the labeling does not apply.
    """

    field: FieldSpec
    dim: int
    basis: List[Map8] = dc_field(default_factory=list)
    pinned: bool = False

    def to_dict(self) -> DerivationSpaceDict:
        return {
            "field": self.field.label,
            "dim": self.dim,
            "pinned": self.pinned,
            "basis": [m.to_dict() for m in self.basis],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "DerivationSpace":
        data = expect_dict(data, position="$")
        field = field_from_label(str(data.get("field", "q")))
        basis = [Matrix.from_dict(m, field) for m in data.get("basis", [])]
        return cls(
            field=field,
            dim=int(data.get("dim", len(basis))),
            basis=basis,
            pinned=bool(data.get("pinned", False)),
        )


def apply_map(d: Map8, z: ZornMatrix) -> ZornMatrix:
    """Coor[z].d, read back as a Zorn matrix."""
    _check_map(d)
    field = d.field
    if z.field != field:
        raise FieldMismatch(z.field.label, field.label)
    row = coords_of(z).raw()
    out = [field.zero] * DIM
    for i, v in enumerate(row):
        if not v:
            continue
        for j, w in enumerate(d.data[i]):
            if w:
                out[j] = field.add(out[j], field.mul(v, w))
    return zorn_of_coords(Coord8(tuple(Scalar(field, v) for v in out)))


def leibniz_residual(d: Map8, x: ZornMatrix, y: ZornMatrix) -> ZornMatrix:
    """D(xy) - D(x)y - xD(y); zero exactly where the Leibniz rule holds."""
    return apply_map(d, zmul(x, y)) - zmul(apply_map(d, x), y) - zmul(x, apply_map(d, y))


def unit_map(field: FieldSpec, r: int, c: int) -> Map8:
    """The map sending basis element r to basis element c and the rest to 0."""
    return Matrix.from_raw(
        field,
        [[field.one if (i, j) == (r, c) else field.zero for j in range(DIM)] for i in range(DIM)],
    )


def _leibniz_block(field: FieldSpec, table: List[List[List[Raw]]], i: int, j: int) -> List[List[Raw]]:
    # Residual coordinate k of the map with single entry m[r][c] = 1 at (e_i, e_j):
    #   [c == k] P_ij[r] - [r == i] P_cj[k] - [r == j] P_ic[k]
    rows = []
    for k in range(DIM):
        row = []
        for r in range(DIM):
            for c in range(DIM):
                v = table[i][j][r] if c == k else field.zero
                if r == i:
                    v = field.sub(v, table[c][j][k])
                if r == j:
                    v = field.sub(v, table[i][c][k])
                row.append(v)
        rows.append(row)
    return rows


def assemble_leibniz_system(field: FieldSpec, max_workers: Optional[int] = None) -> Matrix:
    """
    The 512x64 system whose kernel is Der(O_s). Unknown r*8 + c is entry
    m[r][c] of the generic map; rows come in blocks of 8 (one per residual
    coordinate) for the ordered basis pairs (e_i, e_j), i outer.
    """
    table = basis_product_table(field)
    pairs = [(i, j) for i in range(DIM) for j in range(DIM)]

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            blocks = list(executor.map(lambda ij: _leibniz_block(field, table, *ij), pairs))
    else:
        blocks = [_leibniz_block(field, table, i, j) for i, j in pairs]

    return Matrix.from_raw(field, [row for block in blocks for row in block])


def generic_derivation(params: DerivationParams) -> Map8:
    field = params.field
    raw = params.raw()
    rows = []
    for forms in LINEAR_FORMS:
        row = []
        for form in forms:
            acc = field.zero
            for k, coef in form.items():
                acc = field.add(acc, field.mul(field.canon(coef), raw[k]))
            row.append(acc)
        rows.append(row)
    return Matrix.from_raw(field, rows)


def is_derivation(d: Map8) -> bool:
    basis = octonion_basis(d.field)
    for x in basis:
        for y in basis:
            if not leibniz_residual(d, x, y).is_zero():
                return False
    return True


def recon(d: Map8) -> DerivationParams:
    """
    Reads the 14 coordinates off their positions and checks that the
    generic derivation they define is `d` itself.
    """
    _check_map(d)
    params = DerivationParams(
        d.field, tuple(Scalar(d.field, d.data[r][c]) for r, c in RECON_POSITIONS)
    )
    rebuilt = generic_derivation(params)
    if rebuilt != d:
        bad = next(
            (i, j)
            for i in range(DIM)
            for j in range(DIM)
            if rebuilt.data[i][j] != d.data[i][j]
        )
        raise NotInSpan(
            f"Matrix is not in the span of x1..x14: entry ({bad[0] + 1}, {bad[1] + 1}) is "
            f"{d.field.format(d.data[bad[0]][bad[1]])}, the generic derivation with the "
            f"read-off coordinates has {d.field.format(rebuilt.data[bad[0]][bad[1]])}"
        )
    return params


def _pinned_basis(kernel_rows: Sequence[Sequence[Raw]], field: FieldSpec) -> Optional[List[List[Raw]]]:
    # Rows [P | N] with P the kernel restricted to the pinned positions; row
    # reduction turns them into [I | P^-1 N] exactly when P is invertible.
    pinned = [DIM * r + c for r, c in RECON_POSITIONS]
    n = len(pinned)
    augmented = [[v[c] for c in pinned] + list(v) for v in kernel_rows]
    reduced, pivots = rref(Matrix.from_raw(field, augmented))
    if pivots[:n] != list(range(n)):
        return None
    return [list(reduced.data[k][n:]) for k in range(n)]


def solve_derivations(field: FieldSpec, max_workers: Optional[int] = None) -> DerivationSpace:
    system = assemble_leibniz_system(field, max_workers=max_workers)
    kernel = nullspace(system)
    logger.info(f"Leibniz system over {field.label}: derivation space has dimension {kernel.dim}")

    raw_basis = [from_flat(field, v, DIM, DIM) for v in kernel.vectors.data]
    if kernel.dim != len(PARAM_NAMES):
        logger.warning(
            f"Derivation space over {field.label} has dimension {kernel.dim}; "
            "the x1..x14 labeling does not apply"
        )
        return DerivationSpace(field=field, dim=kernel.dim, basis=raw_basis, pinned=False)

    pinned = _pinned_basis(kernel.vectors.data, field)
    if pinned is None:
        message = (
            f"The recon positions are not free coordinates of the derivation space over {field.label}"
        )
        if field.modulus is None:
            raise ParameterizationMismatch(message)
        logger.warning(message)
        return DerivationSpace(field=field, dim=kernel.dim, basis=raw_basis, pinned=False)

    basis = [from_flat(field, v, DIM, DIM) for v in pinned]
    return DerivationSpace(field=field, dim=kernel.dim, basis=basis, pinned=True)


def random_params(rng: random.Random, field: FieldSpec, bound: int = 9) -> DerivationParams:
    values = []
    for _ in PARAM_NAMES:
        num = rng.randint(-bound, bound)
        values.append(Fraction(num, rng.randint(1, bound)) if field.modulus is None else num)
    return DerivationParams.of(field, values)

