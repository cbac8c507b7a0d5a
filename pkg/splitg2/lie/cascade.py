"""
The derivation cascade: a second route to Der(O_s) that applies the Leibniz
rule only to a short list of octonion identities instead of all 64 basis
pairs.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from splitg2.algebra.exactlin import Matrix, NullspaceBasis, nullspace
from splitg2.algebra.fields import FieldSpec
from splitg2.algebra.zorn import (
    BASIS_NAMES,
    ZornMatrix,
    coords_of,
    octonion_basis,
    unit_zorn,
    zero_zorn,
    zmul,
)
from splitg2.lie.dergen import DIM, Map8, apply_map, unit_map

logger = logging.getLogger(__name__)

Basis = Dict[str, ZornMatrix]
Apply = Callable[[ZornMatrix], ZornMatrix]


@dataclass(frozen=True)
class OctonionIdentity:
    """
    An identity lhs == rhs among basis elements, and the residual a
    derivation d must annihilate because of it.
    """

    name: str
    statement: Callable[[Basis], Tuple[ZornMatrix, ZornMatrix]]
    residual: Callable[[Basis, Apply], ZornMatrix]

    def holds(self, field: FieldSpec) -> bool:
        lhs, rhs = self.statement(_basis(field))
        return lhs == rhs

    def constraint(self, d: Map8) -> ZornMatrix:
        return self.residual(_basis(d.field), lambda z: apply_map(d, z))


def _basis(field: FieldSpec) -> Basis:
    return dict(zip(BASIS_NAMES, octonion_basis(field)))


def _square(i: str) -> OctonionIdentity:
    return OctonionIdentity(
        name=f"{i}{i}=0",
        statement=lambda e: (zmul(e[i], e[i]), zero_zorn(e[i].field)),
        residual=lambda e, D: zmul(D(e[i]), e[i]) + zmul(e[i], D(e[i])),
    )


def _anticommute(i: str, j: str) -> OctonionIdentity:
    return OctonionIdentity(
        name=f"{i}{j}+{j}{i}=0",
        statement=lambda e: (zmul(e[i], e[j]) + zmul(e[j], e[i]), zero_zorn(e[i].field)),
        residual=lambda e, D: (
            zmul(D(e[i]), e[j])
            + zmul(e[i], D(e[j]))
            + zmul(D(e[j]), e[i])
            + zmul(e[j], D(e[i]))
        ),
    )


def octonion_identities() -> List[OctonionIdentity]:
    """The identities in the order the cascade consumes them."""
    return [
        OctonionIdentity(
            name="A+B=Y",
            statement=lambda e: (e["A"] + e["B"], unit_zorn(e["A"].field)),
            # d kills the unit, so d(A) + d(B) = d(Y) = 0
            residual=lambda e, D: D(e["A"]) + D(e["B"]),
        ),
        OctonionIdentity(
            name="A=AA",
            statement=lambda e: (e["A"], zmul(e["A"], e["A"])),
            residual=lambda e, D: zmul(D(e["A"]), e["A"]) + zmul(e["A"], D(e["A"])) - D(e["A"]),
        ),
        _square("C1"),
        _square("C2"),
        _square("C3"),
        _anticommute("C1", "C2"),
        _anticommute("C1", "C3"),
        _anticommute("C2", "C3"),
        OctonionIdentity(
            name="C1(C2C3)=A",
            statement=lambda e: (zmul(e["C1"], zmul(e["C2"], e["C3"])), e["A"]),
            residual=lambda e, D: (
                zmul(D(e["C1"]), zmul(e["C2"], e["C3"]))
                + zmul(e["C1"], zmul(D(e["C2"]), e["C3"]))
                + zmul(e["C1"], zmul(e["C2"], D(e["C3"])))
                - D(e["A"])
            ),
        ),
        OctonionIdentity(
            name="(C1C2)C3=B",
            statement=lambda e: (zmul(zmul(e["C1"], e["C2"]), e["C3"]), e["B"]),
            residual=lambda e, D: (
                zmul(zmul(D(e["C1"]), e["C2"]), e["C3"])
                + zmul(zmul(e["C1"], D(e["C2"])), e["C3"])
                + zmul(zmul(e["C1"], e["C2"]), D(e["C3"]))
                - D(e["B"])
            ),
        ),
        OctonionIdentity(
            name="C2C3=D1",
            statement=lambda e: (zmul(e["C2"], e["C3"]), e["D1"]),
            residual=lambda e, D: zmul(D(e["C2"]), e["C3"]) + zmul(e["C2"], D(e["C3"])) - D(e["D1"]),
        ),
        OctonionIdentity(
            name="D2=-C1C3",
            statement=lambda e: (e["D2"], -zmul(e["C1"], e["C3"])),
            residual=lambda e, D: D(e["D2"]) + zmul(D(e["C1"]), e["C3"]) + zmul(e["C1"], D(e["C3"])),
        ),
        OctonionIdentity(
            name="C1C2=D3",
            statement=lambda e: (zmul(e["C1"], e["C2"]), e["D3"]),
            residual=lambda e, D: zmul(D(e["C1"]), e["C2"]) + zmul(e["C1"], D(e["C2"])) - D(e["D3"]),
        ),
    ]


def identity_constraint_rows(identity: OctonionIdentity, field: FieldSpec) -> Matrix:
    """
    8x64 block: column r*8 + c holds the residual coordinates for the map
    with the single entry m[r][c] = 1. The residual is linear in the map,
    so these columns determine it.
    """
    columns = [
        coords_of(identity.constraint(unit_map(field, r, c))).raw()
        for r in range(DIM)
        for c in range(DIM)
    ]
    return Matrix.from_raw(field, [list(row) for row in zip(*columns)])


def cascade_system(field: FieldSpec) -> Matrix:
    rows = []
    for identity in octonion_identities():
        rows.extend(identity_constraint_rows(identity, field).data)
    return Matrix.from_raw(field, rows)


def solve_cascade(field: FieldSpec) -> NullspaceBasis:
    kernel = nullspace(cascade_system(field))
    logger.info(f"Cascade over {field.label}: {kernel.dim} free parameters")
    return kernel
