from .exactlin import Matrix, NullspaceBasis, commutator, mat_mul, nullspace, rref, smith_diagonal
from .fields import RATIONALS, FieldSpec, Scalar, field_from_label, prime_field
from .zorn import Coord8, Vec3, ZornMatrix, coords_of, octonion_basis, zlin, zmul, zorn_of_coords

__all__ = [
    "Matrix",
    "NullspaceBasis",
    "commutator",
    "mat_mul",
    "nullspace",
    "rref",
    "smith_diagonal",
    "RATIONALS",
    "FieldSpec",
    "Scalar",
    "field_from_label",
    "prime_field",
    "Coord8",
    "Vec3",
    "ZornMatrix",
    "coords_of",
    "octonion_basis",
    "zlin",
    "zmul",
    "zorn_of_coords",
]
