from splitg2.algebra.exactlin import Matrix
from splitg2.algebra.fields import RATIONALS, FieldSpec, Scalar, field_from_label, prime_field
from splitg2.algebra.zorn import ZornMatrix, octonion_basis, zmul
from splitg2.errors import Splitg2Error
from splitg2.lie.dergen import DerivationParams, DerivationSpace, recon, solve_derivations
from splitg2.lie.liestruct import BracketTable, structure_table
from splitg2.lie.verification import run_verification
from splitg2.my_types import *  # noqa
from splitg2.version import __version__

__all__ = [
    "Matrix",
    "RATIONALS",
    "FieldSpec",
    "Scalar",
    "field_from_label",
    "prime_field",
    "ZornMatrix",
    "octonion_basis",
    "zmul",
    "Splitg2Error",
    "DerivationParams",
    "DerivationSpace",
    "recon",
    "solve_derivations",
    "BracketTable",
    "structure_table",
    "run_verification",
    "__version__",
]
