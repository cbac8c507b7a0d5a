from .dergen import (
    DerivationParams,
    DerivationSpace,
    generic_derivation,
    is_derivation,
    recon,
    solve_derivations,
)
from .golden import compare_tables, load_golden
from .liestruct import BracketTable, KillingMatrix, bracket, killing_form, structure_table
from .verification import VerificationReport, run_verification

__all__ = [
    "DerivationParams",
    "DerivationSpace",
    "generic_derivation",
    "is_derivation",
    "recon",
    "solve_derivations",
    "compare_tables",
    "load_golden",
    "BracketTable",
    "KillingMatrix",
    "bracket",
    "killing_form",
    "structure_table",
    "VerificationReport",
    "run_verification",
]
