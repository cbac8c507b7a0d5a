import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from splitg2.algebra.exactlin import nullspace, rank_mod_p, smith_diagonal
from splitg2.algebra.fields import RATIONALS, prime_field
from splitg2.lie.dergen import DIM, assemble_leibniz_system
from splitg2.my_types import CharacteristicReportDict, Utils

logger = logging.getLogger(__name__)

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 101)

UNKNOWNS = DIM * DIM


@dataclass(frozen=True, repr=False)
class CharacteristicReport(Utils):
    """
    The derivation dimension over GF(p) found two ways: predicted from the
    elementary divisors of the integer Leibniz system, and computed directly.
    """

    prime: int
    smith_rank: int
    nullspace_dim: int

    @property
    def dim_from_smith(self) -> int:
        return UNKNOWNS - self.smith_rank

    @property
    def agree(self) -> bool:
        return self.dim_from_smith == self.nullspace_dim

    def to_dict(self) -> CharacteristicReportDict:
        return {
            "prime": self.prime,
            "smith_rank": self.smith_rank,
            "dim_from_smith": self.dim_from_smith,
            "nullspace_dim": self.nullspace_dim,
            "agree": self.agree,
        }


def leibniz_divisors(max_workers: Optional[int] = None) -> List[int]:
    # The system over Q has integer entries: octonion structure constants are 0, 1 or -1.
    return smith_diagonal(assemble_leibniz_system(RATIONALS, max_workers=max_workers))


def characteristic_sweep(
    primes: Iterable[int] = DEFAULT_PRIMES,
    max_workers: Optional[int] = None,
    divisors: Optional[Sequence[int]] = None,
) -> List[CharacteristicReport]:
    if divisors is None:
        divisors = leibniz_divisors(max_workers=max_workers)
    logger.debug(f"Leibniz system elementary divisors: {sorted(set(divisors))}")

    reports = []
    for p in primes:
        field = prime_field(p)
        kernel = nullspace(assemble_leibniz_system(field, max_workers=max_workers))
        report = CharacteristicReport(
            prime=p, smith_rank=rank_mod_p(divisors, p), nullspace_dim=kernel.dim
        )
        if not report.agree:
            logger.warning(
                f"GF({p}): Smith form predicts dimension {report.dim_from_smith}, "
                f"elimination found {report.nullspace_dim}"
            )
        reports.append(report)
    return reports
