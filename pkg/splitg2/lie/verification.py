"""
The verification suite run by `splitg2 verify`: the Leibniz rule on the
basis derivations, the Lie axioms on the computed table, closure of the
bracket, and agreement with the published table.
"""

import logging
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import List, Optional, Union

from splitg2.algebra.fields import RATIONALS, FieldSpec
from splitg2.cache.shared_cache import SharedCache
from splitg2.cache.space_helpers import cached_derivations
from splitg2.errors import NotClosed
from splitg2.lie.dergen import DerivationSpace, is_derivation
from splitg2.lie.golden import compare_tables, load_golden
from splitg2.lie.liestruct import (
    AxiomReport,
    BracketTable,
    reduce_table,
    structure_table,
    verify_antisymmetry,
    verify_jacobi,
)
from splitg2.my_types import CheckResultDict, VerificationReportDict, Utils

logger = logging.getLogger(__name__)

CHECK_NAMES = ("leibniz", "antisymmetry", "jacobi", "closure", "golden")


@dataclass(frozen=True, repr=False)
class CheckResult(Utils):
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> CheckResultDict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True, repr=False)
class VerificationReport(Utils):
    field: FieldSpec
    checks: List[CheckResult] = dc_field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def to_dict(self) -> VerificationReportDict:
        return {
            "field": self.field.label,
            "passed": self.passed,
            "total": self.total,
            "checks": [c.to_dict() for c in self.checks],
        }


def _axiom_result(report: AxiomReport) -> CheckResult:
    if report.ok:
        return CheckResult(report.check, True, "holds")
    v = report.violations[0]
    where = ", ".join(f"{key}={v[key]}" for key in ("i", "j", "k", "l") if key in v)  # type: ignore[literal-required]
    return CheckResult(
        report.check,
        False,
        f"{len(report.violations)} violations, first at {where} (value {v.get('value')})",
    )


def check_leibniz(space: DerivationSpace) -> CheckResult:
    failing = [k + 1 for k, d in enumerate(space.basis) if not is_derivation(d)]
    if failing:
        return CheckResult("leibniz", False, f"basis maps {failing} violate the Leibniz rule")
    return CheckResult("leibniz", True, f"all {len(space.basis)} basis maps on 64 basis pairs")


def check_golden(table: BracketTable, golden_path: Optional[Union[str, Path]] = None) -> CheckResult:
    golden = load_golden(RATIONALS, golden_path)
    if table.field != RATIONALS:
        golden = reduce_table(golden, table.field)
    comparison = compare_tables(table, golden)
    if comparison.equal:
        return CheckResult("golden", True, "all 196 cells match")
    i, j = comparison.first  # type: ignore[misc]
    return CheckResult(
        "golden",
        False,
        f"{len(comparison.mismatches)} cells differ, first at ({i}, {j}): "
        f"computed {table.cell(i, j)}, expected {golden.cell(i, j)}",
    )


def _skipped(name: str, reason: str) -> CheckResult:
    return CheckResult(name, False, f"not run: {reason}")


def run_verification(
    field: FieldSpec = RATIONALS,
    golden_path: Optional[Union[str, Path]] = None,
    cache: Optional[SharedCache] = None,
    max_workers: Optional[int] = None,
) -> VerificationReport:
    if cache is None:
        cache = SharedCache()
    space = cached_derivations(field, cache=cache, max_workers=max_workers)
    checks = [check_leibniz(space)]

    table: Optional[BracketTable] = cache.get("table", field)
    closure: CheckResult
    if table is not None:
        closure = CheckResult("closure", True, "all 196 brackets lie in the span")
    else:
        try:
            table = structure_table(space, max_workers=max_workers)
            cache.put("table", field, table)
            closure = CheckResult("closure", True, "all 196 brackets lie in the span")
        except NotClosed as e:
            closure = CheckResult("closure", False, str(e))

    if table is None:
        checks += [
            _skipped("antisymmetry", "no table"),
            _skipped("jacobi", "no table"),
            closure,
            _skipped("golden", "no table"),
        ]
    else:
        checks += [
            _axiom_result(verify_antisymmetry(table)),
            _axiom_result(verify_jacobi(table)),
            closure,
            check_golden(table, golden_path),
        ]

    report = VerificationReport(field=field, checks=checks)
    for c in report.checks:
        log = logger.info if c.passed else logger.warning
        log(f"{c.name}: {'passed' if c.passed else 'FAILED'} ({c.detail})")
    return report
