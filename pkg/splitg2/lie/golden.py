"""
The published bracket table, kept as transcribed data so comparisons against
it test the solver rather than restate it.
"""

import logging
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import List, Optional, Tuple, Union

from splitg2.algebra.fields import FieldSpec
from splitg2.errors import FieldMismatch, ParseError
from splitg2.helper import expect_dict, load_json_file
from splitg2.lie.liestruct import N, BracketTable
from splitg2.my_types import GoldenTriple, Utils

logger = logging.getLogger(__name__)

DEFAULT_GOLDEN_PATH = Path(__file__).parent / "data" / "golden_table.json"

Cell = Tuple[int, int]


def _check_triple(triple: GoldenTriple, position: str) -> GoldenTriple:
    if (
        not isinstance(triple, list)
        or len(triple) != 4
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in triple)
    ):
        raise ParseError("Expected [i, j, k, c] with integer entries", position=position)
    i, j, k, _ = triple
    if not all(1 <= v <= N for v in (i, j, k)):
        raise ParseError(f"Indices must lie in 1..{N}", position=position)
    return triple


def load_golden(field: FieldSpec, path: Optional[Union[str, Path]] = None) -> BracketTable:
    """
    Builds the golden table over `field`. Both orders (i, j) and (j, i) are
    read as listed; nothing is filled in, so a corrupted cell stays visible.
    """
    path = Path(path) if path is not None else DEFAULT_GOLDEN_PATH
    data = expect_dict(load_json_file(path), position="$")
    if data.get("n") != N:
        raise ParseError(f"Expected n = {N}", position="$.n")
    triples = data.get("triples")
    if not isinstance(triples, list):
        raise ParseError("Expected a list of triples", position="$.triples")

    c = [[[field.zero] * N for _ in range(N)] for _ in range(N)]
    seen = set()
    for t, triple in enumerate(triples):
        i, j, k, coef = _check_triple(triple, position=f"$.triples[{t}]")
        if (i, j, k) in seen:
            raise ParseError(f"Duplicate entry for x{k} in [x{i}, x{j}]", position=f"$.triples[{t}]")
        seen.add((i, j, k))
        c[i - 1][j - 1][k - 1] = field.canon(coef)

    logger.debug(f"Loaded {len(triples)} golden triples from {path} over {field.label}")
    return BracketTable(field=field, c=tuple(tuple(tuple(v) for v in row) for row in c))


@dataclass(frozen=True, repr=False)
class TableComparison(Utils):
    mismatches: List[Cell] = dc_field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.mismatches

    @property
    def first(self) -> Optional[Cell]:
        return self.mismatches[0] if self.mismatches else None

    def to_dict(self):
        return {"equal": self.equal, "mismatches": [list(cell) for cell in self.mismatches]}


def compare_tables(computed: BracketTable, expected: BracketTable) -> TableComparison:
    """Cells (i, j), 1-based and row-major, where the brackets differ."""
    if computed.field != expected.field:
        raise FieldMismatch(computed.field.label, expected.field.label)
    return TableComparison(
        mismatches=[
            (i + 1, j + 1)
            for i in range(N)
            for j in range(N)
            if computed.c[i][j] != expected.c[i][j]
        ]
    )
