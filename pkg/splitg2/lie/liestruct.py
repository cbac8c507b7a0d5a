import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from splitg2.algebra.exactlin import Matrix, commutator, rank, transpose
from splitg2.algebra.fields import FieldSpec, Raw, Scalar, parse_scalar
from splitg2.algebra.zorn import join_terms
from splitg2.errors import (
    FieldMismatch,
    NotClosed,
    NotInSpan,
    ParameterizationMismatch,
    ParseError,
)
from splitg2.helper import expect_dict
from splitg2.lie.dergen import PARAM_NAMES, DerivationSpace, Map8, recon
from splitg2.my_types import AxiomReportDict, BracketTableDict, ViolationDict, Utils

logger = logging.getLogger(__name__)

N = len(PARAM_NAMES)

# c[i][j][k], 0-based: [x_{i+1}, x_{j+1}] = sum_k c[i][j][k] x_{k+1}
Constants = Tuple[Tuple[Tuple[Raw, ...], ...], ...]


@dataclass(frozen=True, repr=False)
class BracketTable(Utils):
    """
    Structure constants of Der(O_s) in the basis x1..x14. The public
    accessors use the 1-based indices of the printed table.
    """

    field: FieldSpec
    c: Constants
    n: int = N

    def coefficient(self, i: int, j: int, k: int) -> Scalar:
        return Scalar(self.field, self.c[i - 1][j - 1][k - 1])

    def bracket_vector(self, i: int, j: int) -> List[Scalar]:
        return [Scalar(self.field, v) for v in self.c[i - 1][j - 1]]

    def cell(self, i: int, j: int) -> str:
        """Entry (i, j) in the table's notation, e.g. `-2x14` or `2x4-x8`."""
        return format_bracket(self.c[i - 1][j - 1], self.field)

    def to_dict(self) -> BracketTableDict:
        brackets = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                terms = [
                    {"k": k + 1, "c": self.field.format(v)}
                    for k, v in enumerate(self.c[i][j])
                    if v
                ]
                if terms:
                    brackets.append({"i": i + 1, "j": j + 1, "terms": terms})
        return {"n": self.n, "brackets": brackets}

    @classmethod
    def from_dict(cls, data: Dict, field: FieldSpec) -> "BracketTable":
        """
        Reads the i < j listing and fills in i > j by antisymmetry.
        """
        data = expect_dict(data, position="$")
        n = data.get("n")
        if n != N:
            raise ParseError(f"Expected n = {N}, got {n!r}", position="$.n")
        c = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for b, entry in enumerate(data.get("brackets", [])):
            where = f"$.brackets[{b}]"
            entry = expect_dict(entry, position=where)
            i, j = entry.get("i"), entry.get("j")
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= n):
                raise ParseError("Expected 1 <= i < j <= n", position=where)
            for t, term in enumerate(entry.get("terms", [])):
                term = expect_dict(term, position=f"{where}.terms[{t}]")
                k = term.get("k")
                if not (isinstance(k, int) and 1 <= k <= n):
                    raise ParseError("Expected 1 <= k <= n", position=f"{where}.terms[{t}].k")
                value = parse_scalar(term.get("c"), field, position=f"{where}.terms[{t}].c").value
                c[i - 1][j - 1][k - 1] = value
                c[j - 1][i - 1][k - 1] = field.neg(value)
        return cls(field=field, c=_freeze(c))


def _freeze(c: Sequence[Sequence[Sequence[Raw]]]) -> Constants:
    return tuple(tuple(tuple(v) for v in row) for row in c)


def format_bracket(vector: Sequence[Raw], field: FieldSpec) -> str:
    terms = [(field.format(v), f"x{k + 1}") for k, v in enumerate(vector) if v]
    if not terms:
        return "0"
    return join_terms(terms, spaced=False)


@dataclass(frozen=True, repr=False)
class AxiomReport(Utils):
    check: str
    violations: List[ViolationDict] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> AxiomReportDict:
        return {"check": self.check, "ok": self.ok, "violations": self.violations}


@dataclass(frozen=True, repr=False)
class KillingMatrix(Utils):
    """K(x_i, x_j) = trace(ad x_i o ad x_j), 0-based storage."""

    matrix: Matrix

    @property
    def is_symmetric(self) -> bool:
        return self.matrix == transpose(self.matrix)

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    def to_dict(self):
        return self.matrix.to_dict()


def bracket(d1: Map8, d2: Map8) -> Map8:
    return commutator(d1, d2)


def _bracket_coordinates(space: DerivationSpace, i: int, j: int) -> List[Raw]:
    try:
        return recon(bracket(space.basis[i], space.basis[j])).raw()
    except NotInSpan as e:
        raise NotClosed(i + 1, j + 1, str(e))


def structure_table(space: DerivationSpace, max_workers: Optional[int] = None) -> BracketTable:
    """
    table[i, j] = recon([x_i, x_j]) for all 196 ordered pairs.
    """
    if not space.pinned or space.dim != N:
        raise ParameterizationMismatch(
            f"Derivation space over {space.field.label} has no pinned x1..x14 basis "
            f"(dim {space.dim}, pinned={space.pinned})"
        )
    pairs = [(i, j) for i in range(N) for j in range(N)]

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            vectors = list(executor.map(lambda ij: _bracket_coordinates(space, *ij), pairs))
    else:
        vectors = [_bracket_coordinates(space, i, j) for i, j in pairs]

    c = [vectors[i * N : (i + 1) * N] for i in range(N)]
    logger.debug(f"Structure table over {space.field.label} computed")
    return BracketTable(field=space.field, c=_freeze(c))


def reduce_table(table: BracketTable, field: FieldSpec) -> BracketTable:
    """Maps the constants of a table over Q into `field`."""
    if table.field.modulus is not None:
        raise FieldMismatch(table.field.label, "q")
    return BracketTable(
        field=field,
        c=_freeze([[[field.canon(v) for v in vec] for vec in row] for row in table.c]),
    )


def zero_table(field: FieldSpec) -> BracketTable:
    return BracketTable(field=field, c=_freeze([[[field.zero] * N] * N] * N))


def verify_antisymmetry(t: BracketTable) -> AxiomReport:
    F = t.field
    violations: List[ViolationDict] = []
    for i in range(t.n):
        for j in range(t.n):
            for k in range(t.n):
                s = F.add(t.c[i][j][k], t.c[j][i][k])
                if s:
                    violations.append({"i": i + 1, "j": j + 1, "k": k + 1, "value": F.format(s)})
    return AxiomReport(check="antisymmetry", violations=violations)


def verify_jacobi(t: BracketTable) -> AxiomReport:
    """
    sum_m c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l = 0 for i < j < k, all l.
    """
    F = t.field
    c = t.c
    n = t.n
    violations: List[ViolationDict] = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = [F.zero] * n
                for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
                    for m, coef in enumerate(c[a][b]):
                        if not coef:
                            continue
                        for l, w in enumerate(c[m][d]):
                            if w:
                                total[l] = F.add(total[l], F.mul(coef, w))
                for l, v in enumerate(total):
                    if v:
                        violations.append(
                            {"i": i + 1, "j": j + 1, "k": k + 1, "l": l + 1, "value": F.format(v)}
                        )
    return AxiomReport(check="jacobi", violations=violations)


def killing_form(t: BracketTable) -> KillingMatrix:
    """K(x_i, x_j) = sum_{a,b} c_ia^b c_jb^a."""
    F = t.field
    c = t.c
    n = t.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = F.zero
            for a in range(n):
                for b, v in enumerate(c[i][a]):
                    if v and c[j][b][a]:
                        acc = F.add(acc, F.mul(v, c[j][b][a]))
            row.append(acc)
        rows.append(row)
    return KillingMatrix(Matrix.from_raw(F, rows))


def verify_killing_invariance(t: BracketTable, k: KillingMatrix) -> AxiomReport:
    """K([x_i, x_j], x_l) = K(x_i, [x_j, x_l]) on all basis triples."""
    F = t.field
    K = k.matrix.data
    n = t.n
    violations: List[ViolationDict] = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                left = F.zero
                right = F.zero
                for m in range(n):
                    if t.c[i][j][m]:
                        left = F.add(left, F.mul(t.c[i][j][m], K[m][l]))
                    if t.c[j][l][m]:
                        right = F.add(right, F.mul(t.c[j][l][m], K[i][m]))
                if left != right:
                    violations.append(
                        {"i": i + 1, "j": j + 1, "k": l + 1, "value": F.format(F.sub(left, right))}
                    )
    return AxiomReport(check="killing-invariance", violations=violations)


def derived_algebra_rank(t: BracketTable) -> int:
    """Rank of the 196x14 stack of bracket coordinate vectors."""
    return rank(Matrix.from_raw(t.field, [vec for row in t.c for vec in row]))
