"""
Text and LaTeX renderings of command results. JSON output bypasses these
and prints `to_dict()` directly.
"""

from typing import Dict, List, Sequence

import chevron

from splitg2.algebra.exactlin import Matrix
from splitg2.algebra.fields import format_scalar
from splitg2.algebra.zorn import ZornMatrix, describe
from splitg2.helper import dumps
from splitg2.lie.characteristic import CharacteristicReport
from splitg2.lie.dergen import PARAM_NAMES, DerivationParams, DerivationSpace
from splitg2.lie.liestruct import AxiomReport, BracketTable, KillingMatrix
from splitg2.lie.verification import VerificationReport
from splitg2.my_types import OutputFormat

ZORN_TEXT = "{{{name}}}\n"

ZORN_LATEX = """\\begin{pmatrix}
{{{a}}} & ({{{x}}}) \\\\
({{{y}}}) & {{{b}}}
\\end{pmatrix}
"""

DERIVE_TEXT = """dim = {{dim}} over {{field}}
{{#basis}}
{{{label}}}:
{{#rows}}
  {{{.}}}
{{/rows}}
{{/basis}}
"""

DERIVE_LATEX = """% dim = {{dim}} over {{field}}
{{#basis}}
{{{label}}} = \\begin{pmatrix}
{{#rows}}
{{{.}}} \\\\
{{/rows}}
\\end{pmatrix}
{{/basis}}
"""

GRID_TEXT = """{{#rows}}
{{{.}}}
{{/rows}}
"""

TABLE_LATEX = """\\begin{tabular}{c|{{{columns}}}}
{{{header}}} \\\\
\\hline
{{#rows}}
{{{.}}} \\\\
{{/rows}}
\\end{tabular}
"""

PARAMS_LATEX = """{{#terms}}{{^first}} + {{/first}}({{{value}}}) {{{symbol}}}{{/terms}}{{^terms}}0{{/terms}}
"""

RECON_TEXT = """{{#params}}
{{name}} = {{{value}}}
{{/params}}
"""

VERIFY_TEXT = """field {{field}}
{{#checks}}
[{{status}}] {{name}}: {{{detail}}}
{{/checks}}
{{passed}}/{{total}} checks passed
"""

KILLING_TEXT = """{{#rows}}
{{{.}}}
{{/rows}}
rank {{rank}}
symmetric {{symmetric}}
invariant {{invariant}}
"""

KILLING_LATEX = """\\begin{pmatrix}
{{#rows}}
{{{row}}}{{^last}} \\\\{{/last}}
{{/rows}}
\\end{pmatrix}
"""

SWEEP_TEXT = """{{#reports}}
p={{prime}} smith_dim={{dim_from_smith}} nullspace_dim={{nullspace_dim}} {{status}}
{{/reports}}
"""


def _grid(cells: Sequence[Sequence[str]]) -> List[str]:
    """Left-aligned columns separated by two spaces; cells never contain spaces."""
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]


def _matrix_rows(m: Matrix) -> List[str]:
    return _grid([[m.field.format(v) for v in row] for row in m.data])


def _latex_cell(cell: str) -> str:
    # 2x4-x8 -> 2x_{4}-x_{8}
    if cell == "0":
        return "0"
    out = ""
    digits = False
    for ch in cell:
        if ch == "x":
            out += "x_{"
            digits = True
            continue
        if digits and not ch.isdigit():
            out += "}"
            digits = False
        out += ch
    return out + ("}" if digits else "")


def render_zorn(z: ZornMatrix, fmt: OutputFormat) -> str:
    if fmt == "json":
        return dumps(z) + "\n"
    if fmt == "latex":
        return chevron.render(
            ZORN_LATEX,
            {
                "a": format_scalar(z.a),
                "x": ", ".join(format_scalar(e) for e in z.x),
                "y": ", ".join(format_scalar(e) for e in z.y),
                "b": format_scalar(z.b),
            },
        )
    return chevron.render(ZORN_TEXT, {"name": describe(z)})


def render_space(space: DerivationSpace, fmt: OutputFormat) -> str:
    if fmt == "json":
        return dumps(space) + "\n"
    prefix = "x" if space.pinned else "b"
    basis = []
    for k, m in enumerate(space.basis):
        label = f"{prefix}{k + 1}"
        if space.pinned:
            label += f" ({PARAM_NAMES[k]})"
        rows = _matrix_rows(m) if fmt == "text" else [" & ".join(m.field.format(v) for v in row) for row in m.data]
        basis.append({"label": label if fmt == "text" else f"{prefix}_{{{k + 1}}}", "rows": rows})
    template = DERIVE_TEXT if fmt == "text" else DERIVE_LATEX
    return chevron.render(template, {"dim": space.dim, "field": space.field.label, "basis": basis})


def render_table(table: BracketTable, fmt: OutputFormat) -> str:
    if fmt == "json":
        return dumps(table) + "\n"
    n = table.n
    cells = [[table.cell(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    if fmt == "latex":
        header = " & ".join([""] + [f"x_{{{j}}}" for j in range(1, n + 1)])
        rows = [
            " & ".join([f"x_{{{i + 1}}}"] + [_latex_cell(c) for c in row])
            for i, row in enumerate(cells)
        ]
        return chevron.render(TABLE_LATEX, {"columns": "c" * n, "header": header, "rows": rows})
    return chevron.render(GRID_TEXT, {"rows": _grid(cells)})


def render_params(params: DerivationParams, fmt: OutputFormat) -> str:
    if fmt == "json":
        return dumps(params) + "\n"
    values = [format_scalar(v) for v in params.values]
    if fmt == "latex":
        terms = [
            {"value": v, "symbol": f"x_{{{k + 1}}}"}
            for k, v in enumerate(values)
            if v != "0"
        ]
        for k, term in enumerate(terms):
            term["first"] = k == 0
        return chevron.render(PARAMS_LATEX, {"terms": terms})
    return chevron.render(
        RECON_TEXT, {"params": [{"name": n, "value": v} for n, v in zip(PARAM_NAMES, values)]}
    )


def render_verification(report: VerificationReport, fmt: OutputFormat) -> str:
    if fmt == "json":
        return dumps(report) + "\n"
    data: Dict = report.to_dict()
    data["checks"] = [
        dict(c, status="PASS" if c["passed"] else "FAIL") for c in data["checks"]
    ]
    return chevron.render(VERIFY_TEXT, data)


def render_killing(k: KillingMatrix, invariance: AxiomReport, fmt: OutputFormat) -> str:
    data = {
        "matrix": k.to_dict(),
        "rank": k.rank,
        "symmetric": k.is_symmetric,
        "invariant": invariance.ok,
    }
    if fmt == "json":
        return dumps(data) + "\n"
    if fmt == "latex":
        rows = [" & ".join(format_scalar(v) for v in row) for row in k.matrix.entries]
        last = len(rows) - 1
        return chevron.render(
            KILLING_LATEX, {"rows": [{"row": r, "last": i == last} for i, r in enumerate(rows)]}
        )
    return chevron.render(
        KILLING_TEXT,
        {
            "rows": _matrix_rows(k.matrix),
            "rank": data["rank"],
            "symmetric": "yes" if k.is_symmetric else "no",
            "invariant": "yes" if invariance.ok else "no",
        },
    )


def render_sweep(reports: Sequence[CharacteristicReport], fmt: OutputFormat) -> str:
    if fmt == "json":
        return dumps(list(reports)) + "\n"
    rows = [dict(r.to_dict(), status="agree" if r.agree else "DISAGREE") for r in reports]
    return chevron.render(SWEEP_TEXT, {"reports": rows})
