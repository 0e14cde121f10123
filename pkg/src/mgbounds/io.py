"""JSON encodings for presentations, ideals and tables."""

from __future__ import annotations

import json

from . import __version__
from .duality import MonomialIdeal
from .koszul import BassTable, BettiTable
from .linalg import Field, Matrix, field_from_json
from .matroid import members
from .module import Presentation, from_monomial_ideal

FORMAT_VERSION = 1


def presentation_from_json(obj, field: Field | None = None) -> Presentation:
    """Accepts the full presentation object or the monomial-ideal shorthand.

    ``field`` overrides whatever field the document names.
    """
    if "monomial_ideal" in obj:
        mi = obj["monomial_ideal"]
        F = field or field_from_json(obj.get("field", mi.get("field")))
        return from_monomial_ideal(int(mi["vars"]), mi.get("gens", []), F)
    F = field or field_from_json(obj.get("field"))
    m = int(obj["vars"])
    rows = [r["degree"] if isinstance(r, dict) else r for r in obj.get("rows", [])]
    cols = [c["degree"] if isinstance(c, dict) else c for c in obj.get("cols", [])]
    coeffs = obj.get("coeffs", [])
    if not rows:
        coeffs = []
    M = Matrix.from_rows(F, [[F.parse(x) for x in row] for row in coeffs], ncols=len(cols))
    return Presentation.build(m, rows, cols, M, F)


def presentation_to_json(P: Presentation) -> dict:
    F = P.field
    return {
        "field": F.to_json(),
        "vars": P.nvars,
        "rows": [{"degree": list(g)} for g in P.row_degrees],
        "cols": [{"degree": list(e)} for e in P.col_degrees],
        "coeffs": [[F.format(x) for x in row] for row in P.coeffs.rows],
    }


def ideal_from_json(obj) -> MonomialIdeal:
    if "monomial_ideal" in obj:
        obj = obj["monomial_ideal"]
    return MonomialIdeal.of(int(obj["vars"]), obj.get("gens", []))


def degree_key(b) -> str:
    return ",".join(str(x) for x in b)


def table_to_json(table: BettiTable, nvars: int) -> dict:
    top = max(table.length, nvars)
    out = {
        "totals": [table.total(i) for i in range(top + 1)],
        "degrees": {str(i): {degree_key(b): v for b, v in table.degrees(i).items()}
                    for i in range(top + 1) if table.entries.get(i)},
    }
    if isinstance(table, BassTable):
        out["prime"] = list(members(table.prime))
    return out


def stamp(payload: dict) -> dict:
    return {"version": __version__, "format_version": FORMAT_VERSION, **payload}


def dumps(payload: dict) -> str:
    return json.dumps(stamp(payload), sort_keys=True, indent=2)
