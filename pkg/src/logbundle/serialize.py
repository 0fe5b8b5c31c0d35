"""JSON records for every object the command line reads or writes.

Conventions: rationals are strings "a" or "a/b", matrices are row-major
lists of such strings, keys are emitted sorted so identical inputs give
byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arrangement import Arrangement, new_arrangement
from .errors import LogBundleError
from .linalg import Matrix, rat
from .poly import MultiPoly
from .projgeom import RNC, Flat2, LineSpan, ProjPoint
from .steiner import SteinerTensor


def rat_str(x) -> str:
    f = rat(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rat(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise LogBundleError(f"not an exact rational: {s!r}")
    try:
        return Fraction(s)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise LogBundleError(f"not a rational: {s!r}") from e


def vec_record(v) -> list[str]:
    return [rat_str(x) for x in v]


def parse_vec(rec) -> tuple[Fraction, ...]:
    return tuple(parse_rat(x) for x in rec)


def matrix_record(m: Matrix) -> list[list[str]]:
    return [vec_record(m.row(i)) for i in range(m.rows)]


def parse_matrix(rec, cols=None) -> Matrix:
    return Matrix([list(parse_vec(r)) for r in rec], cols=cols)


def arrangement_record(a: Arrangement) -> dict:
    return {"n": a.n, "m": a.m, "forms": matrix_record(a.forms)}


def parse_arrangement(doc) -> Arrangement:
    return new_arrangement([parse_vec(r) for r in doc["forms"]])


def points_record(points) -> dict:
    pts = [ProjPoint(p) for p in points]
    return {"n": pts[0].n, "count": len(pts), "points": [vec_record(p.coords) for p in pts]}


def parse_points(doc) -> list[ProjPoint]:
    return [ProjPoint(parse_vec(p)) for p in doc["points"]]


def line_record(l: LineSpan) -> dict:
    return {"points": [vec_record(l.rows.row(0)), vec_record(l.rows.row(1))]}


def parse_line(doc) -> LineSpan:
    a, b = doc["points"]
    return LineSpan(parse_vec(a), parse_vec(b))


def flat_record(z: Flat2) -> dict:
    return {"forms": matrix_record(z.rows)}


def parse_flat(doc) -> Flat2:
    a, b = doc["forms"]
    return Flat2(parse_vec(a), parse_vec(b))


def rnc_record(c: RNC) -> dict:
    return {"n": c.n, "coeff": matrix_record(c.coeff)}


def parse_rnc(doc) -> RNC:
    return RNC(parse_matrix(doc["coeff"]))


def tensor_record(t: SteinerTensor) -> dict:
    return {
        "n": len(t.slices) - 1,
        "dim_i": t.dim_i,
        "dim_w": t.dim_w,
        "slices": [matrix_record(s) for s in t.slices],
    }


def parse_tensor(doc) -> SteinerTensor:
    slices = [parse_matrix(s, cols=doc["dim_i"]) for s in doc["slices"]]
    return SteinerTensor(slices, dim_i=doc["dim_i"], dim_w=doc["dim_w"])


def poly_record(p: MultiPoly) -> dict:
    return {
        "n_vars": p.n_vars,
        "degree": p.degree(),
        "terms": [
            {"exponents": list(e), "coefficient": rat_str(c)} for e, c in p.sorted_terms()
        ],
        "rendered": p.render(),
    }


def parse_poly(doc) -> MultiPoly:
    terms = {
        tuple(t["exponents"]): parse_rat(t["coefficient"]) for t in doc["terms"]
    }
    return MultiPoly(doc["n_vars"], terms)


def dumps(doc, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
