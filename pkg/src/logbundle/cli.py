"""Command-line surface.

Every subcommand reads JSON files with exact rational entries, runs one
library operation and prints a JSON document on stdout.  Identical
invocations are byte-identical; --pretty only changes whitespace.  Exit
status: 0 success, 1 domain error (structured error record), 2 malformed
input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .arrangement import (
    associated,
    fundamental_tensor,
    is_self_associated,
)
from .errors import GeneralPositionError, LogBundleError
from .monoidal import (
    curve_equation_p2,
    membership_determinant,
    monoid_basis,
    monoid_through_points,
    monoidal_kernel_dim,
)
from .projgeom import assert_general_position, rnc_through
from .quadrics import (
    adjoint_witness,
    castelnuovo_rnc,
    conditions_imposed,
    torelli_classify,
)
from .restriction import (
    connection_map,
    generic_splitting,
    is_super_jumping,
    splitting_type,
)
from .steiner import (
    chern_coeffs,
    cohomology_dims,
    intertwiner_solve,
    schwarzenberger_tensor,
)


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _points(path: str):
    doc = _load(path)
    if isinstance(doc, list):
        doc = {"points": doc}
    return ser.parse_points(doc)


def _verdict_doc(v) -> dict:
    return {
        "kind": v.kind,
        "hom_dim": v.hom_dim,
        "g_i": None if v.g_i is None else ser.matrix_record(v.g_i),
        "g_w": None if v.g_w is None else ser.matrix_record(v.g_w),
    }


def cmd_gp_check(args) -> dict:
    pts = _points(args.points)
    assert_general_position(pts, pts[0].n)
    return {"n": pts[0].n, "count": len(pts), "general_position": True}


def cmd_associate(args) -> dict:
    a = ser.parse_arrangement(_load(args.arrangement))
    return ser.arrangement_record(associated(a))


def cmd_self_associated(args) -> dict:
    pts = _points(args.points)
    return {
        "n": pts[0].n,
        "count": len(pts),
        "self_associated": is_self_associated(pts),
    }


def cmd_tensor(args) -> dict:
    a = ser.parse_arrangement(_load(args.arrangement))
    return ser.tensor_record(fundamental_tensor(a))


def cmd_chern(args) -> dict:
    return {"n": args.n, "m": args.m, "c": chern_coeffs(args.n, args.m)}


def cmd_cohomology(args) -> dict:
    t = ser.parse_tensor(_load(args.tensor))
    h = cohomology_dims(t, args.twist)
    return {"twist": args.twist, "h": list(h)}


def cmd_splitting_type(args) -> dict:
    t = ser.parse_tensor(_load(args.tensor))
    doc = _load(args.lines)
    if "lines" in doc:
        types = [list(splitting_type(t, ser.parse_line(d))) for d in doc["lines"]]
        return {"types": types}
    return {"type": list(splitting_type(t, ser.parse_line(doc)))}


def cmd_jump_test(args) -> dict:
    t = ser.parse_tensor(_load(args.tensor))
    l = ser.parse_line(_load(args.line))
    n = len(t.slices) - 1
    m = t.dim_w + 1
    st = splitting_type(t, l)
    gen = generic_splitting(n, m)
    return {
        "type": list(st),
        "generic_type": list(gen),
        "jumping": st != gen,
    }


def cmd_super_jump_test(args) -> dict:
    t = ser.parse_tensor(_load(args.tensor))
    l = ser.parse_line(_load(args.line))
    return {
        "type": list(splitting_type(t, l)),
        "super_jumping": is_super_jumping(t, l),
    }


def cmd_connection(args) -> dict:
    a = ser.parse_arrangement(_load(args.arrangement))
    doc = _load(args.data)
    l = ser.parse_line(doc["line"])
    lam = ser.parse_line(doc["lambda"])
    x = ser.parse_vec(doc["x"])
    x2 = ser.parse_vec(doc["x2"])
    out = connection_map(a, l, x, lam, x2)
    return ser.line_record(out)


def cmd_jumping_curve(args) -> dict:
    pts = _points(args.points)
    curve = curve_equation_p2(pts, args.d)
    doc = {
        "count": len(pts),
        "curve": ser.poly_record(curve),
    }
    if args.plot:
        from .plotting import plot_plane_curve

        doc["plot"] = plot_plane_curve(curve, args.plot, points=pts)
    return doc


def cmd_monoid_basis(args) -> dict:
    z = ser.parse_flat(_load(args.flat))
    basis = monoid_basis(z, args.d)
    return {
        "d": args.d,
        "projective_dimension": len(basis) - 1,
        "basis": [ser.poly_record(b) for b in basis],
    }


def cmd_monoid_through(args) -> dict:
    z = ser.parse_flat(_load(args.flat))
    pts = _points(args.points)
    p = monoid_through_points(z, args.d, pts)
    return {
        "d": args.d,
        "exists": p is not None,
        "monoid": None if p is None else ser.poly_record(p),
    }


def cmd_membership(args) -> dict:
    pts = _points(args.points)
    z = ser.parse_flat(_load(args.flat))
    det = membership_determinant(pts, z)
    return {
        "determinant": ser.rat_str(det),
        "kernel_dim": monoidal_kernel_dim(pts, z),
        "member": det == 0,
    }


def cmd_rnc_through(args) -> dict:
    pts = _points(args.points)
    return ser.rnc_record(rnc_through(pts))


def cmd_schwarzenberger(args) -> dict:
    return ser.tensor_record(schwarzenberger_tensor(args.n, args.m))


def cmd_iso(args) -> dict:
    t1 = ser.parse_tensor(_load(args.tensor1))
    t2 = ser.parse_tensor(_load(args.tensor2))
    return _verdict_doc(intertwiner_solve(t1, t2))


def cmd_torelli(args) -> dict:
    a1 = ser.parse_arrangement(_load(args.arrangement1))
    a2 = ser.parse_arrangement(_load(args.arrangement2))
    v = torelli_classify(a1, a2)
    return {
        "kind": v.kind,
        "curve": None if v.curve is None else ser.rnc_record(v.curve),
        "solver": _verdict_doc(v.solver),
    }


def cmd_adjoint(args) -> dict:
    doc = _load(args.data)
    pts = ser.parse_points(doc)
    q = ser.parse_vec(doc["q"])
    witness = adjoint_witness(pts, q, trials=args.trials, seed=args.seed)
    return {
        "trials": args.trials,
        "seed": args.seed,
        "adjoint": witness is None,
        "witness": None if witness is None else ser.flat_record(witness),
    }


def cmd_castelnuovo(args) -> dict:
    pts = _points(args.points)
    curve = castelnuovo_rnc(pts)
    return {
        "conditions": conditions_imposed(pts),
        "on_rnc": curve is not None,
        "curve": None if curve is None else ser.rnc_record(curve),
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="logbundle",
        description="Exact computations with hyperplane arrangements and their "
        "logarithmic bundles.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--out", help="also write the document to this path")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    sp = add("gp-check", cmd_gp_check, "verify a point file is in general position")
    sp.add_argument("points")

    sp = add("associate", cmd_associate, "associated arrangement")
    sp.add_argument("arrangement")

    sp = add("self-associated", cmd_self_associated, "test self-association of 2n+2 points")
    sp.add_argument("points")

    sp = add("tensor", cmd_tensor, "fundamental tensor of an arrangement")
    sp.add_argument("arrangement")

    sp = add("chern", cmd_chern, "Chern coefficients of the logarithmic bundle")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)

    sp = add("cohomology", cmd_cohomology, "cohomology dimensions of a twist")
    sp.add_argument("tensor")
    sp.add_argument("--twist", type=int, default=0)

    sp = add("splitting-type", cmd_splitting_type, "splitting type on a line (or batch)")
    sp.add_argument("tensor")
    sp.add_argument("lines")

    sp = add("jump-test", cmd_jump_test, "is the line jumping?")
    sp.add_argument("tensor")
    sp.add_argument("line")

    sp = add("super-jump-test", cmd_super_jump_test, "does the restriction have a trivial summand?")
    sp.add_argument("tensor")
    sp.add_argument("line")

    sp = add("connection", cmd_connection, "transport a line through a pencil construction")
    sp.add_argument("arrangement")
    sp.add_argument("data")

    sp = add("jumping-curve", cmd_jumping_curve, "plane jumping-line curve equation")
    sp.add_argument("points")
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--plot", default=None, help="render the curve to this image file")

    sp = add("monoid-basis", cmd_monoid_basis, "basis of monoids with a given singular flat")
    sp.add_argument("flat")
    sp.add_argument("--d", type=int, required=True)

    sp = add("monoid-through", cmd_monoid_through, "monoid through given points, if any")
    sp.add_argument("flat")
    sp.add_argument("points")
    sp.add_argument("--d", type=int, required=True)

    sp = add("membership", cmd_membership, "monoidal-complex membership of a flat")
    sp.add_argument("points")
    sp.add_argument("flat")

    sp = add("rnc-through", cmd_rnc_through, "rational normal curve through n+3 points")
    sp.add_argument("points")

    sp = add("schwarzenberger", cmd_schwarzenberger, "multiplication tensor of a curve bundle")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)

    sp = add("iso", cmd_iso, "solve for intertwiners between two tensors")
    sp.add_argument("tensor1")
    sp.add_argument("tensor2")

    sp = add("torelli", cmd_torelli, "classify a pair of arrangements")
    sp.add_argument("arrangement1")
    sp.add_argument("arrangement2")

    sp = add("adjoint", cmd_adjoint, "sampled adjointness test for a point")
    sp.add_argument("data")
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("castelnuovo", cmd_castelnuovo, "condition count and detected curve")
    sp.add_argument("points")

    return p


def _emit(doc, args) -> None:
    text = ser.dumps(doc, pretty=args.pretty)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except LogBundleError as e:
        err = {"type": type(e).__name__, "message": str(e)}
        if isinstance(e, GeneralPositionError):
            err["indices"] = list(e.indices)
        _emit({"error": err}, args)
        return 1
    except (OSError, KeyError, IndexError, TypeError, ValueError) as e:
        # json.JSONDecodeError is a ValueError; LogBundleError was caught above
        _emit({"error": {"type": "MalformedInput", "message": str(e)}}, args)
        return 2
    _emit(doc, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
