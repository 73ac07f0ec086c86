"""Command-line front end.

Every subcommand reads a triangulation either from a JSON artifact
(--surface FILE, an object with "surface" and "triangles" keys) or from the
built-in examples (--example NAME), and writes one JSON object or a short
text report to stdout.  Exit status: 0 on success, 1 on a verification
failure, 2 on an input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .colored import ColoredTriangulation, colored_flip, flip_graph_explore, \
    make_colored
from .f2complex import arrows_of, build_complex, cohomology, hat_lift, mask_of
from .jacobian import AUTO, center_dimension, cyclic_derivative, \
    jacobian_dimension, premutate, reduce_sp, sp_of, twist_signature
from .examples import TEST_SURFACES
from .quiver import build_quivers, mutate_matrix, to_matrix
from .species import build_potential, build_species, build_tower
from .surface import Surface, closed_form_counts, validate_surface
from .triangulation import flip, triangulation_from_json


class InputError(ValueError):
    """Bad flags, files or names; reported with exit status 2."""


def _load_artifact(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_surface(args) -> Surface:
    if args.example:
        return _load_tri(args).surface
    obj = _load_artifact(args.surface)
    return validate_surface(Surface.from_json(obj.get("surface", obj)))


def _load_tri(args):
    if args.example:
        if args.example not in TEST_SURFACES:
            known = ", ".join(sorted(TEST_SURFACES))
            raise InputError(f"unknown example {args.example!r}; one of {known}")
        return TEST_SURFACES[args.example]()
    if not args.surface:
        raise InputError("need --surface FILE or --example NAME")
    obj = _load_artifact(args.surface)
    if "triangles" not in obj:
        raise InputError("artifact has no \"triangles\"; only surface data")
    surf = validate_surface(Surface.from_json(obj["surface"]))
    return triangulation_from_json(surf, obj)


def _artifact(tri) -> dict:
    return {"surface": tri.surface.to_json(), **tri.to_json()}


def _parse_aid(text):
    parts = text.split(",")
    if parts[0] == "eps":
        if len(parts) != 2:
            raise InputError(f"bad arrow id {text!r}")
        return ("eps", int(parts[1]))
    if len(parts) != 3:
        raise InputError(f"bad arrow id {text!r}; want t,slot,copy or eps,k")
    return tuple(int(x) for x in parts)


def _parse_xi(args):
    return [_parse_aid(item) for item in (args.xi or [])]


def _colored(args) -> ColoredTriangulation:
    return make_colored(_load_tri(args), _parse_xi(args))


def _aid_list(aids):
    return [list(a) for a in sorted(aids, key=str)]


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cutoff(args):
    return AUTO if args.cutoff == "auto" else int(args.cutoff)


def cmd_validate(args):
    if args.example or (args.surface
                        and "triangles" in _load_artifact(args.surface)):
        tri = _load_tri(args)
        _emit({"valid": True, "arcs": len(tri.arcs),
               "triangles": len(tri.triangles)})
    else:
        surf = _load_surface(args)
        _emit({"valid": True, "surface": surf.to_json()})
    return 0


def cmd_counts(args):
    _emit(closed_form_counts(_load_surface(args)).to_json())
    return 0


def cmd_flip(args):
    sigma, _ = flip(_load_tri(args), args.arc)
    _emit(_artifact(sigma))
    return 0


def cmd_quiver(args):
    wq = build_quivers(_load_tri(args))[args.kind]
    _emit(wq.to_json())
    return 0


def cmd_matrix(args):
    wq = build_quivers(_load_tri(args))["q"]
    B, D = to_matrix(wq)
    _emit({"vertices": list(wq.vertices), "B": B, "D": D})
    return 0


def cmd_mutate(args):
    wq = build_quivers(_load_tri(args))["q"]
    B, D = to_matrix(wq)
    if args.arc not in wq.vertices:
        raise InputError(f"arc {args.arc} is not a quiver vertex")
    k = wq.vertices.index(args.arc)
    _emit({"vertices": list(wq.vertices), "B": mutate_matrix(B, k), "D": D})
    return 0


def cmd_cohomology(args):
    cx = build_complex(_load_tri(args), hat=args.hat)
    coh = cohomology(cx)
    _emit({
        "dim": coh.dim,
        "cocycle_basis": [_aid_list(arrows_of(cx, m))
                          for m in coh.cocycle_basis],
        "coboundary_basis": [_aid_list(arrows_of(cx, m))
                             for m in coh.coboundary_basis],
    })
    return 0


def cmd_lift(args):
    tri = _load_tri(args)
    cx = build_complex(tri)
    cxh = build_complex(tri, hat=True)
    lifted = hat_lift(tri, mask_of(cx, _parse_xi(args)))
    _emit({"xi_hat": _aid_list(arrows_of(cxh, lifted))})
    return 0


def cmd_cflip(args):
    out = colored_flip(_colored(args), args.arc)
    _emit({**_artifact(out.tri), "xi": _aid_list(out.xi)})
    return 0


def cmd_flipgraph(args):
    keys, overflow = flip_graph_explore(
        _colored(args), limit=args.limit,
        quotient=args.quotient, canonical=not args.exact)
    _emit({"vertices": len(keys), "overflow": overflow, "components": 1})
    return 0


def cmd_species(args):
    sp = build_species(_colored(args), build_tower(args.p))
    _emit({
        "weights": {str(v): w for v, w in zip(sp.quiver.vertices,
                                              sp.quiver.weights)},
        "arrows": [{"id": list(a.aid), "tail": a.tail, "head": a.head,
                    "twist": sp.twists[a.aid]} for a in sp.quiver.arrows],
    })
    return 0


def cmd_potential(args):
    print(build_potential(_colored(args), build_tower(args.p)))
    return 0


def cmd_derive(args):
    ct = _colored(args)
    sp = sp_of(ct, build_tower(args.p))
    aid = _parse_aid(args.arrow)
    if aid not in sp.alg.arrows:
        raise InputError(f"arrow {args.arrow} is not in the species")
    print(cyclic_derivative(sp.potential, aid))
    return 0


def cmd_jacdim(args):
    sp = sp_of(_colored(args), build_tower(args.p))
    _emit(jacobian_dimension(sp, _cutoff(args)))
    return 0


def cmd_center(args):
    sp = sp_of(_colored(args), build_tower(args.p))
    _emit({"center_dim": center_dimension(sp, _cutoff(args))})
    return 0


def cmd_spmut(args):
    sp = sp_of(_colored(args), build_tower(args.p))
    red = reduce_sp(premutate(sp, args.arc))
    sig = twist_signature(red.alg)
    _emit({
        "weights": {str(v): w for v, w in sorted(red.alg.weights.items())},
        "twists": {f"{t}->{h}": list(js) for (t, h), js in sorted(sig.items())},
        "potential": str(red.potential),
    })
    return 0


def cmd_verify_main(args):
    ok, detail = verify.verify_config(args.config, p=args.p)
    print(f"{'PASS' if ok else 'FAIL'} {detail}")
    return 0 if ok else 1


def cmd_verify_all(args):
    results = verify.run_all(set(args.criteria) if args.criteria else None)
    failed = 0
    for r in results:
        status = "PASS" if r["ok"] else "FAIL"
        print(f"criterion {r['criterion']:2d} {status}  {r['name']}: "
              f"{r['detail']}")
        failed += 0 if r["ok"] else 1
    return 0 if failed == 0 else 1


def _add_input_flags(p):
    p.add_argument("--surface", help="JSON artifact path")
    p.add_argument("--example", help="built-in example name")


def _add_xi_flag(p):
    p.add_argument("--xi", action="append", default=[],
                   metavar="T,SLOT,COPY",
                   help="coloring arrow id, repeatable (eps,K for epsilons)")


def _add_sp_flags(p):
    _add_input_flags(p)
    _add_xi_flag(p)
    p.add_argument("--p", type=int, default=5, help="tower prime (1 mod 4)")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="orbsp",
        description="triangulated orbifold surfaces, colorings and species")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, "validate a surface or triangulation")
    _add_input_flags(p)

    p = add("counts", cmd_counts, "closed-form counting record")
    _add_input_flags(p)

    p = add("flip", cmd_flip, "flip one arc")
    _add_input_flags(p)
    p.add_argument("--arc", type=int, required=True)

    p = add("quiver", cmd_quiver, "weighted quiver of a triangulation")
    _add_input_flags(p)
    p.add_argument("--kind", default="q",
                   choices=["qbar", "q", "qprime", "qdoubleprime"])

    p = add("matrix", cmd_matrix, "exchange matrix pair (B, D)")
    _add_input_flags(p)

    p = add("mutate", cmd_mutate, "matrix mutation at one arc")
    _add_input_flags(p)
    p.add_argument("--arc", type=int, required=True)

    p = add("cohomology", cmd_cohomology, "F2 cohomology of the complex")
    _add_input_flags(p)
    p.add_argument("--hat", action="store_true")

    p = add("lift", cmd_lift, "hatted lift of a coloring")
    _add_input_flags(p)
    _add_xi_flag(p)

    p = add("cflip", cmd_cflip, "colored flip with cocycle transport")
    _add_input_flags(p)
    _add_xi_flag(p)
    p.add_argument("--arc", type=int, required=True)

    p = add("flipgraph", cmd_flipgraph, "explore one flip-graph component")
    _add_input_flags(p)
    _add_xi_flag(p)
    p.add_argument("--limit", type=int, default=1000)
    p.add_argument("--quotient", action="store_true",
                   help="identify cohomologous colorings")
    p.add_argument("--exact", action="store_true",
                   help="keep labeled complexes instead of canonical forms")

    p = add("species", cmd_species, "species of a colored triangulation")
    _add_sp_flags(p)

    p = add("potential", cmd_potential, "potential in canonical term syntax")
    _add_sp_flags(p)

    p = add("derive", cmd_derive, "cyclic derivative of the potential")
    _add_sp_flags(p)
    p.add_argument("--arrow", required=True, metavar="T,SLOT,COPY")

    p = add("jacdim", cmd_jacdim, "truncated Jacobian dimension")
    _add_sp_flags(p)
    p.add_argument("--cutoff", default="auto")

    p = add("center", cmd_center, "center dimension of the quotient")
    _add_sp_flags(p)
    p.add_argument("--cutoff", default="auto")

    p = add("spmut", cmd_spmut, "premutate and reduce at one arc")
    _add_sp_flags(p)
    p.add_argument("--arc", type=int, required=True)

    p = add("verify-main-theorem", cmd_verify_main,
            "flip-vs-mutation checks on one reference configuration")
    p.add_argument("--config", type=int, required=True,
                   choices=sorted(verify.GOLDEN_CONFIGS))
    p.add_argument("--p", type=int, default=5)

    p = add("verify-all", cmd_verify_all, "run the acceptance suite")
    p.add_argument("--criteria", type=int, nargs="*",
                   help="criterion numbers to run (default: all)")

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError) as exc:
        print(json.dumps({"error": f"{type(exc).__name__}: {exc}"}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
