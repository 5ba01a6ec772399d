"""Command-line interface.

Exit codes: 0 success, 1 domain error (invalid weight, failed check),
2 usage error.  Domain errors print a machine-readable JSON object on
stderr.  All output is byte-deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import algebra, crosscheck, functors, serialize, surgery, tensor_oracle
from .weights import (
    GlWeight,
    Weight,
    bruhat_leq,
    enumerate_window,
    from_gl_weight,
    to_gl_weight,
)


class DomainError(Exception):
    pass


def _load_weight(text: str) -> Weight:
    return serialize.weight_from_json(json.loads(text))


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_dict(args) -> None:
    if args.coeffs is not None:
        coeffs = tuple(int(c) for c in args.coeffs.split(","))
        w = from_gl_weight(GlWeight(coeffs, (args.m, args.n)))
        _emit(serialize.weight_to_json(w))
    elif args.weight is not None:
        gl = to_gl_weight(_load_weight(args.weight))
        _emit({"coeffs": list(gl.coeffs), "m": gl.rank[0], "n": gl.rank[1]})
    else:
        raise DomainError("dict needs --coeffs or --weight")


def _cmd_block(args) -> None:
    weights = enumerate_window(args.p, args.q, args.m, args.n, args.restrict)
    out = {"weights": [serialize.weight_to_json(w) for w in weights]}
    if args.hasse:
        edges = []
        for i, a in enumerate(weights):
            for j, b in enumerate(weights):
                if i == j or not bruhat_leq(a, b):
                    continue
                # cover: nothing strictly between
                if not any(k not in (i, j)
                           and bruhat_leq(a, weights[k])
                           and bruhat_leq(weights[k], b)
                           for k in range(len(weights))):
                    edges.append([i, j])
        out["hasse"] = edges
    _emit(out)


def _cmd_mult(args) -> None:
    x = serialize.vector_from_json(json.loads(args.x))
    y = serialize.vector_from_json(json.loads(args.y))
    trace: Optional[List[str]] = [] if args.trace else None
    prod = surgery.multiply(x, y, trace=trace)
    out = serialize.element_to_json(prod)
    if args.trace:
        out["trace"] = trace
    _emit(out)


def _matrix_cmd(args, fn) -> None:
    t = algebra.build_truncation(args.m, args.n, args.p, args.q)
    rows, cols, entries = fn(t, graded=not args.ungraded)
    if args.format == "csv":
        sys.stdout.write(serialize.matrix_to_csv(rows, cols, entries))
    else:
        _emit(serialize.matrix_to_json(rows, cols, entries))


def _cmd_cartan(args) -> None:
    _matrix_cmd(args, algebra.cartan_matrix)


def _cmd_decomp(args) -> None:
    _matrix_cmd(args, algebra.decomposition_matrix)


def _cmd_endo(args) -> None:
    t = algebra.build_truncation(args.m, args.n, args.p, args.q)
    lam = _load_weight(args.weight)
    try:
        report = algebra.endo_ring(t, lam)
    except ValueError as exc:
        raise DomainError(str(exc))
    _emit({
        "weight": serialize.weight_to_json(lam),
        "dimension": report["dimension"],
        "defect": report["defect"],
        "commutative": report["commutative"],
        "generators_square_to_zero": report["generators_square_to_zero"],
        "generators": [serialize.vector_to_json(g)
                       for g in report["generators"]],
    })


def _cmd_kac(args) -> None:
    lam = _load_weight(args.weight)
    layers = algebra.kac_layers(lam)
    _emit({str(k): [serialize.weight_to_json(w) for w in ws]
           for k, ws in sorted(layers.items())})


def _cmd_crystal(args) -> None:
    weights = enumerate_window(args.p, args.q, args.m, args.n, args.restrict)
    sys.stdout.write(serialize.crystal_to_dot(weights))


def _cmd_path(args) -> None:
    lam = _load_weight(args.weight)
    window = (args.p, args.q) if args.p is not None else None
    p, q, path, r = functors.path_to_ground(lam, window)
    verified = functors.verify_path(lam, p, q, path, r)
    _emit({"p": p, "q": q, "path": list(path), "r": r, "verified": verified})
    if not verified:
        raise DomainError("path verification failed")


def _cmd_stretched(args) -> None:
    dims, total = functors.enumerate_stretched(
        args.p, args.q, args.m, args.n, args.d)
    _emit({"dims": [{"weight": serialize.weight_to_json(w), "dim": k}
                    for w, k in sorted(dims.items(),
                                       key=lambda t: t[0].sort_key())],
           "total": total})


def _cmd_oracle(args) -> None:
    if args.suite == "hecke":
        rep = tensor_oracle.check_hecke_relations(
            args.m, args.n, args.p, args.q, args.d)
        _emit(rep)
        if not rep["pass"]:
            raise DomainError("relation suite failed")
    elif args.suite == "decomp":
        dims = tensor_oracle.weight_decomposition(
            args.m, args.n, args.p, args.q, args.d)
        _emit({",".join(map(str, key)): dim for key, dim in sorted(dims.items())})
    else:
        raise DomainError(f"unknown oracle suite {args.suite!r}")


def _cmd_xcheck(args) -> None:
    results = {}
    if args.which in ("dec", "all"):
        results["dec"] = functors.check_theorem_dec(
            args.p, args.q, args.m, args.n, args.d)
    if args.which in ("cog", "all"):
        results["cog"] = crosscheck.check_two_sided(
            args.m, args.n, args.p, args.q, args.d)["pass"]
    _emit(results)
    if not all(results.values()):
        raise DomainError("cross-validation failed")


def _cmd_render(args) -> None:
    v = serialize.vector_from_json(json.loads(args.vector))
    sys.stdout.write(serialize.render_ascii(v) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcalg",
        description="Arc-algebra diagram calculus for GL(m|n) blocks")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rank=True, window=True, depth=False):
        p.add_argument("--seed", type=int, default=0,
                       help="seed for any sampled mode")
        if rank:
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        if window:
            p.add_argument("--p", type=int, required=True)
            p.add_argument("--q", type=int, required=True)
        if depth:
            p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("dict", help="weight dictionary, either direction")
    common(p, window=False)
    p.add_argument("--coeffs", help="comma-separated weight coefficients")
    p.add_argument("--weight", help="weight JSON")
    p.set_defaults(fn=_cmd_dict)

    p = sub.add_parser("block", help="enumerate a window, optional Hasse edges")
    common(p)
    p.add_argument("--restrict", choices=("all", "core"), default="all")
    p.add_argument("--hasse", action="store_true")
    p.set_defaults(fn=_cmd_block)

    p = sub.add_parser("mult", help="product of two basis vectors")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--x", required=True, help="basis vector JSON")
    p.add_argument("--y", required=True, help="basis vector JSON")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=_cmd_mult)

    for name, fn in (("cartan", _cmd_cartan), ("decomp", _cmd_decomp)):
        p = sub.add_parser(name, help=f"graded {name} matrix")
        common(p)
        p.add_argument("--ungraded", action="store_true")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(fn=fn)

    p = sub.add_parser("endo", help="endomorphism ring of one projective")
    common(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(fn=_cmd_endo)

    p = sub.add_parser("kac", help="layers of a standard module")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight", required=True)
    p.set_defaults(fn=_cmd_kac)

    p = sub.add_parser("crystal", help="crystal graph in DOT format")
    common(p)
    p.add_argument("--restrict", choices=("all", "core"), default="all")
    p.set_defaults(fn=_cmd_crystal)

    p = sub.add_parser("path", help="crystal path from the ground weight")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight", required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.set_defaults(fn=_cmd_path)

    p = sub.add_parser("stretched", help="stretched diagram counts")
    common(p, depth=True)
    p.set_defaults(fn=_cmd_stretched)

    p = sub.add_parser("oracle", help="tensor-space oracle suites")
    common(p, depth=True)
    p.add_argument("--suite", choices=("hecke", "decomp"), default="hecke")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("xcheck", help="two-sided cross-validations")
    common(p, depth=True)
    p.add_argument("--which", choices=("dec", "cog", "all"), default="all")
    p.set_defaults(fn=_cmd_xcheck)

    p = sub.add_parser("render", help="ASCII circle diagram")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vector", required=True)
    p.set_defaults(fn=_cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except DomainError as exc:
        json.dump({"error": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        json.dump({"error": f"{type(exc).__name__}: {exc}"}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
