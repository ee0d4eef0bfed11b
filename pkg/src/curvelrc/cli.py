"""Command-line entry point: ``curvelrc <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from pathlib import Path

import numpy as np

from . import analysis, bounds, descriptor, gs_tower, hermitian, tamo_barg
from .galois import FieldError, make_field
from .lrc_core import CodeError, encode, local_interpolant

FAMILIES = ("tamo-barg", "hermitian-y", "hermitian-x", "hermitian-lrc2", "gs2-l2")


def _ints(text: str) -> list[int]:
    return [int(v) for v in text.replace(" ", "").split(",") if v != ""]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise CodeError(f"--family {args.family} requires " + ", ".join("--" + m.replace("_", "-") for m in missing))


def build_code(args):
    fam = args.family
    if fam == "tamo-barg":
        _need(args, "p", "r", "k", "cosets")
        F = make_field(args.p, args.a, _ints(args.modulus) if args.modulus else None)
        if args.subgroup:
            gp = tamo_barg.good_poly_additive(F, _ints(args.subgroup), _ints(args.cosets))
        else:
            gp = tamo_barg.good_poly_multiplicative(F, args.r, _ints(args.cosets))
        if gp.r != args.r:
            raise CodeError(f"subgroup gives r={gp.r}, --r says {args.r}")
        return tamo_barg.tb_code(gp, args.k)
    if fam == "hermitian-lrc2":
        _need(args, "q0")
        return hermitian.code_lrc2(args.q0)
    _need(args, "q0", "t")
    if fam == "hermitian-y":
        return hermitian.code_proj_y(args.q0, args.t)
    if fam == "hermitian-x":
        return hermitian.code_proj_x(args.q0, args.t)
    return gs_tower.gs2_code_l2(args.q0, args.t)


def cmd_construct(args) -> int:
    code = build_code(args)
    if args.out:
        descriptor.save_code(code, args.out)
    summary = {"family": code.family, "n": code.n, "k": code.k, "r": list(code.localities),
               "designed_distance": code.designed_distance}
    sys.stdout.write(_json(summary))
    return 0


def cmd_encode(args) -> int:
    code = descriptor.load_code(args.code)
    if args.message_file:
        text = Path(args.message_file).read_text(encoding="utf-8")
    else:
        text = args.message
    msg = descriptor.from_logs(code.field, _ints(text))
    word = encode(code, msg)
    _emit(descriptor.word_to_csv(code, word), args.out)
    return 0


def _resolve_pos(code, args) -> int:
    if args.pos is not None:
        return args.pos
    want = tuple(_ints(args.point))
    for i, lab in enumerate(code.labels):
        if tuple(descriptor.to_logs(code.field, lab)) == want:
            return i
    raise CodeError(f"no coordinate labelled {args.point}")


def cmd_recover(args) -> int:
    code = descriptor.load_code(args.code)
    word, present = descriptor.word_from_csv(code, Path(args.word).read_text(encoding="utf-8"))
    if args.pos is None and args.point is None:
        raise CodeError("give --pos or --point")
    pos = _resolve_pos(code, args)
    if args.erase:
        present[pos] = False
    f = local_interpolant(code, word, present, pos, args.partition)
    xval = code.structure.partition(args.partition).xval[pos]
    F = code.field
    out = {
        "pos": pos,
        "label": descriptor.to_logs(F, code.labels[pos]) if code.labels else None,
        "partition": args.partition,
        "recovering_set": [i for i in code.structure.partition(args.partition).fiber_of(pos) if i != pos],
        "interpolant": descriptor.to_logs(F, f.coeffs),
        "symbol": F.log_index(f(xval)),
    }
    sys.stdout.write(_json(out))
    return 0


def cmd_distance(args) -> int:
    code = descriptor.load_code(args.code)
    rep = analysis.min_distance_exhaustive(code, workers=args.workers,
                                           scalar_reduce=not args.no_scalar_reduction,
                                           cap=args.cap, with_weights=args.weights)
    out = rep.as_dict()
    out.update({"n": code.n, "k": code.k, "designed_distance": code.designed_distance})
    sys.stdout.write(_json(out))
    return 0


def cmd_verify_locality(args) -> int:
    code = descriptor.load_code(args.code)
    report = {}
    ok = True
    for which in range(1, len(code.structure.partitions) + 1):
        cert = analysis.verify_locality(code, which)
        ok &= cert.ok
        report[str(which)] = {"ok": cert.ok, "certified": len(cert.vectors), "failing": cert.failing}
    sys.stdout.write(_json({"ok": ok, "partitions": report}))
    return 0 if ok else 1


def cmd_roundtrip(args) -> int:
    code = descriptor.load_code(args.code)
    rep = analysis.erasure_roundtrip(code, args.trials, args.seed)
    sys.stdout.write(_json(rep.as_dict()))
    return 0 if rep.ok else 1


def cmd_points(args) -> int:
    buf = io.StringIO()
    if args.curve == "hermitian":
        geo = hermitian.enumerate_points(args.q0)
        F = geo.field
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "y", "column", "row"])
        col_ids = {y: i for i, y in enumerate(F.elements())}
        row_ids = {x: i for i, x in enumerate(sorted(geo.rows, key=F.rank))}
        for x, y in geo.points:
            w.writerow([F.log_index(x), F.log_index(y), col_ids[y], row_ids.get(x, -1)])
    else:
        if args.level is None:
            raise CodeError("--curve gs-tower requires --level")
        F = hermitian.hermitian_field(args.q0)
        pts = gs_tower.enumerate_tower_points(args.q0, args.level, F)
        w = csv.writer(buf, delimiter="\t", lineterminator="\n")
        w.writerow(["x1"] + [f"z{i}" for i in range(2, args.level + 1)])
        for pt in pts:
            w.writerow(descriptor.to_logs(F, pt.coords))
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_params(args) -> int:
    fn = gs_tower.gs1_params if args.family == "gs1" else gs_tower.gs2_params
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        par = fn(args.q0, args.level, args.t)
    sys.stdout.write(_json(par.as_dict()))
    return 0


def _delta_grid(spec: str) -> np.ndarray:
    lo, hi, step = (float(v) for v in spec.split(":"))
    count = int(round((hi - lo) / step)) + 1
    return np.round(lo + step * np.arange(count), 12)


def cmd_bounds(args) -> int:
    if args.mode == "crossover":
        if args.q0 is None:
            raise CodeError("crossover requires --q0")
        fam = args.family if args.family in ("ab1", "ab2") else "ab2"
        res = bounds.crossover_interval(args.q0, fam, args.resolution)
        out = res.as_dict()
        if args.sensitivity:
            out["sensitivity"] = {
                str(res.gv_r + d): bounds.crossover_interval(args.q0, fam, args.resolution,
                                                             gv_r=res.gv_r + d).as_dict()
                for d in (-1, 1)
            }
        sys.stdout.write(_json(out))
        return 0
    fam = args.family or "gv"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["delta", "rate", "raw"])
    q, r = args.q, args.r
    if fam in ("gv", "singleton") and r is None:
        raise CodeError(f"--family {fam} requires --r")
    if fam == "gv" and q is None:
        if args.q0 is None:
            raise CodeError("--family gv requires --q or --q0")
        q = args.q0 ** 2
    if fam in ("ab1", "ab2", "tvz") and args.q0 is None:
        raise CodeError(f"--family {fam} requires --q0")
    for d in _delta_grid(args.delta_grid):
        if fam == "gv" and d >= 1:
            continue
        pt = bounds.rate_point(fam, float(d), q=q, r=r, q0=args.q0)
        w.writerow([f"{pt.delta:.6f}", f"{pt.rate:.10f}", f"{pt.raw:.10f}"])
    _emit(buf.getvalue(), args.out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="curvelrc", description="Locally recoverable codes on curves.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write its descriptor")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--p", type=int)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--modulus", help="defining polynomial coefficients, low to high")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--cosets", help="coset representatives (integer element encoding)")
    p.add_argument("--subgroup", help="additive subgroup elements; selects the additive good polynomial")
    p.add_argument("--q0", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="encode a message given as log indices (-1 = zero)")
    p.add_argument("--code", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--message")
    g.add_argument("--message-file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("recover", help="repair one erased symbol from its recovering set")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--pos", type=int)
    p.add_argument("--point", help="coordinate label as log indices, e.g. 1,0")
    p.add_argument("--partition", type=int, default=1, choices=(1, 2))
    p.add_argument("--erase", action="store_true", help="treat the target position as erased")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("distance", help="exact minimum distance by enumeration")
    p.add_argument("--code", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-scalar-reduction", action="store_true")
    p.add_argument("--weights", action="store_true", help="also report the weight distribution")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("verify-locality", help="dual-vector locality certificates")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_verify_locality)

    p = sub.add_parser("roundtrip", help="seeded encode/erase/recover trials")
    p.add_argument("--code", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("points", help="rational points as log indices")
    p.add_argument("--curve", required=True, choices=("hermitian", "gs-tower"))
    p.add_argument("--q0", type=int, required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("params", help="designed parameters of tower codes")
    p.add_argument("--family", required=True, choices=("gs1", "gs2"))
    p.add_argument("--q0", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("bounds", help="rate/distance curves or the AG-vs-GV crossover")
    p.add_argument("mode", nargs="?", default="curve", choices=("curve", "crossover"))
    p.add_argument("--family", choices=bounds.FAMILIES)
    p.add_argument("--q", type=int)
    p.add_argument("--q0", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--delta-grid", default="0:1:0.01")
    p.add_argument("--resolution", type=float, default=1e-3)
    p.add_argument("--sensitivity", action="store_true", help="also report GV at r-1 and r+1")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CodeError, FieldError, analysis.EnumerationCapError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
