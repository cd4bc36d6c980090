"""Command-line surface.

Exit codes: 0 success, 1 input/usage error, 2 a verified claim failed
numerically (so CI can distinguish falsification from typos).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import freealg, imgalg, repmod, strata, verify
from .cache import ResultCache
from .linalg import InvariantViolation, parse_rat
from .repmod import Representation


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


def _canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def build_parser() -> _ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit canonical JSON instead of text")
    common.add_argument("--cache-dir", default=None,
                        help="directory for the JSONL result cache")
    common.add_argument("--no-cache", action="store_true",
                        help="ignore the cache even if --cache-dir is given")

    parser = _ArgumentParser(prog="jordanplane",
                             description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_ArgumentParser)

    p = sub.add_parser("strata", parents=[common],
                       help="stratum dimension table for dimension n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("solve", parents=[common],
                       help="particular solution and centralizer basis for a partition")
    p.add_argument("--partition", required=True, help='e.g. "3,2,1"')

    p = sub.add_parser("sample", parents=[common],
                       help="seeded stratum points for a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("image", parents=[common],
                       help="image-algebra survey over all partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("ext", parents=[common],
                       help="dim Ext^1 between one-dimensional simples")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)

    p = sub.add_parser("endo", parents=[common],
                       help="endomorphism algebra of a representation file")
    p.add_argument("--file", required=True)

    p = sub.add_parser("indec", parents=[common],
                       help="indecomposability class of a representation file")
    p.add_argument("--file", required=True)

    p = sub.add_parser("nf", parents=[common],
                       help="PBW normal form of an expression in x, y")
    p.add_argument("--expr", required=True)

    p = sub.add_parser("aut", parents=[common],
                       help="check/compose automorphisms x -> a*x + p(y), y -> a*y")
    p.add_argument("--alpha", required=True)
    p.add_argument("--poly", required=True, help="polynomial in y")
    p.add_argument("--compose", default=None, metavar="A:POLY",
                   help="inner automorphism to precompose, e.g. \"2:1+y\"")

    p = sub.add_parser("presentation", parents=[common],
                       help="image-algebra relations for a full-block sample")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree", type=int, default=3)

    p = sub.add_parser("verify", parents=[common],
                       help="run the full claim-verification suite")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _open_cache(args) -> ResultCache:
    directory = None if args.no_cache else args.cache_dir
    return ResultCache(directory)


def _emit(args, payload, render) -> None:
    if args.json:
        print(_canonical_json(payload))
    else:
        render(payload)


def _cached_payload(args, command: str, n, partition, seed, compute):
    cache = _open_cache(args)
    payload = cache.get(command, n, partition, seed)
    if payload is None:
        payload = compute()
        cache.put(command, n, partition, seed, payload)
    return payload


# -- command handlers -----------------------------------------------------------


def cmd_strata(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    payload = _cached_payload(
        args, "strata", args.n, None, None,
        lambda: {"n": args.n,
                 "strata": [s.to_json() for s in strata.strata_table(args.n)]})

    def render(data):
        print(f"{'partition':<16}{'orbit':>8}{'fiber':>8}{'total':>8}")
        for row in data["strata"]:
            name = ",".join(str(v) for v in row["partition"])
            print(f"{name:<16}{row['orbit_dim']:>8}{row['fiber_dim']:>8}"
                  f"{row['total_dim']:>8}")

    _emit(args, payload, render)
    return 0


def cmd_solve(args) -> int:
    p = strata.Partition.parse(args.partition)

    def compute():
        fiber = strata.solve_fiber(p)
        return {
            "partition": list(p.parts),
            "fiber_dim": len(fiber.kernel),
            "x0": fiber.x0.to_json(),
            "x0_blockwise_toeplitz": strata.blockwise_toeplitz(fiber.x0, p),
            "kernel": [k.to_json() for k in fiber.kernel],
            "kernel_blockwise_toeplitz": all(
                strata.blockwise_toeplitz(k, p) for k in fiber.kernel),
        }

    payload = _cached_payload(args, "solve", p.n, str(p), None, compute)

    def render(data):
        from .linalg import Mat
        print(f"partition {args.partition}: fiber dimension {data['fiber_dim']}")
        print("particular solution X0"
              + (" (blockwise Toeplitz):" if data["x0_blockwise_toeplitz"]
                 else ":"))
        print(Mat.from_json(data["x0"]))
        note = ("all blockwise Toeplitz" if data["kernel_blockwise_toeplitz"]
                else "not all blockwise Toeplitz")
        print(f"centralizer basis ({len(data['kernel'])} elements, {note}):")
        for i, k in enumerate(data["kernel"]):
            print(f"-- K{i} --")
            print(Mat.from_json(k))

    _emit(args, payload, render)
    return 0


def cmd_sample(args) -> int:
    p = strata.Partition.parse(args.partition)
    if args.count < 1:
        raise ValueError("--count must be >= 1")

    def compute():
        samples = [strata.sample_point(p, args.seed + i).to_json()
                   for i in range(args.count)]
        return {"samples": samples}

    payload = _cached_payload(args, f"sample:k={args.count}", p.n, str(p),
                              args.seed, compute)

    def render(data):
        from .linalg import Mat
        for s in data["samples"]:
            print(f"partition {args.partition}, seed {s['seed']}:")
            print("X =")
            print(Mat.from_json(s["X"]))
            print("Y =")
            print(Mat.from_json(s["Y"]))

    _emit(args, payload, render)
    return 0


def cmd_image(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    if args.samples < 1:
        raise ValueError("--samples must be >= 1")

    def compute():
        rows = []
        for p in strata.partitions(args.n):
            reports = []
            for i in range(args.samples):
                s = strata.sample_point(p, args.seed + i)
                rep = Representation(args.n, s.X, s.Y)
                r = imgalg.image_report(rep)
                reports.append({"seed": s.seed, "image_dim": r.image_dim,
                                "eigenvalue_count": r.eigenvalue_count,
                                "semisimple_dim": r.semisimple_dim,
                                "basic": r.basic, "loops": r.loops})
            rows.append({
                "partition": list(p.parts),
                "bound": imgalg.dimension_bound(args.n),
                "max_dim": max(r["image_dim"] for r in reports),
                "all_within_bound": all(
                    r["image_dim"] <= imgalg.dimension_bound(args.n)
                    for r in reports),
                "all_basic": all(r["basic"] for r in reports),
                "reports": reports,
            })
        return {"n": args.n, "samples": args.samples, "strata": rows}

    payload = _cached_payload(args, f"image:k={args.samples}", args.n, None,
                              args.seed, compute)

    def render(data):
        print(f"{'partition':<16}{'max dim':>8}{'bound':>8}{'basic':>8}")
        for row in data["strata"]:
            name = ",".join(str(v) for v in row["partition"])
            basic = "yes" if row["all_basic"] else "NO"
            print(f"{name:<16}{row['max_dim']:>8}{row['bound']:>8}{basic:>8}")

    _emit(args, payload, render)
    return 0


def cmd_ext(args) -> int:
    a, b = parse_rat(args.alpha), parse_rat(args.beta)
    result = repmod.ext1(repmod.simple_module(a), repmod.simple_module(b))
    payload = {"alpha": args.alpha.strip(), "beta": args.beta.strip(),
               "dim": result.dim}
    _emit(args, payload,
          lambda d: print(f"dim Ext^1(S_{d['alpha']}, S_{d['beta']}) = {d['dim']}"))
    return 0


def _load_representation(path: str) -> Representation:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}")
    return Representation.from_json(obj)


def cmd_endo(args) -> int:
    rep = _load_representation(args.file)
    endo = repmod.endomorphism_algebra(rep)
    payload = {"n": rep.n, "dim": len(endo.basis),
               "radical_dim": len(endo.radical_basis),
               "semisimple_dim": endo.semisimple_dim}
    _emit(args, payload, lambda d: print(
        f"End: dim {d['dim']}, radical {d['radical_dim']}, "
        f"semisimple {d['semisimple_dim']}"))
    return 0


def cmd_indec(args) -> int:
    rep = _load_representation(args.file)
    cls = repmod.indecomposability_class(rep)
    payload = cls.to_json()
    _emit(args, payload, lambda d: print(
        f"{d['class']} (semisimple_dim={d['semisimple_dim']})"))
    return 0


def cmd_nf(args) -> int:
    poly = freealg.parse_expr(args.expr)
    nf = freealg.normal_form(poly)
    payload = {"input": args.expr, "normal_form": str(nf)}
    _emit(args, payload, lambda d: print(d["normal_form"]))
    return 0


def _parse_aut(alpha_text: str, poly_text: str) -> freealg.AutParams:
    alpha = parse_rat(alpha_text)
    poly = freealg.poly_in_y(freealg.parse_expr(poly_text))
    return freealg.AutParams(alpha, poly)


def cmd_aut(args) -> int:
    params = _parse_aut(args.alpha, args.poly)
    fx, fy = params.images()
    is_endo = freealg.check_endomorphism(fx, fy)
    inverse = freealg.invert_aut(params)
    payload = {
        "alpha": str(params.alpha),
        "poly": params.poly.expr_str("y"),
        "is_endomorphism": is_endo,
        "inverse": {"alpha": str(inverse.alpha),
                    "poly": inverse.poly.expr_str("y")},
    }
    if args.compose is not None:
        head, sep, tail = args.compose.partition(":")
        if not sep:
            raise ValueError('--compose expects "ALPHA:POLY"')
        inner = _parse_aut(head, tail)
        composed = freealg.compose_aut(params, inner)
        payload["compose"] = {"alpha": str(composed.alpha),
                              "poly": composed.poly.expr_str("y")}

    def render(data):
        print(f"map: x -> {data['alpha']}*x + {data['poly']}, "
              f"y -> {data['alpha']}*y")
        print(f"endomorphism: {'yes' if data['is_endomorphism'] else 'NO'}")
        print(f"inverse: alpha = {data['inverse']['alpha']}, "
              f"p = {data['inverse']['poly']}")
        if "compose" in data:
            print(f"composite: alpha = {data['compose']['alpha']}, "
                  f"p = {data['compose']['poly']}")

    _emit(args, payload, render)
    return 0


def cmd_presentation(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    if args.degree < 2:
        raise ValueError("--degree must be >= 2")

    def compute():
        p = strata.Partition((args.n,))
        s = strata.sample_point(p, args.seed)
        rep = Representation(args.n, s.X, s.Y)
        pres = imgalg.extract_presentation(rep, args.degree)
        data = pres.to_json()
        data.update({"n": args.n, "seed": args.seed,
                     "alpha": str(pres.alpha),
                     "image_dim": imgalg.generated_subalgebra(s.X, s.Y).dim})
        return data

    payload = _cached_payload(args, f"presentation:d={args.degree}", args.n,
                              None, args.seed, compute)

    def render(data):
        print(f"full block n={data['n']}, seed {data['seed']}: image algebra "
              f"dim {data['image_dim']}, generators u = X - ({data['alpha']})*I, v = Y")
        for degree, rels in sorted(data["relations"].items(), key=lambda t: int(t[0])):
            for rel in rels:
                print(f"degree {degree}: {rel} = 0")

    _emit(args, payload, render)
    return 0


def cmd_verify(args) -> int:
    config = verify.RunConfig(seed=args.seed, max_n=args.max_n,
                              output_mode="json" if args.json else "text")
    results, code = verify.verify_suite(config)
    payload = {"all_passed": code == 0,
               "claims": [r.to_json() for r in results]}

    def render(data):
        for claim in data["claims"]:
            status = "PASS" if claim["passed"] else "FAIL"
            print(f"{status}  claim {claim['number']:>2} "
                  f"({claim['name']}): {claim['witness']}")
        overall = "all claims passed" if data["all_passed"] else "FAILURES present"
        print(overall)

    _emit(args, payload, render)
    return code


_HANDLERS = {
    "strata": cmd_strata,
    "solve": cmd_solve,
    "sample": cmd_sample,
    "image": cmd_image,
    "ext": cmd_ext,
    "endo": cmd_endo,
    "indec": cmd_indec,
    "nf": cmd_nf,
    "aut": cmd_aut,
    "presentation": cmd_presentation,
    "verify": cmd_verify,
}


def cmd_dispatch(argv) -> int:
    """Parse argv and run one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError:
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"INVARIANT VIOLATION: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return cmd_dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
