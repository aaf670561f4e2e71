"""Batch command line: median computation, evaluation baselines,
distortion and convergence diagnostics, dataset generation.

Exit codes: 0 success, 1 usage or configuration, 2 data, 3 computation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import datagen
from .core import (
    ConfigurationError,
    KernelSpec,
    ObjectSet,
    cached_distance,
    sod,
)
from .dataio import DOMAINS, DataFormatError, parse_dataset, serialize_object, write_dataset
from .domains import clusterings, rankings, strings
from .evaluate import convergence_stats, distortion_ratios, lower_bound_pairwise, normalized_sod
from .kernels import gram_matrix
from .reconstruct import ReconstructionConfig, compute_median
from .weiszfeld import WeiszfeldConfig, kernel_weiszfeld

_ADAPTERS = {
    "string": strings.ADAPTER,
    "clustering": clusterings.ADAPTER,
    "ranking": rankings.ADAPTER,
}

_DOMAIN_KERNELS = {
    "ssk": "string",
    "partition": "clustering",
    "kendall": "ranking",
}

_RECONSTRUCT_FLAGS = {
    "linear": "linear",
    "triangular": "triangular",
    "lin-rec": "lin_rec",
    "tri-rec": "tri_rec",
}

REPORT_COLUMNS = [
    "set", "median", "sod", "lower_bound", "normalized_sod", "sigma",
    "iterations", "complex_weight_count", "runtime_ms", "kernel", "reconstruction",
]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _sig9(x):
    """Round a float to 9 significant digits for stable report serialization."""
    if x is None:
        return None
    return float(f"{float(x):.9g}")


def _add_kernel_args(p):
    p.add_argument("--kernel", default="lin",
                   choices=["lin", "nd", "pol", "rbf", "comb", "ssk", "partition", "kendall"])
    p.add_argument("--beta", type=float, default=2.0, help="exponent for the nd kernel")
    p.add_argument("--gamma", type=float, default=1.0, help="scale for pol/rbf kernels")
    p.add_argument("--p", type=int, default=1, help="degree for the pol kernel")
    p.add_argument("--lambda", dest="decay", type=float, default=0.5,
                   help="decay of the subsequence kernel")
    p.add_argument("--ulen", type=int, default=2, help="subsequence length for ssk")
    p.add_argument("--origins", type=int, default=3,
                   help="number of reference objects for the comb kernel")


def _add_common_args(p, with_reconstruct: bool):
    p.add_argument("--domain", required=True, choices=list(DOMAINS))
    p.add_argument("--input", required=True)
    p.add_argument("--output", default=None, help="report file (stdout when omitted)")
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jmax", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-6)
    _add_kernel_args(p)
    if with_reconstruct:
        p.add_argument("--reconstruct", default="lin-rec", choices=list(_RECONSTRUCT_FLAGS))
        p.add_argument("--search", action="store_true",
                       help="refine the result with the weighted-mean line search")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kernmedian",
                     description="Consensus medians through kernel-space weight iteration")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common_args(sub.add_parser("median", help="compute a median per set"), True)
    _add_common_args(sub.add_parser("eval", help="set-median baseline and lower bound per set"),
                     False)

    dist = sub.add_parser("distortion", help="distance preservation of a kernel embedding")
    _add_common_args(dist, False)
    dist.add_argument("--bins", type=int, default=50)

    _add_common_args(sub.add_parser("convergence", help="weight-iteration statistics per set"),
                     False)

    gen = sub.add_parser("gen", help="generate a seeded synthetic dataset")
    gen.add_argument("--domain", required=True, choices=list(DOMAINS))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--sets", type=int, default=1)
    gen.add_argument("--count", type=int, default=20, help="objects per set")
    gen.add_argument("--len-range", type=int, nargs=2, default=[30, 50],
                     metavar=("LO", "HI"), help="string length range")
    gen.add_argument("--alphabet", default=datagen.DEFAULT_ALPHABET)
    gen.add_argument("--m", type=int, default=50,
                     help="elements per clustering / items per ranking")
    gen.add_argument("--k-range", type=int, nargs=2, default=[3, 10], metavar=("LO", "HI"))
    gen.add_argument("--perturb", type=float, default=0.0)
    gen.add_argument("--mode", default="random", choices=["random", "perturbed"])
    gen.add_argument("--tie-prob", type=float, default=0.0)
    gen.add_argument("--output", required=True)
    return parser


def _kernel_spec(args) -> KernelSpec:
    return KernelSpec(
        variant=args.kernel,
        beta=args.beta,
        gamma=args.gamma,
        degree=args.p,
        decay=args.decay,
        subseq_len=args.ulen,
        origin_count=args.origins,
    )


def _validate_combo(domain: str, kernel: str, sets: list[ObjectSet]):
    required = _DOMAIN_KERNELS.get(kernel)
    if required is not None and required != domain:
        raise ConfigurationError(f"kernel {kernel!r} requires domain {required!r}")
    if kernel == "kendall":
        for si, objset in enumerate(sets):
            for oi, ranking in enumerate(objset.objects):
                if any(len(b) > 1 for b in ranking.buckets):
                    raise ConfigurationError(
                        f"kendall kernel cannot handle ties (set {si}, ranking {oi})")


def _emit(report: dict, fmt: str, output, columns: list[str]):
    if fmt == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        for row in report["runs"]:
            writer.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in columns})
        text = buf.getvalue()
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def emit_report(report: dict, fmt: str, output, columns: list[str] | None = None):
    """Serialize a report as a JSON document or a CSV table."""
    _emit(report, fmt, output, columns or REPORT_COLUMNS)


def _cmd_median(args) -> int:
    sets = parse_dataset(args.input, args.domain)
    _validate_combo(args.domain, args.kernel, sets)
    adapter = _ADAPTERS[args.domain]
    spec = _kernel_spec(args)
    cfg = WeiszfeldConfig(j_max=args.jmax, tol=args.tol)
    rcfg = ReconstructionConfig(method=_RECONSTRUCT_FLAGS[args.reconstruct],
                                with_search=args.search)
    rows = []
    for idx, objset in enumerate(sets):
        start = time.perf_counter()
        result = compute_median(objset, spec, cfg, rcfg, adapter, seed=args.seed)
        runtime_ms = (time.perf_counter() - start) * 1000.0
        distance = cached_distance(adapter.distance)
        lb = lower_bound_pairwise(objset, distance)
        nsod = normalized_sod(result.sod, lb) if lb > 0 else None
        rows.append({
            "set": idx,
            "median": serialize_object(args.domain, result.median),
            "sod": _sig9(result.sod),
            "lower_bound": _sig9(lb),
            "normalized_sod": _sig9(nsod),
            "sigma": _sig9(result.sigma),
            "iterations": result.iterations,
            "complex_weight_count": result.complex_weight_count,
            "runtime_ms": _sig9(runtime_ms),
            "kernel": args.kernel,
            "reconstruction": args.reconstruct + ("+search" if args.search else ""),
        })
    emit_report({"runs": rows}, args.format, args.output)
    return 0


def _cmd_eval(args) -> int:
    sets = parse_dataset(args.input, args.domain)
    _validate_combo(args.domain, args.kernel, sets)
    adapter = _ADAPTERS[args.domain]
    rows = []
    for idx, objset in enumerate(sets):
        start = time.perf_counter()
        distance = cached_distance(adapter.distance)
        sods = [sod(objset, o, distance) for o in objset.objects]
        best = int(np.argmin(sods))
        lb = lower_bound_pairwise(objset, distance)
        nsod = normalized_sod(sods[best], lb) if lb > 0 else None
        runtime_ms = (time.perf_counter() - start) * 1000.0
        rows.append({
            "set": idx,
            "median": serialize_object(args.domain, objset[best]),
            "sod": _sig9(sods[best]),
            "lower_bound": _sig9(lb),
            "normalized_sod": _sig9(nsod),
            "sigma": _sig9(sods[best] / objset.n),
            "iterations": 0,
            "complex_weight_count": 0,
            "runtime_ms": _sig9(runtime_ms),
            "kernel": args.kernel,
            "reconstruction": "set-median",
        })
    emit_report({"runs": rows}, args.format, args.output)
    return 0


DISTORTION_COLUMNS = ["set", "pairs", "ratio_mean", "ratio_std", "ratio_min",
                      "ratio_max", "ncc", "zero_norm_pairs"]


def _cmd_distortion(args) -> int:
    sets = parse_dataset(args.input, args.domain)
    _validate_combo(args.domain, args.kernel, sets)
    adapter = _ADAPTERS[args.domain]
    spec = _kernel_spec(args)
    rows = []
    for idx, objset in enumerate(sets):
        distance = cached_distance(adapter.distance)
        report = distortion_ratios(objset, spec, distance, bins=args.bins, seed=args.seed)
        ratios = report.ratios
        edges, counts = report.histogram
        rows.append({
            "set": idx,
            "pairs": int(ratios.size),
            "ratio_mean": _sig9(float(ratios.mean()) if ratios.size else None),
            "ratio_std": _sig9(float(ratios.std()) if ratios.size else None),
            "ratio_min": _sig9(float(ratios.min()) if ratios.size else None),
            "ratio_max": _sig9(float(ratios.max()) if ratios.size else None),
            "ncc": _sig9(report.ncc),
            "zero_norm_pairs": report.zero_norm_pairs,
            "histogram": {
                "edges": [_sig9(e) for e in edges.tolist()],
                "counts": [int(c) for c in counts.tolist()],
            },
        })
    emit_report({"runs": rows}, args.format, args.output, DISTORTION_COLUMNS)
    return 0


CONVERGENCE_COLUMNS = ["set", "iterations", "converged", "complex_weights", "kernel"]


def _cmd_convergence(args) -> int:
    sets = parse_dataset(args.input, args.domain)
    _validate_combo(args.domain, args.kernel, sets)
    adapter = _ADAPTERS[args.domain]
    spec = _kernel_spec(args)
    cfg = WeiszfeldConfig(j_max=args.jmax, tol=args.tol)
    rows = []
    runs = []
    for idx, objset in enumerate(sets):
        distance = cached_distance(adapter.distance)
        gram = gram_matrix(objset, spec, distance, seed=args.seed)
        w = kernel_weiszfeld(gram, cfg)
        runs.append(w)
        rows.append({
            "set": idx,
            "iterations": w.iteration,
            "converged": bool(w.converged),
            "complex_weights": w.complex_count,
            "kernel": args.kernel,
        })
    stats = convergence_stats(runs)
    report = {
        "runs": rows,
        "summary": {
            "max_iter": stats.max_iter,
            "med_iter": stats.med_iter,
            "complex_weight_count": stats.complex_weight_count,
        },
    }
    emit_report(report, args.format, args.output, CONVERGENCE_COLUMNS)
    return 0


def _cmd_gen(args) -> int:
    params: dict
    sets: list
    try:
        if args.domain == "string":
            params = {
                "sets": args.sets, "count": args.count, "len_range": list(args.len_range),
                "alphabet": args.alphabet, "perturb_rate": args.perturb, "mode": args.mode,
            }
            sets = [datagen.gen_strings(args.seed + i, args.count, tuple(args.len_range),
                                        args.alphabet, args.perturb, args.mode)
                    for i in range(args.sets)]
        elif args.domain == "clustering":
            k_range = (min(args.k_range[0], args.m), min(args.k_range[1], args.m))
            params = {
                "sets": args.sets, "count": args.count, "m": args.m,
                "k_range": list(k_range), "perturb_rate": args.perturb, "mode": args.mode,
            }
            sets = [datagen.gen_clusterings(args.seed + i, args.count, args.m,
                                            k_range, args.perturb, args.mode)
                    for i in range(args.sets)]
        else:
            params = {"sets": args.sets, "count": args.count, "m": args.m,
                      "tie_prob": args.tie_prob}
            sets = [datagen.gen_rankings(args.seed + i, args.count, args.m, args.tie_prob)
                    for i in range(args.sets)]
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from exc
    meta = datagen.dataset_metadata(args.domain, args.seed, params)
    written = write_dataset(args.output, args.domain, sets, meta)
    sys.stdout.write("".join(f"{p}\n" for p in written))
    return 0


_COMMANDS = {
    "median": _cmd_median,
    "eval": _cmd_eval,
    "distortion": _cmd_distortion,
    "convergence": _cmd_convergence,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except (DataFormatError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # computation failure
        print(f"computation error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
