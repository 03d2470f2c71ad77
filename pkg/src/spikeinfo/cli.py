"""Command-line front end.

Subcommands simulate processes, estimate entropy / mutual information /
transfer entropy from CSV series, solve channel capacities, and analyze
spike-train files.  Every invocation emits one JSON report that validates
against the packaged schema; byte content is fully determined by the flags
plus the seed.

Exit codes: 0 success, 1 runtime failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

import jsonschema
import numpy as np

from . import __version__, estimators, measures, significance, spiketrains
from .errors import SpikeInfoError
from .processes import SpikeTrain, SymbolSeries, coupled_binary_pair, simulate_poisson


def _load_schema() -> dict:
    with resources.files(__package__).joinpath("report_schema.json").open("rb") as fh:
        return json.load(fh)


def read_symbol_series(path: str) -> SymbolSeries:
    values = _read_single_column(path, header="s", dtype=int)
    if values.size == 0:
        raise SpikeInfoError(f"InvalidInput: {path} holds no symbols")
    return SymbolSeries(values, alphabet_size=int(values.max()) + 1)


def read_spike_train(path: str, duration: float | None = None) -> SpikeTrain:
    times = _read_single_column(path, header="t", dtype=float)
    if duration is None:
        duration = float(times[-1]) + 1e-9 if times.size else 1.0
    return SpikeTrain(times, duration)


def _read_single_column(path: str, header: str, dtype) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or lines[0] != header:
        raise SpikeInfoError(f"InvalidInput: expected single-column CSV with header {header!r}")
    return np.array([dtype(ln) for ln in lines[1:]], dtype=dtype)


def _write_series_csv(path: str, symbols: np.ndarray) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("s\n")
        fh.writelines(f"{int(s)}\n" for s in symbols)


def _write_train_csv(path: str, timestamps: np.ndarray) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("t\n")
        fh.writelines(f"{float(t)!r}\n" for t in timestamps)


def _estimate_result_dict(res: estimators.EstimatorResult) -> dict:
    return {
        "value_bits": res.value,
        "method": res.method,
        "n": res.n,
        "bins": res.bins,
        "occupied_bins": res.occupied_bins,
        "correction_bits": res.correction,
    }


def _emit(report: dict, path: str | None) -> None:
    jsonschema.validate(report, _load_schema())
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _entropy_estimate(series: SymbolSeries, bins: int, method: str) -> estimators.EstimatorResult:
    binning = estimators.DiscreteBinning(bins)
    if method == "jk":
        return estimators.entropy_jackknife(series.symbols, binning)
    hist = estimators.build_histogram(series.symbols, binning)
    if method == "mm":
        return estimators.entropy_miller_madow(hist)
    return estimators.entropy_mle(hist)


def _cmd_simulate(args) -> dict:
    rng = np.random.default_rng(args.seed)
    if args.kind == "poisson":
        train = simulate_poisson(args.rate, args.duration, rng)
        _write_train_csv(args.output, train.timestamps)
        return {"kind": "poisson", "outputs": {"train": args.output}, "n_events": train.count}
    if args.kind == "uniform":
        symbols = rng.integers(0, args.alphabet, size=args.length)
        _write_series_csv(args.output, symbols)
        return {"kind": "uniform", "outputs": {"series": args.output}, "n_symbols": args.length}
    x, y = coupled_binary_pair(args.coupling, args.lag, args.length, rng)
    _write_series_csv(args.output_x, x.symbols)
    _write_series_csv(args.output_y, y.symbols)
    return {
        "kind": "coupled-pair",
        "outputs": {"x": args.output_x, "y": args.output_y},
        "length": args.length,
    }


def _cmd_entropy(args) -> dict:
    series = read_symbol_series(args.input)
    return _estimate_result_dict(_entropy_estimate(series, args.bins, args.method))


def _cmd_mi(args) -> dict:
    x = read_symbol_series(args.input_x)
    y = read_symbol_series(args.input_y)
    return _estimate_result_dict(estimators.mi_plugin(x, y))


def _cmd_te(args) -> dict:
    source = read_symbol_series(args.source)
    target = read_symbol_series(args.target)
    result = _estimate_result_dict(estimators.te_plugin(source, target, args.k, args.l))
    if args.surrogates is not None:
        report = significance.permutation_test(
            lambda s, t: estimators.te_plugin(s, t, args.k, args.l).value,
            source,
            target,
            n_surrogates=args.surrogates,
            seed=args.seed,
        )
        result.update(
            p_value=report.p_value,
            surrogate_count=report.surrogate_count,
            scheme=report.scheme,
            null_values_bits=list(report.null_values),
        )
    return result


def _cmd_capacity(args) -> dict:
    with open(args.channel, encoding="utf-8") as fh:
        matrix = json.load(fh)
    capacity, optimal, bounds = measures.blahut_arimoto(np.asarray(matrix, dtype=float), args.tol)
    return {
        "capacity_bits": capacity,
        "input_distribution": [float(v) for v in optimal],
        "tolerance_bits": args.tol,
        "iterations": len(bounds),
    }


def _cmd_spike_entropy(args) -> dict:
    train = read_spike_train(args.input, args.duration)
    binned = spiketrains.bin_spikes(train, args.dt)
    word_series = spiketrains.words(binned, args.word_length, args.stride)
    res = _entropy_estimate(word_series.as_symbols(), word_series.alphabet_size, args.method)
    out = _estimate_result_dict(res)
    out.update(
        n_spikes=train.count,
        n_bins_time=len(binned),
        duration_s=train.duration,
        word_length=args.word_length,
    )
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spikeinfo",
        description="Entropy, mutual information, and transfer entropy on discrete series.",
    )
    parser.add_argument("--report", help="write the JSON report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="generate fixture data")
    sim.add_argument("kind", choices=["poisson", "uniform", "coupled-pair"])
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--rate", type=float, help="poisson: rate in Hz")
    sim.add_argument("--duration", type=float, help="poisson: window in seconds")
    sim.add_argument("--alphabet", type=int, help="uniform: alphabet size")
    sim.add_argument("--length", type=int, help="series length")
    sim.add_argument("--coupling", type=float, help="coupled-pair: copy probability")
    sim.add_argument("--lag", type=int, default=1, help="coupled-pair: coupling lag")
    sim.add_argument("--output", help="output CSV (poisson, uniform)")
    sim.add_argument("--output-x", help="coupled-pair: X output CSV")
    sim.add_argument("--output-y", help="coupled-pair: Y output CSV")
    sim.set_defaults(func=_cmd_simulate)

    ent = sub.add_parser("entropy", help="entropy of a symbol series")
    ent.add_argument("--input", required=True)
    ent.add_argument("--bins", type=int, required=True)
    ent.add_argument("--method", choices=["mle", "mm", "jk"], default="mle")
    ent.set_defaults(func=_cmd_entropy)

    mi = sub.add_parser("mi", help="mutual information between two series")
    mi.add_argument("--input-x", required=True)
    mi.add_argument("--input-y", required=True)
    mi.set_defaults(func=_cmd_mi)

    te = sub.add_parser("te", help="transfer entropy source -> target")
    te.add_argument("--source", required=True)
    te.add_argument("--target", required=True)
    te.add_argument("--k", type=int, default=1, help="target history length")
    te.add_argument("--l", type=int, default=1, help="source history length")
    te.add_argument("--surrogates", type=int, help="run a permutation test with this many surrogates")
    te.add_argument("--seed", type=int, help="base seed for the surrogate generators")
    te.set_defaults(func=_cmd_te)

    cap = sub.add_parser("capacity", help="capacity of a discrete memoryless channel")
    cap.add_argument("--channel", required=True, help="JSON file holding the row-stochastic matrix")
    cap.add_argument("--tol", type=float, default=1e-9)
    cap.set_defaults(func=_cmd_capacity)

    spk = sub.add_parser("spike-entropy", help="direct-method word entropy of a spike train")
    spk.add_argument("--input", required=True)
    spk.add_argument("--dt", type=float, required=True, help="bin width in seconds")
    spk.add_argument("--duration", type=float, help="observation window (defaults past the last spike)")
    spk.add_argument("--word-length", type=int, default=1)
    spk.add_argument("--stride", type=int, default=1)
    spk.add_argument("--method", choices=["mle", "mm", "jk"], default="mle")
    spk.set_defaults(func=_cmd_spike_entropy)
    return parser


def _validate(args) -> None:
    if args.command == "simulate":
        needed = {
            "poisson": ["rate", "duration", "output"],
            "uniform": ["alphabet", "length", "output"],
            "coupled-pair": ["coupling", "length", "output_x", "output_y"],
        }[args.kind]
        missing = [name for name in needed if getattr(args, name) is None]
        if missing:
            raise SpikeInfoError(
                f"MissingArgument: simulate {args.kind} requires --"
                + ", --".join(m.replace("_", "-") for m in missing)
            )
    if args.command == "te" and args.surrogates is not None and args.seed is None:
        raise SpikeInfoError("MissingArgument: --surrogates requires --seed")


def _config_echo(args) -> dict:
    skip = {"func", "report", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def run(argv: list[str] | None = None) -> int:
    """Parse, execute, and emit a report; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    try:
        _validate(args)
        result = args.func(args)
    except SpikeInfoError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - boundary of the process
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    report = {
        "command": args.command,
        "config": _config_echo(args),
        "result": result,
        "tool": {"name": "spikeinfo", "version": __version__},
    }
    _emit(report, args.report)
    return 0


def main() -> None:
    raise SystemExit(run())
