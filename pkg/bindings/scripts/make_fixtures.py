"""Regenerate tests/fixtures/cases.json from the core library.

Expected values are produced by direct core API calls, never through the
CLI, so the vitest suite checks true wrapper-vs-core parity. Run from the
bindings/ directory:

    python3 scripts/make_fixtures.py
"""

import json
import pathlib

import numpy as np

import spikeinfo as si

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "cases.json"


def series(values):
    return si.SymbolSeries(values, int(max(values)) + 1)


def estimate(res):
    return {
        "value": res.value,
        "method": res.method,
        "n": res.n,
        "m": res.bins,
        "occupied_bins": res.occupied_bins,
        "correction": res.correction,
    }


def main():
    rng = np.random.default_rng(123)
    seq4 = rng.integers(0, 4, size=60).tolist()
    pair_x = rng.integers(0, 2, size=400).tolist()
    pair_y = rng.integers(0, 3, size=400).tolist()
    cx, cy = si.coupled_binary_pair(0.85, 1, 3000, np.random.default_rng(7))
    cx, cy = cx.symbols.tolist(), cy.symbols.tolist()

    def hist(values, bins):
        return si.build_histogram(values, si.DiscreteBinning(bins))

    te_stat = lambda s, t: si.te_plugin(s, t, 1, 1).value  # noqa: E731
    perm = si.permutation_test(te_stat, series(cx), series(cy), n_surrogates=19, seed=7)
    train = si.simulate_poisson(5.0, 3.0, np.random.default_rng(11))
    gx, gy = si.coupled_binary_pair(0.7, 1, 64, np.random.default_rng(13))

    cases = [
        {
            "name": "entropy_mle uniform pair of coin flips",
            "kind": "entropy_mle",
            "input": {"symbols": [0, 0, 1, 1], "bins": 2},
            "expected": estimate(si.entropy_mle(hist([0, 0, 1, 1], 2))),
        },
        {
            "name": "entropy_mle alphabet-4 sequence",
            "kind": "entropy_mle",
            "input": {"symbols": seq4, "bins": 4},
            "expected": estimate(si.entropy_mle(hist(seq4, 4))),
        },
        {
            "name": "entropy_mm alphabet-4 sequence",
            "kind": "entropy_mm",
            "input": {"symbols": seq4, "bins": 4},
            "expected": estimate(si.entropy_miller_madow(hist(seq4, 4))),
        },
        {
            "name": "entropy_jk alphabet-4 sequence",
            "kind": "entropy_jk",
            "input": {"symbols": seq4, "bins": 4},
            "expected": estimate(si.entropy_jackknife(seq4, si.DiscreteBinning(4))),
        },
        {
            "name": "mutual_information independent draws",
            "kind": "mutual_information",
            "input": {"x": pair_x, "y": pair_y},
            "expected": estimate(si.mi_plugin(series(pair_x), series(pair_y))),
        },
        {
            "name": "mutual_information self",
            "kind": "mutual_information",
            "input": {"x": seq4, "y": seq4},
            "expected": estimate(si.mi_plugin(series(seq4), series(seq4))),
        },
        {
            "name": "transfer_entropy coupled pair forward",
            "kind": "transfer_entropy",
            "input": {"source": cx, "target": cy, "k": 1, "l": 1},
            "expected": estimate(si.te_plugin(series(cx), series(cy), 1, 1)),
        },
        {
            "name": "transfer_entropy coupled pair reverse",
            "kind": "transfer_entropy",
            "input": {"source": cy, "target": cx, "k": 1, "l": 1},
            "expected": estimate(si.te_plugin(series(cy), series(cx), 1, 1)),
        },
        {
            "name": "permutation_test coupled pair",
            "kind": "permutation_test",
            "input": {"source": cx, "target": cy, "k": 1, "l": 1, "surrogates": 19, "seed": 7},
            "expected": {
                **estimate(si.te_plugin(series(cx), series(cy), 1, 1)),
                "p_value": perm.p_value,
                "surrogate_count": perm.surrogate_count,
                "scheme": perm.scheme,
                "null_values": list(perm.null_values),
            },
        },
        {
            "name": "simulate_poisson timestamps",
            "kind": "simulate_poisson",
            "input": {"rate": 5.0, "duration": 3.0, "seed": 11},
            "expected": {"timestamps": train.timestamps.tolist()},
        },
        {
            "name": "coupled_pair arrays",
            "kind": "coupled_pair",
            "input": {"coupling": 0.7, "lag": 1, "length": 64, "seed": 13},
            "expected": {"x": gx.symbols.tolist(), "y": gy.symbols.tolist()},
        },
    ]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(cases, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(cases)} cases to {OUT}")


if __name__ == "__main__":
    main()
