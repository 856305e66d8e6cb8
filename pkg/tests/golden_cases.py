"""CLI invocations with recorded stdout under ``tests/golden``.

Run ``python3 tests/golden_cases.py`` to rewrite the inputs and the
recorded outputs after an intentional change in output format.
"""
import os
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"
INPUTS = GOLDEN / "inputs"

# name, arguments, expected exit status
CASES = [
    ("build_w_ar1", ["build-w", "--model", "ar1", "--phi", "1", "--size", "2"], 0),
    ("build_w_arp", ["build-w", "--model", "arp", "--phi", "0.2,0.1,0.3", "--size", "8"], 0),
    ("build_w_arity", ["build-w", "--model", "ar2", "--phi", "0.5", "--size", "4"], 2),
    ("deconv_ar1_none", ["deconv", "--model", "ar1", "--phi", "0.5", "--size", "6"], 1),
    ("deconv_penta_nonneg", ["deconv", "--model", "ar2", "--shape", "penta", "--phi", "0.5,-1",
                             "--size", "5", "--mask", "10", "--nonneg"], 0),
    ("deconv_arp", ["deconv", "--model", "arp", "--phi", "0.2,0.1,0.3"], 1),
    ("splits_count", ["splits", "--m", "3", "--count-only"], 0),
    ("splits_nonneg_count", ["splits", "--m", "3", "--nonneg", "--count-only"], 0),
    ("splits_bad_m", ["splits", "--m", "0"], 2),
    ("check_norm_valid", ["check-norm", "--series", "series.csv", "--L", "A.json", "--R", "B.json"], 0),
    ("check_norm_perturbed", ["check-norm", "--series", "series.csv", "--L", "A.json", "--R", "B.json",
                              "--W", "W_perturbed.csv"], 1),
    ("check_norm_wrong_length", ["check-norm", "--series", "series_short.csv", "--L", "A.json",
                                 "--R", "B.json"], 2),
    ("check_norm_missing_file", ["check-norm", "--series", "missing.csv", "--L", "A.json",
                                 "--R", "B.json"], 3),
]


def run_cli(args):
    env = dict(os.environ, PYTHONHASHSEED="0")
    return subprocess.run(
        [sys.executable, "-m", "ardeconv", *args],
        cwd=INPUTS, capture_output=True, env=env,
    )


def write_inputs():
    from ardeconv import fileio
    from ardeconv.armodels import build_w_ar1
    from ardeconv.banded import to_dense
    from ardeconv.deconv import ar1_deconv

    INPUTS.mkdir(parents=True, exist_ok=True)
    pair = ar1_deconv(1.0, 4, "01")
    z = [0.5, -1.25, 2.0, 0.75, -0.5]
    W = to_dense(build_w_ar1(1.0, 4)).copy()
    W[0, 0] += 0.1
    (INPUTS / "A.json").write_text(fileio.dumps(pair.A.to_dict()) + "\n")
    (INPUTS / "B.json").write_text(fileio.dumps(pair.B.to_dict()) + "\n")
    (INPUTS / "series.csv").write_text(fileio.series_to_csv(z))
    (INPUTS / "series_short.csv").write_text(fileio.series_to_csv(z[:4]))
    (INPUTS / "W_perturbed.csv").write_text(fileio.matrix_to_csv(W))


if __name__ == "__main__":
    write_inputs()
    for name, args, _ in CASES:
        (GOLDEN / f"{name}.stdout").write_bytes(run_cli(args).stdout)
        print("wrote", name)
