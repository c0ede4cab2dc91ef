#!/usr/bin/env python3
# Copyright 2026 The ghzturb Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Plots a `ghzturb sweep` CSV: entropy and tangle against theta, and entropy against tangle.

Usage:
    ghzturb sweep --out sweep.csv
    python3 scripts/plot_sweep.py sweep.csv --out sweep.png

Requires matplotlib.
"""

import argparse
import collections
import csv
import sys


def load(path):
    curves = collections.OrderedDict()
    with open(path, newline="") as f:
        rows = csv.DictReader(line for line in f if not line.startswith("#"))
        for row in rows:
            curve = curves.setdefault(row["arms"], {"theta": [], "entropy": [], "tangle": []})
            for key in curve:
                curve[key].append(float(row[key]))
    return curves


def main(argv):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", help="sweep CSV written by ghzturb")
    parser.add_argument("--out", help="image path; shows a window when omitted")
    args = parser.parse_args(argv)

    import matplotlib
    if args.out:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    curves = load(args.csv)
    fig, axes = plt.subplots(1, 3, figsize=(14, 4))
    for arms, c in curves.items():
        label = "arms " + ",".join(arms)
        axes[0].plot(c["theta"], c["entropy"], label=label)
        axes[1].plot(c["theta"], c["tangle"], label=label)
        axes[2].scatter(c["tangle"], c["entropy"], s=6, label=label)
    axes[0].set(xlabel="theta", ylabel="linear entropy")
    axes[1].set(xlabel="theta", ylabel="tangle")
    axes[2].set(xlabel="tangle", ylabel="linear entropy")
    for ax in axes:
        ax.legend()
    fig.tight_layout()
    if args.out:
        fig.savefig(args.out, dpi=150)
    else:
        plt.show()
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
