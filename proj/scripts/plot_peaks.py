#!/usr/bin/env python3
"""Peak height against barrier strength from `pseudospin peaks`, with the
16/rho law and the spin-1/2 Born maximum for reference.

    pseudospin peaks --rho 0.02,0.05,0.1,0.2,0.3 --out spin1.csv
    pseudospin peaks --rho 0.02,0.05,0.1,0.2,0.3 --kind spinhalf --out spinhalf.csv
    python3 scripts/plot_peaks.py spin1.csv spinhalf.csv peaks.png
"""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def load(path):
    return pd.read_csv(path, comment="#")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("spin1")
    ap.add_argument("spinhalf")
    ap.add_argument("png")
    args = ap.parse_args()

    s1 = load(args.spin1)
    sh = load(args.spinhalf)
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.loglog(s1["rho"], s1["height"], "o", label="spin-1")
    ax.loglog(s1["rho"], s1["prediction_16_over_rho"], "-", label=r"$16/\rho$")
    ax.loglog(sh["rho"], sh["height"], "s", label="spin-1/2")
    ax.loglog(sh["rho"], sh["prediction_born"], "--", label=r"$(\pi^2/4)\rho^3$")
    ax.set_xlabel(r"$V_0 R$")
    ax.set_ylabel(r"max $\Sigma_{tr}/R$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
