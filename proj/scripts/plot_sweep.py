#!/usr/bin/env python3
"""Transport cross section against kR from `pseudospin sweep` CSV output.

    pseudospin sweep --rho 0.1 --log --out sweep.csv
    python3 scripts/plot_sweep.py sweep.csv sweep.png
"""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv")
    ap.add_argument("png")
    args = ap.parse_args()

    data = pd.read_csv(args.csv, comment="#")
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(data["x"], data["sigma_transport_over_R"], label="exact")
    ax.semilogy(data["x"], data["sigma_closed_eq5"], "--", label="closed form")
    ax.semilogy(data["x"], data["sigma_total_over_R"], ":", label="total")
    ax.set_xlabel("kR")
    ax.set_ylabel(r"$\Sigma_{tr}/R$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
