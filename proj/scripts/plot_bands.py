#!/usr/bin/env python3
"""Three-band tight-binding dispersion from `pseudospin bands`.

    pseudospin bands --path G-X-M-G --out bands.csv
    python3 scripts/plot_bands.py bands.csv bands.png
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
    fig, ax = plt.subplots(figsize=(5, 4))
    for band in ("lower", "flat", "upper"):
        ax.plot(data["t"], data[band], label=band)
    ax.set_xlabel("path length")
    ax.set_ylabel(r"$\beta - \beta_0$ offset")
    ax.set_xlim(data["t"].iloc[0], data["t"].iloc[-1])
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
