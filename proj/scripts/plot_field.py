#!/usr/bin/env python3
"""Near-field raster from `pseudospin field --format json`.

    pseudospin field --quantity density --format json --out field.json
    python3 scripts/plot_field.py field.json field.png
"""
import argparse
import json

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("json")
    ap.add_argument("png")
    ap.add_argument("--log", action="store_true", help="log10 colour scale")
    args = ap.parse_args()

    with open(args.json) as f:
        doc = json.load(f)
    x = np.array(doc["x_axis"])
    y = np.array(doc["y_axis"])
    values = np.array(doc["values"], dtype=float)
    if args.log:
        values = np.log10(np.abs(values) + 1e-300)

    fig, ax = plt.subplots(figsize=(5.5, 5))
    mesh = ax.pcolormesh(x, y, values, shading="auto", cmap="RdBu_r" if doc["quantity"] == "re_psi2" else "magma")
    fig.colorbar(mesh, ax=ax, label=doc["quantity"])
    ax.add_patch(plt.Circle((0, 0), doc["disk_radius"], fill=False, color="white", lw=0.8))
    ax.set_aspect("equal")
    ax.set_xlabel(r"$x/\lambda$")
    ax.set_ylabel(r"$y/\lambda$")
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
