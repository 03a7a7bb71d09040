#!/usr/bin/env python3
"""log10 transport map with theory markers from `pseudospin map` JSON.

    pseudospin map --n-rho 201 --n-x 201 --out map.json
    python3 scripts/plot_map.py map.json map.png
"""
import argparse
import json

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

STYLE = {"j0_zero": ("o", "white"), "j1_zero": ("x", "black"), "revival": ("*", "red")}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("json")
    ap.add_argument("png")
    ap.add_argument("--no-markers", action="store_true")
    args = ap.parse_args()

    with open(args.json) as f:
        doc = json.load(f)
    rho = np.array(doc["rho_axis"])
    x = np.array(doc["x_axis"])
    values = np.array([[np.nan if v is None else v for v in row] for row in doc["values"]])

    fig, ax = plt.subplots(figsize=(6, 5))
    mesh = ax.pcolormesh(rho, x, values, shading="auto", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label=r"$\log_{10}(\Sigma_{tr}/R)$")
    if not args.no_markers:
        for family, points in doc["markers"].items():
            if points:
                pts = np.array(points)
                marker, color = STYLE.get(family, (".", "gray"))
                ax.plot(pts[:, 0], pts[:, 1], marker, color=color, ms=3, ls="none", label=family)
        ax.legend(loc="upper left", fontsize=8)
    ax.set_xlim(rho[0], rho[-1])
    ax.set_ylim(x[0], x[-1])
    ax.set_xlabel(r"$V_0 R$")
    ax.set_ylabel("kR")
    ax.set_title(doc.get("kind", ""))
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
