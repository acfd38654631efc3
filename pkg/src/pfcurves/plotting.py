"""Static figures (Agg backend) written next to the delimited command output."""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, out_dir, name):
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def rho_vs_k(rows, out_dir, name="families_rho.png"):
    """rows: dicts with name, k, rho (float) and status."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    colors = {"valid": "tab:green", "invalid": "tab:red", "unvalidated": "tab:gray"}
    for status, color in colors.items():
        pts = [r for r in rows if r["status"] == status and r["rho"] is not None]
        if pts:
            ax.scatter([r["k"] for r in pts], [r["rho"] for r in pts], c=color,
                       label=status, s=28)
    for r in rows:
        if r["status"] == "valid" and r["rho"] is not None:
            ax.annotate(r["name"], (r["k"], r["rho"]), fontsize=6, alpha=0.7,
                        xytext=(3, 2), textcoords="offset points")
    ax.set_xlabel("embedding degree k")
    ax.set_ylabel("rho = deg p / deg r")
    ax.set_title("Catalog families")
    ax.legend(fontsize=8)
    return _save(fig, out_dir, name)


def recommend_bits(rows, out_dir, name="recommended_bits.png"):
    """Printed versus reproduced r and p sizes for the recommendation rows."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    labels = [f"{r['curve']}\nk={r['k']}" for r in rows]
    xs = range(len(rows))
    ax.bar([x - 0.2 for x in xs], [r["r_bits"] for r in rows], width=0.4, label="r bits")
    ax.bar([x + 0.2 for x in xs], [r["p_bits"] for r in rows], width=0.4, label="p bits")
    for x, r in zip(xs, rows):
        if r.get("r_bits_actual") is not None:
            ax.plot([x - 0.2, x + 0.2], [r["r_bits_actual"], r["p_bits_actual"]], "kx")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, fontsize=6)
    ax.set_ylabel("bits")
    ax.set_title("Recommended curves (x: reproduced from seed)")
    ax.legend(fontsize=8)
    return _save(fig, out_dir, name)


def bilinearity_grid(table, r, out_dir, name="bilinearity.png"):
    """table: rows with a, b and ok; drawn as an r x r pass/fail grid."""
    import numpy as np
    grid = np.full((r, r), np.nan)
    for row in table:
        grid[row["a"], row["b"]] = 1.0 if row["ok"] else 0.0
    fig, ax = plt.subplots(figsize=(4.5, 4))
    im = ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1, origin="lower")
    ax.set_xlabel("b")
    ax.set_ylabel("a")
    ax.set_title("e(aP, bQ) == e(P, Q)^(ab)")
    fig.colorbar(im, ax=ax, ticks=[0, 1])
    return _save(fig, out_dir, name)


def rho_histogram(values, out_dir, name="cocks_pinch_rho.png"):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(values, bins=20, color="tab:blue", alpha=0.8)
    ax.axvline(2.0, color="k", ls="--", lw=1)
    ax.set_xlabel("log p / log r")
    ax.set_ylabel("runs")
    ax.set_title("Cocks-Pinch rho")
    return _save(fig, out_dir, name)


def search_hits(instances, out_dir, name="search_hits.png"):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter([i.r_bits for i in instances], [i.p_bits for i in instances], s=14)
    ax.set_xlabel("r bits")
    ax.set_ylabel("p bits")
    ax.set_title("Search hits")
    return _save(fig, out_dir, name)


def security_curves(out_dir, name="security_estimates.png", max_bits=20000):
    from .security import C_GENERAL, C_SPECIAL, all_bands, l_notation_bits
    xs = list(range(256, max_bits, 64))
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for c in (C_GENERAL, C_SPECIAL):
        ax.plot(xs, [l_notation_bits(x, 1 / 3, c) for x in xs], label=f"L[1/3, {c}]")
    for band in all_bands():
        ax.axhspan(band.security_bits - 0.5, band.security_bits + 0.5, color="gray", alpha=0.3)
        ax.axvspan(band.pk_bits_min, band.pk_bits_max, color="tab:orange", alpha=0.08)
    ax.set_xlabel("p^k bits")
    ax.set_ylabel("estimated security (bits)")
    ax.set_title("NFS estimates, o(1) = 0")
    ax.legend(fontsize=8)
    return _save(fig, out_dir, name)
