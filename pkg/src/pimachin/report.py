"""Matplotlib rendering of convergence and benchmark reports.

Figures are written straight to files (Agg backend); they accompany the
CSV output rather than replacing it.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def save_convergence_figure(report, path: str, title: str = "Convergence") -> str:
    """Correct digits per iteration, log scale on the digit axis."""
    iterations = [r.iteration for r in report.rows]
    digits = [max(r.digits, 1) for r in report.rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(iterations, digits, "o-", color="tab:blue")
    ax.set_xlabel("iteration")
    ax.set_ylabel("correct digits of pi")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_bench_figure(rows, path: str, title: str = "Series benchmark") -> str:
    """Terms used per engine as a bar chart.

    ``rows`` are (engine, terms_used, wall_ms, digits_achieved) tuples in
    output order.
    """
    engines = [r[0] for r in rows]
    terms = [r[1] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(engines, terms, color="tab:orange")
    ax.set_ylabel("series terms used")
    ax.set_title(title)
    for i, t in enumerate(terms):
        ax.text(i, t, str(t), ha="center", va="bottom", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
