"""Figure rendering for fronts and Mondrian diagrams.

Matplotlib with the Agg backend, written straight to the requested file;
the suffix picks the format (``.svg`` for the CLI's --svg flag).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def render_front(front, path, crossing_gap=True):
    """Draw a Legendrian front; the over-strand is drawn through the
    crossing, the under-strand briefly interrupted."""
    fig, ax = plt.subplots(figsize=(8, 5))
    for arc in front.arcs:
        xs = [float(x) for (x, _y) in arc]
        ys = [float(y) for (_x, y) in arc]
        ax.plot(xs, ys, color="black", linewidth=1.4, solid_capstyle="round")
    if crossing_gap:
        info = front._analyze()
        for data in info["crossings"]:
            (a1, s1), (a2, s2) = data["hits"]
            under = (a1, s1) if front._segment_slope(a1, s1) > front._segment_slope(a2, s2) else (a2, s2)
            x, y = data["point"]
            ax.plot([float(x)], [float(y)], marker="o", markersize=7,
                    markerfacecolor="white", markeredgecolor="white", zorder=3)
            # redraw the over strand on top
            over = (a1, s1) if under == (a2, s2) else (a2, s2)
            (p1, p2) = front.arcs[over[0]][over[1]], front.arcs[over[0]][over[1] + 1]
            ax.plot([float(p1[0]), float(p2[0])], [float(p1[1]), float(p2[1])],
                    color="black", linewidth=1.4, zorder=4)
    ax.set_aspect("auto")
    ax.axis("off")
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def render_mondrian(m, path):
    """Draw a Mondrian diagram: horizontals in black, verticals in red."""
    fig, ax = plt.subplots(figsize=(8, 5))
    for (y, x1, x2) in m.horizontals:
        ax.plot([float(x1), float(x2)], [float(y), float(y)],
                color="black", linewidth=2.0, solid_capstyle="round")
    for (x, y1, y2) in m.verticals:
        ax.plot([float(x), float(x)], [float(y1), float(y2)],
                color="#bb2222", linewidth=1.6, solid_capstyle="round")
    ax.set_aspect("auto")
    ax.axis("off")
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
