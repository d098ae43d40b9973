"""Static SVG pictures of the counting polytopes.

Two views: the planar triangle ``T_r`` (n = 3) and an orthographic projection
of the lattice points of the weight slice (n = 3 in ``(s0, s1, s2)``, n = 4 in
the eliminated coordinates ``(s0, s1, s2)``).
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Sequence

from .enumeration import enumerate_compositions, triangle_lattice_points

SIZE = 480
MARGIN = 40


class UnsupportedPlotError(ValueError):
    pass


def _svg(width: int, height: int, body: Iterable[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">\n'
        f'<rect width="{width}" height="{height}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _f(v: float) -> str:
    return f"{v:.2f}"


def triangle_svg(r: int) -> str:
    pts = triangle_lattice_points(r)
    lo, hi = -1, 3 * r + 1
    scale = (SIZE - 2 * MARGIN) / (hi - lo)

    def to_px(x: float, y: float) -> tuple[float, float]:
        return MARGIN + (x - lo) * scale, SIZE - MARGIN - (y - lo) * scale

    body = []
    # axes
    x0, y0 = to_px(0, 0)
    body.append(f'<line x1="{_f(to_px(lo, 0)[0])}" y1="{_f(y0)}" x2="{_f(to_px(hi, 0)[0])}" y2="{_f(y0)}" stroke="#999"/>')
    body.append(f'<line x1="{_f(x0)}" y1="{_f(to_px(0, lo)[1])}" x2="{_f(x0)}" y2="{_f(to_px(0, hi)[1])}" stroke="#999"/>')
    # boundary lines a*x + b*y = c, clipped to the viewport
    lines = [((1, 1), 3 * r, "x+y=3r"), ((2, 1), 4 * r, "2x+y=4r"), ((1, 2), 2 * r, "x+2y=2r"), ((-1, 1), r, "-x+y=r")]
    for (a, b), c, label in lines:
        ends = []
        for t in (lo, hi):
            if b:
                ends.append((t, (c - a * t) / b))
        (xa, ya), (xb, yb) = ends
        pa, pb = to_px(xa, ya), to_px(xb, yb)
        body.append(
            f'<line x1="{_f(pa[0])}" y1="{_f(pa[1])}" x2="{_f(pb[0])}" y2="{_f(pb[1])}" stroke="#36c" stroke-width="1"/>'
        )
        body.append(f'<!-- constraint {label} -->')
    verts = [(0, r), (r, 2 * r), (2 * r, 0)]
    poly = " ".join(f"{_f(px)},{_f(py)}" for px, py in (to_px(*v) for v in verts))
    body.append(f'<polygon points="{poly}" fill="#cde" fill-opacity="0.5" stroke="#036" stroke-width="2"/>')
    for v in verts:
        px, py = to_px(*v)
        body.append(f'<text x="{_f(px + 6)}" y="{_f(py - 6)}">({v[0]},{v[1]})</text>')
    for x, y in pts:
        px, py = to_px(x, y)
        body.append(f'<circle class="lattice-point" cx="{_f(px)}" cy="{_f(py)}" r="4" fill="#c30"/>')
    body.append(f'<text x="{MARGIN}" y="20">T_{r}: {len(pts)} lattice points</text>')
    return _svg(SIZE, SIZE, body)


def _project(p: Sequence[float], yaw: float = math.radians(35), pitch: float = math.radians(25)) -> tuple[float, float, float]:
    x, y, z = p
    x1 = x * math.cos(yaw) - y * math.sin(yaw)
    y1 = x * math.sin(yaw) + y * math.cos(yaw)
    y2 = y1 * math.sin(pitch) + z * math.cos(pitch)
    depth = y1 * math.cos(pitch) - z * math.sin(pitch)
    return x1, y2, depth


def projection_svg(n: int, r: int) -> str:
    if n not in (3, 4):
        raise UnsupportedPlotError(f"3-D projection needs n in (3, 4), got {n}")
    pts = [tuple(s[:3]) for s in enumerate_compositions(n, r)]
    extent = max(max(p) for p in pts) + 1
    axes = [(extent, 0, 0), (0, extent, 0), (0, 0, extent)]
    proj = [_project(p) for p in pts] + [_project(a) for a in axes] + [_project((0, 0, 0))]
    xs = [q[0] for q in proj]
    ys = [q[1] for q in proj]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (SIZE - 2 * MARGIN) / span

    def to_px(q):
        return MARGIN + (q[0] - min(xs)) * scale, SIZE - MARGIN - (q[1] - min(ys)) * scale

    body = []
    origin = to_px(_project((0, 0, 0)))
    for a, name in zip(axes, ("s0", "s1", "s2")):
        end = to_px(_project(a))
        body.append(f'<line x1="{_f(origin[0])}" y1="{_f(origin[1])}" x2="{_f(end[0])}" y2="{_f(end[1])}" stroke="#999"/>')
        body.append(f'<text x="{_f(end[0] + 4)}" y="{_f(end[1])}">{name}</text>')
    # far points first so near ones overdraw them
    order = sorted(range(len(pts)), key=lambda k: -_project(pts[k])[2])
    depths = [_project(p)[2] for p in pts]
    dmin, dmax = min(depths), max(depths)
    for k in order:
        px, py = to_px(_project(pts[k]))
        shade = 0.35 + 0.65 * (1 - (depths[k] - dmin) / ((dmax - dmin) or 1))
        body.append(
            f'<circle class="lattice-point" cx="{_f(px)}" cy="{_f(py)}" r="3.5" fill="#c30" fill-opacity="{shade:.2f}"/>'
        )
    title = "P_3 weight slice" if n == 3 else "T_4 (eliminated coordinates)"
    body.append(f'<text x="{MARGIN}" y="20">{title}, r={r}: {len(pts)} lattice points</text>')
    return _svg(SIZE, SIZE, body)


def plot_polytope(n: int, r: int, path: str | Path, view: str | None = None) -> Path:
    """Write the SVG for ``(n, r)``; ``view`` defaults to 2d for n = 3 and 3d for n = 4."""
    view = view or ("2d" if n == 3 else "3d")
    if view == "2d":
        if n != 3:
            raise UnsupportedPlotError(f"2-D plots exist only for n = 3, got {n}")
        text = triangle_svg(r)
    elif view == "3d":
        text = projection_svg(n, r)
    else:
        raise UnsupportedPlotError(f"unknown view {view!r}")
    path = Path(path)
    path.write_text(text, encoding="utf-8")
    return path
