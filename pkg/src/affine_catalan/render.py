"""Deterministic circle and line drawings of cyclic arc diagrams.

The SVG layout follows the marking convention: residues sit on a circle read
clockwise from the top, points of the up part carry outward spokes, points of
the down part carry inward spokes, and an arc dips inside the circle at the
up-part points it passes and bulges outside at down-part points.
"""

from __future__ import annotations

import math

from .arcs import CyclicArcDiagram, chains_and_loops

_SIZE = 1000
_CENTER = _SIZE / 2
_RADIUS = 320.0


def _angle(position: float, n: int) -> float:
    """Clockwise from the top, one full turn per period."""
    return math.radians(90.0 - (position - 1.0) * 360.0 / n)


def _point(position: float, n: int, radius: float) -> tuple[float, float]:
    theta = _angle(position, n)
    return (_CENTER + radius * math.cos(theta), _CENTER - radius * math.sin(theta))


def _fmt(value: float) -> str:
    return f"{value:.1f}"


def _arc_polyline(d: CyclicArcDiagram, p: int, q: int) -> str:
    """Sample the arc from ``p`` to ``q`` with radius bumps at passed points."""
    n = d.n
    points = []
    steps = max(8, 6 * (q - p))
    for s in range(steps + 1):
        x = p + (q - p) * s / steps
        radius = _RADIUS
        nearest = round(x)
        dist = abs(x - nearest)
        if dist < 0.5 and p < nearest < q:
            bump = (0.5 - dist) * 2  # 1 at the point, 0 half way between points
            direction = -1.0 if d.c.in_L(nearest) else 1.0
            radius += direction * 60.0 * bump
        points.append(_point(x, n, radius))
    body = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in points)
    return f'<polyline fill="none" stroke="black" stroke-width="2" points="{body}"/>'


def render_svg(d: CyclicArcDiagram) -> str:
    """Plain-text SVG with a fixed viewBox; byte-identical across runs."""
    n = d.n
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000">',
        f'<circle cx="{_CENTER:.0f}" cy="{_CENTER:.0f}" r="{_RADIUS:.0f}" '
        'fill="none" stroke="lightgray" stroke-width="1"/>',
    ]
    for r in range(1, n + 1):
        px, py = _point(r, n, _RADIUS)
        if d.c.in_L(r):
            sx, sy = _point(r, n, _RADIUS + 55)
            lx, ly = _point(r, n, _RADIUS + 80)
        else:
            sx, sy = _point(r, n, _RADIUS - 55)
            lx, ly = _point(r, n, _RADIUS - 80)
        lines.append(
            f'<line x1="{_fmt(px)}" y1="{_fmt(py)}" x2="{_fmt(sx)}" y2="{_fmt(sy)}" '
            'stroke="gray" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="28" '
            f'text-anchor="middle" dominant-baseline="middle">{r}</text>'
        )
        lines.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="5" fill="black"/>'
        )
    for arc in d.arcs_sorted():
        lines.append(_arc_polyline(d, arc.p, arc.q))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_annulus_svg(x) -> str:
    """Marked annulus with one closed outline per block of the partition.

    Up-part residues sit on the outer circle, down-part residues on the inner
    one; finite cycles are drawn through their residue points, the annular
    pair as a single outline through the residues of both of its cycles.
    """
    c = x.c
    n = c.n
    outer, inner = 400.0, 200.0

    def spot(r: int) -> tuple[float, float]:
        return _point(r, n, outer if c.in_L(r) else inner)

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000">',
        f'<circle cx="{_CENTER:.0f}" cy="{_CENTER:.0f}" r="{outer:.0f}" fill="none" stroke="black" stroke-width="1"/>',
        f'<circle cx="{_CENTER:.0f}" cy="{_CENTER:.0f}" r="{inner:.0f}" fill="none" stroke="black" stroke-width="1"/>',
    ]
    for r in range(1, n + 1):
        px, py = spot(r)
        lx, ly = _point(r, n, (outer + 35) if c.in_L(r) else (inner - 35))
        lines.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="6" fill="black"/>')
        lines.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="28" '
            f'text-anchor="middle" dominant-baseline="middle">{r}</text>'
        )
    from .core import residue as _residue

    shifted = []
    for cyc in x.cycles:
        if cyc.shift != 0:
            shifted.extend(_residue(v, n) for v in cyc.entries)
            continue
        pts = [spot(_residue(v, n)) for v in cyc.entries]
        body = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in pts)
        shape = "polygon" if len(pts) > 2 else "polyline"
        lines.append(
            f'<{shape} points="{body}" fill="none" stroke="black" stroke-width="2.5"/>'
        )
    if shifted:
        pts = [spot(r) for r in sorted(set(shifted))]
        body = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in pts)
        lines.append(
            f'<polygon points="{body}" fill="none" stroke="black" '
            'stroke-width="2.5" stroke-dasharray="8 6"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_ascii(d: CyclicArcDiagram, periods: int = 3) -> str:
    """Infinite-line picture over a few periods, one row per concrete arc."""
    n = d.n
    lo = 1 - n
    hi = periods * n - n  # window [lo, hi] covers `periods` periods
    positions = list(range(lo, hi + 1))
    col = {x: 4 * (x - lo) for x in positions}
    width = col[hi] + 4
    rows: list[str] = []
    concrete: list[tuple[int, int]] = []
    for arc in d.arcs_sorted():
        k_min = (lo - arc.p) // n
        k_max = (hi - arc.q) // n + 1
        for k in range(k_min, k_max + 1):
            p, q = arc.p + k * n, arc.q + k * n
            if p >= lo and q <= hi:
                concrete.append((p, q))
    for p, q in sorted(concrete):
        row = [" "] * width
        row[col[p]] = "*"
        row[col[q]] = "*"
        for idx in range(col[p] + 1, col[q]):
            if row[idx] == " ":
                row[idx] = "-"
        rows.append("".join(row).rstrip())
    axis = "".join(str(x).ljust(4) for x in positions).rstrip()
    marks = []
    for x in positions:
        marks.append(("L" if d.c.in_L(x) else "R").ljust(4))
    legend = "".join(marks).rstrip()
    pieces = ", ".join(str(g) for g in chains_and_loops(d))
    return "\n".join(rows + [axis, legend, f"chains: {pieces}"]) + "\n"
