"""
Bruhat pictures: overlaid permutation matrices with difference-table
shading, as ASCII grids or SVG.

Rows are positions increasing downward, columns are values increasing
rightward.  Open circles mark entries of mat(w), filled disks entries of
mat(x), and a disk with a concentric circle marks coincidences.  Cell
backgrounds encode the difference table: light for d = 1, dark for d >= 2.
"""

from __future__ import annotations

from .perm import Perm
from .bruhat import bruhat_leq, diff_table

_CELL = 24  # SVG cell size in user units

_LIGHT = "#d4d4d4"
_DARK = "#8f8f8f"


def _require_pair(x: Perm, w: Perm) -> None:
    if len(x) != len(w):
        raise ValueError("size mismatch")
    if not bruhat_leq(x, w):
        raise ValueError("x is not <= w in Bruhat order; shading is undefined")


def diagram_ascii(x: Perm, w: Perm, annotate: bool = False) -> str:
    """
    ASCII Bruhat picture.  Marker cells show o (w), * (x), or @ (both);
    other cells show the difference-table value as a digit, with 0
    rendered as '.' unless ``annotate`` is set.
    """
    _require_pair(x, w)
    n = len(w)
    d = diff_table(x, w).d
    header = "    " + " ".join(f"{q:>2}" for q in range(1, n + 1))
    lines = [header]
    for p in range(1, n + 1):
        cells = []
        for q in range(1, n + 1):
            wp = w[p - 1] == q
            xp = x[p - 1] == q
            if wp and xp:
                cell = "@"
            elif xp:
                cell = "*"
            elif wp:
                cell = "o"
            else:
                v = int(d[p, q])
                cell = str(v) if (v or annotate) else "."
            cells.append(f"{cell:>2}")
        lines.append(f"{p:>3} " + " ".join(cells))
    return "\n".join(lines)


def diagram_svg(x: Perm, w: Perm, annotate: bool = False) -> str:
    """
    SVG Bruhat picture on a fixed 24-unit cell grid; deterministic output.
    """
    _require_pair(x, w)
    n = len(w)
    d = diff_table(x, w).d
    margin = _CELL
    size = margin + n * _CELL + _CELL // 2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            v = int(d[p, q])
            if v:
                fill = _LIGHT if v == 1 else _DARK
                parts.append(
                    f'<rect x="{margin + (q - 1) * _CELL}" y="{margin + (p - 1) * _CELL}" '
                    f'width="{_CELL}" height="{_CELL}" fill="{fill}"/>'
                )
    for i in range(n + 1):
        off = margin + i * _CELL
        end = margin + n * _CELL
        parts.append(
            f'<line x1="{off}" y1="{margin}" x2="{off}" y2="{end}" '
            f'stroke="#b0b0b0" stroke-width="1"/>'
        )
        parts.append(
            f'<line x1="{margin}" y1="{off}" x2="{end}" y2="{off}" '
            f'stroke="#b0b0b0" stroke-width="1"/>'
        )
    for p in range(1, n + 1):
        cx_w = margin + (w[p - 1] - 1) * _CELL + _CELL // 2
        cx_x = margin + (x[p - 1] - 1) * _CELL + _CELL // 2
        cy = margin + (p - 1) * _CELL + _CELL // 2
        parts.append(
            f'<circle cx="{cx_w}" cy="{cy}" r="8" fill="none" stroke="black" stroke-width="1.5"/>'
        )
        parts.append(f'<circle cx="{cx_x}" cy="{cy}" r="4.5" fill="black"/>')
    if annotate:
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                tx = margin + (q - 1) * _CELL + 2
                ty = margin + p * _CELL - 2
                parts.append(
                    f'<text x="{tx}" y="{ty}" font-size="7" fill="#303030">{int(d[p, q])}</text>'
                )
    for q in range(1, n + 1):
        parts.append(
            f'<text x="{margin + (q - 1) * _CELL + _CELL // 2 - 3}" y="{margin - 6}" '
            f'font-size="10" fill="#303030">{q}</text>'
        )
    for p in range(1, n + 1):
        parts.append(
            f'<text x="4" y="{margin + (p - 1) * _CELL + _CELL // 2 + 4}" '
            f'font-size="10" fill="#303030">{p}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
