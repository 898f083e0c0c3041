"""SVG pictures of rank 2 alcove sets.

Purely presentational: coroot coordinates are mapped to the plane through
a Cholesky factor of the coroot Gram matrix, so angles and lengths are true
to the root system.  All numbers are printed with fixed precision so the
output is byte-for-byte deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .affine_weyl import AffineWeylElement, aw_invert, enumerate_p_stable
from .core_roots import RootSystem

SCALE = 60.0
MARGIN = 1.15


def _embedding(rs: RootSystem):
    """2x2 lower-triangular L with |L mu|^2 the squared length of the coroot vector mu."""
    n = rs.half_norms
    g = [[float(rs.gram[i][j]) / (n[i] * n[j]) for j in range(2)] for i in range(2)]
    a = math.sqrt(g[0][0])
    b = g[1][0] / a
    c = math.sqrt(g[1][1] - b * b)
    return ((a, 0.0), (b, c))


def _to_plane(L, mu) -> tuple[float, float]:
    x = L[0][0] * float(mu[0]) + L[1][0] * float(mu[1])
    y = L[0][1] * float(mu[0]) + L[1][1] * float(mu[1])
    return (x, -y)


def _alcove_vertices(rs: RootSystem) -> list[tuple[Fraction, ...]]:
    """Vertices of A_o in coroot coordinates: 0 and omega_i^vee / c_i."""
    cinv = rs.cartan_inverse_t
    out = [(Fraction(0),) * rs.rank]
    for i in range(rs.rank):
        out.append(tuple(cinv[j][i] / rs.theta[i] for j in range(rs.rank)))
    return out


def _act(a: AffineWeylElement, v) -> tuple[Fraction, ...]:
    """a . v = w(v + mu) on coroot coordinates."""
    m = a.w.coroot_matrix
    s = [v[i] + a.mu[i] for i in range(len(v))]
    return tuple(sum(m[i][j] * s[j] for j in range(len(s))) for i in range(len(s)))


def _line(L, rs: RootSystem, alpha, k, R):
    """Endpoints of H_alpha^k, a segment of half-length R centred at its point nearest the origin."""
    c = [sum(alpha[i] * rs.cartan[j][i] for i in range(2)) for j in range(2)]
    # plane point u = A mu (before the y flip); <mu, alpha> = c . mu = (A^{-T} c) . u
    det = L[0][0] * L[1][1] - L[1][0] * L[0][1]
    nx = (L[1][1] * c[0] - L[0][1] * c[1]) / det
    ny = -(-L[1][0] * c[0] + L[0][0] * c[1]) / det
    norm2 = nx * nx + ny * ny
    px, py = k * nx / norm2, k * ny / norm2
    d = math.sqrt(norm2)
    dx, dy = -ny / d, nx / d
    return (px - R * dx, py - R * dy), (px + R * dx, py + R * dy)


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(rs: RootSystem, p: int | None = None, m: int | None = None, dots: bool = False) -> str:
    """Draw the Sommers region for p (its p^2 alcoves) or the m-Shi arrangement with its minimal alcoves."""
    if rs.rank != 2:
        raise ValueError("rendering needs a rank 2 root system")
    if (p is None) == (m is None):
        raise ValueError("give exactly one of p and m")
    L = _embedding(rs)
    verts = _alcove_vertices(rs)
    if p is not None:
        shaded = [aw_invert(w) for w in enumerate_p_stable(rs, p)]
        title = f"Sommers region of {rs.name} for p={p}"
        lines = []
    else:
        shaded = enumerate_p_stable(rs, m * rs.h + 1)
        title = f"{m}-Shi arrangement of {rs.name}"
        lines = [(a, k) for a in rs.positive_roots for k in range(-m + 1, m + 1)]
    polys = [[_to_plane(L, _act(a, v)) for v in verts] for a in shaded]
    extent = max(max(abs(x), abs(y)) for poly in polys for x, y in poly)
    R = max(extent, 1.0) * MARGIN
    size = 2 * R * SCALE
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(size)}" height="{_fmt(size)}" '
        f'viewBox="{_fmt(-R * SCALE)} {_fmt(-R * SCALE)} {_fmt(size)} {_fmt(size)}">',
        f"<title>{title}</title>",
        '<clipPath id="view"><rect x="{0}" y="{0}" width="{1}" height="{1}"/></clipPath>'.format(
            _fmt(-R * SCALE), _fmt(size)
        ),
        '<g clip-path="url(#view)">',
    ]
    for poly in polys:
        pts = " ".join(f"{_fmt(x * SCALE)},{_fmt(y * SCALE)}" for x, y in poly)
        out.append(f'<polygon class="alcove" points="{pts}" fill="#c8d8f0" stroke="#6080b0" stroke-width="0.8"/>')
    for a, k in lines:
        (x1, y1), (x2, y2) = _line(L, rs, a, k, 2 * R)
        out.append(
            f'<line class="hyperplane" x1="{_fmt(x1 * SCALE)}" y1="{_fmt(y1 * SCALE)}" '
            f'x2="{_fmt(x2 * SCALE)}" y2="{_fmt(y2 * SCALE)}" stroke="#202020" stroke-width="1.2"/>'
        )
    if dots:
        r = int(R) + 2
        for i in range(-4 * r, 4 * r + 1):
            for j in range(-4 * r, 4 * r + 1):
                x, y = _to_plane(L, (i, j))
                if abs(x) <= R and abs(y) <= R:
                    out.append(f'<circle class="lattice" cx="{_fmt(x * SCALE)}" cy="{_fmt(y * SCALE)}" r="2.5"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
