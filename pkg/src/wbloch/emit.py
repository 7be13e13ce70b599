"""Deterministic CSV and SVG writers.

Numbers are printed with ``format(value, ".9g")``: nine significant digits
with trailing zeros stripped. Files are UTF-8 with LF line endings and carry
no timestamps, so identical inputs give byte-identical files.
"""
import csv
import io
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .observables import IntensityMap


def fmt(value) -> str:
    text = format(float(value), ".9g")
    return "0" if text == "-0" else text


def _table(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) if not isinstance(v, str) else v for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def intensity_csv(imap: IntensityMap) -> str:
    """``tau,site,intensity`` rows ordered by time index, then site."""
    sites = imap.sites
    rows = ((tau, str(int(site)), value)
            for tau, row in zip(imap.tau_grid, imap.values)
            for site, value in zip(sites, row))
    return _table(("tau", "site", "intensity"), rows)


def emit_csv(imap: IntensityMap, path):
    _write(path, intensity_csv(imap))


def load_intensity_csv(path, params=None, input_descriptor="") -> IntensityMap:
    """Read a ``tau,site,intensity`` file back into an :class:`IntensityMap`.

    The file does not record the lattice; pass ``params`` to reattach it.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        records = [(float(r["tau"]), int(r["site"]), float(r["intensity"]))
                   for r in csv.DictReader(fh)]
    if not records:
        raise ValueError(f"{path} holds no intensity rows")
    taus = sorted({t for t, _, _ in records})
    sites = sorted({s for _, s, _ in records})
    t_index = {t: i for i, t in enumerate(taus)}
    values = np.full((len(taus), sites[-1] - sites[0] + 1), np.nan)
    for t, s, v in records:
        values[t_index[t], s - sites[0]] = v
    if np.isnan(values).any():
        raise ValueError(f"{path} is not a complete tau x site grid")
    return IntensityMap(values, np.array(taus), params, input_descriptor, sites[0])


def profile_csv(amplitudes, site_origin=1) -> str:
    amps = np.asarray(amplitudes, dtype=complex)
    rows = ((str(site_origin + i), a.real, a.imag) for i, a in enumerate(amps))
    return _table(("site", "re", "im"), rows)


def spectrum_csv(k_grid, values) -> str:
    values = np.asarray(values, dtype=complex)
    rows = ((k, v.real, v.imag, abs(v) ** 2) for k, v in zip(k_grid, values))
    return _table(("k", "re", "im", "abs2"), rows)


def twobeam_csv(thetas, intensities) -> str:
    return _table(("theta", "intensity"), zip(thetas, intensities))


def _gray(level):
    v = int(round(255 * min(max(level, 0.0), 1.0)))
    return f"#{v:02x}{v:02x}{v:02x}"


def svg_heatmap(imap: IntensityMap, title=None) -> str:
    """Standalone SVG heat map: time along x, site along y (first site on top).

    Cells are filled on a linear gray ramp from black (zero) to white (the
    map's maximum). The normalisation constant is stored in ``<desc>`` and
    printed under the plot. An all-zero map is drawn black with constant 1.
    """
    values = imap.values
    n_t, n_s = values.shape
    if n_t == 0 or n_s == 0:
        raise ValueError("cannot draw an empty intensity map")
    peak = float(values.max())
    norm = peak if peak > 0 else 1.0
    cell_w = max(1, 800 // n_t)
    cell_h = max(4, 400 // n_s)
    left, top, bottom, right = 70, 40, 60, 20
    width = left + cell_w * n_t + right
    height = top + cell_h * n_s + bottom
    title = escape(title or f"intensity map ({imap.input_descriptor or 'input'})")

    out = io.StringIO()
    out.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    out.write(f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
              f'viewBox="0 0 {width} {height}">\n')
    out.write(f"<title>{title}</title>\n")
    alpha = "" if imap.params is None else f" alpha={fmt(imap.params.alpha)}"
    out.write(f"<desc>normalization={fmt(norm)}{alpha} tau_steps={n_t} sites={n_s}</desc>\n")
    out.write('<g shape-rendering="crispEdges">\n')
    for i in range(n_t):
        x = left + i * cell_w
        for j in range(n_s):
            y = top + j * cell_h
            out.write(f'<rect x="{x}" y="{y}" width="{cell_w}" height="{cell_h}" '
                      f'fill="{_gray(values[i, j] / norm)}"/>\n')
    out.write("</g>\n")
    font = 'font-family="sans-serif" font-size="12"'
    x_mid = left + cell_w * n_t // 2
    y_axis = top + cell_h * n_s
    out.write(f'<text x="{left}" y="{top - 14}" {font}>{title}</text>\n')
    out.write(f'<text x="{x_mid}" y="{y_axis + 36}" {font} text-anchor="middle">tau</text>\n')
    out.write(f'<text x="{left}" y="{y_axis + 16}" {font}>{fmt(imap.tau_grid[0])}</text>\n')
    out.write(f'<text x="{left + cell_w * n_t}" y="{y_axis + 16}" {font} text-anchor="end">'
              f'{fmt(imap.tau_grid[-1])}</text>\n')
    out.write(f'<text x="18" y="{top + cell_h * n_s // 2}" {font} text-anchor="middle" '
              f'transform="rotate(-90 18 {top + cell_h * n_s // 2})">site</text>\n')
    sites = imap.sites
    out.write(f'<text x="{left - 6}" y="{top + cell_h}" {font} text-anchor="end">{sites[0]}</text>\n')
    out.write(f'<text x="{left - 6}" y="{y_axis}" {font} text-anchor="end">{sites[-1]}</text>\n')
    out.write(f'<text x="{width - right}" y="{height - 8}" {font} text-anchor="end">'
              f'white = {fmt(norm)}</text>\n')
    out.write("</svg>\n")
    return out.getvalue()


def emit_svg_heatmap(imap: IntensityMap, path, title=None):
    _write(path, svg_heatmap(imap, title))
