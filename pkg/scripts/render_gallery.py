"""Write a small gallery of SVG figures to a directory.

Usage: python scripts/render_gallery.py [OUTDIR]

For a few parameter sets, renders the base path and the corner path in
both styles, plus one diagram with the sweep line through each step of
the base path.
"""

import pathlib
import sys

from sweeplab import base_path, corner_path, make_params
from sweeplab.render import render_diagram, render_grid


def gallery(outdir: pathlib.Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for (m, n, d) in [(3, 2, 1), (5, 3, 1), (2, 1, 2)]:
        params = make_params(m, n, d)
        tag = f"{m}x{n}x{d}"
        for name, word in [("base", base_path(params)), ("corner", corner_path(params))]:
            (outdir / f"{tag}_{name}_grid.svg").write_text(render_grid(word))
            (outdir / f"{tag}_{name}_diagram.svg").write_text(render_diagram(word))
        base = base_path(params)
        for step in range(1, len(base) + 1):
            svg = render_diagram(base, highlight=step)
            (outdir / f"{tag}_base_sweepline_{step}.svg").write_text(svg)
    print(f"wrote {len(list(outdir.glob('*.svg')))} figures to {outdir}")


if __name__ == "__main__":
    gallery(pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path("figures"))
