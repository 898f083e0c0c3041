"""Write SVG pictures of rank 2 Sommers regions and Shi arrangements.

Run: python3 demos/06_render.py [output-directory]
"""

import os
import sys

from weyl_catalan.core_roots import build_root_system
from weyl_catalan.render import render_svg

out = sys.argv[1] if len(sys.argv) > 1 else "."
os.makedirs(out, exist_ok=True)
for name, kw in [("A2", {"p": 7}), ("A2", {"m": 1}), ("A2", {"m": 2}), ("B2", {"m": 1}), ("G2", {"p": 5})]:
    svg = render_svg(build_root_system(name), dots=True, **kw)
    key, val = next(iter(kw.items()))
    path = os.path.join(out, f"{name}_{key}{val}.svg")
    with open(path, "w") as fh:
        fh.write(svg)
    print(path, svg.count('class="alcove"'), "alcoves")
