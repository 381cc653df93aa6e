"""Sample the figures exactly and export them.

Every vertex is an exact rational; the residual of each element against its
defining surface is computed before conversion to floats.

Run: python3 demos/04_figures.py [output-directory]
"""

import sys
from pathlib import Path

from laguerre3.export import write
from laguerre3.figures import FigureSpec, generate

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures_out")
out.mkdir(parents=True, exist_ok=True)

captions = {
    2: "shears of the cubic C on the cylinder x2 = x1^2",
    3: "translates of C and of the cylinder under gamma1",
    4: "ruled surface swept by gamma1 orbits",
    5: "gamma2 images of C on the Cayley surface",
    6: "the Cayley surface as a union of gamma2 orbits",
}
for n, caption in captions.items():
    mesh = generate(FigureSpec(n, samples=32, grid=16))
    worst = max(mesh.residuals().values())
    paths = [write(mesh, fmt, out / f"figure{n}.{fmt}") for fmt in ("obj", "svg")]
    print(f"figure {n}: {caption}")
    print(f"  {len(mesh.vertices)} vertices, {len(mesh.elements)} elements, largest residual {worst}")
    print(f"  wrote {', '.join(str(p) for p in paths)}")
