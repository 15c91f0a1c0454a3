#!/usr/bin/env python3
"""Regenerate src/hts/_quantile_tables.py.

Computes the 5/25/50/75/95% quantiles of the S0-standardized stable law on an
(alpha, beta) grid by root-finding on the characteristic-function CDF, and
writes them out as a frozen module.  The quantile fitter interpolates these
surfaces.  Only beta >= 0 is computed; beta < 0 follows from the reflection
Q_p(alpha, -beta) = -Q_(1-p)(alpha, beta).

Run from the repository root:  python3 tools/gen_stable_quantile_tables.py
"""

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hts.stable import _quantile_std  # noqa: E402

ALPHAS = [round(float(a), 2) for a in np.arange(0.5, 1.95, 0.1)] + [1.95, 2.0]
BETAS_POS = [0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0]
PS = [5, 25, 50, 75, 95]


def main():
    n_a = len(ALPHAS)
    betas = sorted({-b for b in BETAS_POS} | set(BETAS_POS))
    n_b = len(betas)
    tables = {p: np.zeros((n_a, n_b)) for p in PS}
    t0 = time.time()
    for i, alpha in enumerate(ALPHAS):
        for b_pos in BETAS_POS:
            if alpha == 2.0 and b_pos > 0.0:
                # skew is irrelevant at alpha = 2
                for p in PS:
                    jp = betas.index(b_pos)
                    jm = betas.index(-b_pos)
                    j0 = betas.index(0.0)
                    tables[p][i, jp] = tables[p][i, j0]
                    tables[p][i, jm] = tables[p][i, j0]
                continue
            qs = {p: _quantile_std(p / 100.0, alpha, b_pos) for p in PS}
            jp = betas.index(b_pos)
            jm = betas.index(-b_pos)
            for p in PS:
                tables[p][i, jp] = qs[p]
                tables[p][i, jm] = -qs[100 - p]
        print(f"alpha={alpha} done ({time.time() - t0:.1f}s)", flush=True)

    out = Path(__file__).resolve().parent.parent / "src" / "hts" / "_quantile_tables.py"
    with out.open("w") as fh:
        fh.write('"""Quantiles of the S0-standardized stable law on an (alpha, beta) grid.\n\n')
        fh.write("Generated by tools/gen_stable_quantile_tables.py; do not edit by hand.\n")
        fh.write('"""\n\n')
        fh.write(f"ALPHAS = {ALPHAS!r}\n\n")
        fh.write(f"BETAS = {betas!r}\n\n")
        for p in PS:
            fh.write(f"Q{p:02d} = [\n")
            for row in tables[p]:
                fh.write("    [" + ", ".join(repr(float(v)) for v in row) + "],\n")
            fh.write("]\n\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
