#!/usr/bin/env python3
"""Render a synthetic sky before and after a boost toward the north pole.

Writes sky_before.svg / sky_after.svg (and PPM twins) into --outdir and
prints a photometry summary.  The forward sky brightens and blueshifts
while star images crowd toward the boost direction.
"""

import argparse
import math
from pathlib import Path

import numpy as np

from lorentzsky import (RenderSpec, StarRecord, render, to_polar,
                        transform_catalog)


def synthetic_catalog(n: int, seed: int) -> list[StarRecord]:
    rng = np.random.default_rng(seed)
    stars = []
    for i in range(n):
        stars.append(StarRecord(
            name=f"star{i:05d}",
            ra_deg=float(rng.uniform(0.0, 360.0)),
            dec_deg=float(math.degrees(math.asin(rng.uniform(-1.0, 1.0)))),
            vmag=float(rng.uniform(0.0, 6.5)),
            temp_k=float(rng.choice([3200, 4500, 5800, 7200, 9800, 15000, 25000])),
        ))
    return stars


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--chi", type=float, default=math.log(2.0),
                        help="boost rapidity (default ln 2, i.e. v = 0.6 c)")
    parser.add_argument("--stars", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--outdir", default="demo_out")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    stars = synthetic_catalog(args.stars, args.seed)
    spec = RenderSpec(hemisphere="both", width=1200, height=600)

    before = transform_catalog(stars, 0.0)
    after = transform_catalog(stars, args.chi)
    (outdir / "sky_before.svg").write_bytes(render(before, spec))
    (outdir / "sky_after.svg").write_bytes(render(after, spec))
    raster = RenderSpec(hemisphere="both", width=1200, height=600, format="ppm")
    (outdir / "sky_before.ppm").write_bytes(render(before, raster))
    (outdir / "sky_after.ppm").write_bytes(render(after, raster))

    forward_before = sum(1 for t in before if to_polar(t.q_after).theta < math.pi / 2)
    forward_after = sum(1 for t in after if to_polar(t.q_after).theta < math.pi / 2)
    mean_doppler = sum(t.doppler for t in after) / len(after)
    brightest = min(after, key=lambda t: t.vmag_after)
    print(f"chi = {args.chi:.6f} (v = {math.tanh(args.chi):.4f} c)")
    print(f"stars in the forward hemisphere: {forward_before} -> {forward_after}")
    print(f"mean Doppler factor: {mean_doppler:.4f}")
    print(f"brightest star after the boost: {brightest.source.name} "
          f"vmag {brightest.vmag_after:+.2f}, T = {brightest.temp_after:.0f} K")
    print(f"images written to {outdir}/")


if __name__ == "__main__":
    main()
