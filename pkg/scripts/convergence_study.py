#!/usr/bin/env python3
"""Tabulate how fast the exact Bondi-coordinate action approaches its limit.

For a random spin element the exact action at radius r is compared with
the limiting Mobius map and the radial / advanced-time rescalings; all
three errors shrink like 1/r until double-precision cancellation takes
over (visible in the u column beyond r ~ 1e8).
"""

import argparse

import numpy as np

from lorentzsky import BondiPoint, SpherePoint, act_asymptotic, act_exact, sl2c_to_lorentz
from lorentzsky.sampling import random_sl2c


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=11)
    parser.add_argument("--u", type=float, default=3.0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    s = random_sl2c(rng)
    lam = sl2c_to_lorentz(s)
    action = act_asymptotic(s)
    z = complex(*(0.8 * rng.normal(size=2)))
    q = SpherePoint.from_complex(z)
    q_limit = action.moebius.apply(q)

    print(f"spin element a={s.a:.3f} b={s.b:.3f} c={s.c:.3f} d={s.d:.3f}")
    print(f"direction z = {z:.4f}, advanced time u = {args.u}")
    print(f"{'r':>12}  {'|dz|':>12}  {'|d(r_ratio)|':>12}  {'|du|':>12}")
    for exponent in range(3, 9):
        r = 10.0 ** exponent
        out = act_exact(lam, BondiPoint(args.u, r, q))
        dz = out.q.distance_to(q_limit)
        dr = abs(out.r / r - action.radial_factor(z))
        du = abs(out.u - args.u * action.time_factor(z))
        print(f"{r:12.0e}  {dz:12.3e}  {dr:12.3e}  {du:12.3e}")


if __name__ == "__main__":
    main()
