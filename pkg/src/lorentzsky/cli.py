"""Command-line interface.

Subcommands: classify, decompose, lift, mobius, aberrate, render.
Exit codes: 0 on success, 1 on validation errors, 2 on usage errors.
All numeric output carries 12 significant digits.  Matrices travel as
JSON {"m": [[row0], [row1], [row2], [row3]]}; complex numbers as
[re, im] pairs, with the literal "inf" for the point at infinity.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from .celestial import aberrate, doppler
from .decompose import standard_decompose
from .errors import LorentzSkyError
from .minkowski import validate_lorentz
from .render import RenderSpec, render
from .sphere import MoebiusTransform, SpherePoint
from .spin import SL2CElement, lift_lorentz_to_sl2c
from .starfield import load_catalog, transform_catalog

_C_M_PER_S = 299_792_458  # for documentation: velocities here are fractions of this


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _round12(obj: Any) -> Any:
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, list):
        return [_round12(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    return obj


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_json(payload: Any, out_path: str | None) -> None:
    _emit(json.dumps(_round12(payload)) + "\n", out_path)


def _read_json(in_path: str | None) -> Any:
    text = Path(in_path).read_text(encoding="utf-8") if in_path else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise LorentzSkyError(f"invalid JSON input: {exc}") from None


def _matrix_from_json(payload: Any) -> list[list[float]]:
    if not isinstance(payload, dict) or "m" not in payload:
        raise LorentzSkyError('expected a JSON object with key "m"')
    m = payload["m"]
    if (not isinstance(m, list) or len(m) != 4
            or any(not isinstance(r, list) or len(r) != 4 for r in m)):
        raise LorentzSkyError('"m" must be a 4x4 array of numbers')
    try:
        return [[float(v) for v in row] for row in m]
    except (TypeError, ValueError):
        raise LorentzSkyError('"m" must be a 4x4 array of numbers') from None


def _complex_from_json(value: Any, key: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(float(value), 0.0)
    if isinstance(value, list) and len(value) == 2:
        try:
            return complex(float(value[0]), float(value[1]))
        except (TypeError, ValueError):
            pass
    raise LorentzSkyError(f'"{key}" must be a number or an [re, im] pair')


def _cmd_classify(args: argparse.Namespace) -> int:
    lam = validate_lorentz(_matrix_from_json(_read_json(args.input)))
    _emit(lam.component().value + "\n", args.out)
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    lam = validate_lorentz(_matrix_from_json(_read_json(args.input)))
    dec = standard_decompose(lam)
    _emit_json({"r1": dec.r1.tolist(), "chi": dec.chi, "r2": dec.r2.tolist()},
               args.out)
    return 0


def _cmd_lift(args: argparse.Namespace) -> int:
    lam = validate_lorentz(_matrix_from_json(_read_json(args.input)))
    s = lift_lorentz_to_sl2c(lam)
    _emit_json({k: [v.real, v.imag] for k, v in
                (("a", s.a), ("b", s.b), ("c", s.c), ("d", s.d))}, args.out)
    return 0


def _cmd_mobius(args: argparse.Namespace) -> int:
    payload = _read_json(args.input)
    if not isinstance(payload, dict):
        raise LorentzSkyError("expected a JSON object with keys a, b, c, d, points")
    coeffs = {k: _complex_from_json(payload.get(k), k) for k in "abcd"}
    try:
        mob = MoebiusTransform(SL2CElement(**coeffs))
    except ValueError as exc:
        raise LorentzSkyError(str(exc)) from None
    points = payload.get("points")
    if not isinstance(points, list):
        raise LorentzSkyError('"points" must be a list of [re, im] pairs or "inf"')
    images = []
    for i, entry in enumerate(points):
        if entry == "inf":
            q = SpherePoint.infinity()
        else:
            q = SpherePoint.from_complex(_complex_from_json(entry, f"points[{i}]"))
        image = mob.apply(q)
        if image.is_infinity:
            images.append("inf")
        else:
            w = image.to_complex()
            images.append([w.real, w.imag])
    _emit_json({"points": images}, args.out)
    return 0


def _cmd_aberrate(args: argparse.Namespace) -> int:
    if not 0.0 <= args.theta_deg <= 180.0:
        raise LorentzSkyError(f"--theta-deg must be in [0, 180], got {args.theta_deg}")
    theta = math.radians(args.theta_deg)
    theta_prime_deg = math.degrees(aberrate(args.chi, theta))
    dop = doppler(args.chi, theta)
    if args.json:
        _emit_json({"theta_prime_deg": theta_prime_deg, "doppler": dop}, args.out)
    else:
        _emit(f"theta_prime_deg {_fmt(theta_prime_deg)}\n"
              f"doppler {_fmt(dop)}\n", args.out)
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    stars = load_catalog(args.input)
    transformed = transform_catalog(stars, args.chi)
    spec = RenderSpec(projection=args.projection, width=args.width,
                      height=args.height, format=args.format,
                      hemisphere=args.hemisphere)
    try:
        image = render(transformed, spec)
    except ValueError as exc:
        raise LorentzSkyError(str(exc)) from None
    Path(args.out).write_bytes(image)
    if args.json:
        payload = {
            "out": args.out,
            "count": len(transformed),
            "stars": [{
                "name": t.source.name,
                "doppler": t.doppler,
                "temp_k": t.temp_after,
                "vmag": t.vmag_after,
            } for t in transformed],
        }
        sys.stdout.write(json.dumps(_round12(payload)) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorentzsky",
        description="Lorentz matrices, their spinor lifts, Mobius maps of the "
                    "celestial sphere, and relativistic star-field rendering. "
                    f"Velocities are fractions of c = {_C_M_PER_S} m/s.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", help="input file (default: stdin)")
        p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("classify", help="name the connected component of a Lorentz matrix")
    add_io(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("decompose", help="factor as rotation . boost . rotation")
    add_io(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("lift", help="spinor lift of a proper orthochronous matrix")
    add_io(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("mobius", help="apply z -> (a z + b)/(c z + d) to points")
    add_io(p)
    p.set_defaults(func=_cmd_mobius)

    p = sub.add_parser("aberrate", help="apparent angle and Doppler factor under a boost")
    p.add_argument("--chi", type=float, required=True, help="boost rapidity")
    p.add_argument("--theta-deg", type=float, required=True,
                   help="angle from the boost axis to the line of sight, degrees")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_aberrate)

    p = sub.add_parser("render", help="render a star catalog seen from a boosted frame")
    p.add_argument("--chi", type=float, default=0.0,
                   help="boost rapidity along +x3 (omit for the unboosted sky)")
    p.add_argument("--input", required=True, help="catalog CSV")
    p.add_argument("--out", required=True, help="image file to write")
    p.add_argument("--format", choices=["svg", "ppm"], default="svg")
    p.add_argument("--projection", choices=["stereographic", "orthographic"],
                   default="stereographic")
    p.add_argument("--hemisphere", choices=["north", "south", "both"],
                   default="north")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=800)
    p.add_argument("--json", action="store_true",
                   help="print a JSON summary with per-star photometry")
    p.set_defaults(func=_cmd_render)
    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except LorentzSkyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
