"""Command-line interface: info, enumerate, map, verify, render.

Exit codes: 0 success, 1 verification or precondition failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .affine_weyl import (
    AffineWeylElement,
    NotStableError,
    TorusElement,
    anderson,
    enumerate_p_stable,
    is_dominant,
)
from .core_roots import EnumerationBoundError, build_root_system
from .render import render_svg
from .shi import NNParkClass, theta_inverse, theta_map, zeta
from .type_a import (
    anderson_gmv,
    bridge_from_uniform,
    bridge_to_uniform,
    chi,
    labelled_to_pf,
    parse_vector,
    parse_window,
    pf_to_labelled,
    pf_validate,
    verify_gmv,
    verify_zeta_equivalence,
    zeta_hl,
)
from .verify import passed, verify_all, verify_counts, verify_minimal, verify_stab


class UsageError(Exception):
    pass


class Failure(Exception):
    pass


def _rs(args):
    if not args.type:
        raise UsageError("--type is required")
    try:
        return build_root_system(args.type)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name} is required" if len(name) > 1 else f"-{name} is required")
    return val


def _coprime(rs, p):
    if p < 1 or math.gcd(p, rs.h) != 1:
        raise UsageError(f"p={p} must be a positive integer coprime to h={rs.h}")


def _element_json(e: AffineWeylElement) -> dict:
    out = e.to_json()
    if e.rs.cartan_type.family == "A" and e.rs.rank >= 1:
        out["window"] = list(bridge_from_uniform(e).window)
    return out


def _window(args):
    if not args.window:
        raise UsageError("--window is required")
    try:
        return parse_window(args.window)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _pf(args):
    if not args.pf:
        raise UsageError("--pf is required")
    try:
        return parse_vector(args.pf)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _parse_element(args):
    """An affine Weyl element from --window (type A) or --element JSON."""
    if args.window:
        a = _window(args)
        if args.type and build_root_system(args.type) != build_root_system(f"A{a.n - 1}"):
            raise UsageError("--window does not match --type")
        return bridge_to_uniform(a)
    if args.element:
        rs = _rs(args)
        try:
            return AffineWeylElement.from_json(rs, json.loads(args.element))
        except (ValueError, KeyError, TypeError) as e:
            raise UsageError(f"bad --element: {e}") from None
    raise UsageError("give --window or --element")


def _parse_torus(args, rs, p):
    if not args.torus:
        raise UsageError("--torus is required")
    try:
        coords = parse_vector(args.torus)
        return TorusElement(rs, p, coords)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_info(args):
    rs = _rs(args)
    return {
        "type": rs.name,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "positive_roots": [list(a) for a in rs.positive_roots],
        "num_roots": len(rs.roots),
        "h": rs.h,
        "theta": list(rs.theta),
        "f": rs.f,
        "weyl_order": rs.w_count,
    }


def cmd_enumerate(args):
    rs = _rs(args)
    if (args.p is None) == (args.m is None):
        raise UsageError("give exactly one of -p and -m")
    p = args.p if args.p is not None else args.m * rs.h + 1
    _coprime(rs, p)
    try:
        els = enumerate_p_stable(rs, p)
    except RuntimeError as e:
        if isinstance(e, EnumerationBoundError):
            raise UsageError(str(e)) from None
        raise Failure(str(e)) from None
    expected = p**rs.rank
    out = {"type": rs.name, "p": p, "count": len(els), "expected": expected}
    if args.m is not None:
        out["m"] = args.m
        out["dominant"] = sum(1 for e in els if is_dominant(e))
    out["elements"] = [_element_json(e) for e in els]
    if len(els) != expected:
        raise Failure(json.dumps(out))
    return out


def cmd_map(args):
    name = args.name
    if name == "anderson":
        e = _parse_element(args)
        p = _need(args, "p")
        _coprime(e.rs, p)
        return {"map": name, "input": _element_json(e), "output": anderson(e, p).to_json()}
    if name == "gmv":
        a = _window(args)
        p = _need(args, "p")
        if math.gcd(p, a.n) != 1:
            raise UsageError(f"p={p} must be coprime to n={a.n}")
        v = anderson_gmv(a, p)
        out = v.to_json()
        out.update({"area": list(v.area), "pf": list(labelled_to_pf(v))})
        return {"map": name, "input": list(a.window), "output": out}
    if name == "chi":
        rs = _rs(args)
        p = _need(args, "p")
        _coprime(rs, p)
        if rs.cartan_type.family != "A":
            raise Failure("chi is only defined in type A")
        t = _parse_torus(args, rs, p)
        return {"map": name, "input": t.to_json(), "output": list(chi(t))}
    if name == "zeta":
        rs = _rs(args)
        m = _need(args, "m")
        p = m * rs.h + 1
        t = _parse_torus(args, rs, p)
        cls = zeta(t, m)
        return {"map": name, "input": t.to_json(), "output": cls.to_json()}
    if name == "theta":
        rs = _rs(args)
        m = _need(args, "m")
        if args.park:
            try:
                cls = NNParkClass.from_json(rs, json.loads(args.park))
            except (KeyError, TypeError, json.JSONDecodeError) as e:
                raise UsageError(f"bad --park: {e}") from None
            return {"map": name, "input": cls.to_json(), "output": _element_json(theta_map(cls))}
        e = _parse_element(args)
        return {"map": "theta-inverse", "input": _element_json(e), "output": theta_inverse(e, m).to_json()}
    if name == "zeta-hl":
        f = _pf(args)
        p = args.p if args.p is not None else len(f) + 1
        if p != len(f) + 1:
            raise Failure(f"the Haglund-Loehr map needs p = n + 1 = {len(f) + 1}")
        if not pf_validate(f, p):
            raise Failure(f"{f} is not a parking function")
        return {"map": name, "input": list(f), "output": zeta_hl(pf_to_labelled(f, p)).to_json()}
    raise UsageError(f"unknown map {name}")  # pragma: no cover


def cmd_verify(args):
    suite = args.suite
    if suite == "gmv":
        n, p = args.n or 4, args.p or 5
        if n < 2 or math.gcd(n, p) != 1:
            raise UsageError(f"need n >= 2 coprime to p (got n={n}, p={p})")
        reports = [verify_gmv(n, p)]
    elif suite == "zeta":
        n = args.n or 4
        if n < 1:
            raise UsageError("n must be positive")
        reports = [verify_zeta_equivalence(n)]
    elif suite == "counts":
        rs = _rs(args)
        if args.p is None and args.m is None:
            raise UsageError("give -p and/or -m")
        if args.p is not None:
            _coprime(rs, args.p)
        reports = [verify_counts(rs, p=args.p, m=args.m)]
    elif suite == "stab":
        rs = _rs(args)
        p = _need(args, "p")
        _coprime(rs, p)
        reports = [verify_stab(rs, p)]
    elif suite == "minimal":
        rs = _rs(args)
        reports = [verify_minimal(rs, args.m or 1, args.bound)]
    else:
        reports = verify_all()
    for r in reports:
        r["pass"] = passed(r)
    out = {"pass": all(r["pass"] for r in reports), "reports": reports}
    if not out["pass"]:
        raise Failure(json.dumps(out, indent=2))
    return out


def cmd_render(args):
    rs = _rs(args)
    if rs.rank != 2:
        raise UsageError("render needs a rank 2 type")
    if (args.p is None) == (args.m is None):
        raise UsageError("give exactly one of -p and -m")
    if args.p is not None:
        _coprime(rs, args.p)
    svg = render_svg(rs, p=args.p, m=args.m, dots=args.dots)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
        return {"type": rs.name, "p": args.p, "m": args.m, "output": args.output, "alcoves": svg.count('class="alcove"')}
    sys.stdout.write(svg)
    return None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weyl-catalan", description="Anderson and zeta maps for crystallographic root systems.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Cartan type such as A2, B3, G2")
    common.add_argument("-p", type=int, help="modulus / stability parameter")
    common.add_argument("-m", type=int, help="Fuss parameter (p = m h + 1)")
    common.add_argument("-n", type=int, help="type A size")
    common.add_argument("--window", help='affine permutation window, e.g. "[-3,10,4,-1]"')
    common.add_argument("--pf", help='parking function, e.g. "(4,0,1,0)"')
    common.add_argument("--element", help='affine Weyl element JSON {"w": [...], "mu": [...]}')
    common.add_argument("--torus", help='torus coordinates in the simple coroot basis, e.g. "(1,2)"')
    common.add_argument("--park", help='park class JSON {"w_word": [...], "chain": [...]}')
    common.add_argument("--format", choices=["json", "pretty"], default="json")
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in the output")
    common.add_argument("-o", "--output", help="output file")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="root system data")
    sub.add_parser("enumerate", parents=[common], help="list p-stable elements or m-Shi alcoves")
    mp = sub.add_parser("map", parents=[common], help="evaluate a map")
    mp.add_argument("name", choices=["anderson", "gmv", "zeta", "zeta-hl", "chi", "theta"])
    vp = sub.add_parser("verify", parents=[common], help="run verification suites")
    vp.add_argument("suite", choices=["gmv", "zeta", "counts", "stab", "minimal", "all"])
    vp.add_argument("--bound", type=int, default=3, help="address box for the minimal suite")
    rp = sub.add_parser("render", parents=[common], help="SVG picture for rank 2")
    rp.add_argument("--dots", action="store_true", help="draw coroot lattice points")
    return ap


def _pretty(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_flat(x)}" if not isinstance(x, dict) else f"{pad}-\n{_pretty(x, indent + 1)}" for x in obj)
    return pad + _flat(obj)


def _flat(v) -> str:
    return json.dumps(v, separators=(",", ":")) if isinstance(v, (dict, list)) else str(v)


COMMANDS = {"info": cmd_info, "enumerate": cmd_enumerate, "map": cmd_map, "verify": cmd_verify, "render": cmd_render}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except EnumerationBoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Failure as e:
        print(str(e), file=sys.stderr)
        return 1
    except NotStableError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if result is None:
        return 0
    if args.timing:
        result["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    text = _pretty(result) if args.format == "pretty" else json.dumps(result, indent=2)
    if args.output and args.command != "render":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
