"""Command-line front end: verification suites and value tables.

    intertwine verify --suite all --seed 7 [--json report.json]
    intertwine mu --place complex --n0 0 --n 0:6 --y 0:2:0.5 [--format csv]
    intertwine gauss --p 5 --m-max 2 [--psi-c 1]

verify exits 0 when every case passes, 1 otherwise, 2 on bad arguments.
Reports are deterministic for a fixed seed (timing is only included with
--timing, since it would break byte-for-byte reproducibility).
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import sys

from .arch import ArchParams, Place, mu_arch, mu_arch_derivative
from .errors import ParityError, RangeError
from .padic import AddChar, FiniteParams, MultChar, mu_finite, mu_finite_derivative
from .verify import SUITE_NAMES, SUITE_TOLERANCES, run_suite


def _parse_range(text: str, integer: bool = False):
    """start:stop[:step] (inclusive stop) or a comma list."""
    if "," in text:
        vals = [float(v) for v in text.split(",")]
    else:
        bits = text.split(":")
        if len(bits) == 1:
            vals = [float(bits[0])]
        else:
            start, stop = float(bits[0]), float(bits[1])
            step = float(bits[2]) if len(bits) > 2 else 1.0
            if step <= 0:
                raise ValueError("step must be positive")
            vals = []
            v = start
            while v <= stop + 1e-12:
                vals.append(v)
                v += step
    if integer:
        out = []
        for v in vals:
            if abs(v - round(v)) > 1e-9:
                raise ValueError(f"expected integer value, got {v}")
            out.append(int(round(v)))
        return out
    return vals


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def cmd_verify(args) -> int:
    suites = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    all_pass = True
    reports = []
    for name in suites:
        rep = run_suite(name, seed=args.seed, tol=args.tolerance)
        reports.append(rep)
        status = "pass" if rep.passed else "FAIL"
        print(f"[{status}] suite {name}: {len(rep.cases)} cases ({rep.wall_time_s:.1f}s)")
        for c in rep.failures:
            print(f"    FAIL {c.key}  diff={c.abs_diff:.3e}  tol={c.tol:.1e}")
        all_pass = all_pass and rep.passed
    if args.json:
        if len(reports) == 1:
            payload = reports[0].to_json(include_timing=args.timing)
        else:
            merged = {
                "suite": "all",
                "seed": args.seed,
                "pass": all_pass,
                "reports": [json.loads(r.to_json(include_timing=args.timing)) for r in reports],
            }
            payload = json.dumps(merged, indent=1, sort_keys=True)
        with open(args.json, "w") as fh:
            fh.write(payload + "\n")
        print(f"report written to {args.json}")
    return 0 if all_pass else 1


def _mu_rows_arch(args, place: Place):
    rows = []
    for n in _parse_range(args.n, integer=True):
        for y in _parse_range(args.y):
            params = ArchParams(place, 1j * y, args.mu, args.n0)
            val = mu_arch(params, n).value
            dval, _ = mu_arch_derivative(params, n)
            rows.append(
                {
                    "place": place.value,
                    "n0": args.n0,
                    "n": n,
                    "y": y,
                    "mu_re": val.real,
                    "mu_im": val.imag,
                    "mu_abs": abs(val),
                    "mu_prime_re": dval.real,
                    "mu_prime_im": dval.imag,
                    "mu_prime_abs": abs(dval),
                }
            )
    return rows


def _mu_rows_finite(args):
    p = args.p
    if p is None:
        raise ValueError("--p is required at a finite place")
    xi = MultChar(p, args.cond_xi, 1) if args.cond_xi else MultChar.trivial(p)
    oxi = MultChar(p, args.cond_oxi, 1) if args.cond_oxi else MultChar.trivial(p)
    psi = AddChar(p, args.psi_c)
    rows = []
    for n in _parse_range(args.n, integer=True):
        for y in _parse_range(args.y):
            params = FiniteParams(p, 1j * y, args.mu, xi, oxi, psi)
            val = mu_finite(params, n)
            dval = mu_finite_derivative(params, n)
            rows.append(
                {
                    "place": f"p={p}",
                    "n": n,
                    "y": y,
                    "mu_re": val.real,
                    "mu_im": val.imag,
                    "mu_abs": abs(val),
                    "mu_prime_re": dval.real,
                    "mu_prime_im": dval.imag,
                    "mu_prime_abs": abs(dval),
                }
            )
    return rows


def cmd_mu(args) -> int:
    try:
        if args.place == "complex":
            rows = _mu_rows_arch(args, Place.COMPLEX)
        elif args.place == "real":
            rows = _mu_rows_arch(args, Place.REAL)
        else:
            rows = _mu_rows_finite(args)
    except (ParityError, RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_table(rows, args.format, args.out)
    return 0


def _primitive_characters_p2(m: int):
    """Primitive characters of the 2-adic unit group mod 2^m.

    The unit group is generated by -1 and 5 for m >= 3 (single nontrivial
    character at m = 2, none at m = 1); primitivity at m >= 3 is an odd
    exponent on the cyclic part.
    """
    if m <= 1:
        return []
    mod = 2**m
    if m == 2:
        return [("chi4", lambda u: 1.0 + 0j if u % 4 == 1 else -1.0 + 0j)]
    order5 = 2 ** (m - 2)
    decomp: dict[int, tuple[int, int]] = {}
    x = 1
    for k in range(order5):
        decomp[x % mod] = (0, k)
        decomp[(-x) % mod] = (1, k)
        x = (x * 5) % mod

    def build(eps: int, a: int):
        def chi(u: int) -> complex:
            sign, k = decomp[u % mod]
            return cmath.exp(2j * math.pi * (eps * sign / 2 + a * k / order5))

        return chi

    chars = []
    for eps in (0, 1):
        for a in range(1, order5, 2):
            chars.append((f"eps={eps},a={a}", build(eps, a)))
    return chars


def cmd_gauss(args) -> int:
    p = args.p
    if p == 2 and not args.allow_p2:
        print("error: p = 2 needs --allow-p2 (two-generator unit structure)", file=sys.stderr)
        return 2
    rows = []
    if p == 2:
        for m in range(2, args.m_max + 1):
            mod = 2**m
            for label, chi in _primitive_characters_p2(m):
                total = sum(chi(y) * cmath.exp(-2j * math.pi * y / mod) for y in range(1, mod, 2))
                g = total / math.sqrt(mod)
                rows.append({"p": p, "m": m, "char": label, "g_re": g.real, "g_im": g.imag, "g_abs": abs(g)})
    else:
        from .padic import AddChar, MultChar, g_normalized

        psi = AddChar(p, args.psi_c)
        for m in range(1, args.m_max + 1):
            for chi in MultChar.all_primitive(p, m):
                g = g_normalized(chi, psi)
                rows.append(
                    {
                        "p": p,
                        "m": m,
                        "char": f"a={chi.a}",
                        "chi_m1": chi.at_minus_one(),
                        "g_re": g.real,
                        "g_im": g.imag,
                        "g_abs": abs(g),
                    }
                )
    _emit_table(rows, args.format, args.out)
    return 0


def _emit_table(rows, fmt: str, out_path: str | None):
    if not rows:
        print("(no rows)")
        return
    if fmt == "json":
        text = json.dumps(rows, indent=1, sort_keys=True, default=float)
    else:
        cols = list(rows[0].keys())
        lines = [",".join(cols)]
        for r in rows:
            lines.append(",".join(_fmt(r[c]) if isinstance(r[c], float) else str(r[c]) for c in cols))
        text = "\n".join(lines)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
        print(f"table written to {out_path}")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intertwine", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    pv.add_argument("--seed", type=int, default=int(os.environ.get("INTERTWINE_SEED", "0")))
    pv.add_argument("--json", metavar="PATH", help="write the machine-readable report here")
    pv.add_argument("--tolerance", type=float, default=None, help="override the suite tolerance")
    pv.add_argument("--tolerances", action="store_true", help="print embedded defaults and exit")
    pv.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
    pv.set_defaults(func=cmd_verify)

    pm = sub.add_parser("mu", help="tabulate intertwining eigenvalues")
    pm.add_argument("--place", choices=("real", "complex", "finite"), required=True)
    pm.add_argument("--n0", type=int, default=0, help="angular weight (archimedean)")
    pm.add_argument("--mu", type=float, default=0.0, help="twist exponent")
    pm.add_argument("--n", default="0:4", help="weight/level range start:stop[:step]")
    pm.add_argument("--y", default="0:1:0.5", help="axis points start:stop:step or comma list")
    pm.add_argument("--p", type=int, help="prime (finite place)")
    pm.add_argument("--cond-xi", type=int, default=0, help="conductor exponent of the first character")
    pm.add_argument("--cond-oxi", type=int, default=0, help="conductor exponent of the second character")
    pm.add_argument("--psi-c", type=int, default=0, help="additive conductor exponent")
    pm.add_argument("--format", choices=("csv", "json"), default="csv")
    pm.add_argument("--out", metavar="PATH")
    pm.set_defaults(func=cmd_mu)

    pg = sub.add_parser("gauss", help="tabulate normalized Gauss sums")
    pg.add_argument("--p", type=int, required=True)
    pg.add_argument("--m-max", type=int, default=2)
    pg.add_argument("--psi-c", type=int, default=0)
    pg.add_argument("--allow-p2", action="store_true")
    pg.add_argument("--format", choices=("csv", "json"), default="csv")
    pg.add_argument("--out", metavar="PATH")
    pg.set_defaults(func=cmd_gauss)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.tolerances:
        for name, tol in SUITE_TOLERANCES.items():
            print(f"{name}: {tol:.1e}")
        return 0
    try:
        return args.func(args)
    except (ParityError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
