"""Command-line front end.

Every subcommand prints records in a fixed order and a fixed number format,
so identical invocations produce byte-identical output.  Exit status: 0 on
success, 2 for usage or domain errors, 3 when a numerical ladder fails to
stabilise, 1 for any other library error.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import counting, heat_bridge, model_spectra, summability, symbol_reversion, zeta_engine
from .errors import CesaroError, DomainError, NonConvergenceError
from .functionals import exponential, gaussian_square
from .series import RationalPolynomial, fraction_str


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------


def _plain(x):
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "item"):
        return x.item()
    return x


def _cell(x, csv: bool) -> str:
    if isinstance(x, bool) or x is None:
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, float):
        return f"{x:.15g}" if csv else repr(x)
    return str(x)


def emit(records: List[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        payload = records[0] if len(records) == 1 else records
        out.write(json.dumps(_plain(payload), indent=2) + "\n")
        return
    cols: List[str] = []
    for r in records:
        for k in r:
            if k not in cols and not isinstance(r[k], (dict, list)):
                cols.append(k)
    rows = [[_cell(r.get(c, ""), fmt != "table") for c in cols] for r in records]
    if fmt == "csv":
        out.write(",".join(cols) + "\n")
        for row in rows:
            out.write(",".join(row) + "\n")
    elif fmt == "tsv":
        for row in rows:
            out.write("\t".join(row) + "\n")
    else:
        widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c) for i, c in enumerate(cols)]
        out.write("  ".join(c.rjust(w) for c, w in zip(cols, widths)) + "\n")
        for row in rows:
            out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)) + "\n")


# --------------------------------------------------------------------------
# argument helpers
# --------------------------------------------------------------------------


def _number_list(text: str) -> List:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok:
            try:
                out.append(Fraction(tok))
            except ValueError:
                out.append(float(tok))
    return out


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return v


def _spectrum(args) -> model_spectra.Spectrum:
    if getattr(args, "file", None):
        with open(args.file) as fh:
            return model_spectra.read_spectrum(fh, name=args.file)
    return model_spectra.model_spectrum(args.model, args.dim)


def _functional(name: str):
    if name == "exp":
        return exponential()
    if name == "gauss":
        return gaussian_square()
    raise DomainError(f"unknown test function {name!r}")


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def _series_terms(args) -> List:
    n = args.n
    if args.terms:
        base = _number_list(args.terms)
        return [base[i % len(base)] for i in range(n)] if args.cycle else base
    if args.series == "grandi":
        return [(-1) ** i for i in range(n)]
    if args.series == "alternating-n":
        return [(-1) ** i * (i + 1) for i in range(n)]
    if args.series == "cos":
        return [math.cos((i + 1) * args.theta) for i in range(n)]
    raise DomainError(f"unknown series {args.series!r}")


def _sequence(args) -> List:
    # means are taken of the partial sums of the series
    terms = _series_terms(args)
    if not terms:
        raise DomainError("empty series")
    out, acc = [], terms[0] * 0
    for a in terms:
        acc = acc + a
        out.append(acc)
    return out


def cmd_sum(args) -> List[dict]:
    a = _sequence(args)
    mean = summability.cesaro_mean if args.method == "cesaro" else summability.holder_mean
    recs = []
    for k in range(args.order + 1):
        v = mean(a, k)
        rec = {"order": k, "method": args.method, "n": len(a), "value": float(v)}
        if isinstance(v, Fraction):
            rec["exact"] = v
        recs.append(rec)
    return recs if args.all_orders else recs[-1:]


def cmd_zeta(args) -> List[dict]:
    if args.derivative:
        z = zeta_engine.zeta_prime_zero(X=args.cutoff, k=args.order)
        target = -0.5 * math.log(2 * math.pi)
        return [{"argument": "zeta'(0)", "order": args.order, "cutoff": args.cutoff, "value": z.value,
                 "target": target, "spread": z.spread, "estimates": z.estimates}]
    z = zeta_engine.zeta_via_cesaro(args.alpha, k=args.order, X=args.cutoff, tol=args.tol)
    rec = {"argument": -args.alpha if args.alpha != int(args.alpha) else -int(args.alpha),
           "order": args.order, "cutoff": args.cutoff, "value": z.value}
    if z.exact is not None:
        rec["target"] = z.exact
        rec["target_value"] = float(z.exact)
    rec["spread"] = z.spread
    rec["estimates"] = z.estimates
    return [rec]


def cmd_spectrum(args) -> List[dict]:
    s = _spectrum(args)
    if args.format == "tsv":
        buf = io.StringIO()
        model_spectra.write_spectrum(s, args.max, buf)
        sys.stdout.write(buf.getvalue())
        return []
    lam, mult = s.eigenpairs(args.max)
    recs, running = [], 0
    for v, m in zip(lam, mult):
        running += int(m)
        v = v.item()
        recs.append({"lambda": int(v) if float(v).is_integer() else float(v), "multiplicity": int(m),
                     "N(lambda+)": running})
    return recs


def cmd_count(args) -> List[dict]:
    if args.expansion:
        s = model_spectra.model_spectrum(args.model, args.dim)
        rec = counting.spectrum_expansion(s, args.moments).to_record()
        return [rec]
    if args.weyl:
        s = model_spectra.model_spectrum(args.model, args.dim)
        c = counting.weyl_leading(s.dimension, s.volume)
        return [{"model": s.name, "dimension": s.dimension, "weyl_coefficient": c, "power": s.dimension / 2}]
    s = _spectrum(args)
    recs = []
    for lam in args.lam:
        if args.order == 0:
            v = counting.counting_function(s, lam, args.side)
        else:
            v = counting.riesz_counting(s, args.order, lam)
        recs.append({"lambda": lam, "order": args.order, "side": args.side, "value": v})
    return recs


def cmd_moments(args) -> List[dict]:
    if args.model:
        n = {"sphere2": 2, "sphere3-shifted": 3}[args.model]
        w, m, start, h = counting._SPHERE_DATA[n]
    else:
        w, m = RationalPolynomial.parse(args.weight), RationalPolynomial.parse(args.map)
        start, h = args.start, Fraction(args.heaviside_at)
    recs = []
    for j in range(args.j_max + 1):
        mu = counting.generalized_moments(w, m, j, start=start, heaviside_at=h)
        recs.append({"j": j, "moment": mu, "value": float(mu)})
    return recs


def cmd_revert(args) -> List[dict]:
    p = symbol_reversion.parse_symbol(args.symbol)
    d = symbol_reversion.density_expansion(p, args.dim, args.order, args.j_max)
    recs = []
    for j, (c, a) in enumerate(zip(d.c, d.a)):
        rec = {"j": j, "c_j": c, "a_j": a, "exponent": d.exponent(j), "coefficient": d.prefactor * a}
        if isinstance(c, Fraction):
            rec["c_j_value"] = float(c)
        recs.append(rec)
    return recs


def cmd_heat(args) -> List[dict]:
    s = _spectrum(args)
    approx = None
    if args.compare == "mulholland":
        approx = heat_bridge.mulholland_expansion(args.terms)
    elif args.compare == "expansion":
        exp = counting.spectrum_expansion(s)
        approx = heat_bridge.cesaro_to_small_t(exp, exponential(), t_orders=args.terms)
    recs = []
    for t in args.t:
        exact = float(heat_bridge.heat_trace(s, t, args.tol))
        rec = {"t": t, "exact": exact}
        if approx is not None:
            a = approx(t)
            rec["expansion"] = a
            rec["error"] = exact - a
        recs.append(rec)
    return recs


def cmd_cc(args) -> List[dict]:
    s = model_spectra.model_spectrum(args.model, args.dim)
    phi = _functional(args.phi)
    r = heat_bridge.chamseddine_connes(s, phi, args.Lambda, args.terms)
    L4 = args.Lambda**4
    return [{"model": s.name, "phi": phi.name, "Lambda": args.Lambda, "numeric": r.numeric,
             "predicted": r.predicted, "numeric/Lambda^4": r.numeric / L4,
             "predicted/Lambda^4": r.predicted / L4}]


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table", "tsv"), default="json")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; sums run serially")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised demos")

    p = argparse.ArgumentParser(prog="cesaro-spectral", description="Cesaro summability and spectral asymptotics")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("sum", parents=[common], help="Cesaro/Holder means of a sequence")
    q.add_argument("--series", choices=("grandi", "alternating-n", "cos"), default="grandi")
    q.add_argument("--terms", help="explicit terms a1,a2,... (rationals allowed)")
    q.add_argument("--cycle", action="store_true", help="repeat --terms up to --n entries")
    q.add_argument("--theta", type=float, default=1.0)
    q.add_argument("--order", type=_nonneg_int, default=1)
    q.add_argument("--n", type=_nonneg_int, default=1000)
    q.add_argument("--method", choices=("cesaro", "holder"), default="cesaro")
    q.add_argument("--all-orders", action="store_true")
    q.set_defaults(func=cmd_sum)

    q = sub.add_parser("zeta", parents=[common], help="zeta(-alpha) by Cesaro means")
    q.add_argument("--alpha", type=float, default=0.0)
    q.add_argument("--order", type=_nonneg_int, default=2)
    q.add_argument("--cutoff", type=_positive, default=1e5)
    q.add_argument("--tol", type=_positive, default=None)
    q.add_argument("--derivative", action="store_true", help="compute zeta'(0) instead")
    q.set_defaults(func=cmd_zeta)

    def model_args(q, default="torus"):
        q.add_argument("--model", default=default)
        q.add_argument("--dim", type=int, default=None)
        q.add_argument("--file", help="read eigenvalue<TAB>multiplicity lines instead of a model")

    q = sub.add_parser("spectrum", parents=[common], help="list eigenvalues, multiplicities and N")
    model_args(q)
    q.add_argument("--max", type=float, required=True)
    q.set_defaults(func=cmd_spectrum)

    q = sub.add_parser("count", parents=[common], help="counting functions and expansions")
    model_args(q)
    q.add_argument("--lam", type=_positive, nargs="+", default=[100.0])
    q.add_argument("--order", type=_nonneg_int, default=0)
    q.add_argument("--side", choices=("right", "left"), default="right")
    q.add_argument("--expansion", action="store_true")
    q.add_argument("--weyl", action="store_true")
    q.add_argument("--moments", type=_nonneg_int, default=4)
    q.set_defaults(func=cmd_count)

    q = sub.add_parser("moments", parents=[common], help="exact generalized moments")
    q.add_argument("--model", choices=("sphere2", "sphere3-shifted"))
    q.add_argument("--weight", default="1,2")
    q.add_argument("--map", default="0,1,1")
    q.add_argument("--start", type=int, default=1)
    q.add_argument("--heaviside-at", default="0")
    q.add_argument("--j-max", type=_nonneg_int, default=3)
    q.set_defaults(func=cmd_moments)

    q = sub.add_parser("revert", parents=[common], help="density coefficients from a symbol")
    q.add_argument("--symbol", required=True, help="p1,p0,p-1,...")
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--order", type=int, default=1)
    q.add_argument("--j-max", type=_nonneg_int, default=4)
    q.set_defaults(func=cmd_revert)

    q = sub.add_parser("heat", parents=[common], help="heat traces and small-t comparisons")
    model_args(q, default="sphere2")
    q.add_argument("--t", type=_positive, nargs="+", required=True)
    q.add_argument("--compare", choices=("none", "mulholland", "expansion"), default="none")
    q.add_argument("--terms", type=_nonneg_int, default=4)
    q.add_argument("--tol", type=_positive, default=1e-14)
    q.set_defaults(func=cmd_heat)

    q = sub.add_parser("cc", parents=[common], help="Chamseddine-Connes leading order on a 4-d spectrum")
    q.add_argument("--model", default="torus")
    q.add_argument("--dim", type=int, default=4)
    q.add_argument("--phi", choices=("exp", "gauss"), default="exp")
    q.add_argument("--Lambda", type=_positive, default=20.0)
    q.add_argument("--terms", type=_nonneg_int, default=2)
    q.set_defaults(func=cmd_cc)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records = args.func(args)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.estimates:
            print(f"estimates: {exc.estimates}", file=sys.stderr)
        return 3
    except (DomainError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CesaroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if records:
        emit(records, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
