"""Command-line surface: polynomial tables, cross-validation, eigenvalue
tables, containment certificates, shifted-root data with conic fits, the
conjecture scan, and critical-point extraction.

Exit codes: 0 success, 1 verification failure, 2 argument error,
3 containment condition not met, 4 numerical non-convergence. CSV output is
UTF-8 with LF line endings and a header row; numeric fields carry enough
digits to round-trip at the working precision, so repeated runs are
byte-identical. SVG scatter plots use a data-fitted viewBox with a 5% margin
and equal axis scaling.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import gmpy2

from . import __version__, charpoly, chebyshev, fibexplore, spectrum
from .fibexplore import NonConvergence
from .spectrum import NotSufficient

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_CONTAINED = 3
EXIT_NONCONVERGENCE = 4

ORACLE_MAX_N = 32
PRECISION_ENV = "TRIDIAG_PRECISION_BITS"


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return fibexplore.DEFAULT_PRECISION_BITS
    try:
        bits = int(raw)
    except ValueError:
        raise SystemExit(f"{PRECISION_ENV} must be an integer, got {raw!r}")
    return bits


def render_poly(p, unicode_var: bool = False) -> str:
    """Descending-degree rendering: '-x^7 + 6x^5 - 10x^3 + 4x'."""
    var = "λ" if unicode_var else "x"
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree(), -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _mpfr_digits(bits: int) -> int:
    # enough decimal digits to round-trip a bits-wide mantissa
    return int(math.ceil(bits * math.log10(2))) + 2


def _format_mpfr(x, bits: int) -> str:
    """Scientific notation with round-trip digits (mpfr __format__ is
    unreliable across gmpy2 builds, so assemble from the digit string)."""
    nd = _mpfr_digits(bits)
    mantissa, exponent, _ = x.digits(10, nd)
    sign = ""
    if mantissa.startswith("-"):
        sign, mantissa = "-", mantissa[1:]
    if set(mantissa) == {"0"}:
        return f"0.{'0' * (nd - 1)}e+00"
    return f"{sign}{mantissa[0]}.{mantissa[1:]}e{exponent - 1:+03d}"


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _write_lines(path: str, lines) -> None:
    handle, owned = _open_out(path)
    try:
        for line in lines:
            handle.write(line + "\n")
    finally:
        if owned:
            handle.close()


def svg_scatter(points, path: str) -> None:
    """Minimal SVG scatter: one circle per point, equal aspect, 5% margin."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin, 1e-9)
    margin = 0.05 * span
    x0, y0 = xmin - margin, ymin - margin
    w = (xmax - xmin) + 2 * margin
    h = (ymax - ymin) + 2 * margin
    r = 0.008 * span
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.6g} {y0:.6g} {w:.6g} {h:.6g}" '
        f'width="600" height="{600 * h / w:.6g}">',
    ]
    for x, y in points:
        # SVG y grows downward; reflect about the vertical midline
        cy = y0 + (ymax + margin - y)
        lines.append(f'<circle cx="{x:.6g}" cy="{cy:.6g}" r="{r:.6g}" fill="black"/>')
    lines.append("</svg>")
    _write_lines(path, lines)


def cmd_charpoly(args) -> int:
    if args.n < 1:
        print("n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.method == "oracle":
        if args.n > ORACLE_MAX_N:
            print(
                f"oracle method is limited to n <= {ORACLE_MAX_N}",
                file=sys.stderr,
            )
            return EXIT_USAGE
        record = charpoly.charpoly_det_oracle(args.n)
    elif args.method == "closed":
        record = charpoly.charpoly_closed_form(args.n)
    else:
        record = charpoly.charpoly_recurrence(args.n)
    print(render_poly(record.poly, unicode_var=args.unicode))
    return EXIT_OK


def cmd_verify(args) -> int:
    max_n = args.max_n
    oracle_max = args.oracle_max
    if max_n < 1 or oracle_max < 0:
        print("--max-n must be >= 1 and --oracle-max >= 0", file=sys.stderr)
        return EXIT_USAGE
    family = charpoly.charpoly_family(max_n)

    for n, rec_poly in enumerate(family, start=1):
        closed = charpoly.charpoly_closed_form(n).poly
        if closed != rec_poly:
            k = next(
                k
                for k in range(max(closed.degree(), rec_poly.degree()) + 1)
                if closed.coefficient(k) != rec_poly.coefficient(k)
            )
            print(
                f"FAIL recurrence-vs-closed at n={n}, coefficient {k}: "
                f"{rec_poly.coefficient(k)} != {closed.coefficient(k)}"
            )
            return EXIT_VERIFY_FAILED
    print(f"recurrence-vs-closed: {max_n} ok")

    for n, poly in enumerate(family, start=1):
        bad = [k for k in range(n + 1) if (k - n) % 2 and poly.coefficient(k) != 0]
        if bad:
            print(f"FAIL parity at n={n}, coefficient {bad[0]} is nonzero")
            return EXIT_VERIFY_FAILED
    print(f"parity: {max_n} ok")

    for n, poly in enumerate(family, start=1):
        s_n = chebyshev.chebyshev_S(n)
        if chebyshev.reflect(s_n) != poly:
            print(f"FAIL chebyshev reflection at n={n}")
            return EXIT_VERIFY_FAILED
        if chebyshev.halve_variable(chebyshev.chebyshev_U(n)) != s_n:
            print(f"FAIL chebyshev halving at n={n}")
            return EXIT_VERIFY_FAILED
    print(f"chebyshev-chain: {max_n} ok")

    for n in range(1, min(oracle_max, max_n) + 1):
        oracle = charpoly.charpoly_det_oracle(n).poly
        if oracle != family[n - 1]:
            k = next(
                k
                for k in range(n + 1)
                if oracle.coefficient(k) != family[n - 1].coefficient(k)
            )
            print(
                f"FAIL det-oracle at n={n}, coefficient {k}: "
                f"{family[n - 1].coefficient(k)} != {oracle.coefficient(k)}"
            )
            return EXIT_VERIFY_FAILED
    print(f"det-oracle: {min(oracle_max, max_n)} ok")
    print("all checks passed")
    return EXIT_OK


def cmd_eigs(args) -> int:
    if args.n < 1 or args.digits < 1:
        print("n and --digits must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    ev = spectrum.eigenvalues_closed_form(args.n)
    if args.csv is not None:
        lines = ["s,angle_num,angle_den,value"]
        for s, (angle, value) in enumerate(zip(ev.angles, ev.values), start=1):
            lines.append(f"{s},{angle.numerator},{angle.denominator},{value!r}")
        _write_lines(args.csv, lines)
    else:
        print(", ".join(f"{v:.{args.digits}f}" for v in ev.values))
    return EXIT_OK


def cmd_contain(args) -> int:
    if args.m < 1 or args.n < 1:
        print("m and n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        cert = spectrum.containment_certificate(args.m, args.n)
    except NotSufficient as exc:
        print(
            f"condition not met: (n-m) mod (m+1) = {exc.remainder}"
        )
        return EXIT_NOT_CONTAINED
    print(f"k={cert.k}")
    print(" ".join(f"{r}->{s}" for r, s in sorted(cert.index_map.items())))
    return EXIT_OK


def _root_rows(root_set) -> list[str]:
    bits = root_set.precision_bits
    rows = ["re,im,residual"]
    with gmpy2.context(precision=bits, allow_complex=True):
        for z, res in zip(root_set.roots, root_set.residuals):
            rows.append(
                f"{_format_mpfr(z.real, bits)},{_format_mpfr(z.imag, bits)},"
                f"{_format_mpfr(res, bits)}"
            )
    return rows


def cmd_fib_roots(args) -> int:
    if args.n < 1:
        print("n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.precision < 53:
        print("--precision must be >= 53", file=sys.stderr)
        return EXIT_USAGE
    if args.perturbed and args.n != 29:
        print("--perturbed applies only to n=29", file=sys.stderr)
        return EXIT_USAGE
    poly = fibexplore.perturbed_f29() if args.perturbed else fibexplore.fib_shift_poly(args.n)
    try:
        root_set = fibexplore.find_roots(poly, args.precision)
    except NonConvergence as exc:
        print(f"root finding did not converge: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    points = [(float(z.real), float(z.imag)) for z in root_set.roots]
    if args.csv is not None:
        _write_lines(args.csv, _root_rows(root_set))
    if args.svg is not None:
        svg_scatter(points, args.svg)
    if args.csv is None:
        reals = root_set.real_classified()
        print(f"degree {root_set.n}, {len(reals)} real root(s)")
        with gmpy2.context(precision=args.precision, allow_complex=True):
            for k in reals:
                print(f"real root: {_format_mpfr(root_set.roots[k].real, args.precision)}")
    if args.ellipse:
        fit = fibexplore.ellipse_fit(points)
        a, b, c, d, e, f = fit.conic
        print(f"conic: A={a!r} B={b!r} C={c!r} D={d!r} E={e!r} F={f!r}")
        print(f"discriminant: {fit.discriminant!r}")
        print(f"rms_residual: {fit.rms_residual!r}")
        verdict = "ellipse" if fit.is_ellipse and fit.rms_residual < args.ellipse_tol else "not ellipse"
        print(f"classification: {verdict} (tolerance {args.ellipse_tol!r})")
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.start > args.stop or args.start < 1:
        print("need 1 <= --from <= --to", file=sys.stderr)
        return EXIT_USAGE
    if args.precision < 53:
        print("--precision must be >= 53", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for n in range(args.start, args.stop + 1):
        try:
            rows.append(fibexplore.conjecture_scan(n, n, args.precision)[0])
        except NonConvergence as exc:
            print(f"non-convergence at n={n}: {exc}", file=sys.stderr)
            return EXIT_NONCONVERGENCE
    lines = ["n,real_root_count,min_real_root,max_abs_imag"]
    for r in rows:
        lines.append(
            f"{r.n},{r.real_root_count},{r.min_real_root!r},{r.max_abs_imag!r}"
        )
    if args.csv is not None:
        _write_lines(args.csv, lines)
    else:
        for line in lines:
            print(line)
    flagged = [r for r in rows if r.violations]
    if flagged:
        for r in flagged:
            print(f"violations at n={r.n}: {', '.join(r.violations)}")
    else:
        print(f"no violations in {args.start}..{args.stop}")
    return EXIT_OK


def cmd_extrema(args) -> int:
    if args.n < 2:
        print("n must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    if args.precision < 53:
        print("--precision must be >= 53", file=sys.stderr)
        return EXIT_USAGE
    try:
        pts = fibexplore.local_extrema(args.n, args.precision)
    except NonConvergence as exc:
        print(f"root finding did not converge: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    lines = ["lambda,f_value"]
    with gmpy2.context(precision=args.precision, allow_complex=True):
        for x, fx in pts:
            lines.append(
                f"{_format_mpfr(x, args.precision)},{_format_mpfr(fx, args.precision)}"
            )
    if args.csv is not None:
        _write_lines(args.csv, lines)
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tridiag",
        description="Toolkit for the 0/1 tridiagonal symmetric matrix family.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    default_bits = _default_precision()

    p = sub.add_parser("charpoly", help="print the degree-n characteristic polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["recurrence", "closed", "oracle"], default="recurrence")
    p.add_argument("--unicode", action="store_true", help="render the variable as λ")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="run the polynomial cross-validation suite")
    p.add_argument("--max-n", type=int, default=200, dest="max_n")
    p.add_argument("--oracle-max", type=int, default=12, dest="oracle_max")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eigs", help="closed-form eigenvalues, descending")
    p.add_argument("n", type=int)
    p.add_argument("--digits", type=int, default=5)
    p.add_argument("--csv", metavar="PATH", help="write CSV to PATH ('-' for stdout)")
    p.set_defaults(func=cmd_eigs)

    p = sub.add_parser("contain", help="certify spectrum containment")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_contain)

    p = sub.add_parser("fib-roots", help="roots of the Fibonacci-shifted polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--precision", type=int, default=default_bits, metavar="BITS")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--ellipse", action="store_true", help="fit and report a conic")
    p.add_argument("--ellipse-tol", type=float, default=fibexplore.ELLIPSE_TOL)
    p.add_argument("--perturbed", action="store_true", help="use the single-coefficient perturbation of n=29")
    p.set_defaults(func=cmd_fib_roots)

    p = sub.add_parser("scan", help="root statistics over a range of n")
    p.add_argument("--from", type=int, required=True, dest="start")
    p.add_argument("--to", type=int, required=True, dest="stop")
    p.add_argument("--precision", type=int, default=default_bits, metavar="BITS")
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("extrema", help="real critical points of the degree-n polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--precision", type=int, default=default_bits, metavar="BITS")
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_extrema)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
