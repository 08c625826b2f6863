"""Command-line front end.

Every subcommand reads a measure config (``-m``) and prints plain-text
sections (``REGIME``, ``GCD-TABLE``, ``FAMILY``, ``VERDICT``, ...), or
``key=value`` records with ``--format kv``. Exit status: 0 success, 1 domain
failure (violated hypotheses, failed ``--expect``), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import io
import sys
from contextlib import redirect_stdout
from typing import Sequence

from . import fourier
from .freq import Frequency, format_frequency, parse_family, parse_frequency
from .measure import ConfigError, MoranMeasure, load_measure
from .ortho import (
    HypothesisError,
    OrthogonalFamily,
    classify,
    construct_lambda0,
    construct_lambda_star,
    is_bizero_family,
    max_orthogonal_family,
)
from .zeros import enumerate_zeros, zero_membership

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


class Report:
    """Collects sections and renders them as text or key=value records."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []

    def field(self, section: str, value: str) -> None:
        if self.fmt == "kv":
            self.lines.append(f"{section.lower()}={value}")
        else:
            self.lines.append(f"{section} {value}")

    def block(self, section: str, header: str, rows: list[str], kv_rows: list[str]) -> None:
        if self.fmt == "kv":
            self.lines.append(f"{section.lower()}.count={len(kv_rows)}")
            self.lines.extend(kv_rows)
        else:
            self.lines.append(f"{section} {header}".rstrip())
            self.lines.extend(rows)

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


def _family_block(rep: Report, family: Sequence[Frequency]) -> None:
    lits = [format_frequency(f) for f in family]
    rep.block("FAMILY", str(len(lits)), lits, [f"family.member={s}" for s in lits])


def _verdict(rep: Report, measure: MoranMeasure, members: Sequence[Frequency]) -> bool:
    verdict = is_bizero_family(measure, list(members))
    if verdict:
        rep.field("VERDICT", "orthogonal")
    else:
        a, b = verdict.pair
        rep.field("VERDICT", "not-orthogonal")
        rep.field("PAIR", f"{format_frequency(a)} {format_frequency(b)}")
    return verdict.ok


def _expect_family(args, size: int, ok: bool) -> None:
    if args.expect is None:
        return
    if args.expect == "orthogonal":
        if not ok:
            raise DomainError("expected an orthogonal family")
    else:
        try:
            want = int(args.expect)
        except ValueError:
            raise UsageError(f"--expect must be 'orthogonal' or an integer size, got {args.expect!r}") from None
        if size != want or not ok:
            raise DomainError(f"expected an orthogonal family of size {want}, got size {size}")


def cmd_classify(args, measure: MoranMeasure, rep: Report) -> None:
    c = classify(measure)
    rep.field("REGIME", c.label)
    rep.field("SCOPE", c.scope)
    if c.exceptions:
        rep.field("EXCEPTIONS", ",".join(map(str, c.exceptions)))
    for reason in c.reasons:
        rep.field("REASON", reason)

    def where(row) -> str:
        return "+".join(w for w, flag in (("preperiod", row.in_preperiod), ("period", row.in_period)) if flag)

    rows = [f"{row.digit} {row.gcd_q} {row.gcd_p} {where(row)}" for row in c.gcd_table]
    kv = [f"gcd.N={row.digit} gcd_q={row.gcd_q} gcd_p={row.gcd_p} where={where(row)}" for row in c.gcd_table]
    rep.block("GCD-TABLE", f"N gcd(q,N) gcd(p,N) levels (q={measure.q}, p={measure.p})", rows, kv)
    if args.expect is not None and args.expect not in (c.label, c.regime):
        raise DomainError(f"expected regime {args.expect}, got {c.label}")


def cmd_zeros(args, measure: MoranMeasure, rep: Report) -> None:
    zs = enumerate_zeros(measure, args.n_max, args.a_max)
    rows = []
    for f in zs:
        w = zero_membership(measure, f)
        rows.append(f"{format_frequency(f)} {w}")
    rep.block("ZEROS", str(len(zs)), rows, [f"zero={r.replace(' ', ' witness=')}" for r in rows])


def cmd_member(args, measure: MoranMeasure, rep: Report) -> None:
    f = _parse_freq(args.freq, measure)
    w = zero_membership(measure, f)
    rep.field("FREQUENCY", format_frequency(f))
    if w is None:
        rep.field("VERDICT", "non-member")
        if args.expect is not None:
            raise DomainError(f"{args.freq} is not a zero")
    else:
        rep.field("VERDICT", "member")
        rep.field("WITNESS", str(w))


def cmd_check(args, measure: MoranMeasure, rep: Report) -> None:
    try:
        members = parse_family(args.family, measure)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(set(members)) != len(members):
        raise UsageError("family contains duplicate members")
    _family_block(rep, members)
    ok = _verdict(rep, measure, members)
    _expect_family(args, len(members), ok)


def _emit_family(args, measure: MoranMeasure, rep: Report, family: OrthogonalFamily) -> None:
    _family_block(rep, family.members)
    ok = _verdict(rep, measure, family.members)
    _expect_family(args, len(family), ok)


def cmd_search_max(args, measure: MoranMeasure, rep: Report) -> None:
    cands = enumerate_zeros(measure, args.n_max, args.a_max)
    rep.field("CANDIDATES", str(len(cands)))
    _emit_family(args, measure, rep, max_orthogonal_family(measure, cands))


def cmd_construct_l0(args, measure: MoranMeasure, rep: Report) -> None:
    _emit_family(args, measure, rep, construct_lambda0(measure))


def cmd_construct_star(args, measure: MoranMeasure, rep: Report) -> None:
    fam = construct_lambda_star(measure, args.alpha, args.branch, lcm_mode=args.lcm)
    _emit_family(args, measure, rep, fam)


def cmd_sample_ft(args, measure: MoranMeasure, rep: Report) -> None:
    rows = fourier.sample_ft(measure, args.xi_from, args.xi_to, args.count, args.tol)
    text = fourier.write_csv(rows, args.out)
    failed = sum(1 for r in rows if "error" in r)
    if args.out is None:
        rep.lines.append(text.rstrip("\n"))
    else:
        rep.field("CSV", f"{args.out} rows={len(rows)} failed={failed}")


def _parse_freq(text: str, measure: MoranMeasure) -> Frequency:
    try:
        return parse_frequency(text, measure)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="moranspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, help: str, expect: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("-m", "--measure", required=True, help="measure config file")
        p.add_argument("--format", choices=("text", "kv"), default="text")
        if expect:
            p.add_argument("--expect", help="turn the result into an exit status")
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "report the spectral/orthogonality regime")
    p = add("zeros", cmd_zeros, "list zeros with witnesses", expect=False)
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--a-max", type=_positive_int, required=True)
    p = add("member", cmd_member, "decide whether a frequency is a zero")
    p.add_argument("--freq", required=True, help="literal c0:...:c(r-1) or a/N@n")
    p = add("check", cmd_check, "verify that a family is orthogonal")
    p.add_argument("--family", required=True, help="comma-separated frequency literals (use --family=... if the first one is negative)")
    p = add("search-max", cmd_search_max, "largest orthogonal family among enumerated zeros")
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--a-max", type=_positive_int, required=True)
    add("construct-l0", cmd_construct_l0, "M-element family for coprime digits")
    p = add("construct-star", cmd_construct_star, "alpha-element family when digits divide p")
    p.add_argument("--alpha", type=_positive_int, required=True)
    p.add_argument("--branch", type=_positive_int, default=1)
    p.add_argument("--lcm", action="store_true", help="allow non-constant digits (lcm of orders)")
    p = add("sample-ft", cmd_sample_ft, "CSV samples of the Fourier transform", expect=False)
    p.add_argument("--from", dest="xi_from", type=_float, required=True)
    p.add_argument("--to", dest="xi_to", type=_float, required=True)
    p.add_argument("--count", type=_positive_int, required=True)
    p.add_argument("--tol", type=_float, default=1e-12)
    p.add_argument("--out", help="CSV path (default: stdout)")
    return parser


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Execute one invocation; returns ``(status, stdout, stderr)``."""
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return EXIT_USAGE, "", f"{exc}\n"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), "", ""
    rep = Report(args.format)
    try:
        measure = load_measure(args.measure)
    except (OSError, ConfigError) as exc:
        return EXIT_USAGE, "", f"error: {args.measure}: {exc}\n"
    try:
        args.func(args, measure, rep)
    except UsageError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    except (DomainError, HypothesisError, fourier.PrecisionError) as exc:
        return EXIT_DOMAIN, rep.render() if rep.lines else "", f"error: {exc}\n"
    except ValueError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    return EXIT_OK, rep.render(), ""


def main(argv: Sequence[str] | None = None) -> int:
    buf = io.StringIO()
    with redirect_stdout(buf):
        status, out, err = run(sys.argv[1:] if argv is None else argv)
    help_text = buf.getvalue()
    sys.stdout.write(help_text + out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
