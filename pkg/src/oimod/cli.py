"""Command-line front end.

    oimod dims ramos.json --from 0 --to 5
    oimod check-kappa-vbar fixture:ramos --r 2 --window 10 --machine

Exit status: 0 on success or a passing check, 1 when a check fails,
2 on bad input (schema errors, unmet hypotheses without --force, degree cap).
"""

from __future__ import annotations

import argparse
import sys

from . import bounds, functors, homology, io, module
from .combinatorics import DegreeCapError, set_degree_cap

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(spec: str) -> module.Presentation:
    try:
        if spec.startswith("fixture:"):
            return io.fixture(spec.split(":", 1)[1])
        return io.load(spec)
    except (OSError, KeyError, io.PresentationFormatError) as exc:
        raise InputError(str(exc)) from exc


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise InputError(f"{args.command} needs --{name.replace('_', '-')}")


def _table_str(tab: homology.HomologyTable) -> str:
    if tab.is_empty():
        body = "(zero)"
    else:
        body = "  ".join(f"{n}:{d}" for n, d in sorted(tab.dims.items()))
    return f"H_{tab.i}  {body}  [certified through degree {tab.certified_through}]"


def _cert_str(cert: functors.Certificate) -> str:
    verdict = "pass" if cert.passed else f"FAIL at degree {cert.first_failure}"
    params = " ".join(f"{k}={v}" for k, v in cert.params.items())
    line = f"{cert.check} ({params}, window {cert.window}): {verdict}"
    if cert.exploratory:
        line += "  [exploratory: hypothesis unmet]"
    return line


def cmd_dims(P, args):
    _need(args, "from_", "to")
    if args.from_ > args.to:
        raise InputError("--from must not exceed --to")
    dims = module.hilbert(P, args.from_, args.to)
    return {"from": args.from_, "to": args.to, "dims": dims}, " ".join(map(str, dims)), EXIT_OK


def cmd_h0(P, args):
    tab = homology.h0_dims(P)
    return tab.to_dict(), _table_str(tab), EXIT_OK


def cmd_h1(P, args):
    tab = homology.h1_dims(P)
    return tab.to_dict(), _table_str(tab), EXIT_OK


def cmd_t0t1(P, args):
    a, b = homology.t0(P), homology.t1(P)
    rec = {"t0": a, "t1": b, "prd": max(a, b)}
    return rec, f"t0={a} t1={b} prd={max(a, b)}", EXIT_OK


def cmd_shift(P, args):
    _need(args, "r")
    S, dec = functors.shift_presentation(P, args.r)
    rec = {
        "r": args.r,
        "decomposition": [{"gen": j, "subset": list(E), "degree": d}
                          for (j, E), d in zip(dec.summand_index, dec.new_generator_degrees)],
        "presentation": io.presentation_to_dict(S),
    }
    text = f"shift by {args.r}: generators {list(S.free.generator_degrees)}, {len(S.relations)} relations\n"
    return rec, text + io.dumps(S), EXIT_OK


def cmd_vbar(P, args):
    _need(args, "r")
    _check_hypothesis(P, args)
    V = functors.vbar_presentation(P, args.r)
    d = V.free.generator_degrees[0] if len(V.free) else homology.t0(P)
    rec = {"r": args.r, "d": d, "presentation": io.presentation_to_dict(V)}
    text = (f"V-bar (d={d}, r={args.r}): {len(V.free)} generators of degree {d}, "
            f"{len(V.relations)} relations\n" + io.dumps(V))
    return rec, text, EXIT_OK


def _check_hypothesis(P, args):
    p = homology.prd(P)
    if args.r < p and not args.force:
        raise InputError(f"r={args.r} is below prd={p}; pass --force for an exploratory run")


def cmd_check_kappa_vbar(P, args):
    _need(args, "r", "window")
    _check_hypothesis(P, args)
    cert = functors.check_kappa_vbar(P, args.r, args.window, force=True)
    return cert.to_dict(), _cert_str(cert), EXIT_OK if cert.passed else EXIT_FAIL


def cmd_verify_what_span(P, args):
    _need(args, "r", "window")
    cert = functors.verify_what_span(P, args.r, args.window)
    return cert.to_dict(), _cert_str(cert), EXIT_OK if cert.passed else EXIT_FAIL


def cmd_bound(P, args):
    rep = bounds.reg_bound(P)
    text = (f"t0={rep.t0} t1={rep.t1} prd={rep.prd} reg_bound={rep.reg_bound} "
            f"c_bound={rep.c_bound} filtration={rep.filtration_size_bound}")
    if rep.degenerate:
        text += " (zero module: reg = -1)"
    return rep.to_dict(), text, EXIT_OK


def cmd_fit(P, args):
    _need(args, "from_", "to")
    try:
        fit = bounds.hilbert_poly_fit(P, args.from_, args.to)
    except bounds.NoPolynomialTail as exc:
        rec = {"window": [args.from_, args.to], "found": False, "reason": str(exc)}
        return rec, str(exc), EXIT_FAIL
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    rec = dict(fit.to_dict(), found=True)
    poly = " + ".join(f"({c})*n^{k}" for k, c in enumerate(fit.coefficients) if c) or "0"
    return rec, f"P(n) = {poly}  from n = {fit.empirical_onset}", EXIT_OK


def cmd_semi_induced(P, args):
    cert = homology.is_semi_induced(P)
    text = "semi-induced" if cert.verdict else f"not semi-induced (H_1 nonzero in degree {cert.witness_degree})"
    return cert.to_dict(), text, EXIT_OK


def cmd_filtration(P, args):
    try:
        mult = homology.filtration_multiplicities(P)
    except homology.NotSemiInducedError as exc:
        raise InputError(f"filtration needs a semi-induced module: {exc}") from exc
    rec = {"multiplicities": {str(k): v for k, v in sorted(mult.items())}}
    text = " + ".join(f"{v}*M({k})" for k, v in sorted(mult.items())) or "0"
    return rec, text, EXIT_OK


def cmd_h(P, args):
    _need(args, "i", "bound")
    try:
        tab = homology.h_dims(P, args.i, args.bound)
    except homology.InsufficientBoundError as exc:
        raise InputError(str(exc)) from exc
    return tab.to_dict(), _table_str(tab), EXIT_OK


def cmd_std(P, args):
    _need(args, "max_shift")
    seq, low = bounds.std_empirical(P, args.max_shift)
    rec = {"max_shift": args.max_shift, "t0_of_shifts": seq, "min": low, "certified": False}
    return rec, f"t0(Sigma^n V), n=0..{args.max_shift}: {' '.join(map(str, seq))}  min={low}", EXIT_OK


COMMANDS = {
    "dims": (cmd_dims, "Hilbert function on a window"),
    "h0": (cmd_h0, "dimensions of H_0"),
    "h1": (cmd_h1, "dimensions of H_1"),
    "t0t1": (cmd_t0t1, "t0, t1 and the presentation degree"),
    "shift": (cmd_shift, "presentation of the r-fold shift"),
    "vbar": (cmd_vbar, "presentation of V-bar"),
    "check-kappa-vbar": (cmd_check_kappa_vbar, "check that V-bar -> Sigma V-bar is injective"),
    "verify-what-span": (cmd_verify_what_span, "check the w-hat generators against the projected shift"),
    "bound": (cmd_bound, "regularity / Hilbert onset bounds"),
    "fit": (cmd_fit, "exact Hilbert polynomial fit"),
    "semi-induced": (cmd_semi_induced, "semi-induced certificate"),
    "filtration": (cmd_filtration, "multiplicities of the natural filtration"),
    "h": (cmd_h, "windowed higher homology"),
    "std": (cmd_std, "t0 of successive shifts"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="presentation JSON file, or fixture:NAME")
    common.add_argument("--machine", action="store_true", help="canonical JSON output")
    common.add_argument("--degree-cap", type=int, help="override the degree cap (default $OI_DEGREE_CAP or 64)")
    common.add_argument("--force", action="store_true", help="run even when r < prd (exploratory)")
    common.add_argument("--from", dest="from_", type=int)
    common.add_argument("--to", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--window", type=int)
    common.add_argument("--bound", type=int)
    common.add_argument("--i", type=int)
    common.add_argument("--max-shift", type=int)

    ap = argparse.ArgumentParser(prog="oimod", description="Exact computations with presented OI-modules.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=helptext)
    fx = sub.add_parser("fixtures", help="list bundled fixtures, or print one")
    fx.add_argument("name", nargs="?")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "fixtures":
        if args.name:
            try:
                print(io.dumps(io.fixture(args.name)))
            except KeyError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_INPUT
        else:
            print("\n".join(io.FIXTURES))
        return EXIT_OK
    try:
        if args.degree_cap is not None:
            set_degree_cap(args.degree_cap)
        P = _load(args.input)
        func = COMMANDS[args.command][0]
        rec, text, status = func(P, args)
    except (InputError, DegreeCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.machine:
        print(io.canonical_json(dict(rec, command=args.command)))
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
