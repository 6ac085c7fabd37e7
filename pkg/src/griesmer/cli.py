"""Command-line entry point: ``griesmer <subcommand> ...``.

Exit codes: 0 success, 1 a verification found a property violation,
2 usage, format or missing-file errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import constructions
from .basis import CertificateError, construct_basis
from .codefile import FormatError, read_code, write_code
from .finite_field import FieldError, make_field
from .geometry import endpoints, format_spectrum, gamma, multiset_of
from .lab import PROVEN, THEOREMS, SearchError, SearchTask, run_corpus, search, verify_theorem
from .linear_code import (
    CodeError,
    LinearCode,
    griesmer_bound,
    projected,
    residual,
    shortened,
)
from .padic import PadicError, c_sum, galois_ring, nu_binom, teichmuller
from .ward import max_divisor_exponent

log = logging.getLogger("griesmer")


class UsageError(Exception):
    pass


def _emit(data: dict, as_json: bool, text: str) -> None:
    print(json.dumps(data, indent=2) if as_json else text)


def _load(path: str) -> LinearCode:
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    return read_code(path)


def _field_arg(text: str):
    try:
        p, f = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--field expects p,f (got {text!r})") from None
    return make_field(p, f)


# -- analyze ----------------------------------------------------------------

def analysis(code: LinearCode) -> dict:
    field = code.field
    divisor, exponent = code.divisor_and_exponent()
    m = multiset_of(code)
    return {
        "q": field.q,
        "n": code.n,
        "k": code.k,
        "d": code.d,
        "griesmer_bound": griesmer_bound(field.q, code.k, code.d),
        "is_griesmer": code.is_griesmer(),
        "weight_distribution": {str(w): c for w, c in code.weight_distribution.items()},
        "divisor": divisor,
        "p_exponent": exponent,
        "gamma": gamma(m),
        "endpoints": len(endpoints(m)),
    }


def analysis_report(code: LinearCode) -> str:
    a = analysis(code)
    dist = " ".join(f"{w}:{c}" for w, c in a["weight_distribution"].items())
    return "\n".join([
        f"q={a['q']} n={a['n']} k={a['k']} d={a['d']}",
        f"griesmer_bound={a['griesmer_bound']} is_griesmer={str(a['is_griesmer']).lower()}",
        f"weight_distribution {dist}",
        f"divisor={a['divisor']} p_exponent={a['p_exponent']}",
        f"gamma={a['gamma']} endpoints={a['endpoints']}",
    ])


def cmd_analyze(args) -> int:
    code = _load(args.file)
    _emit(analysis(code), args.json, analysis_report(code))
    return 0


# -- construct / derive -------------------------------------------------------

def cmd_construct(args) -> int:
    ctor = constructions.CONSTRUCTORS[args.family]
    try:
        code = ctor(*args.params)
    except TypeError:
        raise UsageError(f"wrong number of parameters for {args.family}") from None
    write_code(code, args.output)
    print(f"wrote {code!r} to {args.output}")
    return 0


def _pick_word(code: LinearCode, args):
    if args.message is not None:
        msg = [int(x) for x in args.message.split(",")]
        if len(msg) != code.k:
            raise UsageError(f"--message needs {code.k} entries")
        return code.encode(msg)
    w = code.d if args.weight is None else args.weight
    words = code.words_of_weight(w)
    if not len(words):
        raise UsageError(f"no codeword of weight {w}")
    return words[0]


def cmd_derive(args) -> int:
    code = _load(args.file)
    if args.kind == "shortened":
        if args.point is None:
            raise UsageError("shortened needs --point")
        out = shortened(code, [int(x) for x in args.point.split(",")])
    else:
        a = _pick_word(code, args)
        out = residual(code, a) if args.kind == "residual" else projected(code, a)
    write_code(out, args.output)
    print(f"wrote [{out.n},{out.k},{out.d}]_{out.q} {args.kind} code to {args.output}")
    return 0


# -- basis / ward -------------------------------------------------------------

def cmd_basis(args) -> int:
    code = _load(args.file)
    try:
        rows, cert = construct_basis(code)
    except CertificateError as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        return 1
    write_code(LinearCode(code.field, rows), args.output)
    print(cert.report())
    print(f"wrote re-based generator matrix to {args.output}")
    return 0


def cmd_ward(args) -> int:
    code = _load(args.file)
    res = max_divisor_exponent(code, e_max=args.max_e, mode=args.mode,
                               max_len=args.max_len, alpha=args.alpha)
    data = {
        "exponent": res.exponent,
        "divisor": code.field.p ** res.exponent,
        "e_max": res.e_max,
        "mode": res.mode,
        "tuples_checked": res.tuples_checked,
        "witness": list(res.witness) if res.witness else None,
        "witness_bound": str(res.witness_bound) if res.witness_bound is not None else None,
    }
    text = [f"verified exponent e={res.exponent} (divisor {data['divisor']}), "
            f"e_max={res.e_max}, mode={res.mode}, tuples={res.tuples_checked}"]
    if res.witness is not None:
        text.append(f"level {res.exponent + 1} fails at tuple {res.witness} "
                    f"with bound {res.witness_bound}")
    _emit(data, args.json, "\n".join(text))
    return 0


# -- padic / geometry ---------------------------------------------------------

def cmd_padic(args) -> int:
    if args.op == "kummer":
        print(nu_binom(args.n, args.m, args.p))
    elif args.op == "csum":
        field = _field_arg(args.field)
        print(c_sum(args.r, args.s, field.q))
    else:
        field = _field_arg(args.field)
        gr = galois_ring(field, args.prec)
        print(list(teichmuller(args.elem, gr).coeffs))
    return 0


def cmd_geometry(args) -> int:
    code = _load(args.file)
    print(format_spectrum(multiset_of(code)))
    return 0


# -- verify / search ----------------------------------------------------------

def _theorem_list(text: str) -> list[str]:
    out = []
    for t in text.lower().split(","):
        t = t.strip()
        if t == "t1.3":
            out += ["t1.3a", "t1.3b"]
        elif t in THEOREMS:
            out.append(t)
        else:
            raise UsageError(f"unknown theorem {t!r}")
    return out


def cmd_verify(args) -> int:
    theorems = _theorem_list(args.theorems)
    if args.corpus:
        verdicts = run_corpus(theorems)
    elif args.file:
        code = _load(args.file)
        verdicts = [verify_theorem(code, t) for t in theorems]
    else:
        raise UsageError("verify needs a file or --corpus")
    for v in verdicts:
        extra = f" claimed={v.claimed} observed={v.observed}" if v.claimed is not None else f" ({v.note})"
        print(f"{v.status.upper():7} {v.theorem:6} {v.code}{extra}")
    if args.json:
        payload = json.dumps([v.as_dict() for v in verdicts], indent=2)
        if args.json == "-":
            print(payload)
        else:
            Path(args.json).write_text(payload + "\n", encoding="utf-8")
    bad = [v for v in verdicts if v.status == "fail" and v.theorem in PROVEN]
    return 1 if bad else 0


def cmd_search(args) -> int:
    task = SearchTask(args.p, args.f, args.k, args.d, strategy=args.strategy,
                      budget=args.budget, seed=args.seed, recipe=not args.no_recipe,
                      max_found=args.max_found)
    report = search(task, out_dir=args.out)
    print(report.summary())
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="griesmer", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="parameters, weights and divisor of a code")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="write a built-in code family")
    p.add_argument("family", choices=sorted(constructions.CONSTRUCTORS))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("derive", help="residual, projected or shortened code")
    p.add_argument("kind", choices=["residual", "projected", "shortened"])
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--weight", type=int, help="use the first codeword of this weight (default d)")
    g.add_argument("--message", help="use the codeword of this message, comma-separated")
    p.add_argument("--point", help="projective point for shortening, comma-separated")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("basis", help="structured basis with certificate")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("ward", help="largest p-power divisor from Teichmueller lifts")
    p.add_argument("file")
    p.add_argument("--max-e", type=int, default=8)
    p.add_argument("--mode", choices=["folded", "bounded"], default="folded")
    p.add_argument("--max-len", type=int)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ward)

    p = sub.add_parser("padic", help="valuations, binomial sums and Teichmueller lifts")
    psub = p.add_subparsers(dest="op", required=True)
    k = psub.add_parser("kummer")
    for name in ("n", "m", "p"):
        k.add_argument(name, type=int)
    c = psub.add_parser("csum")
    c.add_argument("r", type=int)
    c.add_argument("s", type=int)
    c.add_argument("--field", required=True)
    t = psub.add_parser("teich")
    t.add_argument("elem", type=int)
    t.add_argument("--field", required=True)
    t.add_argument("--prec", type=int, required=True)
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("geometry", help="point multiset views")
    gsub = p.add_subparsers(dest="op", required=True)
    s = gsub.add_parser("spectrum")
    s.add_argument("file")
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("verify", help="check the divisibility theorems")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", action="store_true")
    p.add_argument("--theorems", default=",".join(THEOREMS))
    p.add_argument("--json", metavar="OUT", help="write verdicts as JSON ('-' for stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="look for Griesmer codes by point multisets")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--strategy", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-found", type=int)
    p.add_argument("--no-recipe", action="store_true",
                   help="allow parameters outside the counterexample window (smoke tests)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, FieldError, CodeError, PadicError, SearchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
