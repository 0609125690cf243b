"""Command-line front end.

Exit codes: 0 = success / claim verified, 1 = a mathematical claim failed
verification, 2 = usage or input error.  Output is deterministic for a
given input; JSON mode never includes timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, List, Optional

from . import __version__, catalog
from .analysis import annihilator, check_pure, check_reducing, check_spinc_pure, commutant, frame_rotation_check, pairs
from .errors import SpinorForgeError, UnsupportedDimension
from .forms import eta, eta_hat
from .linalg import random_so_matrix
from .report import report_all
from .serialize import (
    render_two_form,
    scaled_spinor_from_json,
    scaled_spinor_to_json,
    spinor_from_json,
    subalgebra_to_json,
    two_form_to_json,
)


class UsageError(Exception):
    """Raised for exit-code-2 conditions."""


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from None


def _catalog_entry(args: argparse.Namespace) -> catalog.CatalogEntry:
    try:
        return catalog.build(args.catalog, m=getattr(args, "m", None),
                             n=getattr(args, "n", None))
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    except UnsupportedDimension as exc:
        raise UsageError(str(exc)) from None


def _spinor_arg(args: argparse.Namespace):
    """Resolve (--catalog NAME | --in FILE) to a twisted spinor."""
    if getattr(args, "catalog", None):
        return _catalog_entry(args).spinor
    if getattr(args, "infile", None):
        try:
            return scaled_spinor_from_json(_load_json(args.infile))
        except (ValueError, SpinorForgeError) as exc:
            raise UsageError(str(exc)) from None
    raise UsageError("need --catalog NAME or --in FILE")


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if getattr(args, "format", "text") == "json" or getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.catalog_verb == "list":
        for name in catalog.CATALOG_NAMES:
            extra = {"qk": "  (requires --m)", "generic": "  (requires --n)"}.get(name, "")
            print(name + extra)
        return 0
    ent = _catalog_entry(args)
    payload = scaled_spinor_to_json(ent.spinor)
    out = json.dumps(payload, indent=2)
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "spinc":
        if getattr(args, "catalog", None):
            raise UsageError(
                "catalog entries are twisted; spinc verification needs an "
                "untwisted spinor JSON via --in")
        if not args.infile:
            raise UsageError("verify spinc needs --in FILE")
        try:
            psi = spinor_from_json(_load_json(args.infile))
            verdict = check_spinc_pure(psi)
        except (ValueError, SpinorForgeError) as exc:
            raise UsageError(str(exc)) from None
        _emit(args, {"kind": "spinc", "verified": verdict},
              f"spinc pure: {str(verdict).lower()}")
        return 0 if verdict else 1
    phi = _spinor_arg(args)
    try:
        if kind == "pure":
            rep = check_pure(phi)
            verdict = rep.is_pure
            detail = {
                f"{k},{l}": {
                    "defect_norm2": str(v.defect_norm2),
                    "square_ok": v.square_ok,
                }
                for (k, l), v in sorted(rep.per_pair.items())
            }
        else:
            rep = check_reducing(phi)
            verdict = rep.is_reducing
            detail = {
                f"{k},{l}": {
                    "defect_norm2": str(v.defect_norm2),
                    "eta_nonzero": v.eta_nonzero,
                }
                for (k, l), v in sorted(rep.per_pair.items())
            }
    except SpinorForgeError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"kind": kind, "verified": verdict, "pairs": detail},
          f"{kind}: {str(verdict).lower()}")
    return 0 if verdict else 1


def cmd_eta(args: argparse.Namespace) -> int:
    phi = _spinor_arg(args)
    try:
        if args.pair:
            try:
                k, l = (int(x) for x in args.pair.split(","))
            except ValueError:
                raise UsageError(f"bad --pair {args.pair!r}; expected k,l") from None
            form = eta(phi, k, l)
            _emit(args, two_form_to_json(form), render_two_form(form))
        else:
            forms = {(k, l): eta(phi, k, l) for (k, l) in pairs(phi.r)}
            payload = {f"{k},{l}": two_form_to_json(f) for (k, l), f in sorted(forms.items())}
            text = "\n".join(f"eta[{k},{l}] = {render_two_form(f)}"
                             for (k, l), f in sorted(forms.items()))
            _emit(args, payload, text)
    except SpinorForgeError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_annihilator(args: argparse.Namespace) -> int:
    if not args.infiles:
        raise UsageError("need at least one --in FILE")
    try:
        spinors = [scaled_spinor_from_json(_load_json(p)) for p in args.infiles]
        alg = annihilator(spinors)
    except (ValueError, SpinorForgeError) as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps(subalgebra_to_json(alg), indent=2))
    else:
        from .serialize import render_ambient

        print(f"dim = {alg.dim}")
        print(f"closed = {str(alg.closed).lower()}")
        for x in alg.basis:
            print(render_ambient(x))
    return 0


def cmd_commutant(args: argparse.Namespace) -> int:
    phi = _spinor_arg(args)
    try:
        fam = [eta_hat(eta(phi, k, l)) for (k, l) in pairs(phi.r)]
        dim, basis = commutant(fam, restrict_skew=args.skew)
    except SpinorForgeError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        payload = {
            "dim": dim,
            "basis": [[[str(x) for x in row] for row in b.mat] for b in basis],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"dim = {dim}")
    return 0


def cmd_frame_test(args: argparse.Namespace) -> int:
    import random

    ent = _catalog_entry(args)
    rng = random.Random(args.seed)
    ok = True
    for t in range(args.trials):
        a = random_so_matrix(ent.spinor.r, rng, bound=2)
        good = frame_rotation_check(ent.spinor, a, ent.kind)
        print(f"trial {t + 1}: {'ok' if good else 'FAIL'}")
        ok = ok and good
    print("all invariant" if ok else "verdict changed under rotation")
    return 0 if ok else 1


def cmd_report(args: argparse.Namespace) -> int:
    rows = report_all()
    ok = all(r.passed for r in rows)
    if args.json:
        payload = [
            {"name": r.name, "expected": r.expected, "computed": r.computed,
             "pass": r.passed}
            for r in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        if not args.plain:
            print(f"spinor-forge {__version__}")
        width = max(len(r.name) for r in rows)
        for r in rows:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.computed}")
        print(f"{sum(r.passed for r in rows)}/{len(rows)} criteria passed")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spinor-forge",
        description="Exact twisted-spinor certificates: induced 2-forms, "
                    "purity and reducing checks, annihilator algebras.",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    p_cat = sub.add_parser("catalog", help="list or emit reference spinors")
    cat_sub = p_cat.add_subparsers(dest="catalog_verb", required=True)
    cat_sub.add_parser("list", help="list catalog names")
    p_emit = cat_sub.add_parser("emit", help="write a catalog spinor as JSON")
    p_emit.add_argument("--name", dest="catalog", required=True)
    p_emit.add_argument("--m", type=int)
    p_emit.add_argument("--n", type=int)
    p_emit.add_argument("-o", "--out", dest="outfile")
    p_cat.set_defaults(func=cmd_catalog)

    p_verify = sub.add_parser("verify", help="certify pure / reducing / spinc")
    p_verify.add_argument("kind", choices=("pure", "reducing", "spinc"))
    p_verify.add_argument("--catalog")
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--in", dest="infile")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_eta = sub.add_parser("eta", help="emit induced 2-forms")
    p_eta.add_argument("--catalog")
    p_eta.add_argument("--m", type=int)
    p_eta.add_argument("--n", type=int)
    p_eta.add_argument("--in", dest="infile")
    p_eta.add_argument("--pair", help="k,l (default: all pairs)")
    p_eta.add_argument("--format", choices=("text", "json"), default="text")
    p_eta.set_defaults(func=cmd_eta)

    p_ann = sub.add_parser("annihilator", help="common annihilator subalgebra")
    p_ann.add_argument("--in", dest="infiles", action="append", default=[])
    p_ann.add_argument("--json", action="store_true")
    p_ann.set_defaults(func=cmd_annihilator)

    p_comm = sub.add_parser("commutant", help="commutant of the induced family")
    p_comm.add_argument("--catalog")
    p_comm.add_argument("--m", type=int)
    p_comm.add_argument("--n", type=int)
    p_comm.add_argument("--in", dest="infile")
    p_comm.add_argument("--skew", action="store_true")
    p_comm.add_argument("--json", action="store_true")
    p_comm.set_defaults(func=cmd_commutant)

    p_frame = sub.add_parser("frame-test", help="random exact frame rotations")
    p_frame.add_argument("--catalog", required=True)
    p_frame.add_argument("--m", type=int)
    p_frame.add_argument("--n", type=int)
    p_frame.add_argument("--seed", type=int, default=0)
    p_frame.add_argument("--trials", type=int, default=5)
    p_frame.set_defaults(func=cmd_frame_test)

    p_rep = sub.add_parser("report", help="run the full regression report")
    p_rep.add_argument("--json", action="store_true")
    p_rep.add_argument("--plain", action="store_true")
    p_rep.set_defaults(func=cmd_report)

    return top


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
