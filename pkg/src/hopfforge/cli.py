"""Command-line interface: ``hopfforge validate | check | build | classify | reconstruct | report``.

Exit codes: 0 when every check passes, 1 when a check (or a hypothesis of
an operation) fails, 2 when the input is malformed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bundlefile as bf
from . import constructors as C
from . import crossprod as cp
from . import projection as P
from .errors import (
    BundleFormatError,
    FactorizationFailed,
    HopfForgeError,
    InvalidMatchedPair,
    PreconditionFailed,
)
from .field import FieldSpec
from .report import CheckReport
from .structures import check_algebra, check_antipode, check_bialgebra, check_coalgebra

OK, CHECK_FAILED, MALFORMED = 0, 1, 2

CHECK_SETS = ("direct", "ii", "iii", "iv", "v", "vi", "vii", "neccconds", "bespdrab", "twoanothYD", "aux")
BUILD_KINDS = ("smash", "cosmash", "biproduct", "dcp", "dccp", "group", "dual-group",
               "drinfeld-double", "bicrossed")


class CheckFailure(Exception):
    """A check failed; carries the report (if any) and the failing label."""

    def __init__(self, label: str, report: Optional[CheckReport] = None, detail: str = ""):
        super().__init__(label)
        self.label = label
        self.report = report
        self.detail = detail


# -- output ------------------------------------------------------------------------


def _emit(args, payload: dict, text: str) -> None:
    if text:
        print(text)
    target = getattr(args, "json", None)
    if target == "-":
        print(json.dumps(payload, indent=1, ensure_ascii=False))
    elif target:
        with open(target, "w") as fh:
            json.dump(payload, fh, indent=1, ensure_ascii=False)
            fh.write("\n")


def _report_payload(report: CheckReport, fs: FieldSpec, **extra) -> dict:
    payload = report.to_json(fs.format_scalar)
    if report.first_failure is not None:
        payload["first_failure"] = report.first_failure.label
    payload.update(extra)
    return payload


def _finish_report(args, report: CheckReport, fs: FieldSpec, **extra) -> int:
    _emit(args, _report_payload(report, fs, **extra), report.summary())
    if not report:
        print(f"check failed: {report.first_failure.label}", file=sys.stderr)
        return CHECK_FAILED
    return OK


def _load(args) -> bf.Bundle:
    fs = FieldSpec.parse(args.field) if getattr(args, "field", None) else None
    return bf.load_bundle(args.path, fs)


# -- validate ----------------------------------------------------------------------------

def _declared_report(h, flags) -> CheckReport:
    r = CheckReport()
    wanted = set(flags)
    if "hopf" in wanted:
        wanted |= {"bialgebra"}
    if "bialgebra" in wanted:
        r.extend(check_bialgebra(h))
    else:
        if "algebra" in wanted:
            r.extend(check_algebra(h.algebra))
        if "coalgebra" in wanted:
            r.extend(check_coalgebra(h.coalgebra))
    if "hopf" in wanted:
        if h.antipode is None:
            r.record("braidedantipode", False, "declared Hopf but no antipode given")
        else:
            r.extend(check_antipode(h))
    return r


def validate_bundle(bundle: bf.Bundle) -> CheckReport:
    """Every structure a bundle declares, verified."""
    r = CheckReport()
    for role in bundle.hopf_roles():
        flags = bundle.role_declares(role)
        if flags:
            r.extend(_declared_report(bundle.hopf(role), flags), prefix=f"{role}.")
    if bundle.kind == "cross":
        d = bundle.cross()
        r.extend(cp.check_cross_product_algebra(d))
        r.extend(cp.check_cross_product_coalgebra(d))
        if r and "bialgebra" in bundle.declares:
            r.extend(cp.check_bat_direct(d))
        if d.antipode is not None and r:
            r.extend(check_antipode(cp.cross_bundle(d)), prefix="cross.")
    elif bundle.kind == "projection":
        r.extend(P.check_projection_conditions(bundle.projection()))
    return r


def cmd_validate(args) -> int:
    bundle = _load(args)
    return _finish_report(args, validate_bundle(bundle), bundle.field, kind=bundle.kind)


# -- check ---------------------------------------------------------------------------------

def run_check(d: cp.CrossDatum, name: str) -> CheckReport:
    book = cp.EquationBook.for_datum(d)
    if name == "direct":
        return cp.check_bat_direct(d, book)
    if name in cp.CONDITION_SETS:
        return cp.check_condition_set(d, name, book)
    if name == "neccconds":
        return cp.check_neccconds(d, book=book)
    if name == "bespdrab":
        return cp.check_bespdrab(d, book=book)
    if name == "twoanothYD":
        return cp.check_twoanothYD(d, book=book)
    if name == "aux":
        r = cp.check_aux_lists(d, "crossprodalg2", book)
        return r.extend(cp.check_aux_lists(d, "crossprodcoalg2", book))
    raise ValueError(f"unknown set {name!r}")


def cmd_check(args) -> int:
    bundle = _load(args)
    d = bundle.cross()
    return _finish_report(args, run_check(d, args.set), bundle.field, set=args.set)


# -- build -------------------------------------------------------------------------------------

def parse_group(text: str) -> C.GroupDatum:
    """``cyclic:N``, ``symmetric:N``, ``trivial`` or a JSON file holding a table."""
    kind, _, arg = text.partition(":")
    try:
        if kind == "cyclic":
            return C.GroupDatum.cyclic(int(arg))
        if kind == "symmetric":
            return C.GroupDatum.symmetric(int(arg))
        if kind == "trivial":
            return C.GroupDatum.trivial()
    except ValueError:
        raise BundleFormatError("--group", f"bad group spec {text!r}") from None
    try:
        with open(text) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BundleFormatError("--group", f"cannot read group table {text!r}: {exc}") from None
    table = doc.get("table") if isinstance(doc, dict) else doc
    return C.GroupDatum(tuple(map(tuple, table)))


def parse_pair(text: str) -> C.MatchedGroupPair:
    """``s3`` (Z3 and Z2 with the inversion action), ``trivial:G1,G2`` or a JSON file."""
    if text == "s3":
        return C.s3_factorization()
    if text.startswith("trivial:"):
        g1, _, g2 = text[len("trivial:"):].partition(",")
        return C.MatchedGroupPair.trivial(parse_group(g1), parse_group(g2))
    try:
        with open(text) as fh:
            doc = json.load(fh)
        return C.MatchedGroupPair(C.GroupDatum(tuple(map(tuple, doc["G1"]))),
                                  C.GroupDatum(tuple(map(tuple, doc["G2"]))),
                                  tuple(map(tuple, doc["act12"])), tuple(map(tuple, doc["act21"])))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise BundleFormatError("--pair", f"cannot read matched pair {text!r}: {exc}") from None


def _inputs(args, fs: FieldSpec):
    """``(A, B, roles)`` from ``--input FILE`` or the Sweedler inputs."""
    if args.sweedler:
        si = C.sweedler_inputs(fs)
        return si.A, si.B, {"lact": si.lact, "lcoact": si.lcoact}
    if not args.input:
        raise BundleFormatError("--input", "this kind needs --input FILE or --sweedler")
    bundle = bf.load_bundle(args.input, FieldSpec.parse(args.field) if args.field else None)
    bundle._expect_kind("inputs")
    roles = {k: bundle.optional_mor(k) for k in ("lact", "ract", "lcoact", "rcoact")}
    # Declared flags travel into the output; cmd_build re-validates them.
    A, B = (bundle.hopf(r).with_flags(*bundle.role_declares(r)) for r in ("A", "B"))
    return A, B, roles


def _role(roles: dict, name: str):
    f = roles.get(name)
    if f is None:
        raise BundleFormatError(f"roles.{name}", "required by this kind")
    return f


def build_document(args) -> dict:
    fs = FieldSpec.parse(args.field or "rational")
    kind = args.kind
    if kind == "group":
        g = parse_group(args.group or "cyclic:2")
        return bf.hopf_document(C.group_algebra(g, fs), extra={"group": [list(r) for r in g.table]})
    if kind == "dual-group":
        g = parse_group(args.group or "cyclic:2")
        return bf.hopf_document(C.function_algebra(g, fs), extra={"group": [list(r) for r in g.table]})
    if kind == "drinfeld-double":
        d = C.drinfeld_double(parse_group(args.group or "symmetric:3"), fs)
        return bf.cross_document(d, declares=["bialgebra"])
    if kind == "bicrossed":
        group, H = C.build_bicrossed_group(parse_pair(args.pair or "s3"), fs)
        return bf.hopf_document(H, extra={"group": [list(r) for r in group.table]})
    A, B, roles = _inputs(args, fs)
    if kind == "smash":
        psi = C.build_smash_product(B, A.algebra, _role(roles, "lact"))
        return bf.cross_document(cp.CrossDatum(A, B, psi, C.braiding(A.obj, B.obj)))
    if kind == "cosmash":
        phi = C.build_smash_coproduct(B, A.coalgebra, _role(roles, "lcoact"))
        return bf.cross_document(cp.CrossDatum(A, B, C.braiding(B.obj, A.obj), phi))
    if kind == "biproduct":
        d = C.build_biproduct(B, A, _role(roles, "lact"), _role(roles, "lcoact"))
        return bf.cross_document(d, declares=["bialgebra"])
    if kind == "dcp":
        d = C.build_double_cross_product(A, B, _role(roles, "lact"), _role(roles, "ract"))
        return bf.cross_document(d, declares=["bialgebra"])
    if kind == "dccp":
        d = C.build_double_cross_coproduct(A, B, _role(roles, "lcoact"), _role(roles, "rcoact"))
        return bf.cross_document(d, declares=["bialgebra"])
    raise BundleFormatError("kind", f"unknown build kind {kind!r}")


def cmd_build(args) -> int:
    doc = build_document(args)
    report = validate_bundle(bf.parse_bundle(doc))
    if not report:
        raise CheckFailure(report.first_failure.label, report, "built bundle does not re-validate")
    if args.out:
        bf.write_bundle(doc, args.out)
        print(f"wrote {args.kind} bundle to {args.out}")
    else:
        print(json.dumps(doc, indent=1, ensure_ascii=False))
    return OK


# -- classify, reconstruct, report -------------------------------------------------------------

def cmd_classify(args) -> int:
    bundle = _load(args)
    d = bundle.cross()
    flags = sorted(cp.classify(d))
    payload = {"flags": flags, "normality": cp.normality(d)}
    _emit(args, payload, " ".join(flags))
    return OK


def cmd_reconstruct(args) -> int:
    bundle = _load(args)
    pd = bundle.projection()
    rec = P.reconstruct(pd)
    dims = {"A": rec.obj.dim, "B": pd.B.obj.dim, "H": pd.H.obj.dim}
    if args.out:
        bf.write_bundle(bf.cross_document(rec.datum, declares=["bialgebra"]), args.out)
    special = P.check_special_projections(pd)
    return _finish_report(args, rec.report, bundle.field, dims=dims, special=special,
                          flags=sorted(cp.classify(rec.datum)))


def full_report(bundle: bf.Bundle) -> tuple[CheckReport, dict]:
    """Every applicable suite for a bundle and a dictionary of derived facts."""
    r = validate_bundle(bundle)
    facts: dict = {"kind": bundle.kind}
    if bundle.kind == "cross" and r:
        d = bundle.cross()
        book = cp.EquationBook.for_datum(d)
        r.extend(book.report(cp.DIRECT), prefix="direct.")
        for name in cp.CONDITION_SETS:
            facts[f"set.{name}"] = cp.check_condition_set(d, name, book).passed
        r.extend(cp.check_neccconds(d, book=book))
        r.extend(cp.check_bespdrab(d, book=book))
        facts["normality"] = cp.normality(d)
        if cp.check_bat_direct(d, book):
            facts["flags"] = sorted(cp.classify(d))
    elif bundle.kind == "projection" and r:
        facts["special"] = P.check_special_projections(bundle.projection())
    return r, facts


def cmd_report(args) -> int:
    bundle = _load(args)
    report, facts = full_report(bundle)
    return _finish_report(args, report, bundle.field, facts=facts)


# -- entry point ----------------------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfforge", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="rational or fp:<p>; overrides the field of input files")
    common.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse a bundle and verify what it declares")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", parents=[common], help="run one equation suite on a cross bundle")
    p.add_argument("path")
    p.add_argument("--set", required=True, choices=CHECK_SETS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", parents=[common], help="build a bundle with one of the constructors")
    p.add_argument("kind", choices=BUILD_KINDS)
    p.add_argument("--group", help="cyclic:N, symmetric:N, trivial or a table file")
    p.add_argument("--pair", help="s3, trivial:G1,G2 or a matched-pair file")
    p.add_argument("--input", help="inputs bundle with roles A, B and (co)actions")
    p.add_argument("--sweedler", action="store_true", help="use Sweedler's inputs (kZ2 on k[x]/x^2)")
    p.add_argument("-o", "--out", help="output bundle file (default: stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("classify", parents=[common], help="smash, biproduct and double cross flags")
    p.add_argument("path")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reconstruct", parents=[common], help="rebuild the cross product of a projection")
    p.add_argument("path")
    p.add_argument("-o", "--out", help="write the reconstructed cross bundle here")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("report", parents=[common], help="run every applicable suite")
    p.add_argument("path")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except BundleFormatError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return MALFORMED
    except CheckFailure as exc:
        if exc.report is not None:
            print(exc.report.summary())
        print(f"check failed: {exc.label} {exc.detail}".rstrip(), file=sys.stderr)
        return CHECK_FAILED
    except (PreconditionFailed, FactorizationFailed, InvalidMatchedPair) as exc:
        label = getattr(exc, "label", type(exc).__name__)
        print(f"check failed: {label}: {exc}", file=sys.stderr)
        return CHECK_FAILED
    except HopfForgeError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
