"""Command line front end: read a group, run one verb, print a JSON report.

Exit status: 0 on success, 1 on not_basis or a discrepancy, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arrangement import arrangement_data, q_chi
from .construct.hilbert import (
    forms_numerator,
    hilbert_series,
    ledger_from_bases,
    mixed_numerator,
    series_from_basis,
)
from .construct.mixed import VARIANTS, mixed_basis
from .construct.one_hyperplane import ConstructionError
from .forms import FormError
from .group import CharacterError, GroupError
from .oracle import MODULES, OracleError, appendix_audit, audit_element, dimension_table, infer_sgc_degrees
from .saito import check_derivations, check_mixed, check_oneforms
from .serialize import (
    InputError,
    basis_file_from_json,
    dumps,
    element_from_json,
    envelope,
    form_to_json,
    group_from_json,
    group_to_json,
)

VERBS = ("analyze", "saito-check", "build-basis", "hilbert", "oracle-dims", "appendix-audit")


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from exc


def load_group(spec: str, cap: int | None = None):
    if spec.startswith("catalog:"):
        return group_from_json({"catalog": spec.split(":", 1)[1]}, cap)
    return group_from_json(_load_json(spec), cap)


def _ranks(G, k):
    if k is None:
        return list(range(G.n + 1))
    if not 0 <= k <= G.n:
        raise InputError(f"--k must lie in 0..{G.n}")
    return [k]


# ---- verbs ----

def cmd_analyze(G, args) -> tuple[dict, int]:
    A = arrangement_data(G)
    F = G.field
    body = {
        "group": group_to_json(G),
        "order": G.order,
        "n": G.n,
        "reflections": len(G.reflections),
        "transvections": sum(1 for r in G.reflections if r.kind == "transvection"),
        "is_reflection_group": G.is_reflection_group(),
        "maximal_root_spaces": G.maximal_root_spaces(),
        "hyperplanes": [
            {
                "ell": str(h.linear_form(F)),
                "e": h.e,
                "b": h.b,
                "delta": h.delta,
                "order_GH": h.order_GH,
                "order_KH": h.order_KH,
                "orbit": h.orbit,
            }
            for h in G.hyperplanes
        ],
        "orbits": len(G.orbits),
        "arrangement": {
            "size": A.size,
            "Q": str(A.Q),
            "Q_det": str(A.Q_det),
            "Q_tilde": str(A.Q_tilde),
            "Q_det_inverse": str(A.Q_det_inverse),
            "coxeter_number": A.coxeter_number(),
            "target_degrees": {str(k): A.target_degree(k) for k in range(G.n + 1)},
        },
    }
    if args.chi is not None:
        chi = [element_from_json(F, x) for x in args.chi]
        if len(chi) != len(G.generators):
            raise InputError("--chi needs one value per generator")
        body["Q_chi"] = str(q_chi(A, G, chi))
    return body, 0


def cmd_saito_check(G, args) -> tuple[dict, int]:
    if not args.basis:
        raise InputError("saito-check needs --basis")
    forms = basis_file_from_json(_load_json(args.basis), G.field, G.n, args.k)
    if not forms:
        raise InputError("basis file is empty")
    A = arrangement_data(G)
    first = forms[0]
    if first.variant == "derivation":
        cert = check_derivations(G, forms, A)
    elif first.variant == "diff_form" and first.rank == 1:
        cert = check_oneforms(G, forms, A)
    else:
        k = args.k if args.k is not None else first.rank
        cert = check_mixed(G, k, forms, A)
    return {"certificate": cert.to_json()}, 0 if cert.is_basis else 1


def _basis_report(G, mb, ranks) -> dict:
    return {
        "variant": mb.variant,
        "r": mb.r,
        "thetas": [form_to_json(t) for t in mb.thetas],
        "omegas": [form_to_json(w) for w in mb.omegas],
        "ranks": {
            str(k): [
                {"label": label, "degree": f.homogeneous_degree(), "form": form_to_json(f)}
                for label, f in mb.ranks[k]
            ]
            for k in ranks
        },
        "certificates": {str(k): mb.certificates[k].to_json() for k in ranks},
    }


def cmd_build_basis(G, args) -> tuple[dict, int]:
    ranks = _ranks(G, args.k)
    mb = mixed_basis(G, r=args.r, variant=args.variant, certify=False)
    A = arrangement_data(G)
    mb.certificates = {k: check_mixed(G, k, mb.elements(k), A) for k in ranks}
    ok = all(c.is_basis for c in mb.certificates.values())
    return _basis_report(G, mb, ranks), 0 if ok else 1


def _laurent_json(num) -> list:
    return [[q, t, c] for (q, t), c in sorted(num.items())]


def cmd_hilbert(G, args) -> tuple[dict, int]:
    dmax = args.dmax if args.dmax is not None else 10
    A = arrangement_data(G)
    mb = mixed_basis(G, variant=args.variant)
    sgc = args.sgc_degrees or infer_sgc_degrees(G)
    coxeter = A.coxeter_number()
    structure = "char2" if mb.variant == "char2" else "generic"
    closed_applies = coxeter is not None and (structure == "char2" or not any(A.delta))
    body: dict = {"sgc_degrees": list(sgc), "dmax": dmax}
    oracle = dimension_table(G, dmax, "mixed")
    if coxeter is not None:
        ledger = ledger_from_bases(mb.thetas, mb.omegas, coxeter, sgc, A.size, structure)
        body["ledger"] = {
            "m_star": ledger.m_star,
            "m": ledger.m,
            "coxeter": coxeter,
            "structure": structure,
            "duality_holds": ledger.duality_holds(),
        }
        forms_series = hilbert_series(ledger, dmax, "forms")
        forms_oracle = dimension_table(G, dmax, "forms")
        body["forms"] = {
            "numerator": _laurent_json(forms_numerator(ledger)),
            "series": {str(k): v for k, v in forms_series.items()},
            "discrepancies": _diff(forms_series, forms_oracle, dmax),
        }
    if closed_applies:
        predicted = hilbert_series(ledger, dmax, "mixed")
        body["source"] = "closed_form"
        body["numerator"] = _laurent_json(mixed_numerator(ledger))
    else:
        degrees = {k: [f.homogeneous_degree() for f in mb.elements(k)] for k in mb.ranks}
        predicted = series_from_basis(degrees, sgc, dmax)
        body["source"] = "basis_degrees"
    body["denominator_degrees"] = list(sgc)
    body["series"] = {str(k): v for k, v in predicted.items()}
    body["oracle"] = {str(k): v for k, v in oracle.items()}
    body["discrepancies"] = _diff(predicted, oracle, dmax)
    bad = body["discrepancies"] or body.get("forms", {}).get("discrepancies")
    return body, 1 if bad else 0


def _diff(predicted, oracle, dmax) -> list:
    out = []
    for k in sorted(oracle):
        for d in range(dmax + 1):
            a = predicted.get(k, [0] * (dmax + 1))[d]
            b = oracle[k][d]
            if a != b:
                out.append({"d": d, "k": k, "predicted": a, "actual": b})
    return out


def cmd_oracle_dims(G, args) -> tuple[dict, int]:
    dmax = args.dmax if args.dmax is not None else 6
    module = args.module
    table = dimension_table(G, dmax, module)
    if args.k is not None:
        if args.k not in table:
            raise InputError(f"--k {args.k} is not available for module {module}")
        table = {args.k: table[args.k]}
    return {"module": module, "dmax": dmax, "dimensions": {str(k): v for k, v in table.items()}}, 0


def cmd_appendix_audit(G, args) -> tuple[dict, int]:
    if not G.fixes_single_hyperplane():
        raise InputError("appendix-audit needs a group fixing exactly one hyperplane")
    dmax = args.dmax if args.dmax is not None else 6
    if args.basis:
        forms = basis_file_from_json(_load_json(args.basis), G.field, G.n, args.k)
        reports = [audit_element(G, f).to_json() for f in forms]
        ok = all(r["ok"] for r in reports)
        return {"elements": reports, "ok": ok}, 0 if ok else 1
    report = appendix_audit(G, dmax, None if args.k is None else _ranks(G, args.k))
    return {"audit": report.to_json()}, 0 if report.ok else 1


COMMANDS = {
    "analyze": cmd_analyze,
    "saito-check": cmd_saito_check,
    "build-basis": cmd_build_basis,
    "hilbert": cmd_hilbert,
    "oracle-dims": cmd_oracle_dims,
    "appendix-audit": cmd_appendix_audit,
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a list of integers, got {text!r}") from None


def _value_list(text: str) -> list:
    out = []
    for x in text.split(","):
        x = x.strip()
        out.append(int(x) if x.lstrip("-").isdigit() else x)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reflectinv", description=__doc__)
    parser.add_argument("command", choices=VERBS)
    parser.add_argument("group", help="group JSON file, '-' for stdin, or catalog:<name>")
    parser.add_argument("--k", type=int, help="rank")
    parser.add_argument("--r", type=int, help="index r (1-based) for the basis variants")
    parser.add_argument("--variant", default="auto", choices=VARIANTS)
    parser.add_argument("--dmax", type=int, help="largest polynomial degree")
    parser.add_argument("--cap", type=int, help="group closure cap")
    parser.add_argument("--basis", help="JSON file with a list of forms")
    parser.add_argument("--chi", type=_value_list, help="character values on the generators, comma separated")
    parser.add_argument("--sgc-degrees", type=_int_list, help="degrees of basic invariants of S^G")
    parser.add_argument("--module", default="mixed", choices=MODULES, help="module for oracle-dims")
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.dmax is not None and args.dmax < 0:
            raise InputError("--dmax must be nonnegative")
        G = load_group(args.group, args.cap)
        body, status = COMMANDS[args.command](G, args)
    except (InputError, ConstructionError, GroupError, CharacterError, FormError, OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(dumps(envelope(args.command, body)))
    return status


def main() -> None:
    sys.exit(run())
