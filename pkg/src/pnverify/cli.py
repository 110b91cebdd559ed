"""Command line front end.

Every command prints a short human-readable summary and, with ``--out``,
writes a JSON report ``{command, parameters, assumptions, results, notes}``.
Exact rationals are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import cy4, hk, registry
from .registry import ALPHA_BOUND_NOTE, H0_EQUALS_CHI, DeformationType, Family, UnsupportedTypeError
from .verify import verify_paper

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# og10 is accepted here so the refusal names the real reason
TYPE_CHOICES = [f.value for f in Family]


class UsageError(Exception):
    pass


def canonical_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def make_report(command: str, parameters: dict, results, assumptions=(), notes=()) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "assumptions": list(assumptions),
        "results": results,
        "notes": list(notes),
    }


def _deformation(args: argparse.Namespace) -> DeformationType:
    try:
        return DeformationType.of(args.type, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_registry_show(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    if args.type is None:
        types = [
            DeformationType(Family.K3N, 2),
            DeformationType(Family.K3N, 3),
            DeformationType(Family.KUMMER, 2),
            DeformationType(Family.KUMMER, 3),
            DeformationType(Family.OG6, 3),
        ]
    else:
        types = [_deformation(args)]
    profiles = []
    lines = []
    for t in types:
        prof = registry.build_profile(t)
        chk = registry.hypothesis_check(prof)
        d = prof.to_dict()
        d["hypotheses"] = chk.to_dict()
        profiles.append(d)
        lines.append(f"{t.label}: fujiki={prof.fujiki}  RR(x) = {prof.rr}")
        lines.append(f"    R(x) = {prof.r_poly}  R(2) = {chk.r_at_alpha}  RR(2) = {chk.rr_at_alpha}")
        lines.append(f"    canonical: {prof.canonical_text()}")
    params = {"type": args.type, "n": args.n}
    return make_report("registry show", params, {"profiles": profiles}, [H0_EQUALS_CHI, ALPHA_BOUND_NOTE]), lines, True


def cmd_hk_analyze(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    t = _deformation(args)
    try:
        pol = hk.PolarizedHK(registry.build_profile(t), args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdict = hk.theorem_b_verdict(pol)
    excl = hk.cone_over_curve_excluded(pol)
    results = verdict.to_dict()
    results["coneOverCurveExcluded"] = {"excluded": excl.excluded, "route": excl.route, "reason": excl.reason}
    results["hypotheses"] = registry.hypothesis_check(pol.profile).to_dict()
    n = t.n
    lines = [
        f"{t.label}, q = {args.q}",
        f"  h0 = {verdict.h0}   B^{2 * n} = {verdict.top}   deg(phi_B) <= {verdict.degree_bound}",
        f"  cones over curves: {'excluded' if excl else 'not excluded'} ({excl.reason})",
        "  admissible images: "
        + (", ".join(f"{c.image.token} (deg phi = {c.implied_degree})" for c in verdict.admissible_images) or "none"),
        f"  projectively normal for l >= {verdict.pn_guaranteed_from}",
    ]
    if verdict.pn_conditional:
        lines.append(f"  l = {2 * n - 1}: conditional -- {verdict.pn_conditional['note']}")
    params = {"type": t.family.value, "n": n, "q": args.q}
    return make_report("hk analyze", params, results, verdict.assumptions), lines, True


def cmd_hk_enumerate(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    try:
        fam = Family.parse(args.type)
        cases = hk.enumerate_exceptional(fam, args.max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"exceptional polarizations for {fam.value}, n <= {args.max_n}: {len(cases)}"]
    for c in cases:
        lines.append(f"  n={c.n} q={c.q} {c.image.token} deg(phi_B)={c.degree}")
    params = {"type": fam.value, "maxN": args.max_n}
    report = make_report(
        "hk enumerate",
        params,
        {"exceptional": [c.to_dict() for c in cases]},
        [H0_EQUALS_CHI, ALPHA_BOUND_NOTE],
        ["cases are conditional: projective normality of B^(2n-1) is only open if phi_B really has this image"],
    )
    return report, lines, True


def cmd_cy4_classify(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    try:
        rep = cy4.classify_image_cy4(args.r, args.h0g, args.regular)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"r = {args.r} (h0 = {args.r + 1}), d <= {rep.global_degree_bound}"]
    for c in rep.cases:
        ivs = ", ".join(f"[{i.lo}, {i.hi}]" + ("" if i.parity == "any" else f" ({i.parity} d)") for i in c.intervals)
        lines.append(f"  {c.label}: {c.image}  d in {ivs}")
    params = {"r": args.r, "h0g": args.h0g, "regular": args.regular}
    assumptions = ["X is a regular fourfold with trivial canonical bundle", "A^2.c2 >= 0 (Miyaoka)"]
    return make_report("cy4 classify", params, rep.to_dict(), assumptions), lines, True


def cmd_cy4_theorem_a(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    trace = cy4.theorem_a_trace(args.regular)
    lines = []
    for s in trace.steps:
        mark = "ok " if s.holds else "FAIL"
        lines.append(f"  [{mark}] ({s.label}) {s.statement}: {s.lhs} {s.relation} {s.rhs}".rstrip())
    lines.append(trace.conclusion)
    assumptions = ["Kawamata: 5A is base point free", "A^2.c2 >= 0 (Miyaoka)"]
    if args.regular:
        assumptions.insert(0, "H^1(O_X) = 0")
    report = make_report("cy4 theorem-a", {"regular": args.regular}, trace.to_dict(), assumptions, trace.notes)
    return report, lines, trace.verified


def cmd_secant(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    sb = hk.secant_length_bound()
    k, val = sb.witness
    lines = [
        f"deg(f: S[2] -> Gr) <= {sb.deg_bound}",
        f"general secant line meets S in length <= {sb.max_length} (binom({k},2) = {val} > {sb.deg_bound})",
    ]
    return make_report("secant", {}, sb.to_dict()), lines, True


def cmd_verify_paper(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    items = verify_paper()
    lines = []
    for it in items:
        tag = {"pass": "PASS", "fail": "FAIL", "flagged": "FLAGGED"}[it.status]
        line = f"[{tag}] {it.claim_id}: expected {it.expected}, computed {it.computed}"
        lines.append(line)
    counts = {s: sum(1 for i in items if i.status == s) for s in ("pass", "fail", "flagged")}
    lines.append(f"{len(items)} claims: {counts['pass']} pass, {counts['fail']} fail, {counts['flagged']} flagged")
    notes = [
        "flagged items are documented disagreements between printed text and exact computation, not failures"
    ]
    results = {"items": [i.to_dict() for i in items], "summary": counts}
    report = make_report("verify-paper", {}, results, [H0_EQUALS_CHI, ALPHA_BOUND_NOTE], notes)
    return report, lines, counts["fail"] == 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pnverify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    def with_out(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--out", type=Path, help="write the JSON report to this file")
        return p

    reg = sub.add_parser("registry", help="hyperkaehler Riemann-Roch data")
    reg_sub = reg.add_subparsers(dest="action", required=True)
    show = with_out(reg_sub.add_parser("show", help="print deformation type profiles"))
    show.add_argument("--type", choices=TYPE_CHOICES)
    show.add_argument("--n", type=int)
    show.set_defaults(func=cmd_registry_show)

    hkp = sub.add_parser("hk", help="polarized hyperkaehler analysis")
    hk_sub = hkp.add_subparsers(dest="action", required=True)
    an = with_out(hk_sub.add_parser("analyze", help="verdict for one polarization"))
    an.add_argument("--type", required=True, choices=TYPE_CHOICES)
    an.add_argument("--n", type=int)
    an.add_argument("--q", type=int, required=True, help="Beauville square of B (positive, even)")
    an.set_defaults(func=cmd_hk_analyze)
    en = with_out(hk_sub.add_parser("enumerate", help="exceptional polarizations up to n"))
    en.add_argument("--type", required=True, choices=TYPE_CHOICES)
    en.add_argument("--max-n", type=int, required=True)
    en.set_defaults(func=cmd_hk_enumerate)

    c4 = sub.add_parser("cy4", help="K-trivial fourfolds")
    c4_sub = c4.add_subparsers(dest="action", required=True)
    cl = with_out(c4_sub.add_parser("classify", help="minimal-degree image cases in P^r"))
    cl.add_argument("--r", type=int, required=True)
    cl.add_argument("--h0g", type=int)
    cl.add_argument("--regular", action="store_true", help="general fibre is regular")
    cl.set_defaults(func=cmd_cy4_classify)
    ta = with_out(c4_sub.add_parser("theorem-a", help="replay the effective projective normality arithmetic"))
    ta.add_argument("--regular", action="store_true", help="assume H^1(O_X) = 0")
    ta.set_defaults(func=cmd_cy4_theorem_a)

    sec = with_out(sub.add_parser("secant", help="secant line length bound for K3 surfaces"))
    sec.set_defaults(func=cmd_secant)

    vp = with_out(sub.add_parser("verify-paper", help="run the fixed regression suite"))
    vp.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, lines, ok = args.func(args)
    except (UsageError, UnsupportedTypeError) as exc:
        parser.error(str(exc))
    print("\n".join(lines))
    if args.out is not None:
        args.out.write_text(canonical_json(report), encoding="utf-8")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
