"""Command line interface.

Exit codes: 0 for success or an affirmative verdict, 1 for a negative
verdict (or a failed demo check), 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .classifier import (
    EmbeddingInvariants,
    WLValue,
    act,
    corollary1_witness,
    enumerate_wl,
    fiber_structure,
    is_in_stabilizer,
    isotopic,
    pl_fiber_structure,
    pl_isotopic,
    pl_simplification_check,
    pl_stabilizer,
    stabilizer,
    stabilizer_certificate,
)
from .framedlink import framed_family, parse_diagram, surgery_matrix
from .intlinalg import same_lattice, solve_in_lattice
from .linkgroup import LinkClass, ParityError, knot_stabilizer_check, pl_forget
from .manifold import SurgeryPresentation, divisibility, presentation_from_dict

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class Report:
    """Result of one command.

    ``result`` holds every number the command computed; the text form is
    rendered from it, so text and JSON cannot disagree.
    """

    command: str
    inputs: dict
    result: dict
    exit_code: int = EXIT_OK

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "exit_code": self.exit_code,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def text(self) -> str:
        return "\n".join(_RENDER[self.command](self.result))


# --- input loading -----------------------------------------------------------


def _read(path) -> str:
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def load_manifold(path) -> SurgeryPresentation:
    """Manifold spec (JSON) or framed link diagram (text), chosen by content."""
    path = Path(path)
    text = _read(path)
    try:
        if text.lstrip().startswith("{"):
            return presentation_from_dict(json.loads(text), default_name=path.stem)
        return surgery_matrix(parse_diagram(text), name=path.stem)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_invariants(path, M1: SurgeryPresentation, M2: SurgeryPresentation) -> EmbeddingInvariants:
    text = _read(path)
    try:
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("embedding invariants must be a JSON object")
        inv = EmbeddingInvariants.from_dict(data)
        inv.wl.check(M1, M2)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    return inv


def _link(values) -> LinkClass:
    try:
        return LinkClass.from_tuple(values)
    except ParityError as exc:
        raise InputError(str(exc)) from None


# --- helpers -----------------------------------------------------------------


def shape_str(d: dict) -> str:
    parts = []
    if d["free_rank"] == 1:
        parts.append("Z")
    elif d["free_rank"] > 1:
        parts.append(f"Z^{d['free_rank']}")
    parts.extend(f"Z/{t}" for t in d["torsion"])
    return " + ".join(parts) if parts else "0"


def _vecs(vs) -> str:
    return ", ".join(str(tuple(v)) for v in vs) if vs else "(none)"


def _homology_dict(M: SurgeryPresentation) -> dict:
    h = M.homology
    return {
        "name": M.name,
        "linking_matrix": M.matrix.to_rows(),
        "h1": h.h1.to_dict(),
        "h2": h.h2.to_dict(),
        "h2_basis": [list(v) for v in h.h2_basis],
    }


def _classify_dict(M1, M2, wl: WLValue, pl: bool) -> dict:
    fib = fiber_structure(M1, M2, wl)
    out = {
        "wl": wl.to_dict(),
        "wl_canonical": wl.canonical(M1, M2).to_dict(),
        "stabilizer_generators": [list(g) for g in fib.stab.generators],
        "stabilizer_labels": [f"{f}[{i}]" for f, i in fib.stab.labels],
        "stabilizer_hnf": [list(b) for b in fib.stab.hnf],
        "fiber": fib.shape.to_dict(),
    }
    if pl:
        ps = pl_stabilizer(M1, M2, wl)
        out["pl"] = {
            "stabilizer_generators": [list(g) for g in ps.generators],
            "stabilizer_hnf": [list(b) for b in ps.hnf],
            "fiber": pl_fiber_structure(M1, M2, wl).to_dict(),
            "simplification_holds": pl_simplification_check(M1, M2, wl),
        }
    return out


# --- commands ----------------------------------------------------------------


def cmd_homology(spec_path) -> Report:
    M = load_manifold(spec_path)
    return Report("homology", {"manifold": str(spec_path)}, _homology_dict(M))


def cmd_classify(m1_path, m2_path, wl_path, pl: bool = False) -> Report:
    M1, M2 = load_manifold(m1_path), load_manifold(m2_path)
    inv = load_invariants(wl_path, M1, M2)
    inputs = {"m1": str(m1_path), "m2": str(m2_path), "wl": str(wl_path)}
    return Report("classify", inputs, _classify_dict(M1, M2, inv.wl, pl))


def cmd_stab(m1_path, m2_path, wl_path, pl: bool = False) -> Report:
    M1, M2 = load_manifold(m1_path), load_manifold(m2_path)
    inv = load_invariants(wl_path, M1, M2)
    stab = pl_stabilizer(M1, M2, inv.wl) if pl else stabilizer(M1, M2, inv.wl)
    result = stab.to_dict()
    result["category"] = "PL" if pl else "smooth"
    inputs = {"m1": str(m1_path), "m2": str(m2_path), "wl": str(wl_path)}
    return Report("stab", inputs, result)


def cmd_fiber(m1_path, m2_path, wl_path, pl: bool = False) -> Report:
    M1, M2 = load_manifold(m1_path), load_manifold(m2_path)
    inv = load_invariants(wl_path, M1, M2)
    shape = pl_fiber_structure(M1, M2, inv.wl) if pl else fiber_structure(M1, M2, inv.wl).shape
    inputs = {"m1": str(m1_path), "m2": str(m2_path), "wl": str(wl_path)}
    return Report("fiber", inputs, {"category": "PL" if pl else "smooth", "fiber": shape.to_dict()})


def cmd_pl(m1_path, m2_path, wl_path) -> Report:
    M1, M2 = load_manifold(m1_path), load_manifold(m2_path)
    inv = load_invariants(wl_path, M1, M2)
    inputs = {"m1": str(m1_path), "m2": str(m2_path), "wl": str(wl_path)}
    return Report("pl", inputs, _classify_dict(M1, M2, inv.wl, True)["pl"])


def cmd_member(m1_path, m2_path, wl_path, g, pl: bool = False) -> Report:
    M1, M2 = load_manifold(m1_path), load_manifold(m2_path)
    inv = load_invariants(wl_path, M1, M2)
    link = _link(g)
    if pl:
        stab = pl_stabilizer(M1, M2, inv.wl)
        v = pl_forget(link).as_tuple()
    else:
        stab = stabilizer(M1, M2, inv.wl)
        v = link.as_tuple()
    cert = solve_in_lattice(stab.matrix, v)
    result = {
        "category": "PL" if pl else "smooth",
        "g": list(v),
        "member": cert is not None,
        "certificate": _certificate(stab, cert),
    }
    inputs = {"m1": str(m1_path), "m2": str(m2_path), "wl": str(wl_path)}
    return Report("member", inputs, result, EXIT_OK if cert is not None else EXIT_NO)


def _certificate(stab, cert):
    if cert is None:
        return None
    return [
        {"label": f"{f}[{i}]", "generator": list(g), "coefficient": c}
        for (f, i), g, c in zip(stab.labels, stab.generators, cert)
    ]


def cmd_isotopic(m1_path, m2_path, inv_path, inv2_path, pl: bool = False) -> Report:
    M1, M2 = load_manifold(m1_path), load_manifold(m2_path)
    inv = load_invariants(inv_path, M1, M2)
    inv2 = load_invariants(inv2_path, M1, M2)
    same_wl = inv.wl.same_class(inv2.wl, M1, M2)
    diff = inv.delta - inv2.delta
    cert = None
    if pl:
        verdict = pl_isotopic(M1, M2, inv, inv2)
        if verdict:
            stab = pl_stabilizer(M1, M2, inv.wl)
            cert = _certificate(stab, solve_in_lattice(stab.matrix, pl_forget(diff).as_tuple()))
    else:
        verdict = isotopic(M1, M2, inv, inv2)
        if verdict:
            stab = stabilizer(M1, M2, inv.wl)
            cert = _certificate(stab, stabilizer_certificate(stab, diff))
    result = {
        "category": "PL" if pl else "smooth",
        "same_whitney_invariants": same_wl,
        "delta_difference": list(diff.as_tuple()),
        "isotopic": verdict,
        "certificate": cert,
    }
    inputs = {"m1": str(m1_path), "m2": str(m2_path), "inv": str(inv_path), "inv2": str(inv2_path)}
    return Report("isotopic", inputs, result, EXIT_OK if verdict else EXIT_NO)


def cmd_diagram(path) -> Report:
    text = _read(path)
    try:
        d = parse_diagram(text)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    M = surgery_matrix(d, name=Path(path).stem)
    fam = framed_family(d)
    result = _homology_dict(M)
    result["pairwise_lk"] = [list(r) for r in fam.pairwise_lk]
    result["framings"] = list(fam.framings)
    return Report("diagram", {"diagram": str(path)}, result)


# --- demos -------------------------------------------------------------------


def _check(checks: list, name: str, ok: bool, detail: str = "") -> None:
    checks.append({"check": name, "passed": bool(ok), "detail": detail})


def _demo_cor2() -> list:
    checks: list = []
    M1 = SurgeryPresentation.from_rows([[0]], "S1xS2")
    M2 = SurgeryPresentation.from_rows([], "S3")
    wl = WLValue((1,), (1,), (), ())
    inv = EmbeddingInvariants(wl)
    g = LinkClass(0, 0, 1, 0)
    stab = stabilizer(M1, M2, wl)
    _check(checks, "stabilizer generated by (0,2,1,0), (2,2,0,0)",
           same_lattice(stab.generators, [(0, 2, 1, 0), (2, 2, 0, 0)], 4),
           f"generators {_vecs(stab.generators)}")
    _check(checks, "g = (0,0,1,0) is unlinked", g.is_unlinked and pl_forget(g).is_unlinked)
    d1, d2 = divisibility(M1, wl.W1), divisibility(M2, wl.W2)
    _check(checks, "restrictions to each component are isotopic",
           knot_stabilizer_check(d1, g.r1) and knot_stabilizer_check(d2, g.r2),
           f"div W1 = {d1}, r1 = {g.r1}; div W2 = {d2}, r2 = {g.r2}")
    _check(checks, "f and f # g are not isotopic",
           not is_in_stabilizer(stab, g) and not isotopic(M1, M2, inv, act(inv, g)))
    return checks


def _demo_cor1() -> list:
    checks: list = []
    M1 = SurgeryPresentation.from_rows([[0]], "S1xS2")
    M2 = SurgeryPresentation.from_rows([], "S3")
    w = corollary1_witness(M1, M2)
    _check(checks, "witness exists for infinite H_1(M1)", w is not None)
    if w is None:
        return checks
    _check(checks, "W1 = 0 and L1 pairs to 1 with alpha",
           not any(w.wl.W1) and sum(a * b for a, b in zip(w.wl.L1, w.alpha)) == 1,
           f"L1 = {w.wl.L1}, alpha = {w.alpha}")
    _check(checks, "g = (0,2,0,0) is not unlinked", not w.g_is_unlinked and not w.g.is_trivial)
    inv = EmbeddingInvariants(w.wl)
    _check(checks, "f # g is isotopic to f",
           w.g_in_stabilizer and isotopic(M1, M2, inv, act(inv, w.g)))
    _check(checks, "finite H_1(M1) has no witness",
           corollary1_witness(SurgeryPresentation.from_rows([[5]], "L(5,1)"), M2) is None)
    return checks


def _demo_examples() -> list:
    checks: list = []
    P = SurgeryPresentation.from_rows([[1]], "S3(+1)")
    S3 = SurgeryPresentation.from_rows([], "S3")
    fib = fiber_structure(P, S3, WLValue.zero(P, S3))
    _check(checks, "homology spheres: fiber is Z^4 (action free and transitive)",
           fib.stab.is_zero and fib.shape.free_rank == 4 and not fib.shape.torsion,
           f"fiber {fib.shape}")
    for a, b in ((2, 2), (3, 5)):
        M1 = SurgeryPresentation.from_rows([[a]], f"L({a},1)")
        M2 = SurgeryPresentation.from_rows([[b]], f"L({b},1)")
        wls = enumerate_wl(M1, M2)
        ok = all(
            stabilizer(M1, M2, wl).is_zero and fiber_structure(M1, M2, wl).shape.free_rank == 4
            for wl in wls
        )
        _check(checks, f"rational homology spheres L({a},1), L({b},1): every fiber is Z^4", ok,
               f"{len(wls)} Whitney-invariant values = |H1(M1)|^2 |H1(M2)|^2 = {a * a * b * b}; "
               f"|H1(M1)| |H1(M2)| = {a * b}")
    return checks


DEMOS = {"cor1": _demo_cor1, "cor2": _demo_cor2, "examples": _demo_examples}


def cmd_demo(name: str) -> Report:
    if name not in DEMOS:
        raise InputError(f"unknown demo {name!r}; choose from {', '.join(DEMOS)}")
    checks = DEMOS[name]()
    ok = all(c["passed"] for c in checks)
    return Report("demo", {"demo": name}, {"demo": name, "checks": checks, "passed": ok},
                  EXIT_OK if ok else EXIT_NO)


# --- text rendering ----------------------------------------------------------


def _render_homology(r):
    lines = [f"{r['name']}: linking matrix {r['linking_matrix']}"]
    lines.append(f"H1 = {shape_str(r['h1'])}, H2 = {shape_str(r['h2'])}")
    if r["h2_basis"]:
        lines.append(f"H2 basis: {_vecs(r['h2_basis'])}")
    return lines


def _render_diagram(r):
    return [f"framings: {r['framings']}", f"pairwise linking numbers: {r['pairwise_lk']}"] + _render_homology(r)


def _render_classify(r):
    lines = [
        f"Whitney invariants (canonical): W1={tuple(r['wl_canonical']['W1'])} "
        f"L1={tuple(r['wl_canonical']['L1'])} W2={tuple(r['wl_canonical']['W2'])} "
        f"L2={tuple(r['wl_canonical']['L2'])}",
        f"stabilizer generators: {_vecs(r['stabilizer_generators'])}",
        f"stabilizer basis (Hermite): {_vecs(r['stabilizer_hnf'])}",
        f"fiber = {shape_str(r['fiber'])}",
    ]
    if "pl" in r:
        lines += ["PL:"] + ["  " + s for s in _render_pl(r["pl"])]
    return lines


def _render_pl(r):
    return [
        f"stabilizer generators: {_vecs(r['stabilizer_generators'])}",
        f"stabilizer basis (Hermite): {_vecs(r['stabilizer_hnf'])}",
        f"fiber = {shape_str(r['fiber'])}",
        f"div-simplified generators span the same lattice: {r['simplification_holds']}",
    ]


def _render_stab(r):
    lines = [f"{r['category']} stabilizer"]
    for lab, g in zip(r["labels"], r["generators"]):
        lines.append(f"  {lab}: {tuple(g)}")
    if not r["generators"]:
        lines.append("  (zero subgroup)")
    lines.append(f"Hermite basis: {_vecs(r['hnf'])}")
    return lines


def _render_fiber(r):
    return [f"{r['category']} fiber = {shape_str(r['fiber'])}"]


def _render_cert(cert):
    if not cert:
        return ["certificate: zero combination"]
    return ["certificate:"] + [
        f"  {c['coefficient']} * {c['label']} {tuple(c['generator'])}" for c in cert
    ]


def _render_member(r):
    lines = [f"{tuple(r['g'])} in {r['category']} stabilizer: {'yes' if r['member'] else 'no'}"]
    if r["member"]:
        lines += _render_cert(r["certificate"])
    return lines


def _render_isotopic(r):
    if not r["same_whitney_invariants"]:
        return ["NOT ISOTOPIC: Whitney invariants differ"]
    if not r["isotopic"]:
        return [f"NOT ISOTOPIC: delta difference {tuple(r['delta_difference'])} is not in the stabilizer"]
    return [f"ISOTOPIC ({r['category']})"] + _render_cert(r["certificate"])


def _render_demo(r):
    lines = [f"demo {r['demo']}"]
    for c in r["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"  [{mark}] {c['check']}" + (f" ({c['detail']})" if c["detail"] else ""))
    lines.append("all checks passed" if r["passed"] else "SOME CHECKS FAILED")
    return lines


_RENDER = {
    "homology": _render_homology,
    "diagram": _render_diagram,
    "classify": _render_classify,
    "pl": _render_pl,
    "stab": _render_stab,
    "fiber": _render_fiber,
    "member": _render_member,
    "isotopic": _render_isotopic,
    "demo": _render_demo,
}


# --- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="embed6",
        description="Isotopy classification of embeddings of two 3-manifolds in S^6.",
    )
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = p.add_subparsers(dest="command", required=True)

    def triple(sp):
        sp.add_argument("m1", help="first manifold (JSON spec or diagram)")
        sp.add_argument("m2", help="second manifold (JSON spec or diagram)")
        sp.add_argument("wl", help="embedding invariants JSON")

    sp = sub.add_parser("homology", help="H1 and H2 of a manifold")
    sp.add_argument("manifold")

    sp = sub.add_parser("diagram", help="parse a framed link diagram and build its surgery matrix")
    sp.add_argument("diagram")

    for name, helptext in (
        ("classify", "stabilizer and fiber of an embedding"),
        ("stab", "stabilizer generators"),
        ("fiber", "fiber group"),
        ("pl", "PL stabilizer and fiber"),
    ):
        sp = sub.add_parser(name, help=helptext)
        triple(sp)
        if name != "pl":
            sp.add_argument("--pl", action="store_true", help="PL category")

    sp = sub.add_parser("member", help="is a sphere link in the stabilizer (exit 0 yes, 1 no)")
    triple(sp)
    sp.add_argument("g", nargs=4, type=int, metavar="N", help="lambda1 lambda2 r1 r2")
    sp.add_argument("--pl", action="store_true")

    sp = sub.add_parser("isotopic", help="decide isotopy of two embeddings (exit 0 yes, 1 no)")
    sp.add_argument("m1")
    sp.add_argument("m2")
    sp.add_argument("inv")
    sp.add_argument("inv2")
    sp.add_argument("--pl", action="store_true")

    sp = sub.add_parser("demo", help="self-checking worked examples")
    sp.add_argument("name", choices=sorted(DEMOS))

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the report as JSON")
    return p


def run(args) -> Report:
    c = args.command
    if c == "homology":
        return cmd_homology(args.manifold)
    if c == "diagram":
        return cmd_diagram(args.diagram)
    if c == "classify":
        return cmd_classify(args.m1, args.m2, args.wl, args.pl)
    if c == "stab":
        return cmd_stab(args.m1, args.m2, args.wl, args.pl)
    if c == "fiber":
        return cmd_fiber(args.m1, args.m2, args.wl, args.pl)
    if c == "pl":
        return cmd_pl(args.m1, args.m2, args.wl)
    if c == "member":
        return cmd_member(args.m1, args.m2, args.wl, args.g, args.pl)
    if c == "isotopic":
        return cmd_isotopic(args.m1, args.m2, args.inv, args.inv2, args.pl)
    if c == "demo":
        return cmd_demo(args.name)
    raise InputError(f"unknown command {c!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report = run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(report.to_json() if args.json else report.text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
