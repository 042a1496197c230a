"""Command-line driver.

Exit codes: 0 when the requested check or certificate passes, 1 when it
fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .forms import ReplayFailed, frobenius_certificate, theorem2_replay, weak_form_check
from .hopf import (
    DimensionMismatch,
    HopfData,
    SingularBasis,
    check_axioms,
    dump_hopf,
    load_hopf,
)
from .integrals import MalformedHopfAlgebra, NotSemisimple, find_integral, nu_tensor
from .linalg import identity
from .scalars import INTEGERS, format_scalar, parse_ring, parse_scalar
from .wedderburn import (
    ModuleSearchFailed,
    SplittingFieldTooSmall,
    centrality_certificate,
    decompose_center,
    lemma1_equivalence,
)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

_TOKEN = re.compile(r"\[[^\]]*\]\s*@\s*\d+|\S+")


class InputError(Exception):
    pass


def read_matrix(path, conductor: int) -> list:
    """Rows of whitespace-separated scalars, one row per line."""
    rows = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([parse_scalar(tok, conductor) for tok in _TOKEN.findall(line)])
    return rows


def load_algebra(source: str, conductor: int | None = None) -> HopfData:
    """A JSON file, or a built-in name such as S3 or S3_dual."""
    path = Path(source)
    if path.exists():
        return load_hopf(path)
    name = source[:-5] if source.endswith("_dual") else source
    if name in corpus_mod.BUILTIN_GROUPS:
        return corpus_mod.builtin(name, dual=source.endswith("_dual"), conductor=conductor)
    raise InputError(f"no such file or built-in algebra: {source}")


def _basis(args, H: HopfData):
    if getattr(args, "basis", None):
        B = read_matrix(args.basis, H.conductor)
        if len(B) != H.dim or any(len(r) != H.dim for r in B):
            raise InputError(f"basis matrix must be {H.dim}x{H.dim}")
        return B
    return identity(H.dim, H.conductor)


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        print("\n".join(lines))


def cmd_axioms(args) -> int:
    H = load_algebra(args.file)
    report = check_axioms(H)
    payload = {
        name: {"passed": r.passed, "witness": list(r.witness) if r.witness is not None else None}
        for name, r in report.results.items()
    }
    lines = [
        f"{name:24s} {'pass' if r.passed else 'FAIL  witness ' + str(r.witness)}"
        for name, r in report.results.items()
    ]
    _emit(args, {"axioms": payload, "passed": report.passed}, lines)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_integral(args) -> int:
    H = load_algebra(args.file)
    try:
        lam = find_integral(H)
    except (NotSemisimple, MalformedHopfAlgebra) as exc:
        _emit(args, {"error": str(exc)}, [f"error: {exc}"])
        return EXIT_FAIL
    nu = nu_tensor(H, lam)
    payload = {
        "integral": [format_scalar(c) for c in lam],
        "nu": [[i, j, format_scalar(c)] for i, j, c in nu.nonzero()],
    }
    _emit(args, payload, [f"Lambda = {lam}", f"nu     = {nu}"])
    return EXIT_PASS


def _blocks_payload(blocks):
    return [
        {
            "degree": b.degree,
            "idempotent": [format_scalar(c) for c in b.idempotent],
            "character": [format_scalar(c) for c in b.character.values],
        }
        for b in blocks
    ]


def cmd_decompose(args) -> int:
    H = load_algebra(args.file)
    try:
        blocks = decompose_center(H)
    except SplittingFieldTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(json.dumps(_blocks_payload(blocks), indent=1))
    return EXIT_PASS


def cmd_lemma1(args) -> int:
    H = load_algebra(args.file)
    results = lemma1_equivalence(H)
    rows, lines = [], []
    ok = True
    for i, r in enumerate(results):
        central = centrality_certificate(H, r.reconstructed).passed
        verdict = "MATCH" if r.match and central else "MISMATCH"
        ok = ok and verdict == "MATCH"
        rows.append({"block": i, "degree": r.block.degree, "verdict": verdict,
                     "central": central, "reconstructed": [format_scalar(c) for c in r.reconstructed]})
        lines.append(f"block {i}  degree {r.block.degree}  {verdict}  e = {r.reconstructed}")
    _emit(args, {"blocks": rows, "passed": ok}, lines)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_form_check(args) -> int:
    H = load_algebra(args.file)
    lam = find_integral(H)
    ring = parse_ring(args.ring)
    report = weak_form_check(H, lam, _basis(args, H), ring)
    payload = {
        "ring": str(ring),
        "passed": report.passed,
        "mul_violations": [[i, j, k, format_scalar(c)] for i, j, k, c in report.mul_violations],
        "nu_violations": [[i, j, format_scalar(c)] for i, j, c in report.nu_violations],
    }
    lines = [f"weak {ring}-form: {'pass' if report.passed else 'FAIL'}"]
    lines += [f"  m[{i},{j}]^{k} = {format_scalar(c)}" for i, j, k, c in report.mul_violations[:10]]
    lines += [f"  nu[{i},{j}] = {format_scalar(c)}" for i, j, c in report.nu_violations[:10]]
    _emit(args, payload, lines)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_frobenius(args) -> int:
    H = load_algebra(args.file)
    rings = [parse_ring(r) for r in (args.ring or ["Z"])]
    lam = find_integral(H)
    B = _basis(args, H)
    forms = {str(R): weak_form_check(H, lam, B, R).passed for R in rings}
    try:
        blocks = decompose_center(H)
    except SplittingFieldTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    cert = frobenius_certificate(H.dim, [b.degree for b in blocks], rings)
    certified = cert.overall and all(forms.values())
    payload = {
        "n": cert.n,
        "degrees": list(cert.degrees),
        "quotients": [str(q) for q in cert.quotients],
        "rings": [str(R) for R in rings],
        "weak_form": forms,
        "verdicts": [list(v) for v in cert.verdicts],
        "overall": cert.overall,
        "certified": certified,
    }
    lines = [f"n = {cert.n}, degrees = {list(cert.degrees)}"]
    lines.append("quotients n/k: " + ", ".join(str(q) for q in cert.quotients))
    for R in rings:
        lines.append(f"weak {R}-form on given basis: {'yes' if forms[str(R)] else 'no'}")
    lines.append(f"all n/k in every ring: {cert.overall}")
    lines.append("Frobenius type certified" if certified else "not certified")
    _emit(args, payload, lines)
    return EXIT_PASS if certified else EXIT_FAIL


def cmd_replay(args) -> int:
    H = load_algebra(args.file)
    lam = find_integral(H)
    ring = parse_ring(args.ring) if args.ring else INTEGERS
    blocks = decompose_center(H)
    if not 0 <= args.block < len(blocks):
        raise InputError(f"block index must be in 0..{len(blocks) - 1}")
    try:
        rep = theorem2_replay(H, lam, _basis(args, H), blocks[args.block], ring)
    except (ReplayFailed, ModuleSearchFailed) as exc:
        _emit(args, {"passed": False, "error": str(exc)}, [f"replay failed: {exc}"])
        return EXIT_FAIL
    fmt = lambda m: [[format_scalar(c) for c in row] for row in m]
    payload = {
        "passed": True,
        "degree": rep.degree,
        "ring": str(rep.ring),
        "quotient": str(rep.quotient),
        "lattice_basis": [[format_scalar(c) for c in v] for v in rep.lattice_basis],
        "identity_rhs": fmt(rep.identity_rhs),
        "certificate_agrees": rep.certificate_agrees,
    }
    lines = [
        f"block {args.block}: degree k = {rep.degree}, ring {rep.ring}",
        "lattice basis: " + "; ".join(str([format_scalar(c) for c in v]) for v in rep.lattice_basis),
        f"sum nu^ij chi(x_i) rho(x_j) = {fmt(rep.identity_rhs)} = ({rep.quotient}) Id",
        f"n/k = {rep.quotient} in {rep.ring}; certificate agrees: {rep.certificate_agrees}",
    ]
    _emit(args, payload, lines)
    return EXIT_PASS if rep.certificate_agrees else EXIT_FAIL


def cmd_corpus(args) -> int:
    names = list(corpus_mod.BUILTIN_GROUPS)
    lines = []
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for name in names:
        for dual in (False, True):
            H = corpus_mod.builtin(name, dual=dual, conductor=args.conductor)
            lines.append(f"{H.name:8s} dim {H.dim:2d}  conductor {H.conductor}")
            if out:
                dump_hopf(H, out / f"{H.name.lower()}.json")
    if out:
        lines.append(f"wrote {2 * len(names)} files to {out}")
    print("\n".join(lines))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, func, help_, basis=False, ring=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="structure-constant JSON file or built-in name (S3, S3_dual, ...)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if basis:
            p.add_argument("--basis", help="matrix file; columns are the new basis vectors")
        p.set_defaults(func=func)
        return p

    add("axioms", cmd_axioms, "check every Hopf axiom")
    add("integral", cmd_integral, "normalized integral and nu")
    add("decompose", cmd_decompose, "primitive central idempotents, degrees, characters")
    add("lemma1", cmd_lemma1, "rebuild each idempotent from its character")
    p = add("form-check", cmd_form_check, "weak R-form test", basis=True)
    p.add_argument("--ring", default="Z", help="Z | Zp:<p> | OK:<N>")
    p = add("frobenius", cmd_frobenius, "n/k membership certificate", basis=True)
    p.add_argument("--ring", action="append", help="Z | Zp:<p> | OK:<N> (repeatable)")
    p = add("replay", cmd_replay, "integral-lattice replay for one block", basis=True)
    p.add_argument("--block", type=int, required=True)
    p.add_argument("--ring", help="Z (default) or, for 1-dimensional blocks, Zp:<p> | OK:<N>")

    c = sub.add_parser("corpus", help="list built-in algebras, optionally write them as JSON")
    c.add_argument("--out", help="directory for the JSON files")
    c.add_argument("--conductor", type=int, help="override the default (group exponent)")
    c.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, SingularBasis, DimensionMismatch, ValueError, KeyError,
            OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
