"""Certify every built-in algebra and print one table row per algebra.

    python scripts/run_corpus_certificates.py [--conductor N] [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from hopfcert import linalg
from hopfcert.corpus import BUILTIN_GROUPS, builtin
from hopfcert.forms import frobenius_certificate, weak_form_check
from hopfcert.integrals import find_integral, nu_tensor
from hopfcert.scalars import INTEGERS
from hopfcert.wedderburn import (
    centrality_certificate,
    char_inner_product,
    decompose_center,
    idempotent_from_character,
)


@dataclass
class Config:
    groups: list[str] = field(default_factory=lambda: list(BUILTIN_GROUPS))
    duals: bool = True
    conductor: int | None = None


@dataclass
class Row:
    name: str
    dim: int
    conductor: int
    degrees: list[int]
    quotients: list[str]
    reconstructed: bool
    orthonormal: bool
    central: bool
    z_form: bool
    certified: bool
    seconds: float


def certify(name: str, dual: bool, conductor: int | None) -> Row:
    t0 = time.perf_counter()
    H = builtin(name, dual=dual, conductor=conductor)
    lam = find_integral(H)
    nu = nu_tensor(H, lam)
    blocks = decompose_center(H)
    rebuilt = [idempotent_from_character(H, nu, b.character) for b in blocks]
    gram = [[char_inner_product(H, lam, x.character, y.character, nu) for y in blocks] for x in blocks]
    cert = frobenius_certificate(H.dim, [b.degree for b in blocks], [INTEGERS])
    z_form = weak_form_check(H, lam, linalg.identity(H.dim, H.conductor), INTEGERS).passed
    return Row(
        name=H.name,
        dim=H.dim,
        conductor=H.conductor,
        degrees=[b.degree for b in blocks],
        quotients=[str(q) for q in cert.quotients],
        reconstructed=all(z == b.idempotent for z, b in zip(rebuilt, blocks)),
        orthonormal=gram == linalg.identity(len(blocks), H.conductor),
        central=all(centrality_certificate(H, z).passed for z in rebuilt),
        z_form=z_form,
        certified=z_form and cert.overall,
        seconds=time.perf_counter() - t0,
    )


def compact(degrees: list[int]) -> str:
    parts = []
    for k in sorted(set(degrees)):
        m = degrees.count(k)
        parts.append(f"{k}^{m}" if m > 1 else str(k))
    return " ".join(parts)


def main(cfg: Config, out: str | None = None) -> list[Row]:
    rows = []
    header = f"{'algebra':9s} {'n':>3s} {'N':>3s}  {'degrees':9s} {'rebuilt':8s} {'gram':5s} {'central':8s} {'Z-form':7s} {'n/k in Z':9s} {'sec':>6s}"
    print(header)
    print("-" * len(header))
    for g in cfg.groups:
        for dual in ([False, True] if cfg.duals else [False]):
            r = certify(g, dual, cfg.conductor)
            rows.append(r)
            yn = lambda b: "yes" if b else "NO"
            print(f"{r.name:9s} {r.dim:3d} {r.conductor:3d}  {compact(r.degrees):9s} {yn(r.reconstructed):8s} "
                  f"{yn(r.orthonormal):5s} {yn(r.central):8s} {yn(r.z_form):7s} {yn(r.certified):9s} {r.seconds:6.2f}")
    print(f"total {sum(r.seconds for r in rows):.2f} s")
    if out:
        with open(out, "w") as fh:
            json.dump([asdict(r) for r in rows], fh, indent=1)
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--conductor", type=int)
    ap.add_argument("--no-duals", action="store_true")
    ap.add_argument("--json")
    a = ap.parse_args()
    main(Config(duals=not a.no_duals, conductor=a.conductor), a.json)
