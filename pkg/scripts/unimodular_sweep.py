"""Search random unimodular bases for a weak Z-form with some n/k outside Z.

None should exist.  Also records how often a random integer (non-unimodular)
basis still gives a weak Z-form, which is rarely.

    python scripts/unimodular_sweep.py --trials 50 --seed 1
"""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass, field

from hopfcert.corpus import builtin
from hopfcert.forms import frobenius_certificate, weak_form_check
from hopfcert.hopf import SingularBasis
from hopfcert.integrals import find_integral
from hopfcert.scalars import INTEGERS
from hopfcert.wedderburn import decompose_center


@dataclass
class Config:
    algebras: list[str] = field(default_factory=lambda: ["C2", "C3", "C4", "S3", "S3_dual", "C6_dual"])
    trials: int = 50
    steps: int = 8
    seed: int = 0


def unimodular(rng: random.Random, n: int, steps: int) -> list[list[int]]:
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        M[i] = [x + c * y for x, y in zip(M[i], M[j])]
    return M


def random_integer(rng: random.Random, n: int) -> list[list[int]]:
    return [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    counterexamples = 0
    for label in cfg.algebras:
        name, dual = (label[:-5], True) if label.endswith("_dual") else (label, False)
        H = builtin(name, dual=dual)
        lam = find_integral(H)
        degrees = [b.degree for b in decompose_center(H)]
        divisible = frobenius_certificate(H.dim, degrees, [INTEGERS]).overall
        uni_pass = other_pass = other_tried = 0
        for _ in range(cfg.trials):
            if weak_form_check(H, lam, unimodular(rng, H.dim, cfg.steps), INTEGERS).passed:
                uni_pass += 1
                counterexamples += not divisible
            try:
                other_tried += 1
                other_pass += weak_form_check(H, lam, random_integer(rng, H.dim), INTEGERS).passed
            except SingularBasis:
                other_tried -= 1
        print(f"{label:8s} degrees {degrees}  unimodular forms {uni_pass}/{cfg.trials}  "
              f"random integer bases that are forms {other_pass}/{other_tried}")
    print(f"counterexamples: {counterexamples}")
    return counterexamples


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    raise SystemExit(1 if main(Config(trials=a.trials, seed=a.seed)) else 0)
