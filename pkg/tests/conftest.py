from __future__ import annotations

import functools
from dataclasses import dataclass
from pathlib import Path

import pytest

from hopfcert.corpus import BUILTIN_GROUPS, builtin
from hopfcert.hopf import load_hopf
from hopfcert.integrals import find_integral, nu_tensor
from hopfcert.wedderburn import decompose_center

FIXTURES = Path(__file__).parent / "fixtures"
GROUPS = list(BUILTIN_GROUPS)
CORPUS = GROUPS + [g + "_dual" for g in GROUPS]


@dataclass
class Analysed:
    H: object
    lam: object
    nu: object
    blocks: list


@functools.lru_cache(maxsize=None)
def algebra(name: str):
    if name.endswith("_dual"):
        return builtin(name[:-5], dual=True)
    return builtin(name)


@functools.lru_cache(maxsize=None)
def analyse(name: str) -> Analysed:
    H = algebra(name)
    lam = find_integral(H)
    return Analysed(H, lam, nu_tensor(H, lam), decompose_center(H))


@pytest.fixture(params=CORPUS)
def corpus_name(request):
    return request.param


@pytest.fixture
def analysed():
    return analyse


@pytest.fixture
def sweedler():
    return load_hopf(FIXTURES / "sweedler.json")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        terminalreporter.write_line(mod.report())
