"""The normalized two-sided integral and the tensor nu = sum Lambda_1 (x) S(Lambda_2)."""
from __future__ import annotations

from . import linalg
from .hopf import (
    Element,
    HopfData,
    TensorSquare,
    antipode_apply,
    comultiply,
    counit_apply,
    multiply,
    tensor_map,
)


class MalformedHopfAlgebra(ValueError):
    pass


class NotSemisimple(ValueError):
    """epsilon vanishes on the integral, so it cannot be normalized."""


def left_integral_space(H: HopfData) -> list[Element]:
    """Basis of {L : x_i L = epsilon(x_i) L for all i}."""
    n = H.dim
    rows = []
    for i in range(n):
        eps = H.counit[i]
        for k in range(n):
            # sum_a L^a m_{i,a}^k - eps_i L^k = 0
            row = [H.mul[i][a][k] for a in range(n)]
            if eps:
                row[k] = row[k] - eps
            if any(row):
                rows.append(row)
    return [Element(tuple(v)) for v in linalg.nullspace(rows, n, H.conductor)]


def find_integral(H: HopfData) -> Element:
    """The integral Lambda with epsilon(Lambda) = dim H.

    Verifies that it is also a right integral and that S fixes it.
    """
    space = left_integral_space(H)
    if len(space) != 1:
        raise MalformedHopfAlgebra(f"left integral space has dimension {len(space)}, expected 1")
    lam0 = space[0]
    eps = counit_apply(H, lam0)
    if not eps:
        raise NotSemisimple("epsilon(Lambda) = 0: no normalized integral (H is not semisimple)")
    lam = lam0.scale(H.scalar(H.dim) / eps)
    for i in range(H.dim):
        x = H.basis(i)
        if multiply(H, lam, x) != lam.scale(H.counit[i]):
            raise MalformedHopfAlgebra(f"integral is not a right integral (fails at x_{i})")
    if antipode_apply(H, lam) != lam:
        raise MalformedHopfAlgebra("antipode does not fix the integral")
    return lam


def nu_tensor(H: HopfData, lam: Element) -> TensorSquare:
    """(Id (x) S)(Delta(Lambda))."""
    return tensor_map(H, comultiply(H, lam), right=H.antipode)
