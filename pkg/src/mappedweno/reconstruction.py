"""Fifth-order WENO building blocks for a single five-point window.

All routines assume a left-biased (positive wind) window
``(f[j-2], f[j-1], f[j], f[j+1], f[j+2])`` reconstructing at ``x[j+1/2]``.
The right-biased value is obtained by passing the reversed window.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from numba import njit

#: linear weights of the fifth-order upstream scheme
OPTIMAL_WEIGHTS = (0.1, 0.6, 0.3)

#: regularisation of the Jiang-Shu weights
JS_EPSILON = 1.0e-40


class StencilWindow(NamedTuple):
    fm2: float
    fm1: float
    f0: float
    fp1: float
    fp2: float

    @classmethod
    def from_values(cls, values: Sequence[float]) -> StencilWindow:
        vals = tuple(float(v) for v in values)
        if len(vals) != 5:
            raise ValueError(f"a stencil window needs 5 values, got {len(vals)}")
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"non-finite value in stencil window: {vals}")
        return cls(*vals)

    def reversed(self) -> StencilWindow:
        return StencilWindow(self.fp2, self.fp1, self.f0, self.fm1, self.fm2)


class SmoothnessTriple(NamedTuple):
    b0: float
    b1: float
    b2: float


class WeightTriple(NamedTuple):
    w0: float
    w1: float
    w2: float

    def check(self, atol: float = 1.0e-12) -> WeightTriple:
        if abs(self.w0 + self.w1 + self.w2 - 1.0) > atol:
            raise ValueError(f"weights do not sum to one: {tuple(self)}")
        if any(w < -atol or w > 1.0 + atol for w in self):
            raise ValueError(f"weights outside [0, 1]: {tuple(self)}")
        return self


# {{{ compiled kernels


@njit(cache=True, inline="always")
def _candidate_fluxes(fm2, fm1, f0, fp1, fp2):
    q0 = (2.0 * fm2 - 7.0 * fm1 + 11.0 * f0) / 6.0
    q1 = (-fm1 + 5.0 * f0 + 2.0 * fp1) / 6.0
    q2 = (2.0 * f0 + 5.0 * fp1 - fp2) / 6.0
    return q0, q1, q2


@njit(cache=True, inline="always")
def _smoothness(fm2, fm1, f0, fp1, fp2):
    # b2 is written as the mirror image of b0 and b1 symmetrically, so that
    # reversing the window swaps b0 and b2 bit for bit
    b0 = (13.0 / 12.0) * (fm2 - 2.0 * fm1 + f0) ** 2 + 0.25 * (
        fm2 - 4.0 * fm1 + 3.0 * f0
    ) ** 2
    b1 = (13.0 / 12.0) * (fm1 + fp1 - 2.0 * f0) ** 2 + 0.25 * (fm1 - fp1) ** 2
    b2 = (13.0 / 12.0) * (fp2 - 2.0 * fp1 + f0) ** 2 + 0.25 * (
        fp2 - 4.0 * fp1 + 3.0 * f0
    ) ** 2
    return b0, b1, b2


@njit(cache=True, inline="always")
def _js_weights(b0, b1, b2, eps):
    a0 = 0.1 / (b0 + eps) ** 2
    a1 = 0.6 / (b1 + eps) ** 2
    a2 = 0.3 / (b2 + eps) ** 2
    s = a0 + a1 + a2
    return a0 / s, a1 / s, a2 / s


# }}}


def candidate_fluxes(window: Sequence[float]) -> tuple[float, float, float]:
    """Third-order fluxes on the three substencils."""
    w = StencilWindow.from_values(window)
    return _candidate_fluxes(*w)


def smoothness_indicators(window: Sequence[float]) -> SmoothnessTriple:
    w = StencilWindow.from_values(window)
    return SmoothnessTriple(*_smoothness(*w))


def js_weights(
    beta: Sequence[float], eps: float = JS_EPSILON
) -> WeightTriple:
    """Jiang-Shu nonlinear weights ``d_k / (beta_k + eps)^2``, normalised.

    ``eps = 0`` is accepted for hand checks as long as no indicator vanishes.
    """
    if eps < 0.0:
        raise ValueError(f"eps must be nonnegative, got {eps}")
    b0, b1, b2 = (float(b) for b in beta)
    if min(b0, b1, b2) < 0.0:
        raise ValueError(f"smoothness indicators must be nonnegative: {beta}")
    if eps == 0.0 and min(b0, b1, b2) == 0.0:
        raise ZeroDivisionError("vanishing indicator with eps = 0")
    return WeightTriple(*_js_weights(b0, b1, b2, eps))


def reconstruct_interface(
    window: Sequence[float], omega: Sequence[float]
) -> float:
    w = StencilWindow.from_values(window)
    q0, q1, q2 = _candidate_fluxes(*w)
    w0, w1, w2 = WeightTriple(*(float(x) for x in omega)).check()
    return w0 * q0 + w1 * q1 + w2 * q2
