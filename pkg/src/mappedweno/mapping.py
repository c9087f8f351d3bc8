"""Mapping functions for the nonlinear WENO weights.

Classical maps (M, PM, IM, RM, AIM) and the adaptive family built on a
pluggable local operator ``phi``:

* ``AIMPHI``: AIM with a generalised width operator (AIMS / AIMA),
* ``APM``: adaptive piecewise-polynomial map (APMS / APMA),
* ``ARM``: adaptive rational map (ARMS / ARMA).

Every map is written once as a compiled scalar kernel; the public helpers
below and the solvers both call those kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numba import njit

from mappedweno.reconstruction import OPTIMAL_WEIGHTS, WeightTriple

# kernel encodings
JS, M, PM, IM, RM, AIM, AIMPHI, APM, ARM = range(9)
LINEAR = -1
KIND_CODES = {
    "LINEAR": LINEAR, "JS": JS, "M": M, "PM": PM, "IM": IM, "RM": RM,
    "AIM": AIM, "AIMPHI": AIMPHI, "APM": APM, "ARM": ARM,
}
SYMMETRIC, ASYMMETRIC = 0, 1

# layout of the float parameter vector handed to the kernels
P_N, P_M, P_TAU, P_A, P_C, P_CHI, P_KAPPA, P_OP = range(8)
N_PARAMS = 8
MAX_RM_COEFFS = 8


# {{{ specs


@dataclass(frozen=True)
class LocalOperatorSpec:
    """Width operator ``phi`` in the denominator of the adaptive maps.

    symmetric:  ``(1 + chi (w - 1/2)^2) (w (1 - w))^kappa``, ``chi >= 0``
    asymmetric: ``(1 + chi w) (w (1 - w))^kappa``, ``chi > -1``
    """

    kind: str = "symmetric"
    chi: float = 100.0
    kappa: int = 2

    def __post_init__(self) -> None:
        if self.kind not in ("symmetric", "asymmetric"):
            raise ValueError(f"unknown local operator kind: {self.kind!r}")
        if int(self.kappa) != self.kappa or self.kappa < 2:
            raise ValueError(f"kappa must be an integer >= 2, got {self.kappa}")
        if self.kind == "symmetric" and self.chi < 0.0:
            raise ValueError(f"symmetric operator needs chi >= 0, got {self.chi}")
        if self.kind == "asymmetric" and self.chi <= -1.0:
            raise ValueError(f"asymmetric operator needs chi > -1, got {self.chi}")

    @property
    def code(self) -> int:
        return SYMMETRIC if self.kind == "symmetric" else ASYMMETRIC

    def __call__(self, omega):
        return _phi_vec(np.asarray(omega, dtype=np.float64), self.code,
                        float(self.chi), int(self.kappa))


@dataclass(frozen=True)
class MappingSpec:
    """Immutable selector for the weight map and its parameters.

    Use the classmethod constructors; they validate the parameter ranges.
    """

    kind: str = "JS"
    n: int = 0
    m: int = 0
    tau: int = 0
    A: float = 0.0
    c: float = 0.0
    op: LocalOperatorSpec | None = None
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.kind not in KIND_CODES:
            raise ValueError(f"unknown mapping kind: {self.kind!r}")
        k = self.kind
        if k in ("PM", "IM", "AIM", "AIMPHI", "APM"):
            if self.n < 2 or self.n % 2:
                raise ValueError(f"{k} needs a positive even n, got {self.n}")
        if k == "IM" and self.A <= 0.0:
            raise ValueError(f"IM needs A > 0, got {self.A}")
        if k in ("RM", "ARM"):
            if not 0 <= self.m <= self.n:
                raise ValueError(f"{k} needs 0 <= m <= n, got m={self.m}, n={self.n}")
            if self.tau not in (0, 1):
                raise ValueError(f"{k} needs tau in {{0, 1}}, got {self.tau}")
        if k == "AIM" and self.m < 1:
            raise ValueError(f"AIM needs m >= 1, got {self.m}")
        if k in ("AIM", "AIMPHI", "APM", "ARM") and self.c < 0.0:
            raise ValueError(f"amplitude scale c must be >= 0, got {self.c}")
        if k in ("AIMPHI", "APM", "ARM") and self.op is None:
            raise ValueError(f"{k} needs a local operator")

    @classmethod
    def linear(cls) -> MappingSpec:
        """Optimal weights everywhere: the linear fifth-order upstream scheme."""
        return cls("LINEAR", label="upwind")

    @classmethod
    def js(cls) -> MappingSpec:
        return cls("JS", label="JS")

    @classmethod
    def mapped(cls) -> MappingSpec:
        return cls("M", label="M")

    @classmethod
    def pm(cls, n: int = 6) -> MappingSpec:
        return cls("PM", n=n, label=f"PM{n}")

    @classmethod
    def im(cls, n: int = 2, A: float = 0.1) -> MappingSpec:
        return cls("IM", n=n, A=A, label=f"IM({n},{A:g})")

    @classmethod
    def rm(cls, m: int = 2, n: int = 6, tau: int = 0) -> MappingSpec:
        return cls("RM", n=n, m=m, tau=tau, label=f"RM{m}{n}{tau}")

    @classmethod
    def aim(cls, n: int = 4, m: int = 2, c: float = 1.0e4) -> MappingSpec:
        return cls("AIM", n=n, m=m, c=c, label="AIM")

    @classmethod
    def aim_phi(cls, op: LocalOperatorSpec, n: int = 4, c: float = 1.0e4) -> MappingSpec:
        name = "AIMS" if op.kind == "symmetric" else "AIMA"
        return cls("AIMPHI", n=n, c=c, op=op, label=name)

    @classmethod
    def apm(cls, op: LocalOperatorSpec, n: int = 6, c: float = 1.0e4) -> MappingSpec:
        name = "APMS" if op.kind == "symmetric" else "APMA"
        return cls("APM", n=n, c=c, op=op, label=name)

    @classmethod
    def arm(
        cls, op: LocalOperatorSpec, m: int = 2, n: int = 6, tau: int = 0,
        c: float = 1.0e4,
    ) -> MappingSpec:
        name = "ARMS" if op.kind == "symmetric" else "ARMA"
        return cls("ARM", n=n, m=m, tau=tau, c=c, op=op, label=name)

    @property
    def code(self) -> int:
        return KIND_CODES[self.kind]

    @property
    def is_adaptive(self) -> bool:
        return self.kind in ("AIM", "AIMPHI", "APM", "ARM")

    @property
    def contact_order(self) -> int:
        """Order ``n`` of the contact ``g(d + h) - d = O(h^(n+1))``."""
        return 2 if self.kind == "M" else self.n

    def replace(self, **changes) -> MappingSpec:
        from dataclasses import replace

        return replace(self, **changes)

    def encode(self) -> tuple[np.ndarray, np.ndarray]:
        """Float parameter vector and RM coefficient table for the kernels."""
        par = np.zeros(N_PARAMS)
        par[P_N] = self.n
        par[P_M] = self.m
        par[P_TAU] = self.tau
        par[P_A] = self.A
        par[P_C] = self.c
        if self.kind == "AIM":
            # AIM is the symmetric operator with chi = 0 and kappa = m
            par[P_OP], par[P_CHI], par[P_KAPPA] = SYMMETRIC, 0.0, self.m
        elif self.op is not None:
            par[P_OP], par[P_CHI], par[P_KAPPA] = self.op.code, self.op.chi, self.op.kappa

        coeffs = np.zeros((3, MAX_RM_COEFFS + 1))
        if self.kind in ("RM", "ARM"):
            for k, d in enumerate(OPTIMAL_WEIGHTS):
                a = rm_coefficients(d, self.m, self.n, self.tau)
                coeffs[k, 0] = a.size
                coeffs[k, 1:1 + a.size] = a
        return par, coeffs


@dataclass(frozen=True)
class AdaptiveContext:
    beta_min: float
    beta_max: float
    dx: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.beta_min <= self.beta_max:
            raise ValueError(
                f"need 0 <= beta_min <= beta_max, got {self.beta_min}, {self.beta_max}")
        if self.dx <= 0.0:
            raise ValueError(f"dx must be positive, got {self.dx}")

    @classmethod
    def from_beta(cls, beta: Sequence[float], dx: float) -> AdaptiveContext:
        return cls(float(min(beta)), float(max(beta)), dx)


# }}}


# {{{ compiled kernels


@njit(cache=True, inline="always")
def _ipow(x, n):
    # runtime integer exponents; noticeably cheaper than the generic pow
    r = 1.0
    for _ in range(n):
        r *= x
    return r


@njit(cache=True, inline="always")
def _phi(w, opkind, chi, kappa):
    base = _ipow(w * (1.0 - w), kappa)
    if opkind == SYMMETRIC:
        return (1.0 + chi * (w - 0.5) * (w - 0.5)) * base
    return (1.0 + chi * w) * base


@njit(cache=True)
def _phi_vec(w, opkind, chi, kappa):
    out = np.empty_like(w)
    flat_in = w.ravel()
    flat_out = out.ravel()
    for i in range(flat_in.size):
        flat_out[i] = _phi(flat_in[i], opkind, chi, kappa)
    return out


@njit(cache=True, inline="always")
def _g_m(w, d):
    return w * (d + d * d - 3.0 * d * w + w * w) / (d * d + w * (1.0 - 2.0 * d))


@njit(cache=True, inline="always")
def _pm_branch(w, d, n):
    if w <= d:
        sign = 1.0 if n % 2 == 0 else -1.0
        c1 = sign * (n + 1) / _ipow(d, n + 1)
        c2 = d / (n + 1)
    else:
        c1 = -(n + 1) / _ipow(1.0 - d, n + 1)
        c2 = (d - (n + 2)) / (n + 1)
    return c1, c2


@njit(cache=True, inline="always")
def _dev_m(w, d):
    # g_M - d, factored: the numerator of g_M minus d times its denominator is (w - d)^3
    e = w - d
    return e * e * e / (d * d + w * (1.0 - 2.0 * d))


@njit(cache=True, inline="always")
def _dev_pm(w, d, n):
    c1, c2 = _pm_branch(w, d, n)
    return c1 * _ipow(w - d, n + 1) * (w + c2)


@njit(cache=True, inline="always")
def _dev_im(w, d, n, a):
    if w == d:
        return 0.0
    e = w - d
    en = _ipow(e, n)
    return en * e * a / (en * a + w * (1.0 - w))


@njit(cache=True, inline="always")
def _rm_denominator(w, coeffs, row):
    # Horner on a_0 + a_1 w + ...; coeffs[row] = [count, a_0, a_1, ...]
    acc = 0.0
    for i in range(int(coeffs[row, 0]) - 1, -1, -1):
        acc = acc * w + coeffs[row, 1 + i]
    return acc


@njit(cache=True, inline="always")
def _dev_rm(w, d, coeffs, row, n):
    if w == d:
        return 0.0
    return _ipow(w - d, n + 1) / _rm_denominator(w, coeffs, row)


@njit(cache=True, inline="always")
def _dev_aim_phi(w, d, n, s, phival):
    if w == d:
        return 0.0
    e = w - d
    en = _ipow(e, n)
    return en * e / (en + s * phival)


@njit(cache=True, inline="always")
def _dev_apm(w, d, n, s, phival):
    if w == d:
        return 0.0
    # (w-d)^(n+1) / (1/(c1 (w+c2)) + s phi), multiplied through by c1 (w+c2) > 0;
    # at s = 0 this is the PM deviation bit for bit
    c1, c2 = _pm_branch(w, d, n)
    k = c1 * (w + c2)
    return c1 * _ipow(w - d, n + 1) * (w + c2) / (1.0 + s * phival * k)


@njit(cache=True, inline="always")
def _dev_arm(w, d, coeffs, row, n, s, phival):
    if w == d:
        return 0.0
    return _ipow(w - d, n + 1) / (_rm_denominator(w, coeffs, row) + s * phival)


@njit(cache=True, inline="always")
def _g_pm(w, d, n):
    return d + _dev_pm(w, d, n)


@njit(cache=True, inline="always")
def _g_im(w, d, n, a):
    return d + _dev_im(w, d, n, a)


@njit(cache=True, inline="always")
def _g_rm(w, d, coeffs, row, n):
    return d + _dev_rm(w, d, coeffs, row, n)


@njit(cache=True, inline="always")
def _g_aim_phi(w, d, n, s, phival):
    return d + _dev_aim_phi(w, d, n, s, phival)


@njit(cache=True, inline="always")
def _g_apm(w, d, n, s, phival):
    return d + _dev_apm(w, d, n, s, phival)


@njit(cache=True, inline="always")
def _g_arm(w, d, coeffs, row, n, s, phival):
    return d + _dev_arm(w, d, coeffs, row, n, s, phival)


@njit(cache=True, inline="always")
def _s_aim(bmin, bmax, dx, d, c):
    return c / d * (bmin / (bmax + dx * dx * dx * dx * dx))


@njit(cache=True, inline="always")
def _s_new(bmin, bmax, dx, d, c):
    return c * d * (bmin / (bmax + dx * dx * dx * dx * dx))


@njit(cache=True, inline="always")
def _s_value(kind, bmin, bmax, dx, d, c):
    if kind == AIM or kind == AIMPHI:
        return _s_aim(bmin, bmax, dx, d, c)
    if kind == APM or kind == ARM:
        return _s_new(bmin, bmax, dx, d, c)
    return 0.0


@njit(cache=True, inline="always")
def _dev_kind(w, d, s, kind, par, coeffs, row):
    """``g(w) - d`` without the cancellation of forming ``g`` first."""
    n = int(par[P_N])
    if kind == LINEAR:
        return 0.0
    if kind == JS:
        return w - d
    if kind == M:
        return _dev_m(w, d)
    if kind == PM:
        return _dev_pm(w, d, n)
    if kind == IM:
        return _dev_im(w, d, n, par[P_A])
    if kind == RM:
        return _dev_rm(w, d, coeffs, row, n)

    phival = _phi(w, int(par[P_OP]), par[P_CHI], int(par[P_KAPPA]))
    if kind == AIM or kind == AIMPHI:
        return _dev_aim_phi(w, d, n, s, phival)
    if kind == APM:
        return _dev_apm(w, d, n, s, phival)
    # ARM
    return _dev_arm(w, d, coeffs, row, n, s, phival)


@njit(cache=True, inline="always")
def _g_kind(w, d, s, kind, par, coeffs, row):
    if kind == LINEAR:
        return d
    if kind == JS:
        return w
    if kind == M:
        return _g_m(w, d)
    return d + _dev_kind(w, d, s, kind, par, coeffs, row)


@njit(cache=True, inline="always")
def _map_weights(w0, w1, w2, bmin, bmax, dx, kind, par, coeffs):
    if kind == JS:
        return w0, w1, w2
    if kind == LINEAR:
        return 0.1, 0.6, 0.3
    c = par[P_C]
    # one min/max ratio per interface; each weight scales it by its own d
    lam = bmin / (bmax + dx * dx * dx * dx * dx)
    if kind == AIM or kind == AIMPHI:
        s0, s1, s2 = c / 0.1 * lam, c / 0.6 * lam, c / 0.3 * lam
    elif kind == APM or kind == ARM:
        s0, s1, s2 = c * 0.1 * lam, c * 0.6 * lam, c * 0.3 * lam
    else:
        s0 = s1 = s2 = 0.0
    g0 = _g_kind(w0, 0.1, s0, kind, par, coeffs, 0)
    g1 = _g_kind(w1, 0.6, s1, kind, par, coeffs, 1)
    g2 = _g_kind(w2, 0.3, s2, kind, par, coeffs, 2)
    inv = 1.0 / (g0 + g1 + g2)
    return g0 * inv, g1 * inv, g2 * inv


# }}}


# {{{ scalar API


def _check_unit(omega: float, d: float) -> None:
    if not 0.0 <= omega <= 1.0:
        raise ValueError(f"omega must lie in [0, 1], got {omega}")
    if not 0.0 < d < 1.0:
        raise ValueError(f"d must lie in (0, 1), got {d}")


def _check_even(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"n must be a positive even integer, got {n}")


def _as_phi_value(phi, omega: float) -> float:
    if isinstance(phi, LocalOperatorSpec):
        return float(_phi(omega, phi.code, float(phi.chi), int(phi.kappa)))
    return float(phi(omega))


def phi_symmetric(omega: float, op: LocalOperatorSpec) -> float:
    if op.kind != "symmetric":
        raise ValueError("phi_symmetric needs a symmetric operator")
    return float(_phi(float(omega), SYMMETRIC, float(op.chi), int(op.kappa)))


def phi_asymmetric(omega: float, op: LocalOperatorSpec) -> float:
    if op.kind != "asymmetric":
        raise ValueError("phi_asymmetric needs an asymmetric operator")
    return float(_phi(float(omega), ASYMMETRIC, float(op.chi), int(op.kappa)))


def map_m(omega: float, d: float) -> float:
    _check_unit(omega, d)
    return float(_g_m(float(omega), float(d)))


def map_pm(omega: float, d: float, n: int = 6) -> float:
    _check_unit(omega, d)
    _check_even(n)
    return float(_g_pm(float(omega), float(d), int(n)))


def map_im(omega: float, d: float, n: int = 2, A: float = 0.1) -> float:
    _check_unit(omega, d)
    _check_even(n)
    if A <= 0.0:
        raise ValueError(f"A must be positive, got {A}")
    return float(_g_im(float(omega), float(d), int(n), float(A)))


def rm_coefficients(d: float, m: int = 2, n: int = 6, tau: int = 0) -> np.ndarray:
    """Denominator coefficients ``a_0 .. a_{m+tau+1}`` of the rational map."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if tau not in (0, 1):
        raise ValueError(f"tau must be 0 or 1, got {tau}")

    a = [math.comb(n + 1, i) * (-d) ** (n - i) for i in range(m + 1)]
    head = sum(a)
    weighted = sum(i * ai for i, ai in enumerate(a))
    closing = (1.0 - d) ** n - head
    if tau == 0:
        a.append(closing)
    else:
        slope = (n + 1) * (1.0 - d) ** (n - 1)
        a.append((m + 2) * closing + weighted - slope)
        a.append(slope - weighted - (m + 1) * closing)
    return np.array(a)


def map_rm(omega: float, d: float, coeffs: Sequence[float], n: int) -> float:
    _check_unit(omega, d)
    row = _coeff_row(coeffs)
    if omega != d:
        den = _rm_denominator(float(omega), row, 0)
        if abs(den) < 1.0e-300:
            raise FloatingPointError(
                f"degenerate rational-map denominator at omega={omega}, d={d}")
    return float(_g_rm(float(omega), float(d), row, 0, int(n)))


def adaptive_s_aim(ctx: AdaptiveContext, d: float, c: float) -> float:
    """Adaptive amplitude ``c / d * min(beta) / (max(beta) + dx^5)``."""
    if c <= 0.0:
        raise ValueError(f"c must be positive, got {c}")
    return float(_s_aim(ctx.beta_min, ctx.beta_max, ctx.dx, float(d), float(c)))


def adaptive_s_new(ctx: AdaptiveContext, d: float, c: float) -> float:
    """Adaptive amplitude ``c * d * min(beta) / (max(beta) + dx^5)``."""
    if c <= 0.0:
        raise ValueError(f"c must be positive, got {c}")
    return float(_s_new(ctx.beta_min, ctx.beta_max, ctx.dx, float(d), float(c)))


def map_aim_phi(omega: float, d: float, n: int, s: float, phi) -> float:
    _check_unit(omega, d)
    _check_even(n)
    if s < 0.0:
        raise ValueError(f"s must be nonnegative, got {s}")
    omega = float(omega)
    return float(_g_aim_phi(omega, float(d), int(n), float(s), _as_phi_value(phi, omega)))


def map_apm(omega: float, d: float, n: int, s: float, phi) -> float:
    _check_unit(omega, d)
    _check_even(n)
    if s < 0.0:
        raise ValueError(f"s must be nonnegative, got {s}")
    omega = float(omega)
    return float(_g_apm(omega, float(d), int(n), float(s), _as_phi_value(phi, omega)))


def map_arm(
    omega: float, d: float, coeffs: Sequence[float], n: int, s: float, phi
) -> float:
    _check_unit(omega, d)
    if s < 0.0:
        raise ValueError(f"s must be nonnegative, got {s}")
    omega = float(omega)
    row = _coeff_row(coeffs)
    phival = _as_phi_value(phi, omega)
    if omega != d:
        den = _rm_denominator(omega, row, 0) + s * phival
        if abs(den) < 1.0e-300:
            raise FloatingPointError(
                f"degenerate rational-map denominator at omega={omega}, d={d}")
    return float(_g_arm(omega, float(d), row, 0, int(n), float(s), phival))


def _coeff_row(coeffs: Sequence[float]) -> np.ndarray:
    a = np.asarray(coeffs, dtype=np.float64)
    if a.ndim != 1 or a.size > MAX_RM_COEFFS:
        raise ValueError(f"bad coefficient list of shape {a.shape}")
    row = np.zeros((1, MAX_RM_COEFFS + 1))
    row[0, 0] = a.size
    row[0, 1:1 + a.size] = a
    return row


def _prepare(spec, omega, d, s, ctx):
    _check_unit(omega, d)
    par, _ = spec.encode()
    row = np.zeros((1, MAX_RM_COEFFS + 1))
    if spec.kind in ("RM", "ARM"):
        row = _coeff_row(rm_coefficients(d, spec.m, spec.n, spec.tau))
    if spec.is_adaptive and s is None:
        if ctx is None:
            raise ValueError(f"{spec.kind} needs either s or an adaptive context")
        s = float(_s_value(spec.code, ctx.beta_min, ctx.beta_max, ctx.dx, d, spec.c))
    return par, row, float(s or 0.0)


def evaluate_map(
    spec: MappingSpec,
    omega: float,
    d: float,
    s: float | None = None,
    ctx: AdaptiveContext | None = None,
) -> float:
    """Evaluate the single-weight map ``g(omega)`` of ``spec`` for weight ``d``.

    Adaptive kinds take either an explicit amplitude ``s`` or a context from
    which ``s`` is formed with the rule belonging to that kind.
    """
    par, row, s = _prepare(spec, omega, d, s, ctx)
    return float(_g_kind(float(omega), float(d), s, spec.code, par, row, 0))


def map_deviation(
    spec: MappingSpec,
    omega: float,
    d: float,
    s: float | None = None,
    ctx: AdaptiveContext | None = None,
) -> float:
    """``g(omega) - d`` evaluated directly, resolving deviations far below ``ulp(d)``."""
    par, row, s = _prepare(spec, omega, d, s, ctx)
    return float(_dev_kind(float(omega), float(d), s, spec.code, par, row, 0))


def apply_mapping(
    omega: Sequence[float],
    spec: MappingSpec,
    ctx: AdaptiveContext | None = None,
) -> WeightTriple:
    """Map each weight with its own ``d_k`` and renormalise."""
    w = WeightTriple(*(float(x) for x in omega)).check()
    if spec.is_adaptive and ctx is None:
        raise ValueError(f"{spec.kind} mapping needs an adaptive context")
    if ctx is None:
        ctx = AdaptiveContext(0.0, 0.0, 1.0)
    par, coeffs = spec.encode()
    return WeightTriple(*_map_weights(
        w.w0, w.w1, w.w2, ctx.beta_min, ctx.beta_max, ctx.dx, spec.code, par, coeffs))


# }}}


# {{{ operator admissibility


@dataclass(frozen=True)
class OperatorCheck:
    positive: bool
    vanishes_at_ends: bool
    flat_at_ends: bool
    monotone_condition: bool

    @property
    def valid(self) -> bool:
        return (self.positive and self.vanishes_at_ends
                and self.flat_at_ends and self.monotone_condition)

    def __bool__(self) -> bool:
        return self.valid


def validate_local_operator(
    phi: Callable[[np.ndarray], np.ndarray] | LocalOperatorSpec,
    n: int,
    d: float,
    samples: int = 10_001,
    h: float = 1.0e-4,
) -> OperatorCheck:
    """Sampled admissibility check of a width operator.

    Checks positivity on the open interval, ``phi(0) = phi(1) = 0``, flat ends
    (central differences of step ``h``) and the monotonicity requirement
    ``(n + 1) phi - phi' (w - d) >= 0`` of the generalised AIM map.
    """
    w = np.linspace(0.0, 1.0, samples)

    def ev(x: np.ndarray) -> np.ndarray:
        try:
            y = np.asarray(phi(x), dtype=np.float64)
            if y.shape != x.shape:
                raise TypeError
        except (TypeError, ValueError):
            y = np.array([float(phi(float(xi))) for xi in x])
        return y

    def slope(x: np.ndarray) -> np.ndarray:
        # fourth-order central difference; exact on cubics, so the true zero
        # end slopes are not masked by the O(h^2) error of the 3-point form
        return (8.0 * (ev(x + h) - ev(x - h)) - (ev(x + 2 * h) - ev(x - 2 * h))) / (12.0 * h)

    vals = ev(w)
    ends = ev(np.array([0.0, 1.0]))
    end_slopes = slope(np.array([0.0, 1.0]))
    dvals = slope(w)
    if not (np.all(np.isfinite(vals)) and np.all(np.isfinite(ends))
            and np.all(np.isfinite(dvals))):
        raise ValueError("local operator produced non-finite samples")

    positive = bool(np.all(vals[1:-1] > 0.0))
    vanishes = abs(ends[0]) <= 1.0e-12 and abs(ends[1]) <= 1.0e-12
    flat = bool(np.all(np.abs(end_slopes) <= 1.0e-6))
    # interior only: at the ends phi and phi' vanish and a central difference
    # would reach outside [0, 1]
    cond = ((n + 1) * vals - dvals * (w - d))[1:-1]
    return OperatorCheck(positive, bool(vanishes), bool(flat),
                         bool(np.all(cond >= -1.0e-10)))


# }}}


@njit(cache=True)
def _curve(omega, d, s, kind, par, row):
    out = np.empty_like(omega)
    for i in range(omega.size):
        out[i] = _g_kind(omega[i], d, s, kind, par, row, 0)
    return out


def mapping_curve(
    spec: MappingSpec,
    d: float,
    s: float | None = None,
    samples: int = 1001,
) -> tuple[np.ndarray, np.ndarray]:
    """Sample ``(omega, g(omega))`` uniformly on ``[0, 1]``."""
    if spec.is_adaptive and s is None:
        raise ValueError(f"{spec.kind} curves need a fixed amplitude s")
    omega = np.linspace(0.0, 1.0, samples)
    par, row, s = _prepare(spec, 0.0, d, s, None)
    return omega, _curve(omega, float(d), s, spec.code, par, row)
