"""Named scheme presets and the compiled fifth-order interface flux."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from mappedweno.mapping import JS, LINEAR, LocalOperatorSpec, MappingSpec, _map_weights
from mappedweno.reconstruction import JS_EPSILON, _candidate_fluxes, _js_weights, _smoothness

#: the nine schemes compared throughout the benchmarks
COMPARED_SCHEMES = ("aim", "aims", "aima", "rm260", "arms", "arma", "pm6", "apms", "apma")
#: classical references available in addition
EXTRA_SCHEMES = ("js", "m", "im", "upwind")

DEFAULT_C = 1.0e4
DEFAULT_CHI = 100.0


def get_scheme(name: str, chi: float | None = None, c: float | None = None) -> MappingSpec:
    """Build the preset ``MappingSpec`` for a scheme name.

    ``chi`` and ``c`` override the adaptive presets (``chi = 100``,
    ``c = 1e4``); they are ignored for non-adaptive schemes.
    """
    key = name.lower().replace("-", "").replace("weno", "")
    chi = DEFAULT_CHI if chi is None else chi
    c = DEFAULT_C if c is None else c
    sym = LocalOperatorSpec("symmetric", chi=chi, kappa=2)

    def asym() -> LocalOperatorSpec:
        return LocalOperatorSpec("asymmetric", chi=chi, kappa=2)

    if key == "js":
        return MappingSpec.js()
    if key == "m":
        return MappingSpec.mapped()
    if key in ("im", "im20.1", "im(2,0.1)"):
        return MappingSpec.im(2, 0.1)
    if key in ("pm", "pm6"):
        return MappingSpec.pm(6)
    if key in ("rm", "rm260"):
        return MappingSpec.rm(2, 6, 0)
    if key == "aim":
        return MappingSpec.aim(n=4, m=2, c=c)
    if key == "aims":
        return MappingSpec.aim_phi(sym, n=4, c=c)
    if key == "aima":
        return MappingSpec.aim_phi(asym(), n=4, c=c)
    if key == "apms":
        return MappingSpec.apm(sym, n=6, c=c)
    if key == "apma":
        return MappingSpec.apm(asym(), n=6, c=c)
    if key == "arms":
        return MappingSpec.arm(sym, m=2, n=6, tau=0, c=c)
    if key == "arma":
        return MappingSpec.arm(asym(), m=2, n=6, tau=0, c=c)
    if key in ("upwind", "linear"):
        return MappingSpec.linear()
    raise KeyError(f"unknown scheme {name!r}; choose from "
                   f"{', '.join(COMPARED_SCHEMES + EXTRA_SCHEMES)}")


@dataclass(frozen=True)
class CompiledScheme:
    """Kernel-ready encoding of a :class:`MappingSpec`."""

    spec: MappingSpec
    kind: int
    par: np.ndarray
    coeffs: np.ndarray

    @classmethod
    def from_spec(cls, spec: MappingSpec | CompiledScheme) -> CompiledScheme:
        if isinstance(spec, CompiledScheme):
            return spec
        par, coeffs = spec.encode()
        return cls(spec, spec.code, par, coeffs)


@njit(cache=True, inline="always")
def weno5_flux(fm2, fm1, f0, fp1, fp2, dx, kind, par, coeffs):
    """Left-biased WENO value at ``j + 1/2`` from ``f[j-2] .. f[j+2]``."""
    q0, q1, q2 = _candidate_fluxes(fm2, fm1, f0, fp1, fp2)
    if kind == LINEAR:
        return 0.1 * q0 + 0.6 * q1 + 0.3 * q2
    b0, b1, b2 = _smoothness(fm2, fm1, f0, fp1, fp2)
    w0, w1, w2 = _js_weights(b0, b1, b2, JS_EPSILON)
    if kind != JS:
        bmin = min(b0, min(b1, b2))
        bmax = max(b0, max(b1, b2))
        w0, w1, w2 = _map_weights(w0, w1, w2, bmin, bmax, dx, kind, par, coeffs)
    return w0 * q0 + w1 * q1 + w2 * q2


def interface_value(window, dx: float, scheme: MappingSpec) -> float:
    """Python entry point of :func:`weno5_flux` for a single window."""
    from mappedweno.reconstruction import StencilWindow

    w = StencilWindow.from_values(window)
    cs = CompiledScheme.from_spec(scheme)
    return float(weno5_flux(*w, float(dx), cs.kind, cs.par, cs.coeffs))
