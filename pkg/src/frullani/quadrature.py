"""Adaptive quadrature oracle used to check closed forms independently.

Three layers:

  integrate_adaptive          Gauss-Kronrod 7/15 panels, globally adaptive
                              bisection of the worst panel.  The rule is open
                              (no endpoint evaluations), so integrands with a
                              removable endpoint singularity just work.
  integrate_decaying          semi-infinite integrals of decaying integrands,
                              mapped onto (0, 1) by x = t/(1-t).
  integrate_oscillatory_tail  conditionally convergent tails: fixed-width
                              half-period segments, partial sums accelerated
                              by iterated Euler averaging plus extrapolation
                              of the phase-locked remainder in 1/x.

integrate_frullani_oscillatory splits a whole-line oscillatory integral at a
point c into an adaptive head on (0, c] and an accelerated tail.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

__all__ = [
    "QuadratureResult",
    "OscillatorySpec",
    "IntegrandError",
    "integrate_adaptive",
    "integrate_decaying",
    "integrate_oscillatory_tail",
    "integrate_frullani_oscillatory",
    "gauss_kronrod_panel",
]


class IntegrandError(RuntimeError):
    """The integrand produced a non-finite value, or raised, inside the
    interval."""

    def __init__(self, abscissa: float, value: float, cause: str = ""):
        self.abscissa = abscissa
        self.value = value
        what = cause or f"returned {value!r}"
        super().__init__(f"integrand {what} at x = {abscissa!r}")


def _eval_checked(f: Callable[[float], float], x: float) -> float:
    try:
        v = f(x)
    except IntegrandError:
        raise
    except (ArithmeticError, ValueError) as exc:
        raise IntegrandError(x, math.nan, f"raised {exc!r}") from exc
    if not math.isfinite(v):
        raise IntegrandError(x, v)
    return v


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    function_evaluations: int
    converged: bool
    diagnostic: str = ""


@dataclass(frozen=True)
class OscillatorySpec:
    """Tail plan: start point, half-period of the segment grid, max segments.

    half_period should be pi divided by the base frequency of the integrand's
    oscillation (the gcd of its nominal frequencies), so that every spectral
    component of the tail either alternates segment-to-segment or returns to
    a fixed phase every second segment.
    """

    start: float
    half_period: float
    max_segments: int = 64

    def __post_init__(self):
        if not (self.start > 0 and math.isfinite(self.start)):
            raise ValueError("start must be positive and finite")
        if not (self.half_period > 0 and math.isfinite(self.half_period)):
            raise ValueError("half_period must be positive and finite")
        if self.max_segments < 8:
            raise ValueError("max_segments must be at least 8")


# 15-point Kronrod extension of 7-point Gauss-Legendre (QUADPACK dqk15).
# Positive abscissas; even indices are the Kronrod-only nodes.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def gauss_kronrod_panel(
    f: Callable[[float], float], lo: float, hi: float
) -> tuple[float, float, float]:
    """One G7/K15 application on [lo, hi].

    Returns (kronrod_value, error_estimate, resasc).  All 15 nodes are
    interior, so f is never evaluated at lo or hi.  A non-finite f value
    raises IntegrandError carrying the abscissa.
    """
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)

    fodd = [0.0] * 8  # f(center + half*x) + f(center - half*x), center counted once
    values = [0.0] * 15
    idx = 0
    for i, xg in enumerate(_XGK):
        if xg == 0.0:
            v = _eval_checked(f, center)
            fodd[i] = v
            values[idx] = v
            idx += 1
            continue
        xp = center + half * xg
        xm = center - half * xg
        vp = _eval_checked(f, xp)
        vm = _eval_checked(f, xm)
        fodd[i] = vp + vm
        values[idx] = vp
        values[idx + 1] = vm
        idx += 2

    kron = sum(w * s for w, s in zip(_WGK, fodd))
    gauss = sum(w * fodd[i] for w, i in zip(_WG, (1, 3, 5, 7)))
    result_k = kron * half
    raw_err = abs((kron - gauss) * half)

    # QUADPACK-style sharpening: scale by the variation of f over the panel
    mean = kron * 0.5
    resasc = 0.0
    j = 0
    for i, w in enumerate(_WGK):
        if _XGK[i] == 0.0:
            resasc += w * abs(values[j] - mean)
            j += 1
        else:
            resasc += w * (abs(values[j] - mean) + abs(values[j + 1] - mean))
            j += 2
    resasc *= abs(half)
    err = raw_err
    if resasc != 0.0 and raw_err != 0.0:
        err = resasc * min(1.0, (200.0 * raw_err / resasc) ** 1.5)
    return result_k, err, resasc


def integrate_adaptive(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_panels: int = 2000,
) -> QuadratureResult:
    """Globally adaptive G7/K15 integration of f over the finite [lo, hi].

    When converged is True the returned error_estimate is at most tol.  The
    estimate on failure is the honest panel-error sum.
    """
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError("need finite lo < hi")
    if not tol > 0:
        raise ValueError("tol must be positive")

    value, err, _ = gauss_kronrod_panel(f, lo, hi)
    evals = 15
    panels = [(-err, 0, lo, hi, value, err)]
    counter = 1
    err_total = err
    while err_total > tol and len(panels) < max_panels:
        neg_err, _, plo, phi, pval, perr = heapq.heappop(panels)
        mid = 0.5 * (plo + phi)
        if mid <= plo or mid >= phi:
            # interval at floating-point resolution, cannot split further
            heapq.heappush(panels, (0.0, counter, plo, phi, pval, perr))
            counter += 1
            err_total = sum(p[5] for p in panels)
            if all(p[0] == 0.0 for p in panels):
                break
            continue
        lval, lerr, _ = gauss_kronrod_panel(f, plo, mid)
        rval, rerr, _ = gauss_kronrod_panel(f, mid, phi)
        evals += 30
        heapq.heappush(panels, (-lerr, counter, plo, mid, lval, lerr))
        heapq.heappush(panels, (-rerr, counter + 1, mid, phi, rval, rerr))
        counter += 2
        err_total += lerr + rerr - perr
    # resum in spatial order: deterministic and slightly kinder to rounding
    ordered = sorted(panels, key=lambda p: p[2])
    total = sum(p[4] for p in ordered)
    err_total = sum(p[5] for p in ordered)
    return QuadratureResult(total, err_total, evals, err_total <= tol)


def integrate_decaying(
    f: Callable[[float], float], tol: float, max_panels: int = 2000
) -> QuadratureResult:
    """Integrate f over (0, inf) for integrands decaying at infinity.

    Uses the substitution x = t/(1-t), dx = dt/(1-t)^2, then the adaptive
    rule on (0, 1).  Suited to integrable endpoint behaviour at 0 and decay
    at least as fast as 1/x^2; slower decay shows up as non-convergence.
    """

    def mapped(t: float) -> float:
        u = 1.0 - t
        x = t / u
        v = f(x)
        if v == 0.0:
            return 0.0
        jac = 1.0 / u
        return (v * jac) * jac

    return integrate_adaptive(mapped, 0.0, 1.0, tol, max_panels)


def _euler_averaged(sums: Sequence[float], depth: int) -> list[float]:
    """depth iterated pairwise averagings of a partial-sum sequence."""
    out = list(sums)
    for _ in range(depth):
        if len(out) < 2:
            break
        out = [0.5 * (a + b) for a, b in zip(out, out[1:])]
    return out


def _accelerate_tail(
    partial_sums: Sequence[float],
    start: float,
    half_period: float,
    depth: int,
    nodes: int,
) -> tuple[float, float]:
    """Extrapolate tail partial sums to infinity.

    partial_sums[m] = integral over [start, start + (m+1)h].  Alternating
    error components are annihilated by the averaging stage; what survives
    is, on the half-period grid, a smooth series in 1/x, which a Neville
    tableau extrapolates to 1/x = 0.  Returns (value, error_estimate).
    """
    n = len(partial_sums)
    depth = min(depth, max(0, n - 3))
    averaged = _euler_averaged(partial_sums, depth)
    # effective reciprocal abscissa of each averaged entry: the binomially
    # weighted mean of the reciprocals it mixes (exact for the 1/x component)
    m_count = len(averaged)
    weights = [math.comb(depth, i) for i in range(depth + 1)]
    wsum = float(sum(weights))
    ts = []
    for m in range(m_count):
        t = sum(
            w / (start + (m + i + 1.0) * half_period) for i, w in enumerate(weights)
        )
        ts.append(t / wsum)

    if m_count == 1:
        return averaged[0], abs(averaged[0]) + 1.0

    # geometric subsample of the averaged sequence, biased to the far tail
    picked = [m_count - 1]
    x_last = 1.0 / ts[m_count - 1]
    target = x_last / 1.45
    for m in range(m_count - 2, -1, -1):
        x = 1.0 / ts[m]
        if x <= target:
            picked.append(m)
            target = x / 1.45
        if len(picked) >= nodes:
            break
    picked.reverse()
    if len(picked) < 2:
        picked = list(range(max(0, m_count - 2), m_count))

    # Neville tableau in t, extrapolated to t = 0
    t_nodes = [ts[m] for m in picked]
    table = [averaged[m] for m in picked]
    best = table[-1]
    prev = None
    for level in range(1, len(table)):
        for i in range(len(table) - 1, level - 1, -1):
            denom = t_nodes[i - level] - t_nodes[i]
            table[i] = table[i] + t_nodes[i] * (table[i] - table[i - 1]) / denom
        prev = best
        best = table[-1]
    est = abs(best - prev) if prev is not None else abs(best)
    return best, est


def integrate_oscillatory_tail(
    f: Callable[[float], float],
    spec: OscillatorySpec,
    tol: float,
    depth: int = 8,
    nodes: int = 7,
) -> QuadratureResult:
    """Integrate f over [spec.start, inf) for a conditionally convergent tail.

    Successive segments [c + j*h, c + (j+1)*h] are integrated adaptively and
    the partial-sum sequence is accelerated (averaging depth capped at 12,
    at most spec.max_segments segment sums).  converged means the accelerated
    remainder estimate dropped to tol or below.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    depth = min(depth, 12)
    c, h, max_seg = spec.start, spec.half_period, spec.max_segments
    seg_tol = tol / (2.0 * max_seg)

    sums: list[float] = []
    seg_values: list[float] = []
    seg_err = 0.0
    evals = 0
    running = 0.0
    best = 0.0
    est = math.inf
    stable = 0
    sign_run = 0
    non_alternating = False
    floor = tol * 1e-3

    for j in range(max_seg):
        lo = c + j * h
        hi = c + (j + 1) * h
        res = integrate_adaptive(f, lo, hi, seg_tol, max_panels=200)
        evals += res.function_evaluations
        seg_err += res.error_estimate
        running += res.value
        seg_values.append(res.value)
        sums.append(running)

        if len(seg_values) >= 2 and abs(seg_values[-1]) > floor and abs(seg_values[-2]) > floor:
            if seg_values[-1] * seg_values[-2] > 0:
                sign_run += 1
                if sign_run > 8:
                    # precondition violated; extrapolation of the smooth
                    # remainder may still succeed, so keep going and only
                    # report the pattern if convergence fails
                    non_alternating = True
            else:
                sign_run = 0

        if len(sums) >= max(10, depth + 3):
            value, acc_est = _accelerate_tail(sums, c, h, depth, nodes)
            total_est = acc_est + seg_err
            if math.isfinite(value) and total_est <= tol:
                stable += 1
                if stable >= 2:
                    return QuadratureResult(value, total_est, evals, True)
            else:
                stable = 0
            best, est = value, total_est

    diagnostic = "tail estimate did not reach tolerance"
    if non_alternating:
        diagnostic = (
            "segment sums not alternating beyond the grace count; " + diagnostic
        )
    if not math.isfinite(est):
        best = running
    return QuadratureResult(best, est, evals, False, diagnostic)


def integrate_frullani_oscillatory(
    f: Callable[[float], float],
    spec: OscillatorySpec,
    tol: float,
) -> QuadratureResult:
    """Integral of f over (0, inf) split at spec.start: adaptive head plus
    accelerated oscillatory tail.  Head and tail budgets are 40% / 60%."""
    head = integrate_adaptive(f, 0.0, spec.start, 0.4 * tol)
    tail = integrate_oscillatory_tail(f, spec, 0.6 * tol)
    return QuadratureResult(
        head.value + tail.value,
        head.error_estimate + tail.error_estimate,
        head.function_evaluations + tail.function_evaluations,
        head.converged and tail.converged,
        "; ".join(d for d in (head.diagnostic, tail.diagnostic) if d),
    )
