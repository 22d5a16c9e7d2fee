"""Calibration harness for the oscillatory tail accelerator.

Runs the tail/whole-line oscillatory routines against targets with known
values and prints achieved absolute errors for a sweep of averaging depths
and extrapolation node counts.  Used to pick the defaults frozen in
quadrature.py; keep around to re-check after any change there.
"""

import math
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from frullani.quadrature import (  # noqa: E402
    OscillatorySpec,
    integrate_frullani_oscillatory,
    integrate_oscillatory_tail,
)

# reference digits computed with 50-digit arithmetic, frozen
NEG_CI_PI = -0.073667912046425486
PI_HALF_MINUS_SI_1 = 0.624713256427713604

TAIL_CASES = [
    ("cos(x)/x from pi", lambda x: math.cos(x) / x, OscillatorySpec(math.pi, math.pi), NEG_CI_PI),
    ("sin(x)/x from 1", lambda x: math.sin(x) / x, OscillatorySpec(1.0, math.pi), PI_HALF_MINUS_SI_1),
]

WHOLE_CASES = [
    (
        "(cos x - cos 2x)/x",
        lambda x: (math.cos(x) - math.cos(2 * x)) / x,
        OscillatorySpec(math.pi, math.pi),
        math.log(2.0),
    ),
    (
        "(cos x - cos 10x)/x",
        lambda x: (math.cos(x) - math.cos(10 * x)) / x,
        OscillatorySpec(math.pi, math.pi),
        math.log(10.0),
    ),
    (
        "sin(11x)sin(9x)/x",
        lambda x: math.sin(11 * x) * math.sin(9 * x) / x,
        OscillatorySpec(math.pi / 2, math.pi / 2),
        0.5 * math.log(10.0),
    ),
    (
        "cos-log kernel a=0.5 p=1 q=2",
        lambda x: (
            math.log1p(2 * 0.5 * math.cos(x) + 0.25)
            - math.log1p(2 * 0.5 * math.cos(2 * x) + 0.25)
        )
        / x,
        OscillatorySpec(math.pi, math.pi),
        2.0 * math.log(2.0) * math.log(1.5),
    ),
    (
        "(cos x - cos 3x)(1 + ... ) zero case",
        lambda x: (math.sin(2 * x) / x) * (math.cos(x) - math.cos(3 * x)),
        OscillatorySpec(math.pi, math.pi),
        # sin2x(cos x - cos 3x)/x = [sin3x + sin x - sin5x - sin(-x)]/(2x)
        # = [sin3x + 2 sin x - sin5x]/(2x) -> (pi/2)(1 + 2 - 1)/2 = pi/2
        0.5 * (math.pi / 2) * (1 + 2 - 1),
    ),
]

TOL = 1e-4


def main():
    print("tail-only cases, tol =", TOL)
    for depth in (6, 8, 10):
        for nodes in (5, 7, 9):
            line = [f"depth={depth} nodes={nodes}:"]
            for name, f, spec, exact in TAIL_CASES:
                r = integrate_oscillatory_tail(f, spec, TOL, depth=depth, nodes=nodes)
                line.append(
                    f"{name}: err={abs(r.value - exact):.2e} est={r.error_estimate:.1e} "
                    f"conv={r.converged} n={r.function_evaluations}"
                )
            print("  " + " | ".join(line))

    print("\nwhole-line cases (defaults), tol =", TOL)
    for name, f, spec, exact in WHOLE_CASES:
        r = integrate_frullani_oscillatory(f, spec, TOL)
        status = "ok" if abs(r.value - exact) <= TOL else "MISS"
        print(
            f"  {name}: value={r.value:.12f} exact={exact:.12f} "
            f"err={abs(r.value - exact):.2e} est={r.error_estimate:.1e} "
            f"conv={r.converged} n={r.function_evaluations} {status}"
        )

    print("\ntighter tolerance sweep on whole-line cases")
    for tol in (1e-5, 1e-6):
        for name, f, spec, exact in WHOLE_CASES:
            r = integrate_frullani_oscillatory(f, spec, tol)
            status = "ok" if abs(r.value - exact) <= tol else "MISS"
            print(
                f"  tol={tol:.0e} {name}: err={abs(r.value - exact):.2e} "
                f"est={r.error_estimate:.1e} conv={r.converged} {status}"
            )


if __name__ == "__main__":
    main()
