"""Temporal convergence of the embedded pair on a smooth vortex problem.

Runs both schemes down a ladder of uniform steps and a ladder of
randomly perturbed schedules against a fine ETDRK4 reference, then
prints the fitted orders. The grid is kept small so the whole script
runs in under a minute; the shapes of the tables match the full-scale
study.
"""

import pathlib

import numpy as np

from etdsav.harness import estimate_order, run_convergence

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

N = 32
T = 0.5
TAUS = [0.05 * 2.0**-k for k in range(5)]
COUNTS = [2**k for k in range(4, 9)]


def fitted(rows, steps=False):
    taus = np.array([1.0 / r.tau_or_n if steps else r.tau_or_n for r in rows])
    return {
        "velocity": estimate_order(taus, np.array([r.err_velocity_l2 for r in rows])),
        "vorticity": estimate_order(taus, np.array([r.err_vorticity_l2 for r in rows])),
        "aux": estimate_order(taus, np.array([r.err_r_abs for r in rows])),
    }


def show(title, table, steps=False):
    print(f"\n{title}")
    print(f"{'scheme':8s} {'velocity':>9s} {'vorticity':>10s} {'|r|':>7s}")
    for scheme, rows in table.items():
        orders = fitted(rows, steps=steps)
        print(
            f"{scheme:8s} {orders['velocity']:9.3f} "
            f"{orders['vorticity']:10.3f} {orders['aux']:7.3f}"
        )


def main():
    print(f"uniform ladder: n={N}, T={T}, taus {TAUS[0]} .. {TAUS[-1]}")
    uniform = run_convergence(
        ("ms1o", "ms2o"), n=N, T=T, taus=TAUS, tau_ref=T / 2048
    )
    show("fitted orders, uniform steps", uniform)

    print(f"\nperturbed ladder: step counts {COUNTS}")
    variable = run_convergence(
        ("ms1o", "ms2o"), n=N, T=T, step_counts=COUNTS, seed=3, tau_ref=T / 2048
    )
    show("fitted orders, 10 percent perturbed steps", variable, steps=True)

    header = "scheme,tau_or_N,err_velocity_L2,err_vorticity_L2,err_r_abs"
    lines = [header]
    for name, table in (("uniform", uniform), ("variable", variable)):
        for scheme, rows in table.items():
            for r in rows:
                lines.append(
                    f"{scheme},{r.tau_or_n!r},{r.err_velocity_l2!r},"
                    f"{r.err_vorticity_l2!r},{r.err_r_abs!r}"
                )
        (OUT / f"convergence_{name}.csv").write_text("\n".join(lines) + "\n")
        lines = [header]
    print(f"\nwrote {OUT}/convergence_uniform.csv and convergence_variable.csv")
    print("note: at coarse steps the first-order member tracks its shared")
    print("second-order stage; the formal orders emerge once tau is small")
    print("compared to 1/gamma.")


if __name__ == "__main__":
    main()
