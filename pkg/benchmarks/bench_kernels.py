"""Compare the compiled and pure kernel backends on representative workloads.

Run:  python3 benchmarks/bench_kernels.py

Times three layers: raw term-map kernels, polynomial multiplication, and a
full end-to-end pipeline (derlog + Artin quotient of the pinch point).  The
pure backend is forced by reloading with LOGDERIV_PURE_KERNELS=1 in a
subprocess, so both runs use identical code above the kernel layer.
"""

import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def random_terms(rng, nterms, nvars=3, maxexp=6):
    return {
        tuple(rng.randint(0, maxexp) for _ in range(nvars)): Fraction(
            rng.randint(-99, 99) or 1, rng.randint(1, 30)
        )
        for _ in range(nterms)
    }


def bench_kernels():
    from logderiv import kernels

    rng = random.Random(0)
    fs = [random_terms(rng, 40) for _ in range(30)]
    gs = [random_terms(rng, 40) for _ in range(30)]

    t0 = time.perf_counter()
    for f in fs:
        for g in gs:
            kernels.dict_mul(f, g)
    t_mul = time.perf_counter() - t0

    t0 = time.perf_counter()
    for f in fs:
        for g in gs:
            h = dict(f)
            kernels.dict_axpy(h, Fraction(3, 7), (1, 0, 2), g)
    t_axpy = time.perf_counter() - t0
    return {"dict_mul_s": t_mul, "dict_axpy_s": t_axpy}


def bench_poly():
    from logderiv.poly import Ring

    R = Ring(["x", "y", "z"])
    x, y, z = R.gens()
    p = (x + 2 * y + 3 * z + 1) ** 8
    t0 = time.perf_counter()
    q = p * p
    t = time.perf_counter() - t0
    assert len(q.terms) > 0
    return {"dense_deg16_product_s": t}


def bench_pipeline():
    from logderiv import DivisorGerm, Ring, apply_derivs, derlog, quotient, socle

    R = Ring(["x", "y", "z"])
    x, y, z = R.gens()
    t0 = time.perf_counter()
    D = DivisorGerm(R, x**2 - y**2 * z)
    theta = derlog(D)
    A = quotient(apply_derivs(theta, x**2 + y**2 + z**2))
    socle(A)
    t = time.perf_counter() - t0
    assert A.dim == 6
    return {"pinch_point_pipeline_s": t}


def run_all():
    from logderiv.kernels import BACKEND

    out = {"backend": BACKEND}
    out.update(bench_kernels())
    out.update(bench_poly())
    out.update(bench_pipeline())
    return out


def main():
    if os.environ.get("_LOGDERIV_BENCH_CHILD"):
        print(json.dumps(run_all()))
        return

    results = [run_all()]
    env = dict(os.environ, LOGDERIV_PURE_KERNELS="1", _LOGDERIV_BENCH_CHILD="1")
    child = subprocess.run(
        [sys.executable, os.path.abspath(__file__)],
        env=env,
        capture_output=True,
        text=True,
        cwd=REPO,
    )
    if child.returncode == 0:
        results.append(json.loads(child.stdout))
    else:
        print(child.stderr, file=sys.stderr)

    keys = [k for k in results[0] if k != "backend"]
    print(f"{'benchmark':<28}" + "".join(f"{r['backend']:>12}" for r in results), end="")
    print(f"{'speedup':>10}" if len(results) == 2 else "")
    for k in keys:
        row = f"{k:<28}" + "".join(f"{r[k]:>12.4f}" for r in results)
        if len(results) == 2 and results[0][k] > 0:
            row += f"{results[1][k] / results[0][k]:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
