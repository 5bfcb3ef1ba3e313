#!/usr/bin/env python3
"""Smoke test for the cpivot_py extension module.

Builds the cdylib with cargo if needed, loads it straight from the target
directory, and exercises the main entry points.
"""

import importlib.util
import math
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    subprocess.run(
        ["cargo", "build", "-p", "cpivot-python"], cwd=ROOT, check=True
    )
    for name in ("libcpivot_py.so", "libcpivot_py.dylib", "cpivot_py.dll"):
        candidate = ROOT / "target" / "debug" / name
        if candidate.exists():
            break
    else:
        sys.exit("built extension not found under target/debug")
    spec = importlib.util.spec_from_file_location("cpivot_py", candidate)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def close(got, want, tol=1e-6):
    assert len(got) == len(want), (got, want)
    assert all(math.isclose(g, w, abs_tol=tol) for g, w in zip(got, want)), (got, want)


def main():
    m = load_module()

    # Walkthrough problem: max -x1 + x2 s.t. x1 + x2 <= 10, -x1 <= -5.
    lp = m.LinearProgram([-1, 1], [[1, 1], [-1, 0]], [10, -5])
    assert lp.k == 2 and lp.n == 2, (lp.k, lp.n)

    res = lp.solve()
    assert res.status == "optimal", res.status
    close(res.x, [5.0, 5.0])
    assert math.isclose(res.objective, 0.0, abs_tol=1e-9), res.objective
    assert res.iterations >= 1 and len(res.columns) == res.iterations

    exact = lp.solve(exact=True)
    assert exact.status == "optimal", exact.status
    assert exact.exact_x == ["5", "5"], exact.exact_x
    assert exact.columns == res.columns, (exact.columns, res.columns)

    oracle = lp.oracle()
    assert oracle["status"] == "optimal", oracle
    assert math.isclose(oracle["objective"], res.objective, abs_tol=1e-8)

    cert = lp.certificate(res.x, res.y)
    assert cert["valid"], cert

    bad = lp.certificate([10.0, 0.0], res.y)
    assert not bad["valid"], bad

    # Known hard family: solved in a single iteration.
    km = m.klee_minty(3)
    km_res = km.solve()
    assert km_res.status == "optimal" and km_res.iterations == 1, km_res
    close(km_res.x, [0.0, 0.0, 10000.0], tol=1e-3)

    # Random problems are reproducible and oracle-consistent.
    r1, r2 = m.random_lp(7), m.random_lp(7)
    s1, s2 = r1.solve(), r2.solve()
    assert s1.columns == s2.columns and s1.status == s2.status

    # Invalid input is rejected up front.
    try:
        m.LinearProgram([1], [[1, 2]], [3])
    except ValueError:
        pass
    else:
        sys.exit("dimension mismatch was not rejected")

    print("smoke test passed")


if __name__ == "__main__":
    main()
