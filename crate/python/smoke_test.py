#!/usr/bin/env python3
"""Smoke test for the qkit Python bindings.

Build and stage the extension module first:

    cargo build -p qkit-py --features python
    cp target/debug/libqkit.so python/qkit.so

then run `python3 python/smoke_test.py` from the repository root.
"""
import math
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent
sys.path.insert(0, str(HERE))

import qkit  # noqa: E402

PHI = (1 + math.sqrt(5)) / 2


def main() -> None:
    fib = qkit.Category(str(ROOT / "data/fib.json"))
    assert fib.labels == ["1", "tau"], fib.labels
    assert abs(fib.dims[1] - PHI) < 1e-12

    v = fib.validate(1e-10)
    assert v["pass"], v

    alg = fib.inner_hom_qsystem("tau")
    q = fib.qsystem_check(alg)
    assert q["is_qsystem"] and q["normalized"] and q["connected"], q
    assert abs(q["d_A"] - PHI**2) < 1e-9, q["d_A"]

    rt = fib.roundtrip(alg, seed=0)
    assert rt["pass"] and rt["failed_stage"] is None, rt
    assert rt["mult_preserved"]

    # sector dimensions of the W*-object: dim C(1, A) = dim C(tau, A) = 1
    assert fib.sector_dims(alg) == [1, 1]

    z2 = qkit.Category(str(ROOT / "data/z2.json"))
    galg = z2.load_algebra(str(ROOT / "data/algebras/z2_group.json"))
    q = z2.qsystem_check(galg)
    assert q["is_qsystem"] and abs(q["d_A"] - 2) < 1e-9, q

    rows = z2.delta_table(galg)
    nonzero = {(a, b, c): v for (a, b, c, *_rest, v) in rows}
    assert abs(abs(nonzero[("g", "g", "1")]) - math.sqrt(0.5)) < 1e-12

    # an unnormalized algebra is detected and repaired
    raw = fib.load_algebra(str(ROOT / "data/algebras/fib_tau_unnormalized.json"))
    q = fib.qsystem_check(raw)
    assert q["is_qsystem"] and not q["normalized"], q
    fixed = fib.normalize(raw)
    assert fib.qsystem_check(fixed)["normalized"]

    print("qkit python bindings: all smoke checks passed")


if __name__ == "__main__":
    main()
