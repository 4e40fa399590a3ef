#!/usr/bin/env python3
"""The stretch computation: homology of the twice-iterated classifying
space of the order-2 group at simplicial dimension 4, checked against the
expected pattern.  Takes a simplex budget as an optional argument."""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from gammaspaces import algebra as alg
from gammaspaces import classifying as cb
from gammaspaces import presheaves as ps


def main():
    budget = int(sys.argv[1]) if len(sys.argv) > 1 else cb.DEFAULT_BUDGET
    A = alg.cyclic(2)
    X = ps.build_gamma_set(A, 16)
    start = time.time()
    report = cb.delooping_report(X, 2, 4, 2, budget=budget)
    elapsed = time.time() - start
    print(f"levels: {report.levels}  ({elapsed:.1f}s)")
    for q, h in enumerate(report.homology):
        expected = report.expected[q]
        mark = "" if expected is None else ("  ok" if report.matches[q] else "  MISMATCH")
        print(f"H_{q} = {h}   expected {expected}{mark}")


if __name__ == "__main__":
    main()
