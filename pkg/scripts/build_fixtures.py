#!/usr/bin/env python3
"""Regenerate the JSON fixture files under fixtures/."""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from gammaspaces import algebra as alg

FIXTURES = {
    "trivial.json": alg.trivial_monoid(),
    "z2.json": alg.cyclic(2),
    "z3.json": alg.cyclic(3),
    "z4.json": alg.cyclic(4),
    "klein.json": alg.klein_four(),
    "max2.json": alg.max_monoid(2),
    "z2_trivial_on_z2.json": alg.trivial_action(alg.cyclic(2), alg.cyclic_group(2)),
    "z2_inversion_on_z3.json": alg.inversion_action(alg.cyclic(3)),
    "z2_swap_on_klein.json": alg.swap_action(),
}


def main():
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "fixtures"
    out_dir.mkdir(exist_ok=True)
    for name, algebra in FIXTURES.items():
        path = out_dir / name
        path.write_text(json.dumps(algebra.to_json(), sort_keys=True, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
