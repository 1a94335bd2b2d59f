#!/usr/bin/env python3
"""Report where the X5 and N5 readings of a formula disagree.

For the formula given on the command line (default: the implication of two
atoms), evaluates both modes at every interpretation over the formula's
atoms and prints the assignments where the five-valued results differ,
followed by the verdicts of the two equivalence relations between the
formula and its own negation normal forms.
"""

import argparse
import sys

from eqlx import (
    EvalMode,
    atoms,
    canonical_print,
    enumerate_x5,
    parse_formula,
    subst_equiv,
    to_nnf,
    value5,
    weak_equiv,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("expr", nargs="?", default="p -> q")
    args = ap.parse_args()

    f = parse_formula(args.expr)
    sig = sorted(atoms(f))
    print(f"formula: {canonical_print(f)}")

    differing = 0
    for m in enumerate_x5(sig):
        x5_value = int(value5(m, f, EvalMode.X5))
        n5_value = int(value5(m, f, EvalMode.N5))
        if x5_value != n5_value:
            assignment = ", ".join(f"{a}={m.value_of(a)}" for a in sig)
            print(f"  {assignment}: x5={x5_value}  n5={n5_value}")
            differing += 1
    total = 5 ** len(sig)
    print(f"{differing} of {total} interpretations differ")

    for mode, label in ((EvalMode.X5, "x5"), (EvalMode.N5, "n5")):
        normal = to_nnf(f, mode)
        print(f"{label} normal form: {canonical_print(normal)}")
    x5_normal = to_nnf(f, EvalMode.X5)
    print("weakly equivalent to its x5 normal form:",
          weak_equiv(f, x5_normal).equivalent)
    print("substitution-equivalent to its x5 normal form:",
          subst_equiv(f, x5_normal).equivalent)
    return 0


if __name__ == "__main__":
    sys.exit(main())
