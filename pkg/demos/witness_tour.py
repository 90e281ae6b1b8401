"""Witness reports for the named reference states.

Prints the witness value, the rescaled strength w, the exact negativity and
concurrence, and the two-sided bounds for a handful of states whose answers
are known in closed form.
"""

from uwitness import named_state, witness_report

CASES = [
    ("singlet", "maximally entangled: everything saturates at 1"),
    ("phi_plus", "same entanglement, different Bell state"),
    ("werner:1.0", "pure singlet again, as the p=1 mixture"),
    ("werner:0.5", "detected: w = 27/256, N = C = 1/4 (saturates the lower bound)"),
    ("werner:0.3334", "a hair past the separability boundary at p = 1/3"),
    ("werner:0.3333", "a hair before the boundary: witness stays nonnegative"),
    ("product:0.6", "separable product state: nothing to detect"),
    ("pure_schmidt:0.9", "pure non-maximal: C saturates the upper bound w**(1/4)"),
]


def main():
    header = f"{'state':>16}  {'witness':>12}  {'w':>10}  {'N':>8}  {'C':>8}  {'f(w)':>8}  {'w^1/4':>8}  detected"
    print(header)
    print("-" * len(header))
    for spec, note in CASES:
        rep = witness_report(named_state(spec))
        print(
            f"{spec:>16}  {rep.witness:>12.3e}  {rep.w:>10.3e}  "
            f"{rep.negativity:>8.4f}  {rep.concurrence:>8.4f}  "
            f"{rep.lower_bound:>8.4f}  {rep.upper_bound:>8.4f}  {str(rep.entangled):>8}"
        )
        print(f"{'':>16}  ({note})")


if __name__ == "__main__":
    main()
