"""Survey the rank-one Peterson basis: expansions of Z_alpha powers.

Prints the Peterson-basis coefficients of Z_alpha^k for k up to --kmax on a
chosen exact backend, together with the centralizer verdict for each basis
element in the window.  A quick way to eyeball how fast the support of the
powers grows.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fada.cli import JobConfig, make_algebra  # noqa: E402
from fada.peterson import PetersonContext, centralizer_check  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fgl", default="connective",
                    choices=["additive", "multiplicative", "connective"])
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--window", type=int, default=8)
    args = ap.parse_args()

    t0 = time.time()
    algebra = make_algebra(JobConfig("A1", args.fgl, "small", args.window, 8))
    group = algebra.torus.group
    ctx = PetersonContext(algebra, group.window(args.window))

    print("backend %s, window %d, %d minimal representatives"
          % (algebra.torus.ring.backend, args.window, len(ctx.minimal)))
    for u in ctx.minimal:
        ok = centralizer_check(algebra, ctx.element(u))
        print("  P_%-12s central=%s" % (str(ctx.window.word(u)), ok))

    z = algebra.z_alpha((1,))
    power = algebra.one()
    for k in range(1, args.kmax + 1):
        power = power * z
        row = ctx.d_expansion(power)
        parts = []
        for v in sorted(row, key=group.length):
            parts.append("%s: %r" % (str(ctx.window.word(v)),
                                     row[v].simplify()))
        print("Z^%d = %s" % (k, "; ".join(parts)))
    print("done in %.2fs" % (time.time() - t0))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
