"""Regenerate the frozen CLI outputs under tests/data.

Run without flags to compare current output against the stored files; run
with --write to overwrite them.  Every golden is the byte-exact stdout of
one CLI invocation, so the comparison doubles as a determinism check.
"""

import argparse
import io
import sys
from contextlib import redirect_stdout
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fada.cli import main  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

GOLDENS = [
    ("peterson_u0_con.json",
     ["peterson", "--root", "A1", "--fgl", "connective", "--window", "3",
      "--u", "0"]),
    ("expand_w2_con.json",
     ["expand", "--root", "A1", "--fgl", "connective", "--window", "2"]),
    ("a1hat_k2_mul.json",
     ["a1hat", "--kmax", "2", "--c", "1"]),
]


def render(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = main(argv)
    if rc != 0:
        raise SystemExit("golden command %r exited %d" % (argv, rc))
    return buf.getvalue()


def run(write: bool) -> int:
    DATA.mkdir(parents=True, exist_ok=True)
    stale = 0
    for name, argv in GOLDENS:
        out = render(argv)
        path = DATA / name
        if write:
            path.write_text(out)
            print("wrote %s (%d bytes)" % (name, len(out)))
            continue
        if not path.exists():
            print("MISSING %s" % name)
            stale += 1
        elif path.read_text() != out:
            print("STALE %s" % name)
            stale += 1
        else:
            print("ok %s" % name)
    return 1 if stale else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--write", action="store_true",
                    help="overwrite the stored goldens")
    args = ap.parse_args()
    raise SystemExit(run(args.write))
