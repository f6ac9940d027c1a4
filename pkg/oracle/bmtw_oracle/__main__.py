"""Write fixtures.json (all fixtures, sorted by name)."""

import argparse

from . import generate_all


def main(argv=None):
    ap = argparse.ArgumentParser(prog="bmtw-oracle")
    ap.add_argument("--out", default="fixtures.json", help="output path")
    args = ap.parse_args(argv)
    fs = generate_all()
    fs.write(args.out)
    print(f"wrote {len(fs.names())} fixtures to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
