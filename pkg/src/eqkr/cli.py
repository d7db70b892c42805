"""Command line front end.

    eqkr compute --n 2 --mode a_zero diagram.json
    eqkr compute --n 2 --mode specialized --set a0=1 '{"braid": "1 1 1", "strands": 2}'
    eqkr check dsd --n 3

Exit codes: 0 success, 1 failed check, 2 unreadable input, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .link import DiagramError, parse_input
from .mf import InvariantError

EXIT_FAIL, EXIT_PARSE, EXIT_INVARIANT = 1, 2, 3


def _read_input(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.exists(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"invalid JSON: {exc}") from exc


def _parse_sets(items, n):
    values = {}
    for item in items or []:
        key, _, val = item.partition("=")
        key = key.strip().lower()
        if not key.startswith("a") or not val:
            raise DiagramError(f"bad --set {item!r}; expected aJ=VALUE")
        try:
            j = int(key[1:])
            values[j] = Fraction(val.strip())
        except ValueError as exc:
            raise DiagramError(f"bad --set {item!r}") from exc
        if not 0 <= j <= n - 2:
            raise DiagramError(f"a{j} does not exist for n={n}")
    return values


def _emit(text: str, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_compute(args) -> int:
    from .homology import compute, euler_characteristic, format_laurent
    from .link import assemble
    try:
        obj = _read_input(args.input)
        if "n" in obj and args.n is None:
            args.n = int(obj["n"])
        n = args.n if args.n is not None else 2
        if n < 2:
            raise DiagramError("n must be at least 2")
        D = parse_input(obj)
        values = _parse_sets(args.set, n)
        keep = int(args.keep.lstrip("a")) if args.keep else 0
    except (DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.mode == "euler":
            C = assemble(D, n)
            e = euler_characteristic(C, args.normalize)
            out = {"mode": "euler", "n": n, "euler": format_laurent(e), "components": C.components}
            text = json.dumps(out, sort_keys=True) if args.format == "json" else out["euler"]
        else:
            rep = compute(D, n, args.mode, keep=keep, values=values, normalize=args.normalize)
            text = rep.to_json() if args.format == "json" else rep.to_text()
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(text, args.output)
    return 0


def _check_chi(n, rng):
    from .graphs import chi_maps
    from .mf import MFMorphism, is_null_homotopic, mat_mul
    from .ring import Poly
    items = []
    pair = chi_maps(n)
    x = Poly.x(1, n) - Poly.x(3, n)
    for name, first, second in (("chi1 chi0", pair.chi0, pair.chi1), ("chi0 chi1", pair.chi1, pair.chi0)):
        ok = True
        for A, B in ((second.f0, first.f0), (second.f1, first.f1)):
            P = mat_mul(A, B, n)
            ok = ok and all(P[i][j] == (x if i == j else Poly.zero(n))
                            for i in range(len(P)) for j in range(len(P[i])))
        items.append((f"{name} = (x1 - x3) I", ok))
    for _ in range(3):
        mu, lam = rng.randint(-3, 3), rng.randint(-3, 3)
        other = chi_maps(n, mu, lam)
        ok = True
        for a, b in ((pair.chi0, other.chi0), (pair.chi1, other.chi1)):
            diff = MFMorphism(a.source, a.target,
                              [[p - q for p, q in zip(r, s)] for r, s in zip(a.f0, b.f0)],
                              [[p - q for p, q in zip(r, s)] for r, s in zip(a.f1, b.f1)], 1)
            ok = ok and is_null_homotopic(diff)
        items.append((f"mu={mu}, lambda={lam} homotopic to mu=1, lambda=0", ok))
    return items


def _check_dsd(n, rng):
    from .graphs import dsd_checks
    return [(r.summary(), r.passed) for r in dsd_checks(n)]


def _check_reidemeister(n, rng, mode="a_zero"):
    from .fixtures import REIDEMEISTER_PAIRS, diagram
    from .homology import invariance_check
    items = []
    for move, a, b in REIDEMEISTER_PAIRS:
        r = invariance_check(diagram(a), diagram(b), n, mode)
        items.append((f"{move}: {a} vs {b} ({mode})" + ("" if r else "\n" + r.diff()), r.ok))
    return items


def _check_gornik(n, rng):
    from .fixtures import GORNIK_LINKS, diagram
    from .homology import compute
    items = []
    for name, m in GORNIK_LINKS.items():
        D = diagram(name)
        pid = compute(D, n, "pid")
        items.append((f"{name}: free rank {pid.total_rank()} = {n}^{m}", pid.total_rank() == n ** m))
        spec = compute(D, n, "specialized", values={0: 1})
        items.append((f"{name}: dimension at a0=1 is {spec.total_rank()}", spec.total_rank() == n ** m))
    return items


CHECKS = {"chi": _check_chi, "dsd": _check_dsd, "reidemeister": _check_reidemeister,
          "gornik": _check_gornik}


def cmd_check(args) -> int:
    n = args.n if args.n is not None else 2
    rng = random.Random(args.seed)
    try:
        if args.suite == "reidemeister":
            items = _check_reidemeister(n, rng, args.mode or "a_zero")
        else:
            items = CHECKS[args.suite](n, rng)
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    failed = 0
    lines = []
    for label, ok in items:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {label}")
        failed += not ok
    lines.append(f"{len(items) - failed}/{len(items)} passed")
    _emit("\n".join(lines), args.output)
    return EXIT_FAIL if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eqkr", description="Equivariant sl(n) link homology.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="homology of a link diagram")
    c.add_argument("input", help="PD or braid JSON: a file path, inline JSON, or - for stdin")
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--mode", choices=["a_zero", "pid", "specialized", "euler"], default="a_zero")
    c.add_argument("--set", action="append", metavar="aJ=VALUE",
                   help="coefficient value for specialized mode (repeatable)")
    c.add_argument("--keep", default=None, help="coefficient kept in pid mode, e.g. a0 (default)")
    c.add_argument("--format", choices=["json", "table"], default="json")
    c.add_argument("--output", default=None)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--normalize", action="store_true",
                   help="symmetric q-gradings (unknot in degrees 1-n..n-1)")
    c.set_defaults(func=cmd_compute)

    k = sub.add_parser("check", help="run a verification suite")
    k.add_argument("suite", choices=sorted(CHECKS))
    k.add_argument("--n", type=int, default=None)
    k.add_argument("--mode", choices=["a_zero", "pid"], default=None)
    k.add_argument("--output", default=None)
    k.add_argument("--seed", type=int, default=0)
    k.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
