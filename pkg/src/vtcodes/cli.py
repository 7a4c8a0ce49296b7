"""Command-line front end: ``vtcodes <subcommand> [flags]``.

Exit codes: 0 success, 1 a verification mismatch, 2 a usage error.
Data goes to stdout, diagnostics to stderr. Words are always ASCII
'0'/'1' strings with x_1 first.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import channel, search, shiftreg, verify, vt, words
from .errors import CapacityError, DomainError
from .words import Word

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _bool(v: bool) -> str:
    return "true" if v else "false"


def cmd_table(args) -> int:
    if args.max_n < 1 or args.max_n > 62:
        raise DomainError("--max-n must be in 1..62")
    if args.check and args.max_n > 16:
        raise DomainError("--check enumerates codes and is limited to --max-n 16")
    ok = True
    if not args.porcelain:
        print("n \\ a | " + " ".join(str(a) for a in range(args.max_n + 1)))
    for n in range(1, args.max_n + 1):
        row = [vt.vt_size_formula(n, a) for a in range(n + 1)]
        if args.check:
            s = vt.checksums_array(n) % (n + 1)
            counted = [int((s == a).sum()) for a in range(n + 1)]
            if counted != row:
                ok = False
                print(f"mismatch at n={n}: formula {row} enumeration {counted}", file=sys.stderr)
        if args.porcelain:
            for a, size in enumerate(row):
                print(f"n={n} a={a} size={size}")
        else:
            print(f"{n} | " + " ".join(map(str, row)))
    if args.check:
        print(f"check={'PASS' if ok else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_enum(args) -> int:
    code = vt.vt_code((args.n, args.a))
    text = vt.write_code_table(code, args.out)
    if args.out is None:
        sys.stdout.write(text)
    else:
        print(f"wrote {len(code)} words to {args.out}")
    return EXIT_OK


def cmd_encode(args) -> int:
    x = vt.linear_encode(args.word)
    p = vt.linear_params(len(args.word))
    if args.porcelain:
        print(f"k={p.k} n={p.n} c={p.c} word={x}")
    else:
        print(x)
    return EXIT_OK


def cmd_decode(args) -> int:
    out = vt.decode_single_deletion(Word.from_str(args.word), (args.n, args.a))
    if args.porcelain:
        print(f"ok={_bool(out.ok)} word={out.recovered or '-'} failure={out.failure or '-'}")
    else:
        print(out)
    return EXIT_OK if out.ok else EXIT_MISMATCH


def cmd_search(args) -> int:
    res = search.max_single_deletion_code(args.n, node_limit=args.node_limit)
    if args.out:
        vt.write_code_table(res.witness, args.out)
    print(res.summary())
    if not args.porcelain and not args.out:
        sys.stdout.write(vt.write_code_table(res.witness))
    return EXIT_OK


def cmd_perfect(args) -> int:
    if args.file:
        code = vt.read_code_table(Path(args.file))
    elif args.word:
        code = vt.Code.from_words(args.word)
    else:
        if args.n is None:
            raise DomainError("perfect needs --n/--a, --word or --file")
        code = vt.vt_code((args.n, args.a))
    rep = search.perfectness(code)
    correcting = search.is_single_deletion_correcting(code)
    print(
        f"n={code.n} size={len(code)} correcting={_bool(correcting)} covered={rep.covered} "
        f"of={1 << (code.n - 1)} overlaps={len(rep.overlaps)} perfect={_bool(rep.is_perfect)}"
    )
    if not args.porcelain:
        for y, owners in rep.overlaps[:10]:
            print(f"  {y} covered by {' '.join(map(str, owners))}")
    return EXIT_OK


def cmd_shiftreg(args) -> int:
    if not 1 <= args.max_n <= 16:
        raise DomainError("--max-n must be in 1..16")
    ok = True
    kinds = list(shiftreg.RegisterKind)
    if not args.porcelain:
        print("n | " + " ".join(k.value for k in kinds) + " | match")
    for n in range(1, args.max_n + 1):
        counts = [shiftreg.cycle_census(n, k).cycle_count for k in kinds]
        forms = [shiftreg.formula(n, k) for k in kinds]
        row_ok = counts == forms
        if n in verify.TABLE2:
            row_ok = row_ok and tuple(counts) == verify.TABLE2[n]
        ok = ok and row_ok
        if args.porcelain:
            for k, c, f in zip(kinds, counts, forms):
                print(f"kind={k.value} n={n} cycles={c} formula={f} match={_bool(c == f)}")
        else:
            print(f"{n} | " + " ".join(map(str, counts)) + f" | {'ok' if row_ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_necklace(args) -> int:
    rot, prim = shiftreg.necklace_counts(args.m)
    z = shiftreg.z_formula(args.m)
    line = f"m={args.m} rotation={rot} primitive_complement={prim} Z={z}"
    ok = rot == z
    if args.m >= 2:
        v1 = vt.vt1_size(args.m - 1)
        line += f" VT1={v1}"
        ok = ok and prim == v1
    print(line + f" match={_bool(ok)}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_descend(args) -> int:
    u = Word.from_str(args.word)
    ds = sorted(words.descendants(u, args.e), key=lambda w: (w.n, w.value))
    print(f"word={u} e={args.e} size={len(ds)} runs={words.runs(u)}")
    if not args.porcelain:
        for w in ds:
            print(str(w) or "(empty)")
    return EXIT_OK


def cmd_dist(args) -> int:
    if len(args.word) != 2:
        raise DomainError("dist needs exactly two --word flags")
    u, v = (Word.from_str(w) for w in args.word)
    print(f"dd={words.deletion_distance(u, v)}" if args.porcelain else words.deletion_distance(u, v))
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg = channel.ChannelConfig(
        k=args.k, blocks=args.blocks, seed=args.seed, mode=args.mode, p=args.p
    )
    summary = channel.run_simulation(cfg, keep_records=bool(args.log))
    if args.log:
        with open(args.log, "w") as fh:
            for rec in summary.records:
                fh.write(rec.line() + "\n")
    print(summary.line())
    for rec in summary.failures[:10]:
        print(rec.line(), file=sys.stderr)
    return EXIT_OK if summary.failed == 0 else EXIT_MISMATCH


def cmd_verify(args) -> int:
    ok = True
    for res in verify.run_suite(args.suite, stop_on_failure=True):
        print(res.line(), flush=True)
        if not res.ok:
            ok = False
            print(f"counterexample: {res.detail}")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vtcodes", description="Single-deletion-correcting code toolkit."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--porcelain", action="store_true", help="key=value output")
        p.set_defaults(fn=fn)
        return p

    p = add("table", cmd_table, "grid of VT code sizes")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare with enumeration")

    p = add("enum", cmd_enum, "list the words of VT_a(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--out")

    p = add("encode", cmd_encode, "systematic linear VT encoding of an info word")
    p.add_argument("--word", required=True)

    p = add("decode", cmd_decode, "correct one deletion in a received word")
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=0)

    p = add("search", cmd_search, "exact largest single-deletion code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--out")

    p = add("perfect", cmd_perfect, "coverage census of a code")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--word", action="append")
    p.add_argument("--file")

    p = add("shiftreg", cmd_shiftreg, "register cycle counts vs closed forms")
    p.add_argument("--max-n", type=int, required=True)

    p = add("necklace", cmd_necklace, "brute-force necklace counts")
    p.add_argument("--m", type=int, required=True)

    p = add("descend", cmd_descend, "descendant set D_e(u)")
    p.add_argument("--word", required=True)
    p.add_argument("--e", type=int, default=1)

    p = add("dist", cmd_dist, "deletion distance of two words")
    p.add_argument("--word", action="append", required=True)

    p = add("simulate", cmd_simulate, "deletion channel simulation")
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--blocks", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=[channel.ALWAYS_ONE, channel.PER_BIT], default=channel.ALWAYS_ONE)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--log")

    p = add("verify", cmd_verify, "run invariant suites")
    p.add_argument("--suite", choices=sorted(verify.SUITES), default="all")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, CapacityError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
