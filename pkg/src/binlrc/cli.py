"""Command-line entry point: ``binlrc <subcommand> ...``.

Reports are ``key=value`` lines on stdout. Exit status is 0 on success,
1 when a requested check fails or data cannot be recovered, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import warnings
from pathlib import Path

import numpy as np

from . import __version__
from ._fixtures import FIXTURES
from .bounds import ell_range, rate_bound, singleton_like
from .codec import RepairError, StripeWord, encode, erasure_decode, repair_one, syndrome, systematic_form
from .desired import DesiredMatrix, InvalidDesiredMatrix, cyclic_seed, fixture, search_desired, verify_desired
from .fileio import (
    FormatError,
    code_digest,
    format_code,
    format_matrix,
    read_code,
    read_matrix,
    read_shard,
    shard_name,
    write_shard,
)
from .lrc import construct, shorten_columns, shorten_groups
from .subspaces import full_spread, partial_spread, verify_family
from .verify import (
    DistanceTooExpensive,
    LocalityError,
    check_lemma6,
    exact_min_distance,
    optimality_report,
    verify_locality,
)


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _emit(lines) -> None:
    for line in lines:
        print(line)


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def fixture_checksums() -> list[str]:
    out = []
    for (b, s), rows in sorted(FIXTURES.items()):
        digest = hashlib.sha256("\n".join(rows).encode()).hexdigest()
        out.append(f"fixture.b{b}s{s}.sha256={digest}")
    return out


class _VersionAction(argparse.Action):
    def __init__(self, option_strings, dest, **kwargs):
        super().__init__(option_strings, dest, nargs=0, default=argparse.SUPPRESS, help="print version and fixture checksums")

    def __call__(self, parser, namespace, values, option_string=None):
        _emit([f"version={__version__}"] + fixture_checksums())
        parser.exit(0)


# ---------------------------------------------------------------- desired


def _add_desired_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", action="store_true", help="use the stored desired matrix")
    src.add_argument("--search", action="store_true", help="search from the cyclic seed (needs --seed)")
    src.add_argument("--desired", metavar="FILE", help="LRC1 desired matrix")
    p.add_argument("--seed", type=int, help="seed for --search")
    p.add_argument("--budget", type=int, default=200, help="attempts for --search (default 200)")


def _desired_from_args(args, b: int, s: int) -> DesiredMatrix:
    if args.fixture:
        return fixture(b, s)
    if args.search:
        if args.seed is None:
            raise UsageError("--search requires --seed")
        return search_desired(b, s, args.seed, args.budget)
    A = read_matrix(args.desired)
    return DesiredMatrix(s, 2 * b - s, A)


def cmd_desired(args) -> int:
    if args.verify:
        if args.s is None:
            raise UsageError("--verify requires --s")
        A = read_matrix(args.verify)
        if A.nrows <= args.s:
            raise UsageError("matrix must have more than s rows")
        report = verify_desired(A, args.s, A.nrows - args.s)
        _emit(report.lines())
        return 0 if report.passed else 1
    if args.b is None:
        raise UsageError("--b is required")
    if args.cyclic_seed:
        seed = cyclic_seed(args.b)
        _emit([f"min_poly={seed.min_poly}", f"generator={seed.generator}", f"length={seed.n}"])
        _write_text(args.output, format_matrix(seed.Aprime))
        return 0
    if args.s is None:
        raise UsageError("--s is required")
    if args.search:
        if args.seed is None:
            raise UsageError("--search requires --seed")
        A = search_desired(args.b, args.s, args.seed, args.budget)
    else:
        A = fixture(args.b, args.s)
    _write_text(args.output, format_matrix(A.A))
    return 0


# ---------------------------------------------------------------- construct / shorten


def _construct_from_args(args):
    A = _desired_from_args(args, args.b, args.s)
    return construct(args.b, args.s, args.m, args.spread, A, args.ell)


def cmd_construct(args) -> int:
    code = _construct_from_args(args)
    _write_text(args.output, format_code(code))
    if args.output not in (None, "-"):
        p = code.params
        _emit([f"n={code.n}", f"k_claimed={p.k}", f"ell={code.ell}", f"r={p.r}", f"rows={code.H.nrows}"])
    return 0


def cmd_shorten(args) -> int:
    if (args.tau is None) == (args.groups is None):
        raise UsageError("give exactly one of --tau and --groups")
    A = _desired_from_args(args, args.b, args.s)
    if args.tau is not None:
        code = shorten_columns(args.b, args.s, args.m, args.spread, A, args.tau, args.drop, args.ell)
    else:
        code = shorten_groups(construct(args.b, args.s, args.m, args.spread, A, args.ell), args.groups)
    _write_text(args.output, format_code(code))
    if args.output not in (None, "-"):
        _emit([f"n={code.n}", f"k_claimed={code.params.k}", f"k={code.k}", f"locality={code.locality}"])
    return 0


# ---------------------------------------------------------------- verify / bounds


def cmd_verify(args) -> int:
    code = read_code(args.code)
    wanted = [args.lemma6, args.locality, args.rank, args.exact_distance, args.bounds]
    if not any(wanted):
        args.lemma6 = args.locality = args.rank = args.bounds = True
    ok = True
    lemma6 = None
    if args.locality:
        try:
            r = verify_locality(code)
            _emit(["locality=pass", f"locality.r={r}"])
        except LocalityError as exc:
            _emit(["locality=fail", f"locality.detail={exc}"])
            ok = False
    if args.lemma6:
        lemma6 = check_lemma6(code)
        _emit(lemma6.lines())
        ok &= lemma6.passed
    if args.rank:
        p = code.params
        expected = p.ell + p.s + p.m
        full = code.rank == expected and code.k == p.k
        _emit([f"rank={code.rank}", f"rank_expected={expected}", f"k={code.k}", f"k_claimed={p.k}",
               f"rank_check={'pass' if full else 'fail'}"])
        ok &= full
    if args.exact_distance:
        try:
            d = exact_min_distance(code, args.max_k)
            _emit([f"exact_distance={d}"])
            if lemma6 is not None and lemma6.passed:
                agree = d >= 6
                _emit([f"exact_distance.agrees_with_certificate={str(agree).lower()}"])
                ok &= agree
        except DistanceTooExpensive as exc:
            _emit(["exact_distance=skipped", f"exact_distance.detail={exc}"])
    if args.bounds:
        report = optimality_report(code, lemma6)
        _emit(report.lines())
        ok &= report.k_optimal
    _emit([f"status={'pass' if ok else 'fail'}"])
    return 0 if ok else 1


def cmd_bounds(args) -> int:
    n, k, r = args.n, args.k, args.r
    out = [f"n={n}", f"r={r}"]
    if k is not None:
        out += [f"k={k}", f"singleton_like_d_max={singleton_like(n, k, r)}"]
    if n % (r + 1) == 0:
        rb = rate_bound(n, r)
        out += [f"rate_bound_k_max={rb.k_max}", f"min_branch={rb.branch}",
                f"preconditions_met={str(rb.preconditions_met).lower()}"]
        if k is not None:
            out.append(f"k_optimal={str(k == rb.k_max).lower()}")
    else:
        out.append("rate_bound_k_max=n/a")
    if args.b is not None:
        if args.s is None or args.m is None or args.spread is None:
            raise UsageError("--b needs --s, --m and --spread")
        lo, hi = ell_range(args.b, args.s, args.m, args.spread)
        out += [f"ell_lower_exclusive={lo}", f"ell_upper={hi}"]
    _emit(out)
    return 0


# ---------------------------------------------------------------- spread


def cmd_spread(args) -> int:
    family = full_spread(args.m, args.t) if args.kind == "full" else partial_spread(args.m, args.t)
    if args.kind == "partial" and family.kind != "partial":
        raise UsageError(f"t={args.t} divides m={args.m}; use --kind full")
    blocks = [format_matrix(W.basis) for W in family.members]
    text = f"SPREAD m={args.m} t={args.t} kind={family.kind} count={len(family)}\n" + "\n".join(blocks)
    _write_text(args.output, text)
    if args.check:
        report = verify_family(family)
        _emit(report.lines())
        return 0 if report.passed else 1
    return 0


# ---------------------------------------------------------------- codec


def _load_code(path: str):
    text = Path(path).read_text()
    return read_code(path), code_digest(text)


def cmd_encode(args) -> int:
    code, digest = _load_code(args.code)
    sc = systematic_form(code)
    data = Path(args.input).read_bytes()
    k = sc.k
    stripes = max(1, -(-len(data) // k))
    buf = np.zeros(stripes * k, dtype=np.uint8)
    buf[: len(data)] = np.frombuffer(data, dtype=np.uint8)
    # Stripe j carries data bytes j*k .. j*k + k - 1; all stripes are encoded at once.
    word = encode(sc, buf.reshape(stripes, k).T)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for pos in range(code.n):
        write_shard(out / shard_name(pos), digest, stripes, len(data), pos, code.n, word.symbols[pos].tobytes())
    _emit([f"shards={code.n}", f"stripes={stripes}", f"length={len(data)}", f"k={k}"])
    return 0


def _load_word(code, digest: str, directory: Path) -> tuple[StripeWord, dict]:
    meta = None
    payloads: dict[int, bytes] = {}
    for pos in range(code.n):
        got = read_shard(directory / shard_name(pos))
        if got is None:
            continue
        info, payload = got
        if info["digest"] != digest:
            raise FormatError(f"shard {pos} was written for a different code")
        if info["pos"] != pos:
            raise FormatError(f"shard file {pos} claims position {info['pos']}")
        meta = meta or info
        payloads[pos] = payload
    if meta is None:
        raise RepairError("no intact shards found")
    symbols = np.zeros((code.n, meta["stripes"]), dtype=np.uint8)
    erased = np.ones(code.n, dtype=bool)
    for pos, payload in payloads.items():
        symbols[pos] = np.frombuffer(payload, dtype=np.uint8)
        erased[pos] = False
    return StripeWord(symbols, erased), meta


def _parse_positions(text: str, n: int) -> list[int]:
    try:
        positions = sorted({int(p) for p in text.split(",") if p.strip()})
    except ValueError as exc:
        raise UsageError(f"bad position list {text!r}") from exc
    bad = [p for p in positions if not 0 <= p < n]
    if bad:
        raise UsageError(f"positions out of range [0, {n}): {bad}")
    return positions


def cmd_corrupt(args) -> int:
    code, _ = _load_code(args.code)
    directory = Path(args.dir)
    positions = _parse_positions(args.erase, code.n)
    for pos in positions:
        path = directory / shard_name(pos)
        if path.exists():
            with open(path, "r+b") as fh:
                fh.truncate(0)
    _emit([f"erased={','.join(map(str, positions))}"])
    return 0


def cmd_repair(args) -> int:
    code, digest = _load_code(args.code)
    if not 0 <= args.pos < code.n:
        raise UsageError(f"position out of range [0, {code.n})")
    directory = Path(args.dir)
    word, meta = _load_word(code, digest, directory)
    result = repair_one(code, word, args.pos)
    write_shard(directory / shard_name(args.pos), digest, meta["stripes"], meta["length"], args.pos, code.n,
                result.value.tobytes())
    _emit([f"repaired={args.pos}", f"read_count={len(result.read)}", f"read={','.join(map(str, result.read))}"])
    return 0


def cmd_decode(args) -> int:
    code, digest = _load_code(args.code)
    sc = systematic_form(code)
    word, meta = _load_word(code, digest, Path(args.dir))
    erased = word.erased_positions()
    fixed = erasure_decode(code, word)
    clean = not syndrome(code, fixed).any()
    data = fixed.symbols[list(sc.info_positions)].T.reshape(-1)[: meta["length"]]
    Path(args.out).write_bytes(data.tobytes())
    _emit([f"erased={len(erased)}", f"length={meta['length']}", f"syndrome_zero={str(clean).lower()}"])
    return 0 if clean else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="binlrc", description="Binary locally repairable codes with d >= 6.")
    parser.add_argument("--version", action=_VersionAction)
    parser.add_argument("--threads", type=int, default=1, help="worker threads (accepted; work runs single-threaded)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def code_shape(p, with_ell=True):
        p.add_argument("--b", type=int, required=True, help="locality exponent, r = 2^b")
        p.add_argument("--s", type=int, required=True, help="split 0 <= s < b")
        p.add_argument("--m", type=int, required=True, help="spread ambient dimension")
        p.add_argument("--spread", choices=("full", "partial"), required=True)
        if with_ell:
            p.add_argument("--ell", type=int, help="number of spread members to use (default: all)")

    p = sub.add_parser("construct", help="build a code file")
    code_shape(p)
    _add_desired_source(p)
    p.add_argument("-o", "--output", help="code file (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certify a code file")
    p.add_argument("code")
    p.add_argument("--lemma6", action="store_true", help="d >= 6 certificate")
    p.add_argument("--locality", action="store_true")
    p.add_argument("--rank", action="store_true")
    p.add_argument("--exact-distance", action="store_true", help="exhaustive distance (small k only)")
    p.add_argument("--max-k", type=int, default=24, help="dimension limit for --exact-distance")
    p.add_argument("--bounds", action="store_true", help="Singleton-like and rate bounds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="evaluate the bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--spread", choices=("full", "partial"))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("desired", help="verify, fetch or search desired matrices")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--verify", metavar="FILE")
    mode.add_argument("--search", action="store_true")
    mode.add_argument("--fixture", action="store_true")
    mode.add_argument("--cyclic-seed", action="store_true")
    p.add_argument("--b", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_desired)

    p = sub.add_parser("spread", help="list spread members")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kind", choices=("full", "partial"), required=True)
    p.add_argument("--check", action="store_true", help="verify pairwise trivial intersection")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_spread)

    p = sub.add_parser("shorten", help="shorten a constructed code")
    code_shape(p)
    _add_desired_source(p)
    p.add_argument("--tau", type=int, help="narrow the first TAU groups by one column")
    p.add_argument("--drop", type=int, default=0, help="preferred column of A to remove")
    p.add_argument("--groups", type=int, help="drop the first GROUPS repair groups")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_shorten)

    p = sub.add_parser("encode", help="split a file into shards")
    p.add_argument("--code", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True, help="shard directory")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="truncate shard files")
    p.add_argument("--code", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--erase", required=True, help="comma-separated positions")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("repair", help="rebuild one shard from its repair group")
    p.add_argument("--code", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--pos", type=int, required=True)
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("decode", help="reassemble the original file")
    p.add_argument("--code", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decode)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
        try:
            return args.func(args)
        except UsageError as exc:
            parser.print_usage(sys.stderr)
            print(f"error: {exc}", file=sys.stderr)
            return 2
        except (InvalidDesiredMatrix, RepairError, CheckFailed) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except (ValueError, KeyError, LookupError, FormatError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2


def main() -> None:
    sys.exit(run())
