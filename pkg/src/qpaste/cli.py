"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 precondition or
diagnostic failure (including usage errors), 3 I/O or parse error.
Reports are byte-deterministic for fixed inputs; '-' means standard
input/output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import files
from .catalog import builtin, hamming_class, perfect
from .kl import DEFAULT_QUBIT_CAP, CapExceededError, kl_check
from .pasting import PasteError, PasteVerificationError, augment, paste
from .pauli import PauliParseError, format_pauli
from .stabilizer import InvalidCodeError, syndrome, validate
from .verification import (
    best_k,
    distance,
    enumerate_errors,
    hamming_bound,
    is_perfect,
    verify_distance3,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PRECONDITION = 2
EXIT_IO = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def cmd_verify(args: argparse.Namespace) -> int:
    padded = files.loads(_read_text(args.file))
    if padded.pad_count:
        _fail(
            f"file contains {padded.pad_count} placeholder identity row(s); "
            "placeholders are only valid as paste input (add them with "
            "`paste --augment` instead)"
        )
        print("result: fail")
        return EXIT_VERIFY
    code = padded.base
    k = code.n - code.a
    print(f"n={code.n} a={code.a} k={k}")
    report = validate(code)
    if not report.ok:
        print("validate: FAIL")
        for violation in report.violations:
            print(f"  violation {violation}")
        print("result: fail")
        return EXIT_VERIFY
    print("validate: pass")
    ok = True
    d3 = verify_distance3(code, allow_degenerate=True)
    if d3.ok:
        kind = (
            f"degenerate, {len(d3.degenerate_pairs)} excused pair(s)"
            if d3.degenerate
            else "nondegenerate"
        )
        print(
            f"distance3: pass ({d3.distinct_count}/{d3.error_count} distinct "
            f"syndromes, {kind})"
        )
    else:
        ok = False
        e, f = d3.witness
        print(f"distance3: FAIL (collision between {e} and {f})")
    status = hamming_bound(code.n, k)
    tag = "perfect" if is_perfect(code.n, k) else "not perfect"
    bk = best_k(code.n)
    print(f"bound: {status} (best_k={bk}, {tag})")
    if args.distance is not None:
        found = distance(code, args.distance)
        shown = found if found is not None else "none"
        print(f"distance: {shown} (searched weight <= {args.distance})")
    if args.kl:
        if code.n > DEFAULT_QUBIT_CAP:
            _fail(
                f"kl check refused: n={code.n} exceeds the dense-statevector "
                f"cap ({DEFAULT_QUBIT_CAP} qubits)"
            )
            return EXIT_PRECONDITION
        kl = kl_check(code, enumerate_errors(code.n, 1))
        verdict = "pass" if kl.passed and kl.full_rank else "FAIL"
        size = kl.c_matrix.shape[0]
        print(
            f"kl: {verdict} (C rank {kl.rank}/{size}, max deviation "
            f"{kl.max_deviation:.2e})"
        )
        if verdict == "FAIL":
            ok = False
    print(f"result: {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_paste(args: argparse.Namespace) -> int:
    larger = files.loads(_read_text(args.larger))
    smaller = files.loads(_read_text(args.smaller))
    if args.augment:
        larger = augment(larger, args.augment, "append")
    result = paste(larger, smaller)
    _write_text(args.out, files.dumps(result))
    k = result.n - result.a
    print(f"pasted: n={result.n} a={result.a} k={k}", file=sys.stderr)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    _write_text(args.out, files.dumps(builtin(args.name)))
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    if args.kind == "hamming":
        code = hamming_class(args.m)
    else:
        code = perfect(args.j, j_max=args.max_j)
    _write_text(args.out, files.dumps(code))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    n = args.n
    if args.k is None:
        k = best_k(n)
        if k is None:
            print(f"best k = none (no k satisfies the bound for n={n})")
        else:
            tag = "perfect" if is_perfect(n, k) else "not perfect"
            print(f"best k = {k} ({tag})")
        return EXIT_OK
    status = hamming_bound(n, args.k)
    tag = "perfect" if is_perfect(n, args.k) else "not perfect"
    lhs = (3 * n + 1) << args.k
    rhs = 1 << n
    print(f"{status} ({tag}): (3*{n}+1)*2^{args.k} = {lhs} vs 2^{n} = {rhs}")
    return EXIT_OK


def cmd_syndromes(args: argparse.Namespace) -> int:
    padded = files.loads(_read_text(args.file))
    if padded.pad_count:
        _fail(
            "placeholder identity rows present; the syndrome table needs a "
            "plain code"
        )
        return EXIT_PRECONDITION
    code = padded.base
    for e in enumerate_errors(code.n, 1).members:
        print(f"{format_pauli(e)} {syndrome(code, e)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpaste",
        description="Verify, paste and generate one-error stabilizer codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="validate a code and check its syndromes")
    p_verify.add_argument("file", help="stabilizer file, or - for stdin")
    p_verify.add_argument(
        "--distance",
        nargs="?",
        const=3,
        default=None,
        type=int,
        metavar="W",
        help="also brute-force the distance up to weight W (default 3)",
    )
    p_verify.add_argument(
        "--kl",
        action="store_true",
        help="also run the dense-statevector check (small n only)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_paste = sub.add_parser("paste", help="paste a smaller code onto a larger one")
    p_paste.add_argument("larger")
    p_paste.add_argument("smaller")
    p_paste.add_argument(
        "--augment",
        type=int,
        default=0,
        metavar="COUNT",
        help="append COUNT placeholder rows to the larger code first",
    )
    p_paste.add_argument("--out", default="-", help="output file (default stdout)")
    p_paste.set_defaults(func=cmd_paste)

    p_catalog = sub.add_parser("catalog", help="emit a built-in code")
    p_catalog.add_argument("name", choices=["code5", "code8", "code13"])
    p_catalog.add_argument("--out", default="-")
    p_catalog.set_defaults(func=cmd_catalog)

    p_family = sub.add_parser("family", help="emit a constructed family member")
    fam = p_family.add_subparsers(dest="kind", required=True)
    p_hamming = fam.add_parser("hamming", help="the n=2^m family (m >= 3)")
    p_hamming.add_argument("m", type=int)
    p_hamming.add_argument("--out", default="-")
    p_hamming.set_defaults(func=cmd_family)
    p_perfect = fam.add_parser("perfect", help="the j-th perfect code")
    p_perfect.add_argument("j", type=int)
    p_perfect.add_argument(
        "--max-j",
        dest="max_j",
        type=int,
        default=4,
        help="recursion bound for large codes (default 4, n=341)",
    )
    p_perfect.add_argument("--out", default="-")
    p_perfect.set_defaults(func=cmd_family)

    p_bound = sub.add_parser("bound", help="one-error bound arithmetic")
    p_bound.add_argument("n", type=int)
    p_bound.add_argument("k", nargs="?", type=int, default=None)
    p_bound.set_defaults(func=cmd_bound)

    p_syndromes = sub.add_parser(
        "syndromes", help="print the weight-<=1 syndrome table"
    )
    p_syndromes.add_argument("file")
    p_syndromes.set_defaults(func=cmd_syndromes)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (files.StabilizerFileError, PauliParseError) as exc:
        _fail(str(exc))
        return EXIT_IO
    except OSError as exc:
        _fail(str(exc))
        return EXIT_IO
    except PasteError as exc:
        _fail(str(exc))
        for check in exc.diagnostics.checks:
            print(f"check {check}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PasteVerificationError as exc:
        _fail(f"internal: {exc}")
        return EXIT_PRECONDITION
    except (CapExceededError, InvalidCodeError, ValueError) as exc:
        _fail(str(exc))
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
