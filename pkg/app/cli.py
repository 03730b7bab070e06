# cli.py
"""Batch command line: map, check, enumerate, sequence, verify.

Run from the ``app`` directory, e.g. ``python cli.py map rho 3,2,1,3``.
Exit codes: 0 success (check: true), 1 check false or failed verification,
2 malformed input, domain error or unknown name.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from core.config import settings
from core.errors import SimsunError
from models.schemas import EnumerateResponse, PermutationClass, SequenceResponse, VerifyResponse
from services import enumeration, registry, verification
from utils.formats import format_pattern, format_permutation, parse_patterns

logger = logging.getLogger("simsun.cli")

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _input(args: argparse.Namespace) -> str:
    if args.input is not None:
        return args.input
    return sys.stdin.read().rstrip("\n")


def _map_command(args: argparse.Namespace) -> int:
    spec = registry.get_map(args.name)
    text = _input(args)
    output = spec(text)
    if args.json:
        _emit(json.dumps({"map": spec.name, "input": text, "output": output,
                          "source": spec.source, "target": spec.target}))
    else:
        _emit(output)
    return EXIT_OK


def _check_command(args: argparse.Namespace) -> int:
    spec = registry.get_predicate(args.name)
    text = _input(args)
    value, detail = spec(text)
    if args.json:
        _emit(json.dumps({"predicate": spec.name, "input": text, "value": value, "detail": detail}))
    else:
        line = "true" if value else "false"
        _emit(f"{line} {json.dumps(detail)}" if detail else line)
    return EXIT_OK if value else EXIT_FALSE


def _enumerate_command(args: argparse.Namespace) -> int:
    patterns = parse_patterns(args.avoid or "")
    stream = enumeration.enumerate_class(args.n, args.cls, patterns, args.inverse_avoid)
    items: List[str] = []
    count = 0
    for sigma in stream:
        if not args.count_only and (args.limit is None or count < args.limit):
            items.append(format_permutation(sigma))
        count += 1
    if args.json:
        _emit(EnumerateResponse(
            n=args.n,
            cls=PermutationClass(args.cls),
            avoid=[format_pattern(p) for p in patterns],
            inverse_avoid=args.inverse_avoid,
            count=count,
            items=items,
            truncated=not args.count_only and count > len(items),
        ).model_dump_json())
    elif args.count_only:
        _emit(str(count))
    else:
        sys.stdout.write("".join(item + "\n" for item in items))
    return EXIT_OK


def _sequence_command(args: argparse.Namespace) -> int:
    offset, values = registry.sequence_values(args.name, args.nmax, args.workers)
    if args.json:
        _emit(SequenceResponse(name=args.name, offset=offset, values=values).model_dump_json())
    else:
        sys.stdout.write("".join(f"{offset + i} {value}\n" for i, value in enumerate(values)))
    return EXIT_OK


def _verify_command(args: argparse.Namespace) -> int:
    reports = verification.run_suite(args.suite, args.nmax, args.workers)
    json_path, tsv_path = verification.write_reports(reports, args.out, stem=args.suite)
    passed = verification.suite_passed(reports)
    if args.json:
        _emit(VerifyResponse(suite=args.suite, n_max=args.nmax, passed=passed, reports=reports)
              .model_dump_json())
    else:
        for report in reports:
            status = "info" if report.exploratory else ("PASS" if report.passed else "FAIL")
            _emit(f"{status}\t{report.claim}\t{report.observed}\t{report.millis:.1f} ms")
        _emit(f"{'PASS' if passed else 'FAIL'}\t{args.suite}\t{json_path}\t{tsv_path}")
    return EXIT_OK if passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simsun",
        description="Simsun and double simsun permutations: maps, predicates and verification",
    )
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="Logging level on stderr")
    sub = parser.add_subparsers(dest="verb", required=True)

    map_parser = sub.add_parser("map", help="Apply a named map")
    map_parser.add_argument("name", help=", ".join(registry.map_names()))
    map_parser.add_argument("input", nargs="?", help="Input text; read from stdin when omitted")
    map_parser.add_argument("--json", action="store_true", help="Emit JSON")
    map_parser.set_defaults(func=_map_command)

    check_parser = sub.add_parser("check", help="Evaluate a predicate (exit 0 true, 1 false)")
    check_parser.add_argument("name", help=", ".join(registry.predicate_names()) + ", contains-<w>, avoids-<w>")
    check_parser.add_argument("input", nargs="?", help="Input text; read from stdin when omitted")
    check_parser.add_argument("--json", action="store_true", help="Emit JSON")
    check_parser.set_defaults(func=_check_command)

    enum_parser = sub.add_parser("enumerate", help="List a permutation class")
    enum_parser.add_argument("--n", type=int, required=True, help="Permutation length")
    enum_parser.add_argument("--class", dest="cls", default="all", choices=enumeration.CLASSES)
    enum_parser.add_argument("--avoid", default="", help="Comma-separated patterns, e.g. 123,231")
    enum_parser.add_argument("--inverse-avoid", action="store_true",
                             help="The inverse must avoid the patterns too")
    enum_parser.add_argument("--limit", type=int, default=None, help="Print at most this many")
    enum_parser.add_argument("--count-only", action="store_true", help="Print only the count")
    enum_parser.add_argument("--json", action="store_true", help="Emit JSON")
    enum_parser.set_defaults(func=_enumerate_command)

    seq_parser = sub.add_parser("sequence", help="Print exact sequence terms")
    seq_parser.add_argument("name", choices=registry.SEQUENCE_NAMES,
                            help="Reference sequence, or rs / drs to count RS_n / DRS_n by enumeration")
    seq_parser.add_argument("--nmax", type=int, default=10, help="Largest index")
    seq_parser.add_argument("--workers", type=int, default=settings.SIMSUN_WORKERS, help="Threads for counting drs")
    seq_parser.add_argument("--json", action="store_true", help="Emit JSON")
    seq_parser.set_defaults(func=_sequence_command)

    verify_parser = sub.add_parser("verify", help="Run table1, a claim id, or all")
    verify_parser.add_argument("suite", help="table1, all, or one of: " + ", ".join(sorted(verification.CLAIMS)))
    verify_parser.add_argument("--nmax", type=int, default=settings.SIMSUN_NMAX, help="Largest size")
    verify_parser.add_argument("--workers", type=int, default=settings.SIMSUN_WORKERS, help="Threads for counting drs")
    verify_parser.add_argument("--out", default=None, help="Report directory or file stem")
    verify_parser.add_argument("--json", action="store_true", help="Emit JSON")
    verify_parser.set_defaults(func=_verify_command)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=args.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except SimsunError as exc:
        if getattr(args, "json", False):
            sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
        else:
            sys.stderr.write(f"error: {exc.message}\n")
            if exc.detail:
                sys.stderr.write(json.dumps(exc.detail) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
