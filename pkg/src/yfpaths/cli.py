"""Command-line surface: point queries, verification sweeps, DOT export.

Grammar::

    yf down X Y [--verify] [--json]
    yf traj X Y DELTA [--verify] [--json]
    yf spaths X Y S [--verify] [--json]
    yf f X Y Z [--mode rec|explicit|base] [--verify] [--json]
    yf xi X Y S I [--verify] [--json]
    yf level N [--json]
    yf dot N [--json]
    yf verify [--max-rank N] [--max-S K] [--json]

Words are written as '1'/'2' strings with "e" for the empty word;
trajectories as comma-separated integers.  Exit codes: 0 success,
1 usage error, 2 computation disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import counts, invariants, oracle
from .functions import InconsistencyError, f_base, f_explicit, f_rec
from .trajectories import enumerate_trajectories, parse_trajectory
from .words import EPSILON, Word, level, parse_word, predecessors, successors

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2

DEFAULT_ORACLE_RANK_CAP = 12


class CliError(Exception):
    """Bad arguments or violated preconditions; maps to exit code 1."""


@dataclass
class QueryResult:
    command: str
    args: list[str]
    value: str
    oracle: str | None = None
    agree: bool | None = None
    millis: float = 0.0

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "args": self.args,
                "value": self.value,
                "oracle": self.oracle,
                "agree": self.agree,
                "millis": self.millis,
            }
        )


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for
    # computation disagreement, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _word(text: str) -> Word:
    try:
        return parse_word(text)
    except ValueError as exc:
        raise CliError(str(exc))


def _check_oracle_cap(y: Word, cap: int) -> None:
    if y.rank > cap:
        raise CliError(
            f"oracle verification capped at rank {cap} (upper word has rank "
            f"{y.rank}); raise --verify-cap to override"
        )


@dataclass
class VerifySection:
    name: str
    checks: int
    failures: list[str]


@dataclass
class VerifyReport:
    sections: list[VerifySection]

    @property
    def checks(self) -> int:
        return sum(s.checks for s in self.sections)

    @property
    def failures(self) -> list[str]:
        return [f"{s.name}: {msg}" for s in self.sections for msg in s.failures]

    @property
    def ok(self) -> bool:
        return not self.failures


def _word_pairs(max_rank: int):
    levels = [level(n) for n in range(max_rank + 1)]
    for ry in range(max_rank + 1):
        for y in levels[ry]:
            for rx in range(ry + 1):
                for x in levels[rx]:
                    yield x, y


def run_verification(max_rank: int, max_s: int) -> VerifyReport:
    """Formula-versus-oracle sweeps plus the identity suites.

    Down-path checks cover every word pair up to ``max_rank``; trajectory
    and S-path checks run on smaller rank caps (their oracles walk every
    path) with up-step counts bounded by ``max_s``.
    """
    sections: list[VerifySection] = []

    checks, failures = 0, []
    for x, y in _word_pairs(max_rank):
        checks += 1
        try:
            got = counts.count_down(x, y)
        except InconsistencyError as exc:
            failures.append(f"({x}, {y}): {exc}")
            continue
        want = oracle.brute_count_down(x, y)
        if got != want:
            failures.append(f"({x}, {y}): formula {got} != oracle {want}")
    sections.append(VerifySection("down-paths", checks, failures))

    checks, failures = 0, []
    for n in range(max_rank + 1):
        for x in level(n):
            checks += 1
            try:
                got = counts.count_down_from_top(x)
                full = counts.count_down(EPSILON, x)
            except InconsistencyError as exc:
                failures.append(f"({x}): {exc}")
                continue
            if got != full or got != oracle.brute_count_down(EPSILON, x):
                failures.append(f"({x}): closed form {got} disagrees")
    sections.append(VerifySection("down-from-top", checks, failures))

    checks, failures = 0, []
    traj_rank = min(max_rank, 4)
    for x, y in _word_pairs(traj_rank):
        for s in range(max_s + 1):
            for t in enumerate_trajectories(x.rank, y.rank, s):
                if t.length > 8:
                    continue
                checks += 1
                try:
                    got = counts.count_trajectory(x, y, t)
                except InconsistencyError as exc:
                    failures.append(f"({x}, {y}, {t}): {exc}")
                    continue
                want = oracle.brute_count_trajectory(x, y, t)
                if got != want:
                    failures.append(f"({x}, {y}, {t}): formula {got} != oracle {want}")
    sections.append(VerifySection("trajectory-paths", checks, failures))

    checks, failures = 0, []
    spath_rank = min(max_rank, 5)
    for x, y in _word_pairs(spath_rank):
        for s in range(max_s + 1):
            checks += 1
            try:
                got = counts.count_s_paths(x, y, s)
            except InconsistencyError as exc:
                failures.append(f"({x}, {y}, S={s}): {exc}")
                continue
            want = oracle.brute_count_s(x, y, s)
            if got != want:
                failures.append(f"({x}, {y}, S={s}): formula {got} != oracle {want}")
    sections.append(VerifySection("s-paths", checks, failures))

    checks, failures = 0, []
    xi_bound = min(max_rank, 6)
    for Y in range(xi_bound + 1):
        for X in range(Y + 1):
            for s in range(max_s + 1):
                for i in range(X + 1):
                    checks += 1
                    got = counts.xi(X, Y, s, i)
                    want = oracle.brute_xi(X, Y, s, i)
                    if got != want:
                        failures.append(
                            f"(X={X}, Y={Y}, S={s}, i={i}): formula {got} != oracle {want}"
                        )
    sections.append(VerifySection("up-value sums", checks, failures))

    for name, suite_checks, suite_failures in invariants.run_invariant_suites(
        min(max_rank, 6)
    ):
        sections.append(VerifySection(f"identity: {name}", suite_checks, suite_failures))

    checks, failures = 0, []
    for n in range(min(max_rank, 8) + 1):
        for w in level(n):
            checks += 1
            if len(successors(w)) != len(predecessors(w)) + 1:
                failures.append(f"degree mismatch at {w}")
    sections.append(VerifySection("out-degree = in-degree + 1", checks, failures))

    return VerifyReport(sections)


def hasse_dot(max_rank: int) -> str:
    """DOT digraph of the graph up to ``max_rank``, edges directed upward."""
    lines = ["digraph yf {"]
    for n in range(max_rank + 1):
        for w in level(n):
            lines.append(f'  "{w}";')
    for n in range(max_rank):
        for w in level(n):
            for v in successors(w):
                lines.append(f'  "{w}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines)


def _build_parser() -> _Parser:
    parser = _Parser(prog="yf", description="Exact path counts in the Young-Fibonacci graph")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, *positionals):
        p = sub.add_parser(name, help=help_)
        for pos_name, pos_help in positionals:
            p.add_argument(pos_name, help=pos_help)
        p.add_argument("--json", action="store_true", help="emit a single-line JSON result")
        return p

    p = add("down", "count descending paths from Y to X", ("x", "lower word"), ("y", "upper word"))
    p.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--verify-cap", type=int, default=DEFAULT_ORACLE_RANK_CAP)

    p = add(
        "traj",
        "count paths with a given rank profile",
        ("x", "lower word"),
        ("y", "upper word"),
        ("delta", "trajectory, e.g. 3,2,1,2"),
    )
    p.add_argument("--verify", action="store_true")
    p.add_argument("--verify-cap", type=int, default=DEFAULT_ORACLE_RANK_CAP)

    p = add(
        "spaths",
        "count paths with exactly S up-steps",
        ("x", "lower word"),
        ("y", "upper word"),
        ("s", "number of up-steps"),
    )
    p.add_argument("--verify", action="store_true")
    p.add_argument("--verify-cap", type=int, default=DEFAULT_ORACLE_RANK_CAP)

    p = add(
        "f",
        "evaluate the lower weight function",
        ("x", "word"),
        ("y", "second argument, 0..rank"),
        ("z", "third argument, 0..digit count"),
    )
    p.add_argument("--mode", choices=("rec", "explicit", "base"), default="rec")
    p.add_argument("--verify", action="store_true", help="cross-check the evaluation modes")

    p = add(
        "xi",
        "alternating up-value sum over trajectories",
        ("x", "lower endpoint"),
        ("y", "upper endpoint"),
        ("s", "number of up-steps"),
        ("i", "shift"),
    )
    p.add_argument("--verify", action="store_true")
    p.add_argument("--verify-cap", type=int, default=DEFAULT_ORACLE_RANK_CAP)

    add("level", "list all words of a given rank", ("n", "rank"))

    add("dot", "emit the Hasse diagram up to a rank as DOT text", ("n", "rank cutoff"))

    p = sub.add_parser("verify", help="formula-versus-oracle sweeps and identity suites")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--max-S", dest="max_s", type=int, default=2)
    p.add_argument("--json", action="store_true")

    return parser


def _int_arg(text: str, name: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise CliError(f"{name} must be an integer, got {text!r}")
    if value < 0:
        raise CliError(f"{name} must be nonnegative, got {value}")
    return value


def _run_query(args: argparse.Namespace) -> tuple[QueryResult, int]:
    command = args.command
    start = time.perf_counter()
    oracle_value: int | None = None
    lines_extra: list[str] = []

    if command == "down":
        x, y = _word(args.x), _word(args.y)
        if y.rank < x.rank:
            raise CliError(f"rank({y}) = {y.rank} is below rank({x}) = {x.rank}")
        value = counts.count_down(x, y)
        raw_args = [args.x, args.y]
        if args.verify:
            _check_oracle_cap(y, args.verify_cap)
            oracle_value = oracle.brute_count_down(x, y)
    elif command == "traj":
        x, y = _word(args.x), _word(args.y)
        try:
            t = parse_trajectory(args.delta)
        except ValueError as exc:
            raise CliError(str(exc))
        if y.rank < x.rank:
            raise CliError(f"rank({y}) = {y.rank} is below rank({x}) = {x.rank}")
        if t.start != y.rank or t.end != x.rank:
            raise CliError(
                f"trajectory runs {t.start} -> {t.end}, words need {y.rank} -> {x.rank}"
            )
        value = counts.count_trajectory(x, y, t)
        raw_args = [args.x, args.y, args.delta]
        if args.verify:
            _check_oracle_cap(y, args.verify_cap)
            oracle_value = oracle.brute_count_trajectory(x, y, t)
    elif command == "spaths":
        x, y = _word(args.x), _word(args.y)
        s = _int_arg(args.s, "S")
        if y.rank < x.rank:
            raise CliError(f"rank({y}) = {y.rank} is below rank({x}) = {x.rank}")
        value = counts.count_s_paths(x, y, s)
        raw_args = [args.x, args.y, args.s]
        if args.verify:
            _check_oracle_cap(y, args.verify_cap)
            if s > 4:
                raise CliError("oracle verification capped at S <= 4")
            oracle_value = oracle.brute_count_s(x, y, s)
    elif command == "f":
        x = _word(args.x)
        y = _int_arg(args.y, "Y")
        z = _int_arg(args.z, "Z")
        if y > x.rank:
            raise CliError(f"Y = {y} exceeds rank({x}) = {x.rank}")
        if z > x.digit_count:
            raise CliError(f"Z = {z} exceeds digit count of {x}")
        if args.mode == "base":
            if z != 0:
                raise CliError("--mode base requires Z = 0")
            value = f_base(x, y)
        elif args.mode == "explicit":
            value = f_explicit(x, y, z)
        else:
            value = f_rec(x, y, z)
        raw_args = [args.x, args.y, args.z]
        if args.verify:
            other = f_rec(x, y, z) if args.mode != "rec" else f_explicit(x, y, z)
            oracle_value = other
    elif command == "xi":
        X = _int_arg(args.x, "X")
        Y = _int_arg(args.y, "Y")
        s = _int_arg(args.s, "S")
        i = _int_arg(args.i, "I")
        if not Y >= X >= i:
            raise CliError(f"need Y >= X >= I >= 0, got Y={Y}, X={X}, I={i}")
        value = counts.xi(X, Y, s, i)
        raw_args = [args.x, args.y, args.s, args.i]
        if args.verify:
            if Y > 8 or s > 5:
                raise CliError("oracle verification capped at Y <= 8, S <= 5")
            oracle_value = oracle.brute_xi(X, Y, s, i)
    elif command == "level":
        n = _int_arg(args.n, "N")
        words = level(n)
        value = ",".join(str(w) for w in words)
        raw_args = [args.n]
        lines_extra = [str(w) for w in words]
    elif command == "dot":
        n = _int_arg(args.n, "N")
        value = hasse_dot(n)
        raw_args = [args.n]
        lines_extra = value.splitlines()
    else:  # pragma: no cover - argparse restricts the choices
        raise CliError(f"unknown command {command!r}")

    millis = (time.perf_counter() - start) * 1000.0
    agree = None if oracle_value is None else str(oracle_value) == str(value)
    result = QueryResult(
        command=command,
        args=raw_args,
        value=str(value),
        oracle=None if oracle_value is None else str(oracle_value),
        agree=agree,
        millis=round(millis, 3),
    )

    if args.json:
        print(result.to_json())
    elif lines_extra:
        print("\n".join(lines_extra))
    else:
        print(result.value)
        if result.oracle is not None:
            tag = "agree" if result.agree else "DISAGREE"
            print(f"oracle: {result.oracle} ({tag})")

    if result.agree is False:
        return result, EXIT_DISAGREE
    return result, EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    if args.max_rank < 0 or args.max_s < 0:
        raise CliError("--max-rank and --max-S must be nonnegative")
    start = time.perf_counter()
    report = run_verification(args.max_rank, args.max_s)
    millis = round((time.perf_counter() - start) * 1000.0, 3)
    if args.json:
        summary = (
            f"all {report.checks} checks passed"
            if report.ok
            else f"{len(report.failures)} of {report.checks} checks failed"
        )
        result = QueryResult(
            command="verify",
            args=[str(args.max_rank), str(args.max_s)],
            value=summary,
            oracle=None,
            agree=report.ok,
            millis=millis,
        )
        print(result.to_json())
    else:
        for section in report.sections:
            status = "ok" if not section.failures else f"{len(section.failures)} FAILED"
            print(f"{section.name}: {section.checks} checks, {status}")
            for failure in section.failures[:10]:
                print(f"  FAIL {failure}")
        if report.ok:
            print(f"all {report.checks} checks passed")
        else:
            print(f"{len(report.failures)} of {report.checks} checks failed")
    return EXIT_OK if report.ok else EXIT_DISAGREE


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "verify":
            return _run_verify(args)
        _, code = _run_query(args)
        return code
    except CliError as exc:
        print(f"yf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"yf: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
