"""horncone CLI -- membership queries, inequality lists and oracle sweeps.

Provides ``check``, ``inequalities``, ``sweep``, ``table`` and ``schubert``
subcommands.  Every command prints a single JSON document on stdout
(indented on a terminal, compact when piped) unless ``--output`` sends it to
a file.

Usage::

    horncone [--cache-dir DIR] [--no-cache] [--jobs N] [--verbose] <command> ...
    horncone check        (--pq P Q | --n N) (--triple TEXT | --input FILE)
                          [--route theorem|summary|oracle] [--gate oracle|recursive] [--hol]
    horncone inequalities (--pq P Q | --n N) [--route theorem|summary|cohomology]
                          [--theta] [--filter] [--format json|csv] [--output FILE]
    horncone sweep        (--pq P Q | --n N) --bound B [--route cone|theta]
    horncone table        --n N --r R
    horncone schubert     (--box M N --classes TEXT | --euler P Q R S)

Triples are written inline as three JSON values separated by spaces, e.g.
``"[[1],[0]] [[1],[0]] [[2],[0]]"`` for Horn(1, 1) or ``"[1,0] [1,0] [1,1]"``
for Horn(2).  Rationals may be written bare as ``1/2``.

Exit codes: 0 on success or membership, 2 on non-membership or a sweep
mismatch, 1 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, NoReturn

from . import __version__
from .cache import TripleCache
from .combinatorics import GLWeight, WeightPair, as_entries, as_partition, weights_in_range
from .config import HornConfig, resolve_cache_dir
from .horn_classical import (
    horn_n_cone,
    horn_n_inequalities,
    horn_n_multiplicity,
    horn_n_semigroup,
    horn_triple_table,
)
from .horn_pq import (
    SpectrumPair,
    as_spectrum_pair,
    filter_inequalities,
    generate_inequalities,
    generate_s_inequalities,
    holomorphic_chamber,
    horn_pq_cone,
    horn_pq_semigroup,
    horn_pq_semigroup_result,
    ressayre_inequalities,
    s_pq_cone,
    s_pq_semigroup,
    theta,
    theta_inequality,
)
from .inequality import InequalitySpec, MembershipResult, parse_rational
from .schubert import GrassmannianRing, euler_class, is_point_multiple, product

logger = logging.getLogger(__name__)

CHECK_ROUTES = ("theorem", "summary", "oracle")
INEQUALITY_ROUTES = ("theorem", "summary", "cohomology")
SWEEP_ROUTES = ("cone", "theta")
CSV_COLUMNS = ("family", "r", "s", "sense", "I", "J", "K", "A", "B", "C")

# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------


@dataclass
class RunConfig:
    """Everything that determines a CLI run.

    Attributes:
        command: The subcommand name.
        p: First block size for Horn(p, q) commands.
        q: Second block size for Horn(p, q) commands.
        n: Size for classical Horn(n) commands.
        route: Which description or oracle answers the query.
        gate: How index triples are decided while generating.
        filter_redundant: Route inequality lists through the LP filter.
        jobs: Worker threads.
        cache_dir: Horn-triple table cache directory.
        use_cache: Whether the cache is read and written.
        output_format: ``"json"`` or ``"csv"``.
        output: Output file, or ``None`` for stdout.
    """

    command: str
    p: int | None = None
    q: int | None = None
    n: int | None = None
    route: str = "theorem"
    gate: str = "oracle"
    filter_redundant: bool = False
    jobs: int = 1
    cache_dir: str = ""
    use_cache: bool = True
    output_format: str = "json"
    output: str | None = None

    def __post_init__(self) -> None:
        if self.jobs < 1:
            raise ValueError(f"--jobs must be >= 1, got {self.jobs}")
        if self.p is not None and self.q is not None and not self.p >= self.q >= 1:
            raise ValueError(f"--pq needs p >= q >= 1, got p={self.p}, q={self.q}")
        if self.n is not None and self.n < 1:
            raise ValueError(f"--n must be >= 1, got {self.n}")

    @property
    def is_pq(self) -> bool:
        return self.p is not None

    @property
    def cache(self) -> TripleCache | None:
        return TripleCache(self.cache_dir) if self.use_cache else None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        env = HornConfig.from_env()
        pq = getattr(args, "pq", None)
        return cls(
            command=args.command,
            p=pq[0] if pq else None,
            q=pq[1] if pq else None,
            n=getattr(args, "n", None),
            route=getattr(args, "route", None) or "theorem",
            gate=getattr(args, "gate", "oracle"),
            filter_redundant=getattr(args, "filter", False),
            jobs=args.jobs if args.jobs is not None else env.jobs,
            cache_dir=resolve_cache_dir(args.cache_dir) if args.cache_dir else env.cache_dir,
            use_cache=env.use_cache and not args.no_cache,
            output_format=getattr(args, "format", "json"),
            output=getattr(args, "output", None),
        )


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

_BARE_RATIONAL = re.compile(r'(?<![\w"./])(-?\d+/\d+)(?![\w"./])')


def parse_values(text: str) -> list[Any]:
    """Split ``text`` into consecutive JSON values.

    Values may be separated by whitespace or commas; bare rationals such as
    ``-3/2`` are accepted and returned as strings.

    Raises:
        ValueError: On malformed input.
    """
    source = _BARE_RATIONAL.sub(r'"\1"', text)
    decoder = json.JSONDecoder()
    values: list[Any] = []
    index = 0
    while True:
        while index < len(source) and (source[index].isspace() or source[index] == ","):
            index += 1
        if index >= len(source):
            return values
        try:
            value, index = decoder.raw_decode(source, index)
        except json.JSONDecodeError as exc:
            raise ValueError(f"cannot parse {text!r}: {exc.msg} at column {exc.pos + 1}") from None
        values.append(value)


def _load_triple(args: argparse.Namespace) -> list[Any]:
    if args.input:
        with open(args.input, encoding="utf-8") as f:
            data = json.load(f)
        values = data.get("triple") if isinstance(data, dict) else data
    else:
        values = parse_values(args.triple)
    if not isinstance(values, list) or len(values) != 3:
        raise ValueError("a triple needs exactly three components")
    return values


def _integer_pair(pair: SpectrumPair) -> WeightPair:
    values = [pair.first.values, pair.second.values]
    if any(v.denominator != 1 for part in values for v in part):
        raise ValueError("the oracle route needs integer weights")
    return WeightPair.of((int(v) for v in values[0]), (int(v) for v in values[1]))


def _integer_weight(values: Sequence[Fraction]) -> GLWeight:
    if any(v.denominator != 1 for v in values):
        raise ValueError("the oracle route needs integer weights")
    return GLWeight(tuple(int(v) for v in values))


def _emit(payload: Any, config: RunConfig) -> None:
    """Print ``payload`` as JSON: indented on a terminal, compact otherwise."""
    if sys.stdout.isatty():
        text = json.dumps(payload, indent=2, ensure_ascii=False)
    else:
        text = json.dumps(payload, separators=(",", ":"), ensure_ascii=False)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        print(f"Wrote {config.command} output to {config.output}")
    else:
        print(text)


def _csv_text(specs: Sequence[InequalitySpec]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for spec in specs:
        writer.writerow(
            [spec.family, spec.r, spec.s, spec.sense, str(spec.I), str(spec.J), str(spec.K)]
            + [" ".join(str(c) for c in vector) for vector in spec.coeffs]
        )
    return buffer.getvalue()


def _shape(config: RunConfig) -> dict[str, int]:
    if config.is_pq:
        assert config.p is not None and config.q is not None
        return {"p": config.p, "q": config.q}
    assert config.n is not None
    return {"n": config.n}


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _check_pq(
    config: RunConfig, values: list[Any], hol: bool
) -> tuple[MembershipResult, dict[str, Any]]:
    assert config.p is not None and config.q is not None
    p, q = config.p, config.q
    triple = [as_spectrum_pair(v) for v in values]
    extra: dict[str, Any] = {}
    if config.route == "oracle":
        lam, mu, nu = (_integer_pair(x) for x in triple)
        result = horn_pq_semigroup_result(lam, mu, nu, p, q)
    elif config.route == "summary":
        result = s_pq_cone(*theta(triple), p, q)
    else:
        result = horn_pq_cone(*triple, p, q, gate=config.gate)
    if hol:
        chamber = all(holomorphic_chamber(x) for x in triple)
        extra["chamber"] = chamber
        if not chamber:
            result = MembershipResult(
                member=False, reason="not strictly interlaced (x_p > x_{p+1} fails)"
            )
    return result, extra


def _check_n(config: RunConfig, values: list[Any]) -> MembershipResult:
    assert config.n is not None
    n = config.n
    if config.route == "summary":
        raise ValueError("the summary route applies to Horn(p, q) only")
    if config.route == "oracle":
        lam, mu, nu = (
            _integer_weight([parse_rational(v) for v in as_entries(x, "weight")]) for x in values
        )
        if not horn_n_semigroup(lam, mu, nu, n):
            return MembershipResult(member=False, reason="Littlewood-Richardson coefficient is 0")
        return MembershipResult(member=True, multiplicity=horn_n_multiplicity(lam, mu, nu))
    if config.gate == "oracle" and config.cache is not None:
        horn_n_inequalities(n, cache=config.cache, jobs=config.jobs)
    return horn_n_cone(*values, n, recursive=config.gate == "recursive")


def _cmd_check(args: argparse.Namespace) -> int:
    """Handle the ``check`` subcommand.

    Returns:
        0 for a member, 2 for a non-member.
    """
    config = RunConfig.from_args(args)
    if config.route not in CHECK_ROUTES:
        raise ValueError(f"check --route must be one of {CHECK_ROUTES}")
    values = _load_triple(args)
    extra: dict[str, Any] = {}
    if config.is_pq:
        result, extra = _check_pq(config, values, args.hol)
    else:
        if args.hol:
            raise ValueError("--hol applies to Horn(p, q) only")
        result = _check_n(config, values)
    report = {"route": config.route, **_shape(config), **result.to_dict(), **extra}
    _emit(report, config)
    return 0 if result.member else 2


def _inequality_list(config: RunConfig, theta_coordinates: bool) -> list[InequalitySpec]:
    if not config.is_pq:
        if config.route != "theorem":
            raise ValueError("Horn(n) inequalities have the theorem route only")
        assert config.n is not None
        specs = horn_n_inequalities(
            config.n, recursive=config.gate == "recursive", cache=config.cache, jobs=config.jobs
        )
    else:
        assert config.p is not None and config.q is not None
        if config.route == "theorem":
            specs = generate_inequalities(config.p, config.q, gate=config.gate, jobs=config.jobs)
        elif config.route == "summary":
            specs = generate_s_inequalities(config.p, config.q, jobs=config.jobs)
        else:
            specs = ressayre_inequalities(config.p, config.q, jobs=config.jobs)
        if theta_coordinates and config.route != "theorem":
            specs = [theta_inequality(spec) for spec in specs]
    if config.filter_redundant:
        specs = filter_inequalities(specs)
    return specs


def _cmd_inequalities(args: argparse.Namespace) -> int:
    """Handle the ``inequalities`` subcommand."""
    config = RunConfig.from_args(args)
    if config.route not in INEQUALITY_ROUTES:
        raise ValueError(f"inequalities --route must be one of {INEQUALITY_ROUTES}")
    specs = _inequality_list(config, args.theta)
    logger.info("Generated %d inequalities", len(specs))
    if config.output_format == "csv":
        text = _csv_text(specs)
        if config.output:
            with open(config.output, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            print(f"Wrote {len(specs)} inequalities to {config.output}")
        else:
            sys.stdout.write(text)
        return 0
    payload = {
        **_shape(config),
        "route": config.route,
        "filtered": config.filter_redundant,
        "count": len(specs),
        "inequalities": [spec.to_dict() for spec in specs],
    }
    _emit(payload, config)
    return 0


Triple = tuple[Any, Any, Any]
Probe = Callable[[Triple], tuple[bool, bool]]


def _pq_grid(p: int, q: int, bound: int) -> list[WeightPair]:
    return [
        WeightPair(first, second)
        for first in weights_in_range(p, -bound, bound)
        for second in weights_in_range(q, -bound, bound)
    ]


def _pq_probe(p: int, q: int, route: str) -> Probe:
    """Return ``(member, agrees)`` for one integer triple of Horn(p, q)."""

    def cone(t: Triple) -> tuple[bool, bool]:
        member = horn_pq_cone(*t, p, q).member
        return member, member == (horn_pq_semigroup(*t, p, q) is not None)

    def transported(t: Triple) -> tuple[bool, bool]:
        image = theta(t)
        member = horn_pq_semigroup(*t, p, q) is not None
        agrees = member == (s_pq_semigroup(*image, p, q) is not None) and (
            horn_pq_cone(*t, p, q).member == s_pq_cone(*image, p, q).member
        )
        return member, agrees

    return transported if route == "theta" else cone


def _n_probe(n: int) -> Probe:
    def cone(t: Triple) -> tuple[bool, bool]:
        member = horn_n_cone(*(w.parts for w in t), n).member
        return member, member == horn_n_semigroup(*t, n)

    return cone


def _sweep(triples: Sequence[Triple], probe: Probe, jobs: int) -> tuple[int, list[Any]]:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(probe, triples, chunksize=64))
    else:
        verdicts = [probe(t) for t in triples]
    members = sum(1 for member, _ in verdicts if member)
    mismatches = [
        [x.to_list() for x in triple]
        for triple, (_, agrees) in zip(triples, verdicts)
        if not agrees
    ]
    return members, mismatches


def _cmd_sweep(args: argparse.Namespace) -> int:
    """Handle the ``sweep`` subcommand.

    Returns:
        0 if the compared routes agree on every grid point, 2 otherwise.
    """
    config = RunConfig.from_args(args)
    route = args.route or "cone"
    if args.bound < 0:
        raise ValueError(f"--bound must be >= 0, got {args.bound}")

    grid: Sequence[Any]
    if config.is_pq:
        assert config.p is not None and config.q is not None
        grid = _pq_grid(config.p, config.q, args.bound)
        probe = _pq_probe(config.p, config.q, route)
        generate_inequalities(config.p, config.q, jobs=config.jobs)
        if route == "theta":
            generate_s_inequalities(config.p, config.q, jobs=config.jobs)
    else:
        if route != "cone":
            raise ValueError("the theta route applies to Horn(p, q) only")
        assert config.n is not None
        grid = weights_in_range(config.n, 0, args.bound)
        probe = _n_probe(config.n)
        horn_n_inequalities(config.n, cache=config.cache, jobs=config.jobs)

    triples = [(a, b, c) for a in grid for b in grid for c in grid]
    logger.info("Sweeping %d triples for %s", len(triples), _shape(config))
    members, mismatches = _sweep(triples, probe, config.jobs)
    if mismatches:
        logger.warning("%d mismatches on the sweep grid", len(mismatches))
    report = {
        **_shape(config),
        "route": route,
        "bound": args.bound,
        "checked": len(triples),
        "members": members,
        "mismatches": mismatches,
    }
    _emit(report, config)
    return 2 if mismatches else 0


def _cmd_table(args: argparse.Namespace) -> int:
    """Handle the ``table`` subcommand."""
    config = RunConfig.from_args(args)
    table = horn_triple_table(args.n, args.r, cache=config.cache, jobs=config.jobs)
    _emit({**table.to_dict(), "count": len(table)}, config)
    return 0


def _cmd_schubert(args: argparse.Namespace) -> int:
    """Handle the ``schubert`` subcommand."""
    config = RunConfig.from_args(args)
    if args.euler:
        p, q, r, s = args.euler
        euler = euler_class(p, q, r, s)
        _emit({"euler": [p, q, r, s], "zero": euler.is_zero(), **euler.to_dict()}, config)
        return 0
    m, n = args.box
    ring = GrassmannianRing(m, n)
    classes = [ring.sigma(as_partition(v)) for v in parse_values(args.classes)]
    if not classes:
        raise ValueError("--classes needs at least one partition")
    result = product(classes)
    _emit({**result.to_dict(), "point_multiple": is_point_multiple(result)}, config)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_shape(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--pq", nargs=2, type=int, metavar=("P", "Q"), help="Horn(p, q) with p >= q >= 1."
    )
    group.add_argument("--n", type=int, help="The classical Horn(n) cone.")


def _build_parser() -> argparse.ArgumentParser:
    """Build the CLI argument parser.

    Returns:
        A configured :class:`argparse.ArgumentParser`.
    """
    parser = _Parser(
        prog="horncone",
        description="horncone -- Horn cones of U(p, q): membership, inequalities and sweeps.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--cache-dir", default=None, help="Horn-triple cache directory (env: HORNCONE_CACHE)."
    )
    parser.add_argument(
        "--no-cache", action="store_true", help="Neither read nor write the triple cache."
    )
    parser.add_argument(
        "--jobs", type=int, default=None, help="Worker threads (default: HORNCONE_JOBS or CPUs)."
    )
    parser.add_argument("--verbose", action="store_true", help="Log DEBUG messages to stderr.")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # -- check --------------------------------------------------------
    p_check = subparsers.add_parser("check", help="Test membership of one triple.")
    _add_shape(p_check)
    source = p_check.add_mutually_exclusive_group(required=True)
    source.add_argument("--triple", help='Inline triple, e.g. "[[1],[0]] [[1],[0]] [[2],[0]]".')
    source.add_argument("--input", help="JSON file holding the triple.")
    p_check.add_argument(
        "--route", choices=CHECK_ROUTES, default="theorem", help="Deciding route (default: theorem)."
    )
    p_check.add_argument(
        "--gate",
        choices=["oracle", "recursive"],
        default="oracle",
        help="How index triples are decided (default: oracle).",
    )
    p_check.add_argument(
        "--hol", action="store_true", help="Test the holomorphic cone Horn_hol(p, q)."
    )

    # -- inequalities -------------------------------------------------
    p_ineq = subparsers.add_parser("inequalities", help="Generate an inequality list.")
    _add_shape(p_ineq)
    p_ineq.add_argument(
        "--route",
        choices=INEQUALITY_ROUTES,
        default="theorem",
        help="Horn(p, q) theorem, S(p, q) summary or cohomological data (default: theorem).",
    )
    p_ineq.add_argument(
        "--gate", choices=["oracle", "recursive"], default="oracle", help="Gate (default: oracle)."
    )
    p_ineq.add_argument(
        "--theta", action="store_true", help="Move S(p, q) lists to Horn(p, q) coordinates."
    )
    p_ineq.add_argument(
        "--filter", action="store_true", help="Drop inequalities implied by the others."
    )
    p_ineq.add_argument(
        "--format", choices=["json", "csv"], default="json", help="Output format (default: json)."
    )
    p_ineq.add_argument("--output", default=None, help="Write to FILE instead of stdout.")

    # -- sweep --------------------------------------------------------
    p_sweep = subparsers.add_parser("sweep", help="Compare routes on an integer grid.")
    _add_shape(p_sweep)
    p_sweep.add_argument("--bound", type=int, required=True, help="Entry bound of the grid.")
    p_sweep.add_argument(
        "--route", choices=SWEEP_ROUTES, default="cone", help="What to compare (default: cone)."
    )
    p_sweep.add_argument("--output", default=None, help="Write to FILE instead of stdout.")

    # -- table --------------------------------------------------------
    p_table = subparsers.add_parser("table", help="Dump a Horn-triple table.")
    p_table.add_argument("--n", type=int, required=True, help="Ambient size n.")
    p_table.add_argument("--r", type=int, required=True, help="Subset size r.")
    p_table.add_argument("--output", default=None, help="Write to FILE instead of stdout.")

    # -- schubert -----------------------------------------------------
    p_schubert = subparsers.add_parser("schubert", help="Cup products and Euler classes.")
    what = p_schubert.add_mutually_exclusive_group(required=True)
    what.add_argument("--box", nargs=2, type=int, metavar=("M", "N"), help="Ring H*(G(m, n)).")
    what.add_argument(
        "--euler", nargs=4, type=int, metavar=("P", "Q", "R", "S"), help="Euler class of V^r_s."
    )
    p_schubert.add_argument("--classes", default="", help='Partitions to multiply, e.g. "[1] [1]".')

    return parser


def _configure_logging(verbose: bool) -> None:
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            stream=sys.stderr,
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
        )
        logging.getLogger("horncone").setLevel(logging.DEBUG)
    else:
        logging.getLogger("horncone").setLevel(logging.WARNING)


def main(argv: list[str] | None = None) -> int:
    """CLI entry point.

    Args:
        argv: Command-line arguments. Defaults to ``sys.argv[1:]``.

    Returns:
        Exit code (0 for success, 2 for non-membership or mismatches,
        1 for errors).
    """
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        debug = HornConfig.from_env().debug
    except ValueError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1
    _configure_logging(args.verbose or debug)

    if args.command is None:
        parser.print_help()
        return 0

    commands: dict[str, Any] = {
        "check": _cmd_check,
        "inequalities": _cmd_inequalities,
        "sweep": _cmd_sweep,
        "table": _cmd_table,
        "schubert": _cmd_schubert,
    }

    handler = commands.get(args.command)
    if handler is None:
        parser.print_help()
        return 1

    try:
        result: int = handler(args)
    except (ValueError, OSError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1
    return result


if __name__ == "__main__":
    sys.exit(main())
