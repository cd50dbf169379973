"""The ``embedcheck`` command.

Exit status is 0 on success, 1 when a property or a verified statement fails and 2 on
usage, input or configuration errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from .config import Caps, current_caps, use_caps
from .corpus import bundled_corpus, generate_corpus, load_corpus, parse_generators, read_group_file
from .harness import CampaignOptions, emit_report, render_text, resolve_suites, run_campaign
from .lattice import minimal_normal_subgroups
from .perm import Group, subgroup
from .props import check_property, explain
from .structure import PrimeStructure, is_prime, offending_chief_factor, structure_report, z_u


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _read_group(path: str) -> tuple[str, Group]:
    parsed = read_group_file(Path(path))
    return parsed.name, parsed.build()


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _prime_line(record: PrimeStructure) -> str:
    return (
        f"p={record.p}: |P| = {record.sylow_order}, |O_p| = {record.o_p_order}, "
        f"|O_p'| = {record.o_p_prime_order}, |O_p'p| = {record.o_p_prime_p_order}, "
        f"|Z_Up| = {record.z_u_p_order}, p-soluble {_yes_no(record.p_soluble)}, "
        f"p-supersoluble {_yes_no(record.p_supersoluble)}"
    )


def cmd_info(args: argparse.Namespace) -> int:
    name, g = _read_group(args.file)
    report = structure_report(g, name)
    factors = ",".join(map(str, report.chief_factor_orders)) or "none"
    print(f"name {name}")
    print(f"order {report.order}; chief factors {factors}; Z_𝒰 order {z_u(g).order}")
    for n in [] if g.is_trivial() else minimal_normal_subgroups(g):
        print(f"minimal normal subgroup {n} (order {n.order})")
    for record in report.primes:
        print(_prime_line(record))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    _, g = _read_group(args.file)
    h = subgroup(g, parse_generators(args.subgroup, g.degree))
    verdict = check_property(g, h, args.prop)
    print(explain(verdict))
    return EXIT_OK if verdict.holds else EXIT_FAILED


def cmd_psuper(args: argparse.Namespace) -> int:
    if not is_prime(args.p):
        raise ValueError(f"{args.p} is not a prime")
    _, g = _read_group(args.file)
    factor = offending_chief_factor(g, args.p)
    if factor is None:
        print("YES")
        return EXIT_OK
    print(f"NO: chief factor of order {factor.factor_order}")
    return EXIT_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    suites = resolve_suites(args.suite)
    options = CampaignOptions(
        seed=args.seed,
        instance_bound=args.instance_bound,
        suite_instance_limit=args.suite_limit,
        jobs=args.jobs,
        caps=current_caps(),
    )
    corpus = load_corpus(Path(args.corpus)) if args.corpus else bundled_corpus(args.max_order)
    report = run_campaign(corpus, suites, options)
    if args.json:
        emit_report(report, Path(args.json), "jsonl")
    if args.text:
        emit_report(report, Path(args.text), "text")
    sys.stdout.write(render_text(report))
    return report.exit_code


def cmd_corpus(args: argparse.Namespace) -> int:
    import_dir = Path(args.import_dir) if args.import_dir else None
    manifest = generate_corpus(args.max_order, Path(args.out), import_dir)
    print(f"wrote {len(manifest)} groups to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="embedcheck", description="Finite permutation group embedding checks")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    defaults = Caps()
    parser.add_argument("--element-cap", type=int, default=defaults.element_cap, help="largest enumerable group")
    parser.add_argument(
        "--quotient-cap", type=int, default=defaults.quotient_degree_cap, help="largest coset-action degree"
    )
    parser.add_argument(
        "--qf-cap", type=int, default=defaults.quaternion_free_cap, help="largest 2-group for the quaternion-free test"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    info = commands.add_parser("info", help="structure of a group file")
    info.add_argument("file")
    info.set_defaults(handler=cmd_info)

    check = commands.add_parser("check", help="test the ℒ-Π- or Π-property of a subgroup")
    check.add_argument("file")
    check.add_argument("--prop", choices=("lpi", "pi"), required=True)
    check.add_argument("--subgroup", required=True, help="';'-separated generators in cycle notation")
    check.set_defaults(handler=cmd_check)

    psuper = commands.add_parser("psuper", help="test p-supersolubility")
    psuper.add_argument("file")
    psuper.add_argument("-p", type=int, required=True)
    psuper.set_defaults(handler=cmd_psuper)

    verify = commands.add_parser("verify", help="run a verification campaign")
    verify.add_argument(
        "--suite",
        default="all",
        help="theorem-a, lemmas, all or a single suite name; nonabelian-normal-p-part also runs on S5 and S6",
    )
    verify.add_argument("--corpus", help="corpus directory; the bundled corpus when omitted")
    verify.add_argument("--max-order", type=int, default=200, help="order bound of the bundled corpus")
    verify.add_argument("--json", help="machine report (JSON Lines) path")
    verify.add_argument("--text", help="text report path")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--instance-bound", type=int, default=5000)
    verify.add_argument("--suite-limit", type=int, default=400, help="instances per suite and group")
    verify.set_defaults(handler=cmd_verify)

    corpus = commands.add_parser("corpus", help="write the bundled corpus as a directory")
    corpus.add_argument("--max-order", type=int, default=200)
    corpus.add_argument("--out", required=True)
    corpus.add_argument("--import", dest="import_dir", help="directory of extra *.group files")
    corpus.set_defaults(handler=cmd_corpus)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        caps = Caps(
            element_cap=args.element_cap,
            quotient_degree_cap=args.quotient_cap,
            quaternion_free_cap=args.qf_cap,
        )
        with use_caps(caps):
            return args.handler(args)
    except (ValueError, OSError) as e:
        logger.debug("command failed", exc_info=True)
        print(f"embedcheck: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
