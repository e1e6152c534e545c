# cli.py
# Libraries
import argparse
import logging
import os
import sys
from typing import Optional, Sequence
# Constants
from config.enumeration_constants import EnumerationConstants, ExitCodes
from config.file_constants import FileConstants
from config.system_config import SystemConfig
# Personal libraries
from config.enumeration_config import EnumerationConfig
from enumerator.inverse_semigroup_enumerator import InverseSemigroupEnumerator
from enumerator.output_writer import OutputWriter
from groups.group_catalog import GroupCatalog
from orders.semilattice_generator import SemilatticeGenerator
from shapes.d_partition import DPartition, GroupAssignment
from utils.file_manager import FileManager
from utils.logging_setup import log_cli, log_manager
from utils.structure_codec import (format_d_partition, parse_d_partition, parse_group_names, parse_line_reference,
                                   parse_semilattice)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='isg', description='Enumerate finite inverse semigroups up to isomorphism.')
    parser.add_argument('--verbose', action='store_true', help='Log per-semilattice and per-basis detail')
    commands = parser.add_subparsers(dest='command', required=True)

    count = commands.add_parser('count', help='Count the inverse semigroups of one order')
    count.add_argument('--order', type=int, required=True)
    count.add_argument('--threads', type=int, default=1)
    count.add_argument('--breakdown', help='CSV file receiving the per-(idempotents, shape) counts')
    count.add_argument('--progress', action='store_true')
    count.add_argument('--monoids-only', action='store_true')
    count.add_argument('--no-subcounts', action='store_true', help='Only print the inverse semigroup column')
    count.add_argument('--full', action='store_true', help='Build the semigroups with n idempotents too')
    count.add_argument('--stats', action='store_true', help='Print the invariant effectiveness figures')

    enumerate_cmd = commands.add_parser('enumerate', help='Write one Cayley table per inverse semigroup')
    enumerate_cmd.add_argument('--order', type=int, required=True)
    enumerate_cmd.add_argument('--out', required=True, help='Output directory')
    enumerate_cmd.add_argument('--threads', type=int, default=1)
    enumerate_cmd.add_argument('--progress', action='store_true')
    enumerate_cmd.add_argument('--monoids-only', action='store_true')

    fixed = commands.add_parser('fixed', help='Enumerate for one semilattice, D-partition and group list')
    fixed.add_argument('--semilattice', required=True, help='FILE:LINE of a cover-relation line')
    fixed.add_argument('--dpartition', required=True, help="Blocks such as '1,2|0'")
    fixed.add_argument('--groups', required=True, help="One group name per block, such as 'C2,C1'")
    fixed.add_argument('--out', help='Output directory for the Cayley tables')

    semilattices = commands.add_parser('semilattices', help='List the meet-semilattices of one size')
    semilattices.add_argument('--order', type=int, required=True)
    semilattices.add_argument('--out', required=True, help='Output file, one cover-relation line each')
    semilattices.add_argument('--lattices', action='store_true', help='List the lattices instead')
    return parser


def run_count(args: argparse.Namespace) -> int:
    config = EnumerationConfig(order=args.order, threads=args.threads, breakdown_path=args.breakdown,
                               emit_subcounts=not args.no_subcounts, progress=args.progress,
                               monoids_only=args.monoids_only,
                               mode=EnumerationConstants.FULL_MODE if args.full else EnumerationConstants.COUNTS_MODE)
    enumerator = InverseSemigroupEnumerator(threads=config.threads, progress=config.progress)
    if config.mode == EnumerationConstants.FULL_MODE:
        ledger = enumerator.enumerate(config.order, monoids_only=config.monoids_only)
    else:
        ledger = enumerator.enumerate_counts_only(config.order, monoids_only=config.monoids_only)
    writer = OutputWriter()
    print(writer.render_breakdown(ledger, emit_subcounts=config.emit_subcounts))
    if config.breakdown_path:
        writer.write_breakdown(config.breakdown_path, ledger)
    if args.stats:
        for name, value in ledger.statistics.summary().items():
            print(f"{name}: {value:.2f}" if isinstance(value, float) else f"{name}: {value}")
    return ExitCodes.SUCCESS


def run_enumerate(args: argparse.Namespace) -> int:
    config = EnumerationConfig(order=args.order, mode=EnumerationConstants.FULL_MODE, threads=args.threads,
                               cayley_dir=args.out, progress=args.progress, monoids_only=args.monoids_only,
                               breakdown_path=os.path.join(args.out, FileConstants.BREAKDOWN_FILE_NAME.format(order=args.order)))
    writer = OutputWriter()
    writer.file_manager.create_directory(config.cayley_dir)
    ledger = InverseSemigroupEnumerator(threads=config.threads, progress=config.progress).enumerate(
        config.order, sink=lambda semigroups: writer.write_cayley_tables(config.cayley_dir, semigroups),
        monoids_only=config.monoids_only,
    )
    writer.write_breakdown(config.breakdown_path, ledger)
    print(f"{writer.sequence} inverse semigroups of order {config.order} written to {config.cayley_dir}")
    log_cli.info(f"Func: run_enumerate, fingerprint {writer.fingerprint()}")
    return ExitCodes.SUCCESS


def run_fixed(args: argparse.Namespace) -> int:
    path, line_number = parse_line_reference(args.semilattice)
    semilattice = parse_semilattice(FileManager().read_line(path, line_number, encoding=FileConstants.SEMILATTICE_ENCODING))
    blocks = parse_d_partition(args.dpartition)
    names = parse_group_names(args.groups)
    if len(blocks) != len(names):
        raise ValueError(f"{len(names)} groups given for {len(blocks)} blocks")
    catalog = GroupCatalog(max_order=SystemConfig.MAX_GROUP_ORDER)
    paired = sorted(zip(blocks, names), key=lambda item: (-len(item[0]), item[0][0]))
    partition = DPartition.from_blocks([block for block, _ in paired])
    assignment = GroupAssignment(groups=tuple(catalog.by_name(name) for _, name in paired))
    config = EnumerationConfig(order=sum(len(b) ** 2 * g.order for b, g in zip(partition.blocks, assignment.groups)),
                               mode=EnumerationConstants.FIXED_MODE, cayley_dir=args.out, semilattice_path=path)
    log_cli.info(f"Func: run_fixed, semilattice {config.semilattice_path}:{line_number}, blocks {partition.blocks}")
    semigroups = InverseSemigroupEnumerator().enumerate_fixed(semilattice, partition, assignment)
    print(f"{len(semigroups)} inverse semigroups of order {config.order} over D-partition "
          f"{format_d_partition(partition.blocks)} with groups {','.join(assignment.names)}")
    if config.emits_tables:
        OutputWriter().write_cayley_tables(config.cayley_dir, semigroups)
    return ExitCodes.SUCCESS


def run_semilattices(args: argparse.Namespace) -> int:
    if args.order < 1:
        raise ValueError(f"Order must be a positive integer, got {args.order}")
    generator = SemilatticeGenerator()
    stream = generator.lattices(args.order) if args.lattices else generator.meet_semilattices(args.order)
    count = OutputWriter().write_semilattices(args.out, stream)
    print(f"{count} {'lattices' if args.lattices else 'meet-semilattices'} of size {args.order} written to {args.out}")
    return ExitCodes.SUCCESS


COMMANDS = {
    'count': run_count,
    'enumerate': run_enumerate,
    'fixed': run_fixed,
    'semilattices': run_semilattices,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        log_manager.set_log_level(logging.DEBUG)
    log_cli.info(f"Func: main, command {args.command}")
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        log_cli.warning(f"Func: main, invalid input: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return ExitCodes.INVALID_INPUT
    except OSError as exc:
        log_cli.error(f"Func: main, I/O failure: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return ExitCodes.IO_FAILURE
