# output_writer.py
# Libraries
import os
from typing import Iterable, Optional
from tabulate import tabulate
# Interfaces
from enumerator.ioutput_writer import IOutputWriter
# Constants
from config.file_constants import FileConstants
# Personal libraries
from enumerator.count_ledger import CountLedger
from esn.inverse_semigroup import InverseSemigroup
from hasher.hasher import Hasher
from orders.poset import MeetSemilattice
from utils.file_manager import FileManager
from utils.logging_setup import log_output_writer
from utils.structure_codec import format_semilattice, format_shape


class OutputWriter(IOutputWriter):
    """
    Writes the results of a run: one Cayley-table file per semigroup, the breakdown CSV and the
    semilattice cover-relation files. File names are numbered in emission order.
    """

    def __init__(self, file_manager: Optional[FileManager] = None, hasher: Optional[Hasher] = None):
        self.file_manager = file_manager if file_manager else FileManager()
        self.hasher = hasher if hasher else Hasher()
        self.sequence = 0
        self.written: list[str] = []

    def write_cayley_tables(self, directory: str, semigroups: Iterable[InverseSemigroup]) -> int:
        self.file_manager.create_directory(directory)
        count = 0
        for semigroup in semigroups:
            self.sequence += 1
            name = FileConstants.CAYLEY_FILE_PATTERN.format(order=semigroup.size, sequence=self.sequence)
            path = os.path.join(directory, name)
            self._write(path, semigroup.to_cayley_text(), FileConstants.CAYLEY_ENCODING)
            count += 1
        return count

    def write_breakdown(self, path: str, ledger: CountLedger) -> None:
        directory = os.path.dirname(path)
        if directory:
            self.file_manager.create_directory(directory)
        try:
            ledger.to_dataframe().to_csv(path, index=False, lineterminator='\n')
        except OSError as exc:
            log_output_writer.error(f"Func: write_breakdown, cannot write {path}: {exc}")
            raise OSError(f"Cannot write '{path}': {exc.strerror or exc}") from exc
        self.written.append(path)
        log_output_writer.info(f"Func: write_breakdown, {len(ledger.cells)} rows written to {path}")

    def write_semilattices(self, path: str, semilattices: Iterable[MeetSemilattice]) -> int:
        lines = [format_semilattice(semilattice) for semilattice in semilattices]
        directory = os.path.dirname(path)
        if directory:
            self.file_manager.create_directory(directory)
        self._write(path, ''.join(line + '\n' for line in lines), FileConstants.SEMILATTICE_ENCODING)
        return len(lines)

    def render_breakdown(self, ledger: CountLedger, emit_subcounts: bool = True) -> str:
        """Renders the breakdown with X//Y cells, followed by the totals."""
        headers = ['|E|', 'shape', 'ISGs//semilattices']
        if emit_subcounts:
            headers += ['commutative', 'IMs//lattices', 'commutative IMs']
        rows = []
        for m, shape, cell in ledger.rows():
            row = [m, format_shape(shape), f"{cell.isgs}//{cell.semilattices}"]
            if emit_subcounts:
                row += [f"{cell.comm_isgs}//{cell.comm_semilattices}", f"{cell.ims}//{cell.lattices}",
                        f"{cell.comm_ims}//{cell.comm_lattices}"]
            rows.append(row)
        totals = ledger.totals()
        total_row = ['total', '', totals.isgs]
        if emit_subcounts:
            total_row += [totals.comm_isgs, totals.ims, totals.comm_ims]
        rows.append(total_row)
        return tabulate(rows, headers=headers, tablefmt='simple')

    def fingerprint(self) -> str:
        return self.hasher.hash_files(self.written)

    def _write(self, path: str, content: str, encoding: str) -> None:
        try:
            self.file_manager.write_text(path, content, encoding=encoding)
        except OSError:
            log_output_writer.error(f"Func: _write, cannot write {path}")
            raise
        self.written.append(path)
