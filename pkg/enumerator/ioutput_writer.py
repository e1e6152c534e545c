# ioutput_writer.py
# Libraries
from abc import ABC, abstractmethod
from typing import Iterable
# Personal libraries
from enumerator.count_ledger import CountLedger
from esn.inverse_semigroup import InverseSemigroup
from orders.poset import MeetSemilattice


class IOutputWriter(ABC):
    """
    Interface for the OutputWriter class, which stores the results of a run on disk and
    fingerprints what it wrote.
    """

    @abstractmethod
    def write_cayley_tables(self, directory: str, semigroups: Iterable[InverseSemigroup]) -> int:
        """
        Writes one Cayley table file per semigroup, numbering the files after those already written.

        :param directory: Target directory, created if missing.
        :param semigroups: The semigroups, in emission order.
        :return: Number of files written.
        Raises:
            OSError: If a file cannot be written.
        """
        pass

    @abstractmethod
    def write_breakdown(self, path: str, ledger: CountLedger) -> None:
        """
        Writes the per-(idempotents, shape) counts as CSV.

        Raises:
            OSError: If the file cannot be written.
        """
        pass

    @abstractmethod
    def write_semilattices(self, path: str, semilattices: Iterable[MeetSemilattice]) -> int:
        """
        Writes one cover-relation line per semilattice.

        :return: Number of lines written.
        """
        pass

    @abstractmethod
    def render_breakdown(self, ledger: CountLedger, emit_subcounts: bool = True) -> str:
        pass

    @abstractmethod
    def fingerprint(self) -> str:
        """Digest of every file written so far."""
        pass
