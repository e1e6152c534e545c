# count_ledger.py
# Libraries
from __future__ import annotations
from dataclasses import dataclass, field, fields
import pandas as pd
# Constants
from config.file_constants import FileConstants
# Personal libraries
from utils.structure_codec import format_shape


@dataclass
class CellCounts:
    """
    Tallies of one (number of idempotents, shape) cell. The semilattice and lattice columns count
    the semilattices contributing at least one semigroup of the matching kind.
    """
    isgs: int = 0
    comm_isgs: int = 0
    ims: int = 0
    comm_ims: int = 0
    semilattices: int = 0
    comm_semilattices: int = 0
    lattices: int = 0
    comm_lattices: int = 0

    def add(self, other: CellCounts) -> None:
        for item in fields(self):
            setattr(self, item.name, getattr(self, item.name) + getattr(other, item.name))


@dataclass
class SearchStatistics:
    """How often the invariant key alone decided that a generated semigroup was new."""
    generated: int = 0
    accepted: int = 0
    accepted_immediately: int = 0
    never_tested: int = 0
    iso_tests: int = 0

    def add(self, other: SearchStatistics) -> None:
        for item in fields(self):
            setattr(self, item.name, getattr(self, item.name) + getattr(other, item.name))

    def summary(self) -> dict[str, float]:
        generated = self.generated or 1
        accepted = self.accepted or 1
        return {
            'generated': self.generated,
            'accepted': self.accepted,
            'accepted_immediately_pct': 100.0 * self.accepted_immediately / generated,
            'never_tested_pct': 100.0 * self.never_tested / accepted,
            'iso_tests': self.iso_tests,
            'tests_per_generated': self.iso_tests / generated,
        }


@dataclass
class CountLedger:
    """
    Per-(idempotents, shape) counts of the inverse semigroups of one order.

    Attributes:
        order (int): The order n.
        cells (dict): (number of idempotents, shape) -> CellCounts.
        statistics (SearchStatistics): Invariant effectiveness figures of the run.
    """
    order: int
    cells: dict[tuple[int, tuple[int, ...]], CellCounts] = field(default_factory=dict)
    statistics: SearchStatistics = field(default_factory=SearchStatistics)

    def record(self, idempotents: int, shape: tuple[int, ...], isgs: int, comm_isgs: int,
               ims: int, comm_ims: int, is_lattice: bool, count: int = 1) -> None:
        """
        Adds the semigroups found over `count` semilattices that gave identical results (count > 1
        only for the rows filled without building any semigroup).
        """
        if isgs == 0:
            return
        cell = self.cells.setdefault((idempotents, shape), CellCounts())
        cell.add(CellCounts(
            isgs=isgs * count, comm_isgs=comm_isgs * count, ims=ims * count, comm_ims=comm_ims * count,
            semilattices=count, comm_semilattices=count if comm_isgs else 0,
            lattices=count if is_lattice else 0, comm_lattices=count if is_lattice and comm_isgs else 0,
        ))

    def merge(self, other: CountLedger) -> None:
        if other.order != self.order:
            raise ValueError(f"Cannot merge a ledger of order {other.order} into one of order {self.order}")
        for key, cell in other.cells.items():
            self.cells.setdefault(key, CellCounts()).add(cell)
        self.statistics.add(other.statistics)

    def rows(self) -> list[tuple[int, tuple[int, ...], CellCounts]]:
        """Cells by number of idempotents, then shapes in reverse lexicographic order."""
        keys = sorted(self.cells, key=lambda key: (key[0], tuple(-part for part in key[1])))
        return [(m, shape, self.cells[(m, shape)]) for m, shape in keys]

    def totals(self) -> CellCounts:
        total = CellCounts()
        for cell in self.cells.values():
            total.add(cell)
        return total

    def to_dataframe(self) -> pd.DataFrame:
        records = [
            [self.order, m, format_shape(shape), cell.isgs, cell.comm_isgs, cell.ims, cell.comm_ims,
             cell.semilattices, cell.lattices, cell.comm_semilattices, cell.comm_lattices]
            for m, shape, cell in self.rows()
        ]
        return pd.DataFrame(records, columns=FileConstants.BREAKDOWN_COLUMNS)
