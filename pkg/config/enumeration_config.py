# enumeration_config.py
# Libraries
from dataclasses import dataclass
from typing import Optional
# Constants
from config.enumeration_constants import EnumerationConstants
from config.system_config import SystemConfig


@dataclass(frozen=True)
class EnumerationConfig:
    """
    Run configuration of the enumerator.

    Attributes:
        order (int): Order n of the inverse semigroups to enumerate.
        mode (str): One of 'full', 'fixed' or 'counts'.
        threads (int): Number of worker processes; 1 runs in-process.
        breakdown_path (str, optional): Where the per-(idempotents, shape) CSV is written.
        cayley_dir (str, optional): Directory receiving one Cayley table file per semigroup.
        semilattice_path (str, optional): Semilattice file used by the fixed mode.
        emit_subcounts (bool): Keep the commutative / monoid columns in the rendered breakdown.
        progress (bool): Show a progress bar per number of idempotents.
        monoids_only (bool): Iterate over lattices only, giving the inverse monoids.
    """
    order: int
    mode: str = EnumerationConstants.DEFAULT_MODE
    threads: int = 1
    breakdown_path: Optional[str] = None
    cayley_dir: Optional[str] = None
    semilattice_path: Optional[str] = None
    emit_subcounts: bool = True
    progress: bool = False
    monoids_only: bool = False

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"Order must be a positive integer, got {self.order!r}")
        if not isinstance(self.threads, int) or self.threads < 1:
            raise ValueError(f"Thread count must be a positive integer, got {self.threads!r}")
        if self.mode not in EnumerationConstants.MODES:
            raise ValueError(f"Unknown mode {self.mode!r}, expected one of {EnumerationConstants.MODES}")
        if self.order > SystemConfig.MAX_GROUP_ORDER:
            raise ValueError(f"Order {self.order} exceeds the group catalog limit {SystemConfig.MAX_GROUP_ORDER}")

    @property
    def emits_tables(self) -> bool:
        return self.cayley_dir is not None and self.mode != EnumerationConstants.COUNTS_MODE
