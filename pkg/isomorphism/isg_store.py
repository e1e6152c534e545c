# isg_store.py
# Libraries
from dataclasses import dataclass, field
# Personal libraries
from esn.inverse_semigroup import InverseSemigroup


@dataclass(frozen=True)
class InvariantKey:
    """
    Isomorphism invariant of semigroups sharing one semilattice of idempotents.

    Attributes:
        lev (tuple): Sizes of the down-levels of the natural order.
        xmap (tuple): Per up-down level of the semilattice, identified by its least element, the
            sorted pairs (size of the D-class within E, maximal subgroup name) over its members.
    """
    lev: tuple[int, ...]
    xmap: tuple[tuple[int, tuple[tuple[int, str], ...]], ...]


@dataclass
class _Entry:
    semigroup: InverseSemigroup
    tested: bool = False


@dataclass
class IsgStore:
    """
    Semigroups accepted for one (semilattice, shape) pair, bucketed by invariant key, together
    with the figures showing how often the key alone settled novelty.

    Attributes:
        generated (int): Semigroups offered to the store.
        accepted_immediately (int): Semigroups accepted because no stored one shared their key.
        iso_tests (int): Pairwise isomorphism tests run.
    """
    generated: int = 0
    accepted_immediately: int = 0
    iso_tests: int = 0
    _buckets: dict = field(default_factory=dict, init=False, repr=False)
    _order: list = field(default_factory=list, init=False, repr=False)

    def bucket(self, key: InvariantKey) -> list[_Entry]:
        return self._buckets.get(key, [])

    def add(self, semigroup: InverseSemigroup, key: InvariantKey, tested: bool = False) -> None:
        entry = _Entry(semigroup=semigroup, tested=tested)
        self._buckets.setdefault(key, []).append(entry)
        self._order.append(entry)

    def semigroups(self) -> list[InverseSemigroup]:
        """Stored semigroups in acceptance order."""
        return [entry.semigroup for entry in self._order]

    def never_tested(self) -> int:
        """Stored semigroups that never took part in an isomorphism test."""
        return sum(1 for entry in self._order if not entry.tested)

    def __len__(self) -> int:
        return len(self._order)
