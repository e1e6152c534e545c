# builders.py
# Personal libraries
from groupoid.natural_basis import NaturalBasis, e_groupoid
from groups.group_catalog import GroupCatalog
from orders.poset import MeetSemilattice
from shapes.d_partition import DPartition, GroupAssignment

CATALOG = GroupCatalog(max_order=4)

CHAIN_2 = MeetSemilattice.from_covers(2, [(0, 1)])
VEE = MeetSemilattice.from_covers(3, [(0, 1), (0, 2)])


def build_basis(semilattice: MeetSemilattice, blocks: dict[tuple[int, ...], str]) -> NaturalBasis:
    """Basis over the given blocks, each mapped to a catalog group name."""
    paired = sorted(blocks.items(), key=lambda item: (-len(item[0]), min(item[0])))
    partition = DPartition.from_blocks([block for block, _ in paired])
    assignment = GroupAssignment(groups=tuple(CATALOG.by_name(name) for _, name in paired))
    return e_groupoid(semilattice, partition, assignment)


def brandt(group: str = 'C1', bottom: str = 'C1') -> NaturalBasis:
    return build_basis(VEE, {(1, 2): group, (0,): bottom})


def chain(top: str, bottom: str) -> NaturalBasis:
    return build_basis(CHAIN_2, {(1,): top, (0,): bottom})
