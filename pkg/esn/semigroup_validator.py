# semigroup_validator.py
# Libraries
from collections import Counter
from typing import Optional, Sequence
# Personal libraries
from esn.inverse_semigroup import InverseSemigroup
from groupoid.natural_basis import BasisOrder
from utils.bitset import bits, mask_of


def validate_inverse_semigroup(table: Sequence[Sequence[int]]) -> bool:
    """
    Checks a magma table for associativity, unique inverses (x y x = x and y x y = y) and
    commuting idempotents.
    """
    n = len(table)
    rng = range(n)
    if any(len(row) != n or any(not 0 <= x < n for x in row) for row in table):
        return False
    for a in rng:
        for b in rng:
            ab = table[a][b]
            for c in rng:
                if table[ab][c] != table[a][table[b][c]]:
                    return False
    for x in rng:
        inverses = [y for y in rng if table[table[x][y]][x] == x and table[table[y][x]][y] == y]
        if len(inverses) != 1:
            return False
    idempotents = [e for e in rng if table[e][e] == e]
    return all(table[e][f] == table[f][e] for e in idempotents for f in idempotents)


def expanded_product(order: BasisOrder, s: int, t: int) -> Optional[int]:
    """
    Multiplies the formal sums of the elements below s and below t in the groupoid and returns
    the u whose own down-set sum equals the result, or None when no such u exists.
    """
    basis = order.basis
    terms: Counter = Counter()
    for a in bits(order.below[s]):
        for b in bits(order.below[t]):
            ab = basis.compose(a, b)
            if ab is not None:
                terms[ab] += 1
    if any(count != 1 for count in terms.values()):
        return None
    mask = mask_of(terms)
    return next((u for u in range(basis.size) if order.below[u] == mask), None)


def anti_isomorphic_copy(semigroup: InverseSemigroup) -> InverseSemigroup:
    """
    The opposite semigroup (s * t := t s). Element s keeps its index and takes the basis
    coordinates of its inverse, which are its coordinates in the opposite semigroup.
    """
    table = tuple(tuple(semigroup.table[t][s] for t in range(semigroup.size)) for s in range(semigroup.size))
    elements = tuple(semigroup.elements[semigroup.inv[s]] for s in range(semigroup.size))
    return InverseSemigroup(semilattice=semigroup.semilattice, partition=semigroup.partition,
                            group_names=semigroup.group_names, elements=elements,
                            table=table, inv=semigroup.inv)
