# esn_builder.py
# Interfaces
from esn.iesn_builder import IESNBuilder
# Personal libraries
from esn.inverse_semigroup import InverseSemigroup
from groupoid.natural_basis import BasisOrder, NaturalBasis
from utils.bitset import bits
from utils.logging_setup import log_esn_builder


class ESNHypothesisError(RuntimeError):
    """An order on a natural basis lacks the unique restrictions the construction relies on."""


class ESNBuilder(IESNBuilder):
    def esn(self, basis: NaturalBasis, order: BasisOrder) -> InverseSemigroup:
        restrictions, corestrictions = self._restrictions(basis, order)
        meet = basis.semilattice.meet
        table = []
        for s in range(basis.size):
            row = []
            for t in range(basis.size):
                e = meet[basis.dom(s)][basis.ran(t)]
                u = restrictions[s].get(e)
                v = corestrictions[t].get(e)
                if u is None or v is None:
                    raise ESNHypothesisError(f"No restriction of {s} or {t} to idempotent {e}")
                row.append(basis.compose(u, v))
            table.append(tuple(row))
        semigroup = InverseSemigroup(semilattice=basis.semilattice, partition=basis.partition,
                                     group_names=basis.assignment.names, elements=basis.elements,
                                     table=tuple(table), inv=basis.inv)
        log_esn_builder.debug(f"Built a semigroup of order {semigroup.size} with {semigroup.idempotent_count} idempotents")
        return semigroup

    def multiply(self, order: BasisOrder, s: int, t: int) -> int:
        basis = order.basis
        e = basis.semilattice.meet[basis.dom(s)][basis.ran(t)]
        u = self._unique(basis, order.below[s], lambda x: basis.dom(x) == e, s, e)
        v = self._unique(basis, order.below[t], lambda x: basis.ran(x) == e, t, e)
        return basis.compose(u, v)

    @staticmethod
    def _unique(basis: NaturalBasis, mask: int, condition, s: int, e: int) -> int:
        found = [x for x in bits(mask) if condition(x)]
        if len(found) != 1:
            raise ESNHypothesisError(f"{len(found)} elements below {s} fit idempotent {e}, expected exactly one")
        return found[0]

    @staticmethod
    def _restrictions(basis: NaturalBasis, order: BasisOrder) -> tuple[list[dict[int, int]], list[dict[int, int]]]:
        """restrictions[s][e] is the element below s with domain e; corestrictions use the range."""
        restrictions: list[dict[int, int]] = []
        corestrictions: list[dict[int, int]] = []
        for s in range(basis.size):
            by_dom: dict[int, int] = {}
            by_ran: dict[int, int] = {}
            for u in bits(order.below[s]):
                if basis.dom(u) in by_dom or basis.ran(u) in by_ran:
                    raise ESNHypothesisError(f"Element {s} has two restrictions through {u}")
                by_dom[basis.dom(u)] = u
                by_ran[basis.ran(u)] = u
            restrictions.append(by_dom)
            corestrictions.append(by_ran)
        return restrictions, corestrictions
