# inverse_semigroup_enumerator.py
# Libraries
import multiprocessing as mp
import sys
from typing import Callable, Iterable, Iterator, Optional
from tqdm import tqdm
# Interfaces
from enumerator.iinverse_semigroup_enumerator import IInverseSemigroupEnumerator
# Constants
from config.system_config import SystemConfig
# Personal libraries
from enumerator.count_ledger import CountLedger, SearchStatistics
from esn.esn_builder import ESNBuilder
from esn.inverse_semigroup import InverseSemigroup
from groupoid.basis_order_search import BasisOrderSearch
from groupoid.natural_basis import e_groupoid
from groups.group_catalog import GroupCatalog
from isomorphism.isg_store import IsgStore
from isomorphism.isomorphism_tester import IsomorphismTester
from orders.poset import MeetSemilattice
from orders.semilattice_generator import SemilatticeGenerator
from shapes.d_partition import Composition, DPartition, GroupAssignment, Shape
from shapes.shape_planner import ShapePlanner
from utils.logging_setup import log_enumerator

# Per-process task runner, installed by the pool initializer
_WORKER = None


class SemilatticeTask:
    """
    Builds every inverse semigroup of order n over one semilattice, one store per shape.
    Holds the run-wide read-only inputs: group catalog, admissible compositions.
    """

    def __init__(self, n: int, compositions: dict[Shape, list[Composition]], keep_semigroups: bool):
        self.n = n
        self.compositions = compositions
        self.keep_semigroups = keep_semigroups
        self.catalog = GroupCatalog(max_order=min(n, SystemConfig.MAX_GROUP_ORDER))
        self.planner = ShapePlanner(self.catalog)
        self.search = BasisOrderSearch()
        self.builder = ESNBuilder()
        self.tester = IsomorphismTester(self.catalog)

    def run(self, down: tuple[int, ...], flush: Optional[Callable[[list[InverseSemigroup]], None]] = None
            ) -> tuple[CountLedger, list[list[InverseSemigroup]]]:
        """
        Fills one store per shape. Each store is passed to `flush` as soon as it is complete, or
        returned with the ledger when no flush is given (worker processes).
        """
        semilattice = MeetSemilattice.from_down(down)
        m = semilattice.size
        is_lattice = semilattice.has_maximum()
        ledger = CountLedger(order=self.n)
        flushed = []
        for shape in self.planner.partitions(m):
            compositions = self.compositions.get(shape, [])
            if not compositions:
                continue
            store = self.fill_store(semilattice, shape, compositions)
            semigroups = store.semigroups()
            commutative = [s.is_commutative() for s in semigroups]
            comm = sum(commutative)
            ledger.record(m, shape, isgs=len(semigroups), comm_isgs=comm,
                          ims=len(semigroups) if is_lattice else 0, comm_ims=comm if is_lattice else 0,
                          is_lattice=is_lattice)
            ledger.statistics.add(SearchStatistics(
                generated=store.generated, accepted=len(store), accepted_immediately=store.accepted_immediately,
                never_tested=store.never_tested(), iso_tests=store.iso_tests,
            ))
            if self.keep_semigroups and semigroups:
                if flush is not None:
                    flush(semigroups)
                else:
                    flushed.append(semigroups)
        return ledger, flushed

    def fill_store(self, semilattice: MeetSemilattice, shape: Shape, compositions: Iterable[Composition],
                   partitions: Optional[list[DPartition]] = None) -> IsgStore:
        store = IsgStore()
        if partitions is None:
            partitions = self.planner.d_partitions(semilattice, shape)
        for composition in compositions:
            for partition in partitions:
                for assignment in self.planner.group_maps(partition, composition):
                    self.add_basis(semilattice, partition, assignment, store)
        return store

    def add_basis(self, semilattice: MeetSemilattice, partition: DPartition, assignment: GroupAssignment,
                  store: IsgStore) -> None:
        basis = e_groupoid(semilattice, partition, assignment)
        for order in self.search.g_posets(basis):
            semigroup = self.builder.esn(basis, order)
            key = self.tester.invariants(semigroup)
            tested = bool(store.bucket(key))
            if self.tester.is_new(semigroup, key, store):
                store.add(semigroup, key, tested=tested)


def _init_worker(n: int, compositions: dict, keep_semigroups: bool) -> None:
    global _WORKER
    _WORKER = SemilatticeTask(n, compositions, keep_semigroups)


def _run_task(down: tuple[int, ...]):
    return _WORKER.run(down)


class InverseSemigroupEnumerator(IInverseSemigroupEnumerator):
    def __init__(self, threads: int = 1, progress: bool = False, generator: Optional[SemilatticeGenerator] = None):
        """
        :param threads: Worker processes; 1 runs every task in the calling process.
        :param progress: Show a progress bar ticking once per semilattice.
        :param generator: Source of the semilattices of idempotents.
        """
        if threads < 1:
            raise ValueError(f"Thread count must be at least 1, got {threads}")
        self.threads = threads
        self.progress = progress
        self.generator = generator if generator else SemilatticeGenerator()

    def enumerate(self, n: int, sink: Optional[Callable[[list[InverseSemigroup]], None]] = None,
                  monoids_only: bool = False) -> CountLedger:
        log_enumerator.info(f"Func: enumerate, Start order {n} (monoids only: {monoids_only})")
        ledger = self._run(n, range(1, n + 1), keep_semigroups=sink is not None, monoids_only=monoids_only, sink=sink)
        self._log_totals(ledger)
        return ledger

    def enumerate_counts_only(self, n: int, monoids_only: bool = False) -> CountLedger:
        log_enumerator.info(f"Func: enumerate_counts_only, Start order {n} (monoids only: {monoids_only})")
        ledger = self._run(n, range(1, n), keep_semigroups=False, monoids_only=monoids_only, sink=None)
        # Order-n idempotents force the semigroup to be its semilattice
        shape = (1,) * n
        if monoids_only:
            lattices = sum(1 for _ in self.generator.lattices(n))
            ledger.record(n, shape, 1, 1, 1, 1, is_lattice=True, count=lattices)
            semilattices = lattices
        else:
            semilattices = lattices = 0
            for semilattice in self.generator.meet_semilattices(n):
                semilattices += 1
                lattices += semilattice.has_maximum()
            if lattices:
                ledger.record(n, shape, 1, 1, 1, 1, is_lattice=True, count=lattices)
            if semilattices > lattices:
                ledger.record(n, shape, 1, 1, 0, 0, is_lattice=False, count=semilattices - lattices)
        ledger.statistics.add(SearchStatistics(generated=semilattices, accepted=semilattices,
                                               accepted_immediately=semilattices, never_tested=semilattices))
        self._log_totals(ledger)
        return ledger

    def enumerate_fixed(self, semilattice: MeetSemilattice, partition: DPartition,
                        assignment: GroupAssignment) -> list[InverseSemigroup]:
        task = SemilatticeTask(sum(len(b) ** 2 * g.order for b, g in zip(partition.blocks, assignment.groups)),
                               compositions={}, keep_semigroups=True)
        if not task.planner.is_d_partition(semilattice, partition):
            raise ValueError(f"Blocks {partition.blocks} are not a D-partition of the semilattice")
        if len(assignment) != len(partition):
            raise ValueError(f"{len(assignment)} groups given for {len(partition)} blocks")
        store = IsgStore()
        task.add_basis(semilattice, partition, assignment, store)
        log_enumerator.info(f"Func: enumerate_fixed, {len(store)} semigroups from {store.generated} orders")
        return store.semigroups()

    def _run(self, n: int, sizes: range, keep_semigroups: bool, monoids_only: bool,
             sink: Optional[Callable[[list[InverseSemigroup]], None]]) -> CountLedger:
        if n < 1:
            raise ValueError(f"Order must be a positive integer, got {n}")
        planner = ShapePlanner()
        compositions = {
            shape: planner.admissible_compositions(n, shape)
            for m in sizes for shape in planner.partitions(m)
        }
        ledger = CountLedger(order=n)
        tasks = self._tasks(sizes, monoids_only)
        with tqdm(desc=f"Order {n}", unit='semilattice', file=sys.stdout, disable=not self.progress) as progress_bar:
            for part, flushed in self._map(n, compositions, keep_semigroups, tasks, sink):
                ledger.merge(part)
                if sink is not None:
                    for semigroups in flushed:
                        sink(semigroups)
                progress_bar.update(1)
        return ledger

    def _tasks(self, sizes: range, monoids_only: bool) -> Iterator[tuple[int, ...]]:
        for m in sizes:
            count = 0
            source = self.generator.lattices(m) if monoids_only else self.generator.meet_semilattices(m)
            for semilattice in source:
                count += 1
                yield semilattice.down
            log_enumerator.debug(f"Func: _tasks, {count} semilattices with {m} idempotents")

    def _map(self, n: int, compositions: dict, keep_semigroups: bool, tasks: Iterator[tuple[int, ...]],
             sink: Optional[Callable[[list[InverseSemigroup]], None]]):
        if self.threads == 1:
            task = SemilatticeTask(n, compositions, keep_semigroups)
            for down in tasks:
                yield task.run(down, flush=sink)
            return
        try:
            context = mp.get_context('fork')
        except ValueError:
            context = mp.get_context()
        with context.Pool(processes=self.threads, initializer=_init_worker,
                          initargs=(n, compositions, keep_semigroups)) as pool:
            yield from pool.imap(_run_task, tasks, chunksize=SystemConfig.POOL_CHUNK_SIZE)

    @staticmethod
    def _log_totals(ledger: CountLedger) -> None:
        totals = ledger.totals()
        log_enumerator.info(f"Order {ledger.order}: {totals.isgs} inverse semigroups, {totals.comm_isgs} commutative, "
                            f"{totals.ims} monoids, {totals.comm_ims} commutative monoids")
        stats = ledger.statistics.summary()
        log_enumerator.info(f"Order {ledger.order}: {stats['accepted_immediately_pct']:.1f}% accepted immediately, "
                            f"{stats['never_tested_pct']:.1f}% never tested, {stats['iso_tests']} isomorphism tests")
