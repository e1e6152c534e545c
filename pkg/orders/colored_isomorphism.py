# colored_isomorphism.py
# Libraries
from collections import Counter
from typing import Iterator
# Personal libraries
from orders.canonical_labeler import CanonicalLabeler
from orders.poset import ColoredPoset


class ColoredIsomorphismFinder:
    """
    Enumerates the colour-preserving isomorphisms between two coloured posets by backtracking.
    Candidates for each element are restricted to the elements of the other poset carrying the
    same refined colour, computed once on the disjoint union so that colours are comparable.
    """

    def __init__(self, labeler: CanonicalLabeler = None):
        self.labeler = labeler if labeler else CanonicalLabeler()

    def colored_isomorphisms(self, source: ColoredPoset, target: ColoredPoset) -> Iterator[tuple[int, ...]]:
        """
        Yields every bijection phi (as a tuple, phi[a] = image of a) with a <= b iff phi(a) <= phi(b)
        and colour(a) == colour(phi(a)). Yields nothing when sizes or colour multisets differ.
        """
        n = source.size
        if n != target.size:
            return
        if Counter(source.colors) != Counter(target.colors):
            return
        down = list(source.poset.down) + [row << n for row in target.poset.down]
        up = list(source.poset.up) + [row << n for row in target.poset.up]
        ranks = self.labeler.refined_colors(down, up, list(source.colors) + list(target.colors))
        source_ranks, target_ranks = ranks[:n], ranks[n:]
        if Counter(source_ranks) != Counter(target_ranks):
            return

        by_rank: dict[int, list[int]] = {}
        for b, rank in enumerate(target_ranks):
            by_rank.setdefault(rank, []).append(b)
        order = sorted(range(n), key=lambda a: (len(by_rank[source_ranks[a]]), a))
        source_leq = source.poset.leq
        target_leq = target.poset.leq
        image = [-1] * n
        used = [False] * n

        def backtrack(depth: int) -> Iterator[tuple[int, ...]]:
            if depth == n:
                yield tuple(image)
                return
            a = order[depth]
            for b in by_rank[source_ranks[a]]:
                if used[b]:
                    continue
                consistent = True
                for prior in order[:depth]:
                    pb = image[prior]
                    if source_leq(prior, a) != target_leq(pb, b) or source_leq(a, prior) != target_leq(b, pb):
                        consistent = False
                        break
                if not consistent:
                    continue
                image[a] = b
                used[b] = True
                yield from backtrack(depth + 1)
                used[b] = False
                image[a] = -1

        yield from backtrack(0)
