# integer_partitions.py
from typing import Iterator


def integer_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """
    Yields the partitions of n as weakly decreasing tuples in reverse lexicographic order,
    starting with (n,) and ending with (1, ..., 1), using the ZS1 algorithm.
    """
    if n < 1:
        raise ValueError(f"Cannot partition {n}, a positive integer is required")
    if n == 1:
        yield (1,)
        return
    x = [1] * n
    x[0] = n
    m, h = 1, 1
    yield (n,)
    while x[0] != 1:
        if x[h - 1] == 2:
            m += 1
            x[h - 1] = 1
            h -= 1
        else:
            r = x[h - 1] - 1
            t = m - h + 1
            x[h - 1] = r
            while t >= r:
                h += 1
                x[h - 1] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h - 1] = t
        yield tuple(x[:m])
