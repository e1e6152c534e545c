# structure_codec.py
# Libraries
from typing import Sequence
# Constants
from config.file_constants import FileConstants
# Personal libraries
from orders.poset import MeetSemilattice


def format_semilattice(semilattice: MeetSemilattice) -> str:
    """Serializes a semilattice as `m:u1<v1,u2<v2,...` with covers sorted by (u, v)."""
    covers = FileConstants.COVER_SEPARATOR.join(
        f"{lower}{FileConstants.COVER_SYMBOL}{upper}" for lower, upper in semilattice.covers()
    )
    return f"{semilattice.size}{FileConstants.ORDER_SEPARATOR}{covers}"


def parse_semilattice(line: str) -> MeetSemilattice:
    """
    Parses one cover-relation line.

    Raises:
        ValueError: If the line is malformed or does not describe a meet-semilattice.
    """
    text = line.strip()
    size_text, separator, covers_text = text.partition(FileConstants.ORDER_SEPARATOR)
    if not separator or not size_text.isdigit():
        raise ValueError(f"Malformed semilattice line {line!r}, expected 'm:u<v,...'")
    size = int(size_text)
    covers = []
    if covers_text:
        for token in covers_text.split(FileConstants.COVER_SEPARATOR):
            lower, symbol, upper = token.strip().partition(FileConstants.COVER_SYMBOL)
            if not symbol or not lower.isdigit() or not upper.isdigit():
                raise ValueError(f"Malformed cover {token!r} in semilattice line {line!r}")
            covers.append((int(lower), int(upper)))
    return MeetSemilattice.from_covers(size, covers)


def parse_d_partition(text: str) -> tuple[tuple[int, ...], ...]:
    """Parses `e1,e2|e3` into blocks of element indices, in the given order."""
    blocks = []
    for block_text in text.split(FileConstants.BLOCK_SEPARATOR):
        tokens = [token.strip() for token in block_text.split(FileConstants.ELEMENT_SEPARATOR)]
        if not tokens or not all(token.isdigit() for token in tokens):
            raise ValueError(f"Malformed D-partition block {block_text!r} in {text!r}")
        blocks.append(tuple(sorted(int(token) for token in tokens)))
    return tuple(blocks)


def format_d_partition(blocks: Sequence[Sequence[int]]) -> str:
    return FileConstants.BLOCK_SEPARATOR.join(
        FileConstants.ELEMENT_SEPARATOR.join(str(x) for x in block) for block in blocks
    )


def parse_group_names(text: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in text.split(FileConstants.ELEMENT_SEPARATOR))
    if not all(names):
        raise ValueError(f"Malformed group list {text!r}, expected names such as 'C1,C2'")
    return names


def format_shape(parts: Sequence[int]) -> str:
    return FileConstants.SHAPE_SEPARATOR.join(str(part) for part in parts)


def parse_line_reference(reference: str) -> tuple[str, int]:
    """Splits `FILE:LINE`; the line number is 1-based."""
    path, separator, line_text = reference.rpartition(FileConstants.LINE_REFERENCE_SEPARATOR)
    if not separator or not path or not line_text.isdigit():
        raise ValueError(f"Malformed reference {reference!r}, expected FILE:LINE")
    return path, int(line_text)
