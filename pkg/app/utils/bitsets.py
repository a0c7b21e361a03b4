"""Integer-backed bitsets for vertex and edge sets."""

from typing import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    """Create a bitset from bit indices."""
    result = 0
    for i in indices:
        result |= 1 << i
    return result


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit indices in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(a: int, b: int) -> bool:
    """Check whether bitset a is contained in bitset b."""
    return a & ~b == 0


def minimize_masks(masks: Iterable[int]) -> list[int]:
    """Keep the inclusion-minimal bitsets, dropping duplicates and supersets."""
    kept: list[int] = []
    for mask in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any(is_subset(k, mask) for k in kept):
            kept.append(mask)
    return kept
