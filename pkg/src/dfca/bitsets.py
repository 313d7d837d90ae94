"""Index sets encoded as Python ints, bit i standing for element i."""

from .errors import StructureError


def universe(size):
    """The full set over ``size`` indices."""
    if size < 0:
        raise StructureError(f"universe size must be non-negative, got {size}")
    return (1 << size) - 1


def from_indices(indices, size):
    """Build a set from indices, rejecting anything outside 0..size-1."""
    bits = 0
    for i in indices:
        if not 0 <= i < size:
            raise StructureError(f"index {i} out of range for size {size}")
        bits |= 1 << i
    return bits


def to_indices(bits):
    """Member indices in ascending order."""
    return list(iter_indices(bits))


def iter_indices(bits):
    """Yield member indices in ascending order."""
    if bits < 0:
        raise StructureError("bitsets must be non-negative ints")
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def is_subset(a, b):
    return a & ~b == 0


def count(bits):
    return bits.bit_count()
