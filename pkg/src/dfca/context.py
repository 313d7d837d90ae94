"""Formal contexts and classical attribute implications.

A formal context is a table: a finite set of objects, a finite set of
attributes, and an incidence relation saying which object has which
attribute. Object and attribute sets are bitsets (ints) over the index
universes fixed by declaration order; all outputs list indices ascending.
"""

from dataclasses import dataclass

from . import bitsets
from .errors import BindingError, StructureError


class FormalContext:
    """An immutable object/attribute incidence table.

    ``intent`` and ``extent`` are the two derivation operators: the
    attributes shared by a set of objects, and the objects having every
    attribute of a set. Both map the empty set to the opposite universe,
    and together they form a Galois connection.
    """

    __slots__ = ("_objects", "_attributes", "_rows", "_cols", "_oindex", "_aindex")

    def __init__(self, objects, attributes, incidence):
        objects = tuple(objects)
        attributes = tuple(attributes)
        oindex = {}
        for i, name in enumerate(objects):
            if name in oindex:
                raise StructureError(f"duplicate object name {name!r}")
            oindex[name] = i
        aindex = {}
        for j, name in enumerate(attributes):
            if name in aindex:
                raise StructureError(f"duplicate attribute name {name!r}")
            aindex[name] = j
        rows = tuple(incidence)
        if len(rows) != len(objects):
            raise StructureError(
                f"expected {len(objects)} incidence rows, got {len(rows)}"
            )
        full = bitsets.universe(len(attributes))
        for i, row in enumerate(rows):
            if not isinstance(row, int) or row < 0 or row & ~full:
                raise StructureError(
                    f"incidence row {i} does not fit {len(attributes)} attributes"
                )
        cols = [0] * len(attributes)
        for i, row in enumerate(rows):
            for j in bitsets.iter_indices(row):
                cols[j] |= 1 << i
        self._objects = objects
        self._attributes = attributes
        self._rows = rows
        self._cols = tuple(cols)
        self._oindex = oindex
        self._aindex = aindex

    @classmethod
    def from_pairs(cls, objects, attributes, pairs):
        """Build a context from (object name, attribute name) incidences."""
        objects = tuple(objects)
        attributes = tuple(attributes)
        oindex = {name: i for i, name in enumerate(objects)}
        aindex = {name: j for j, name in enumerate(attributes)}
        rows = [0] * len(objects)
        for obj, attr in pairs:
            if obj not in oindex:
                raise BindingError(f"unknown object {obj!r}")
            if attr not in aindex:
                raise BindingError(f"unknown attribute {attr!r}")
            rows[oindex[obj]] |= 1 << aindex[attr]
        return cls(objects, attributes, rows)

    @property
    def objects(self):
        return self._objects

    @property
    def attributes(self):
        return self._attributes

    @property
    def n_objects(self):
        return len(self._objects)

    @property
    def n_attributes(self):
        return len(self._attributes)

    @property
    def object_universe(self):
        return bitsets.universe(len(self._objects))

    @property
    def attribute_universe(self):
        return bitsets.universe(len(self._attributes))

    def object_index(self, name):
        try:
            return self._oindex[name]
        except KeyError:
            raise BindingError(f"unknown object {name!r}") from None

    def attribute_index(self, name):
        try:
            return self._aindex[name]
        except KeyError:
            raise BindingError(f"unknown attribute {name!r}") from None

    def object_set(self, names):
        """Bitset of the named objects."""
        bits = 0
        for name in names:
            bits |= 1 << self.object_index(name)
        return bits

    def attribute_set(self, names):
        """Bitset of the named attributes."""
        bits = 0
        for name in names:
            bits |= 1 << self.attribute_index(name)
        return bits

    def object_names(self, bits):
        """Names of the member objects, in declaration order."""
        self._check_objects(bits)
        return tuple(self._objects[i] for i in bitsets.iter_indices(bits))

    def attribute_names(self, bits):
        """Names of the member attributes, in declaration order."""
        self._check_attributes(bits)
        return tuple(self._attributes[j] for j in bitsets.iter_indices(bits))

    def row(self, i):
        """Attributes of object i, as a bitset."""
        if not 0 <= i < len(self._objects):
            raise StructureError(f"object index {i} out of range")
        return self._rows[i]

    def column(self, j):
        """Objects having attribute j, as a bitset."""
        if not 0 <= j < len(self._attributes):
            raise StructureError(f"attribute index {j} out of range")
        return self._cols[j]

    def intent(self, object_bits):
        """Attributes common to every object in the set (all of M for the empty set)."""
        self._check_objects(object_bits)
        result = self.attribute_universe
        for i in bitsets.iter_indices(object_bits):
            result &= self._rows[i]
        return result

    def extent(self, attribute_bits):
        """Objects having every attribute in the set (all of G for the empty set)."""
        self._check_attributes(attribute_bits)
        result = self.object_universe
        for j in bitsets.iter_indices(attribute_bits):
            result &= self._cols[j]
        return result

    def implication(self, premises, conclusions):
        """AttributeImplication from attribute names."""
        return AttributeImplication(
            self.attribute_set(premises), self.attribute_set(conclusions)
        )

    def _check_objects(self, bits):
        if bits < 0 or bits & ~self.object_universe:
            raise StructureError("object set out of range for this context")

    def _check_attributes(self, bits):
        if bits < 0 or bits & ~self.attribute_universe:
            raise StructureError("attribute set out of range for this context")

    def __eq__(self, other):
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self._objects == other._objects
            and self._attributes == other._attributes
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self._objects, self._attributes, self._rows))

    def __repr__(self):
        return (
            f"FormalContext({len(self._objects)} objects, "
            f"{len(self._attributes)} attributes)"
        )


@dataclass(frozen=True)
class AttributeImplication:
    """A -> B over one context's attribute universe, both sides bitsets."""

    premise: int
    conclusion: int

    def __post_init__(self):
        if self.premise < 0 or self.conclusion < 0:
            raise StructureError("implication sides must be non-negative bitsets")


def set_satisfies(attribute_bits, implication):
    """Does an attribute set respect A -> B (A not contained, or B contained)?"""
    if not bitsets.is_subset(implication.premise, attribute_bits):
        return True
    return bitsets.is_subset(implication.conclusion, attribute_bits)


def implication_holds(context, implication):
    """Does A -> B hold in the context, i.e. is extent(A) contained in extent(B)?"""
    return bitsets.is_subset(
        context.extent(implication.premise), context.extent(implication.conclusion)
    )


def closure_under(implications, attribute_bits):
    """Smallest superset of the attribute set closed under every implication."""
    result = attribute_bits
    changed = True
    while changed:
        changed = False
        for impl in implications:
            if bitsets.is_subset(impl.premise, result) and not bitsets.is_subset(
                impl.conclusion, result
            ):
                result |= impl.conclusion
                changed = True
    return result


def implication_follows(implications, implication):
    """Does the implication hold in every attribute set satisfying the others?"""
    closed = closure_under(implications, implication.premise)
    return bitsets.is_subset(implication.conclusion, closed)
