"""
Finite monoids as multiplication tables, homomorphisms and actions

Elements are dense indices 0..size-1. Entry (i, j) of a table is the
product i·j, in that order, and the identity index is stored explicitly.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Literal, Optional, Tuple

import numpy as np

from crossed.errors import (
    BadIdentity,
    CompositionFails,
    IdentityNotFixed,
    IdentityNotPreserved,
    IndexOutOfRange,
    MalformedInput,
    NotAssociative,
    NotEndomorphism,
    ProductNotPreserved,
    UnitActFails,
)
from crossed.laws import DEFAULT_CHUNK, first_witness, frozen, table_key

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]
ProductRule = Callable[[np.ndarray, np.ndarray], np.ndarray]


class TableEquality:
    """Equality and hashing through a tuple of table images"""

    def key(self) -> Tuple:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return self.key() == other.key()  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(self.key())


@dataclass(frozen=True, eq=False)
class FiniteMonoid(TableEquality):
    """
    A finite monoid on the indices 0..size-1

    Either `table` holds the full multiplication table, or `rule` computes
    products of index arrays (used for monoids too large to tabulate).
    """

    size: int
    identity: int
    table: Optional[np.ndarray] = None
    rule: Optional[ProductRule] = field(default=None, repr=False)
    name: str = "M"

    def mul(self, x, y) -> np.ndarray:
        """Multiply index arrays elementwise (broadcasting)"""
        if self.table is not None:
            return self.table[x, y]
        if self.rule is None:
            raise MalformedInput(f"monoid {self.name} has neither table nor rule")
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        return self.rule(x, y)

    @property
    def tabulated(self) -> bool:
        return self.table is not None

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def full_table(self) -> np.ndarray:
        """The multiplication table, computed from the rule when not stored"""
        if self.table is not None:
            return self.table
        x, y = np.meshgrid(self.elements(), self.elements(), indexing="ij")
        return frozen(self.mul(x, y))

    def tabulate(self) -> "FiniteMonoid":
        if self.table is not None:
            return self
        return FiniteMonoid(self.size, self.identity, self.full_table(), name=self.name)

    def renamed(self, name: str) -> "FiniteMonoid":
        return FiniteMonoid(self.size, self.identity, self.table, self.rule, name)

    def key(self) -> Tuple:
        if self.table is None:
            return (self.size, self.identity, id(self.rule))
        return (self.size, self.identity, table_key(self.table))


def associativity_witness(monoid: FiniteMonoid, chunk: int = DEFAULT_CHUNK) -> Optional[Tuple[int, ...]]:
    """Least (i, j, k) with (ij)k != i(jk), searched exhaustively"""
    mul = monoid.mul
    n = monoid.size
    return first_witness((n, n, n), lambda i, j, k: mul(mul(i, j), k) == mul(i, mul(j, k)), chunk)


def identity_witness(monoid: FiniteMonoid) -> Optional[int]:
    """Least i with e·i != i or i·e != i"""
    items = monoid.elements()
    e = monoid.identity
    bad = np.flatnonzero((monoid.mul(e, items) != items) | (monoid.mul(items, e) != items))
    return int(bad[0]) if bad.size else None


def validate_monoid(table, identity: int, name: str = "M", chunk: int = DEFAULT_CHUNK) -> FiniteMonoid:
    """
    Validate a multiplication table as a monoid

    Args:
        table: square matrix of element indices, entry (i, j) = i·j
        identity: index of the claimed two-sided identity
        name: label carried by the monoid
        chunk: block size of the exhaustive associativity search

    Returns:
        The validated FiniteMonoid

    Raises:
        MalformedInput: table not square, empty, non-integral, or identity out of range
        IndexOutOfRange: an entry is not an element index
        NotAssociative: witness triple (i, j, k)
        BadIdentity: witness element i
    """
    array = np.asarray(table)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise MalformedInput(f"monoid {name}: table must be a non-empty square matrix")
    if array.dtype.kind not in "iu":
        raise MalformedInput(f"monoid {name}: entries must be integers")
    size = array.shape[0]
    if not 0 <= identity < size:
        raise MalformedInput(f"monoid {name}: identity {identity} outside 0..{size - 1}")
    out = np.argwhere((array < 0) | (array >= size))
    if out.size:
        raise IndexOutOfRange(f"monoid {name}: entry out of range", tuple(int(v) for v in out[0]))

    monoid = FiniteMonoid(size, int(identity), frozen(array), name=name)
    witness = associativity_witness(monoid, chunk)
    if witness is not None:
        raise NotAssociative(f"monoid {name} is not associative", witness)
    bad = identity_witness(monoid)
    if bad is not None:
        raise BadIdentity(f"monoid {name}: {identity} is not a two-sided identity", (bad,))
    logger.debug("validated monoid %s of order %d", name, size)
    return monoid


def inverse_map(monoid: FiniteMonoid) -> Optional[np.ndarray]:
    """Two-sided inverses of all elements, or None if some element has none"""
    table = monoid.full_table()
    e = monoid.identity
    both = (table == e) & (table.T == e)
    if not both.any(axis=1).all():
        return None
    return frozen(both.argmax(axis=1))


def non_invertible(monoid: FiniteMonoid) -> Optional[int]:
    """Least element without a two-sided inverse"""
    table = monoid.full_table()
    e = monoid.identity
    missing = np.flatnonzero(~((table == e) & (table.T == e)).any(axis=1))
    return int(missing[0]) if missing.size else None


def is_group(monoid: FiniteMonoid) -> bool:
    return non_invertible(monoid) is None


def commutativity_witness(monoid: FiniteMonoid) -> Optional[Tuple[int, int]]:
    table = monoid.full_table()
    bad = np.argwhere(table != table.T)
    return (int(bad[0][0]), int(bad[0][1])) if bad.size else None


def is_commutative(monoid: FiniteMonoid) -> bool:
    return commutativity_witness(monoid) is None


@dataclass(frozen=True, eq=False)
class MonoidHom(TableEquality):
    """A monoid homomorphism given by the image of every source element"""

    source: FiniteMonoid
    target: FiniteMonoid
    map: np.ndarray

    def __call__(self, x):
        return self.map[x]

    def key(self) -> Tuple:
        return (self.source.key(), self.target.key(), table_key(self.map))


def validate_hom(mapping, source: FiniteMonoid, target: FiniteMonoid, chunk: int = DEFAULT_CHUNK) -> MonoidHom:
    """
    Validate an index array as a homomorphism source -> target

    Raises:
        MalformedInput: length differs from source.size
        IndexOutOfRange: an image is not a target index, witness (x,)
        IdentityNotPreserved: witness (source identity,)
        ProductNotPreserved: witness (x, y)
    """
    images = np.asarray(mapping)
    if images.shape != (source.size,) or images.dtype.kind not in "iu":
        raise MalformedInput(f"map must be {source.size} integer images of {source.name}")
    out = np.flatnonzero((images < 0) | (images >= target.size))
    if out.size:
        raise IndexOutOfRange(f"image outside {target.name}", (int(out[0]),))
    images = frozen(images)
    if images[source.identity] != target.identity:
        raise IdentityNotPreserved(f"identity of {source.name} not sent to identity of {target.name}", (source.identity,))
    n = source.size
    witness = first_witness(
        (n, n), lambda x, y: images[source.mul(x, y)] == target.mul(images[x], images[y]), chunk
    )
    if witness is not None:
        raise ProductNotPreserved(f"map {source.name} -> {target.name} does not preserve products", witness)
    return MonoidHom(source, target, images)


def identity_hom(monoid: FiniteMonoid) -> MonoidHom:
    return MonoidHom(monoid, monoid, frozen(monoid.elements()))


def trivial_hom(source: FiniteMonoid, target: FiniteMonoid) -> MonoidHom:
    """The constant map onto the identity of `target`"""
    return MonoidHom(source, target, frozen(np.full(source.size, target.identity)))


def compose_homs(second: MonoidHom, first: MonoidHom) -> MonoidHom:
    """second ∘ first"""
    if first.target != second.source:
        raise MalformedInput(f"cannot compose {first.source.name}->{first.target.name} with {second.source.name}->{second.target.name}")
    return MonoidHom(first.source, second.target, frozen(second.map[first.map]))


@dataclass(frozen=True, eq=False)
class MonoidAction(TableEquality):
    """
    An action of `actor` on the monoid `carrier` by endomorphisms

    table[a, x] is ᵃx for a left action and xᵃ for a right action.
    """

    side: Side
    actor: FiniteMonoid
    carrier: FiniteMonoid
    table: np.ndarray

    def act(self, a, x) -> np.ndarray:
        return self.table[a, x]

    def is_trivial(self) -> bool:
        return bool((self.table == self.carrier.elements()[None, :]).all())

    def key(self) -> Tuple:
        return (self.side, self.actor.key(), self.carrier.key(), table_key(self.table))


@dataclass(frozen=True, eq=False)
class SetAction(TableEquality):
    """A right action of `actor` on the set of indices 0..carrier_size-1; table[a, x] = a∘x"""

    actor: FiniteMonoid
    carrier_size: int
    table: np.ndarray

    def act(self, a, x) -> np.ndarray:
        return self.table[a, x]

    def key(self) -> Tuple:
        return (self.actor.key(), self.carrier_size, table_key(self.table))


def _checked_table(table, rows: int, cols: int, limit: int, what: str) -> np.ndarray:
    array = np.asarray(table)
    if array.shape != (rows, cols) or array.dtype.kind not in "iu":
        raise MalformedInput(f"{what} table must be a {rows}x{cols} integer matrix")
    out = np.argwhere((array < 0) | (array >= limit))
    if out.size:
        raise IndexOutOfRange(f"{what} entry out of range", tuple(int(v) for v in out[0]))
    return frozen(array)


def validate_monoid_action(
    side: Side,
    actor: FiniteMonoid,
    carrier: FiniteMonoid,
    table,
    chunk: int = DEFAULT_CHUNK,
) -> MonoidAction:
    """
    Validate a left or right action of `actor` on the monoid `carrier`

    Laws are checked in the order: unit acts trivially, each element acts by
    an endomorphism, the identity is fixed, composition.

    Raises:
        UnitActFails: witness (x,)
        NotEndomorphism: witness (a, x, y)
        IdentityNotFixed: witness (a,)
        CompositionFails: witness (x, a, b)
    """
    if side not in ("left", "right"):
        raise MalformedInput(f"unknown action side {side!r}")
    t = _checked_table(table, actor.size, carrier.size, carrier.size, f"{side} action")
    A, K = actor, carrier
    items = K.elements()

    bad = np.flatnonzero(t[A.identity] != items)
    if bad.size:
        raise UnitActFails(f"identity of {A.name} moves an element", (int(bad[0]),))

    witness = first_witness(
        (A.size, K.size, K.size), lambda a, x, y: t[a, K.mul(x, y)] == K.mul(t[a, x], t[a, y]), chunk
    )
    if witness is not None:
        raise NotEndomorphism(f"{side} action is not by endomorphisms", witness)

    bad = np.flatnonzero(t[:, K.identity] != K.identity)
    if bad.size:
        raise IdentityNotFixed(f"element of {A.name} moves the identity of {K.name}", (int(bad[0]),))

    def composes(x, a, b):
        if side == "right":
            return t[b, t[a, x]] == t[A.mul(a, b), x]
        return t[a, t[b, x]] == t[A.mul(a, b), x]

    witness = first_witness((K.size, A.size, A.size), composes, chunk)
    if witness is not None:
        raise CompositionFails(f"{side} action does not compose", witness)
    return MonoidAction(side, A, K, t)


def validate_set_action(actor: FiniteMonoid, carrier_size: int, table, chunk: int = DEFAULT_CHUNK) -> SetAction:
    """
    Validate a right action a∘x of `actor` on a set of `carrier_size` points

    Raises:
        UnitActFails: witness (a,) with a∘1 != a
        CompositionFails: witness (a, x, y) with a∘(xy) != (a∘x)∘y
    """
    K = actor
    t = _checked_table(table, carrier_size, K.size, carrier_size, "set action")
    bad = np.flatnonzero(t[:, K.identity] != np.arange(carrier_size))
    if bad.size:
        raise UnitActFails(f"identity of {K.name} moves a point", (int(bad[0]),))
    witness = first_witness(
        (carrier_size, K.size, K.size), lambda a, x, y: t[a, K.mul(x, y)] == t[t[a, x], y], chunk
    )
    if witness is not None:
        raise CompositionFails("set action does not compose", witness)
    return SetAction(K, carrier_size, t)


def trivial_action(side: Side, actor: FiniteMonoid, carrier: FiniteMonoid) -> MonoidAction:
    table = np.broadcast_to(carrier.elements(), (actor.size, carrier.size))
    return MonoidAction(side, actor, carrier, frozen(table))


def constant_set_action(actor: FiniteMonoid, carrier_size: int) -> SetAction:
    """The action a∘x = a"""
    table = np.broadcast_to(np.arange(carrier_size)[:, None], (carrier_size, actor.size))
    return SetAction(actor, carrier_size, frozen(table))
