# ABOUTME: Built-in catalog of small monoids used by enumeration and the CLI
# ABOUTME: All monoids of order <= 3, cyclic groups up to order 6, the Klein group
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from crossed.errors import UnknownMonoid
from crossed.monoid import FiniteMonoid, validate_monoid

logger = logging.getLogger(__name__)


@dataclass
class CatalogEntry:
    """Represents a single entry in the catalog"""
    name: str
    description: str
    monoid: FiniteMonoid


def cyclic_group(n: int, name: Optional[str] = None) -> FiniteMonoid:
    """Z/n under addition, element i is the residue i"""
    items = np.arange(n)
    return validate_monoid((items[:, None] + items[None, :]) % n, 0, name or f"z{n}")


def direct_product(first: FiniteMonoid, second: FiniteMonoid, name: Optional[str] = None) -> FiniteMonoid:
    """Componentwise product; (i, j) is numbered i * |second| + j"""
    m = second.size
    i = np.arange(first.size * m)
    left, right = np.divmod(i, m)
    table = first.mul(left[:, None], left[None, :]) * m + second.mul(right[:, None], right[None, :])
    identity = first.identity * m + second.identity
    return validate_monoid(table, identity, name or f"{first.name}x{second.name}")


def adjoin_identity(semigroup_table: List[List[int]], name: str) -> FiniteMonoid:
    """S¹ for a semigroup S on 0..n-1; the new identity is 0 and s becomes s + 1"""
    n = len(semigroup_table)
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    table[0, :] = np.arange(n + 1)
    table[:, 0] = np.arange(n + 1)
    table[1:, 1:] = np.asarray(semigroup_table) + 1
    return validate_monoid(table, 0, name)


def _build_entries() -> List[CatalogEntry]:
    z2 = cyclic_group(2)
    entries = [
        CatalogEntry("trivial", "trivial monoid", validate_monoid([[0]], 0, "trivial")),
        CatalogEntry("z2", "cyclic group of order 2", z2),
        CatalogEntry("u2", "{1, e} with ee = e", adjoin_identity([[0]], "u2")),
        CatalogEntry("z3", "cyclic group of order 3", cyclic_group(3)),
        CatalogEntry("z2_0", "Z/2 with a zero adjoined", validate_monoid([[0, 1, 2], [1, 0, 2], [2, 2, 2]], 0, "z2_0")),
        CatalogEntry("z2_1", "Z/2 with a new identity adjoined", adjoin_identity([[0, 1], [1, 0]], "z2_1")),
        CatalogEntry("null2_1", "null semigroup {x, 0} with identity", adjoin_identity([[1, 1], [1, 1]], "null2_1")),
        CatalogEntry("lz2_1", "left-zero semigroup {e, f} with identity", adjoin_identity([[0, 0], [1, 1]], "lz2_1")),
        CatalogEntry("rz2_1", "right-zero semigroup {e, f} with identity", adjoin_identity([[0, 1], [0, 1]], "rz2_1")),
        CatalogEntry("chain3", "chain 1 > e > 0", adjoin_identity([[0, 1], [1, 1]], "chain3")),
        CatalogEntry("z4", "cyclic group of order 4", cyclic_group(4)),
        CatalogEntry("klein", "Klein four-group Z/2 x Z/2", direct_product(z2, z2, "klein")),
        CatalogEntry("z5", "cyclic group of order 5", cyclic_group(5)),
        CatalogEntry("z6", "cyclic group of order 6", cyclic_group(6)),
    ]
    return entries


class MonoidCatalog:
    """Lookup of the built-in monoids by name"""

    def __init__(self):
        self._cache: Optional[Dict[str, CatalogEntry]] = None

    def _entries(self) -> Dict[str, CatalogEntry]:
        if self._cache is None:
            logger.debug("Building monoid catalog")
            self._cache = {entry.name: entry for entry in _build_entries()}
        return self._cache

    def entries(self) -> List[CatalogEntry]:
        return list(self._entries().values())

    def names(self) -> List[str]:
        return list(self._entries())

    def is_valid_name(self, name: str) -> bool:
        return name in self._entries()

    def get(self, name: str) -> FiniteMonoid:
        """Return the monoid called `name`"""
        entry = self._entries().get(name)
        if entry is None:
            raise UnknownMonoid(f"unknown monoid {name!r}; known: {', '.join(self.names())}")
        return entry.monoid

    def up_to_order(self, order: int) -> List[FiniteMonoid]:
        return [entry.monoid for entry in self._entries().values() if entry.monoid.size <= order]


_catalog = MonoidCatalog()


def get_catalog() -> MonoidCatalog:
    return _catalog
