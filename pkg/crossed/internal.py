"""
The internal category in monoids induced by a crossed semi-bimodule

C0 = A, C1 = A⋈K on pairs (a, x) numbered a·|K| + x, and C2 = A⋈K⋈K on
triples (a, x, y) numbered (a·|K| + x)·|K| + y. An arrow (a, x) has target
d10(a, x) = a and source d11(a, x) = a∘x.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from crossed.config import Settings, get_settings
from crossed.errors import ConsistencyError, CrossedError, NotComposable
from crossed.laws import frozen, sampled_witness
from crossed.monoid import (
    FiniteMonoid,
    MonoidHom,
    ProductRule,
    associativity_witness,
    identity_witness,
    validate_hom,
)
from crossed.report import CheckReport
from crossed.structures import CrossedSemiBimodule, WeakMorphism, XbsMorphism

logger = logging.getLogger(__name__)


def bowtie_rule(X: CrossedSemiBimodule) -> ProductRule:
    """(a, x)·(b, y) = (ab, ᵃy·x^{b∘y}) on pair indices"""
    A, K = X.A, X.K
    C, L, R = X.circ.table, X.lam.table, X.rho.table
    n = K.size

    def multiply(i: np.ndarray, j: np.ndarray) -> np.ndarray:
        a, x = np.divmod(i, n)
        b, y = np.divmod(j, n)
        return A.mul(a, b) * n + K.mul(L[a, y], R[C[b, y], x])

    return multiply


def double_bowtie_rule(X: CrossedSemiBimodule) -> ProductRule:
    """(a, x, y)·(b, u, v) = (ab, ᵃu·x^{b∘u}, ^{a∘x}v·y^{(b∘u)∘v}) on triple indices"""
    A, K = X.A, X.K
    C, L, R = X.circ.table, X.lam.table, X.rho.table
    n = K.size

    def multiply(i: np.ndarray, j: np.ndarray) -> np.ndarray:
        ax, y = np.divmod(i, n)
        a, x = np.divmod(ax, n)
        bu, v = np.divmod(j, n)
        b, u = np.divmod(bu, n)
        bu_circ = C[b, u]
        middle = K.mul(L[a, u], R[bu_circ, x])
        last = K.mul(L[C[a, x], v], R[C[bu_circ, v], y])
        return (A.mul(a, b) * n + middle) * n + last

    return multiply


def _tabulate_rule(size: int, rule: ProductRule, chunk: int) -> np.ndarray:
    table = np.empty((size, size), dtype=np.int64)
    columns = np.arange(size, dtype=np.int64)
    rows_per_block = max(1, chunk // size)
    for start in range(0, size, rows_per_block):
        rows = np.arange(start, min(start + rows_per_block, size), dtype=np.int64)
        table[rows] = rule(rows[:, None], columns[None, :])
    return frozen(table)


def certify_monoid(
    monoid: FiniteMonoid, settings: Settings, exhaustive: Optional[bool] = None
) -> Tuple[Optional[str], Optional[Tuple[int, ...]], str]:
    """
    Check associativity and the identity of a constructed monoid

    Args:
        exhaustive: force the regime; by default associativity is exhaustive
            when the triples fit in max_exhaustive_tuples

    Returns:
        (failed law or None, witness, regime) where regime is "exhaustive"
        or "sampled"
    """
    bad = identity_witness(monoid)
    if bad is not None:
        return "identity", (bad,), "exhaustive"
    if exhaustive is None:
        exhaustive = monoid.size**3 <= settings.max_exhaustive_tuples
    if exhaustive:
        witness = associativity_witness(monoid, settings.chunk_size)
        return ("associativity" if witness else None), witness, "exhaustive"
    n = monoid.size
    mul = monoid.mul
    witness = sampled_witness(
        (n, n, n),
        lambda i, j, k: mul(mul(i, j), k) == mul(i, mul(j, k)),
        settings.sample_triples,
        settings.seed,
        settings.chunk_size,
    )
    return ("associativity" if witness else None), witness, "sampled"


def hom_witness(hom: MonoidHom, settings: Settings) -> Tuple[Optional[str], Optional[Tuple[int, ...]], str]:
    """
    Check that a structural map preserves the identity and products

    Products are checked on every pair when the pairs fit in
    max_exhaustive_tuples and on sample_triples seeded pairs otherwise.
    """
    source, target, images = hom.source, hom.target, hom.map
    if source.size**2 <= settings.max_exhaustive_tuples:
        try:
            validate_hom(images, source, target, settings.chunk_size)
        except CrossedError as e:
            return e.law, e.witness, "exhaustive"
        return None, None, "exhaustive"
    out = np.flatnonzero((images < 0) | (images >= target.size))
    if out.size:
        return "index out of range", (int(out[0]),), "exhaustive"
    if images[source.identity] != target.identity:
        return "identity preserved", (source.identity,), "exhaustive"
    n = source.size
    witness = sampled_witness(
        (n, n),
        lambda x, y: images[source.mul(x, y)] == target.mul(images[x], images[y]),
        settings.sample_triples,
        settings.seed,
        settings.chunk_size,
    )
    logger.warning("products of %s -> %s checked on %d sampled pairs", source.name, target.name, settings.sample_triples)
    return ("product preserved" if witness else None), witness, "sampled"


def _constructed_monoid(size: int, identity: int, rule: ProductRule, name: str, settings: Settings) -> FiniteMonoid:
    if size <= settings.max_c2:
        return FiniteMonoid(size, identity, _tabulate_rule(size, rule, settings.chunk_size), name=name)
    logger.info("%s has %d elements, above max_c2=%d: keeping it rule-backed", name, size, settings.max_c2)
    return FiniteMonoid(size, identity, rule=rule, name=name)


def _certified(monoid: FiniteMonoid, settings: Settings, exhaustive: Optional[bool] = None) -> FiniteMonoid:
    name = monoid.name
    failed, witness, regime = certify_monoid(monoid, settings, exhaustive)
    if failed is not None:
        raise ConsistencyError(f"{name} fails {failed} ({regime})", witness)
    if regime == "sampled":
        logger.warning("associativity of %s certified by %d sampled triples", name, settings.sample_triples)
    return monoid


def _bowtie(X: CrossedSemiBimodule, settings: Settings) -> FiniteMonoid:
    n = X.K.size
    return _constructed_monoid(X.A.size * n, X.A.identity * n + X.K.identity, bowtie_rule(X), f"{X.name}_C1", settings)


def _double_bowtie(X: CrossedSemiBimodule, settings: Settings) -> FiniteMonoid:
    n = X.K.size
    identity = (X.A.identity * n + X.K.identity) * n + X.K.identity
    return _constructed_monoid(X.A.size * n * n, identity, double_bowtie_rule(X), f"{X.name}_C2", settings)


def bowtie(X: CrossedSemiBimodule, settings: Optional[Settings] = None) -> FiniteMonoid:
    """The monoid A⋈K with unit (1, 1)"""
    settings = settings or get_settings()
    return _certified(_bowtie(X, settings), settings)


def double_bowtie(X: CrossedSemiBimodule, settings: Optional[Settings] = None) -> FiniteMonoid:
    """The monoid A⋈K⋈K with unit (1, 1, 1)"""
    settings = settings or get_settings()
    C2 = _double_bowtie(X, settings)
    return _certified(C2, settings, C2.size <= settings.max_c2)


@dataclass(frozen=True)
class InternalCategory:
    C0: FiniteMonoid
    C1: FiniteMonoid
    C2: FiniteMonoid
    d10: MonoidHom
    d11: MonoidHom
    s00: MonoidHom
    d20: MonoidHom
    d21: MonoidHom
    d22: MonoidHom
    s10: MonoidHom
    s11: MonoidHom

    def maps(self) -> Dict[str, MonoidHom]:
        return {
            "d10": self.d10,
            "d11": self.d11,
            "s00": self.s00,
            "d20": self.d20,
            "d21": self.d21,
            "d22": self.d22,
            "s10": self.s10,
            "s11": self.s11,
        }


def assemble_internal_category(X: CrossedSemiBimodule, settings: Optional[Settings] = None) -> InternalCategory:
    """Construct Cat(X) without verifying it"""
    settings = settings or get_settings()
    A, K, C = X.A, X.K, X.circ.table
    n = K.size
    C0, C1, C2 = A, _bowtie(X, settings), _double_bowtie(X, settings)
    logger.info("built %s: |C0|=%d |C1|=%d |C2|=%d", X.name, C0.size, C1.size, C2.size)

    a = A.elements()
    pa, px = np.divmod(C1.elements(), n)
    pair_of_triple, ty = np.divmod(C2.elements(), n)
    ta, tx = np.divmod(pair_of_triple, n)

    return InternalCategory(
        C0=C0,
        C1=C1,
        C2=C2,
        d10=MonoidHom(C1, C0, frozen(pa)),
        d11=MonoidHom(C1, C0, frozen(C[pa, px])),
        s00=MonoidHom(C0, C1, frozen(a * n + K.identity)),
        d20=MonoidHom(C2, C1, frozen(pair_of_triple)),
        d21=MonoidHom(C2, C1, frozen(ta * n + K.mul(tx, ty))),
        d22=MonoidHom(C2, C1, frozen(C[ta, tx] * n + ty)),
        s10=MonoidHom(C1, C2, frozen(C1.elements() * n + K.identity)),
        s11=MonoidHom(C1, C2, frozen((pa * n + K.identity) * n + px)),
    )


def build_internal_category(X: CrossedSemiBimodule, settings: Optional[Settings] = None) -> InternalCategory:
    """
    Construct Cat(X) and verify every structural property

    Raises:
        ConsistencyError: a property guaranteed by the construction fails
    """
    settings = settings or get_settings()
    category = assemble_internal_category(X, settings)
    report = verify_internal_category(category, settings)
    if not report.passed:
        failure = report.failures()[0]
        raise ConsistencyError(f"internal category of {X.name}: {failure.line()}", failure.witness)
    return category


# (name, left composite, right composite) per simplicial identity
def _simplicial_identities(c: InternalCategory) -> List[Tuple[str, np.ndarray, np.ndarray]]:
    ident0, ident1 = c.C0.elements(), c.C1.elements()
    m = {name: hom.map for name, hom in c.maps().items()}
    return [
        ("simplicial.d10.s00=id", m["d10"][m["s00"]], ident0),
        ("simplicial.d11.s00=id", m["d11"][m["s00"]], ident0),
        ("simplicial.d20.s10=id", m["d20"][m["s10"]], ident1),
        ("simplicial.d21.s10=id", m["d21"][m["s10"]], ident1),
        ("simplicial.d21.s11=id", m["d21"][m["s11"]], ident1),
        ("simplicial.d22.s11=id", m["d22"][m["s11"]], ident1),
        ("simplicial.d20.s11=s00.d10", m["d20"][m["s11"]], m["s00"][m["d10"]]),
        ("simplicial.d22.s10=s00.d11", m["d22"][m["s10"]], m["s00"][m["d11"]]),
        ("simplicial.d10.d20=d10.d21", m["d10"][m["d20"]], m["d10"][m["d21"]]),
        ("simplicial.d11.d20=d10.d22", m["d11"][m["d20"]], m["d10"][m["d22"]]),
        ("simplicial.d11.d21=d11.d22", m["d11"][m["d21"]], m["d11"][m["d22"]]),
    ]


def _first_difference(left: np.ndarray, right: np.ndarray) -> Optional[Tuple[int, ...]]:
    bad = np.flatnonzero(left != right)
    return (int(bad[0]),) if bad.size else None


def verify_internal_category(c: InternalCategory, settings: Optional[Settings] = None) -> CheckReport:
    """
    Check monoid laws, homomorphisms, simplicial identities and the pullback

    Associativity of C2 is exhaustive up to max_c2 elements. Associativity
    of C0 and C1 and products under the structural maps are exhaustive while
    the tuples fit in max_exhaustive_tuples. Anything above is checked on
    seeded samples, and every monoid and map line names its regime. The
    simplicial identities and the pullback are always exhaustive. The report
    is sorted by check name.
    """
    settings = settings or get_settings()
    report = CheckReport(title="internal category")

    for label, monoid, exhaustive in (("C0", c.C0, None), ("C1", c.C1, None), ("C2", c.C2, c.C2.size <= settings.max_c2)):
        failed, witness, regime = certify_monoid(monoid, settings, exhaustive)
        report.record(f"monoid.{label}", witness, passed=failed is None, detail=regime if failed is None else f"{failed}, {regime}")

    for name, hom in c.maps().items():
        failed, witness, regime = hom_witness(hom, settings)
        report.record(f"hom.{name}", witness, passed=failed is None, detail=regime if failed is None else f"{failed}, {regime}")

    for name, left, right in _simplicial_identities(c):
        if left.shape != right.shape:
            report.record(name, passed=False, detail="shape mismatch")
            continue
        report.record(name, _first_difference(left, right))

    n1 = c.C1.size
    counts = np.bincount(c.d20.map * n1 + c.d22.map, minlength=n1 * n1)
    expected = (c.d11.map[:, None] == c.d10.map[None, :]).ravel().astype(np.int64)
    bad = np.flatnonzero(counts != expected)
    report.record("pullback", tuple(int(v) for v in np.divmod(bad[0], n1)) if bad.size else None)
    return report.sorted()


@dataclass(frozen=True)
class InternalFunctor:
    f0: MonoidHom
    f1: MonoidHom
    f2: MonoidHom

    def is_isomorphism(self) -> bool:
        return all(
            f.source.size == f.target.size and np.unique(f.map).size == f.target.size
            for f in (self.f0, self.f1, self.f2)
        )


def _checked_functor(
    f0: np.ndarray,
    f1: np.ndarray,
    f2: np.ndarray,
    source: InternalCategory,
    target: InternalCategory,
    chunk: int,
) -> InternalFunctor:
    try:
        functor = InternalFunctor(
            validate_hom(f0, source.C0, target.C0, chunk),
            validate_hom(f1, source.C1, target.C1, chunk),
            validate_hom(f2, source.C2, target.C2, chunk),
        )
    except CrossedError as e:
        raise ConsistencyError(f"internal functor component is not a homomorphism: {e}", e.witness) from e

    src, dst = source.maps(), target.maps()
    # each structural map g: Ci -> Cj must satisfy f_j ∘ g = g' ∘ f_i
    levels = {"d10": (1, 0), "d11": (1, 0), "s00": (0, 1), "d20": (2, 1), "d21": (2, 1), "d22": (2, 1), "s10": (1, 2), "s11": (1, 2)}
    components = (functor.f0.map, functor.f1.map, functor.f2.map)
    for name, (i, j) in levels.items():
        witness = _first_difference(components[j][src[name].map], dst[name].map[components[i]])
        if witness is not None:
            raise ConsistencyError(f"internal functor does not commute with {name}", witness)
    return functor


def internal_functor(
    w: WeakMorphism,
    X: CrossedSemiBimodule,
    Xp: CrossedSemiBimodule,
    source: Optional[InternalCategory] = None,
    target: Optional[InternalCategory] = None,
    settings: Optional[Settings] = None,
) -> InternalFunctor:
    """
    (a) ↦ κa, (a, x) ↦ (κa, γ(a, x)), (a, x, y) ↦ (κa, γ(a, x), γ(a∘x, y))

    `w` is assumed validated against X and X'.
    """
    settings = settings or get_settings()
    source = source or build_internal_category(X, settings)
    target = target or build_internal_category(Xp, settings)
    n, m = X.K.size, Xp.K.size
    kap, g = w.kappa.map, np.asarray(w.gamma)

    pa, px = np.divmod(source.C1.elements(), n)
    pair, ty = np.divmod(source.C2.elements(), n)
    ta, tx = np.divmod(pair, n)
    f1 = kap[pa] * m + g[pa, px]
    f2 = (kap[ta] * m + g[ta, tx]) * m + g[X.circ.table[ta, tx], ty]
    return _checked_functor(kap, f1, f2, source, target, settings.chunk_size)


def strict_functor(
    morphism: XbsMorphism,
    X: CrossedSemiBimodule,
    Xp: CrossedSemiBimodule,
    source: Optional[InternalCategory] = None,
    target: Optional[InternalCategory] = None,
    settings: Optional[Settings] = None,
) -> InternalFunctor:
    """(a) ↦ α(a), (a, x) ↦ (α(a), κ(x)), (a, x, y) ↦ (α(a), κ(x), κ(y))"""
    settings = settings or get_settings()
    source = source or build_internal_category(X, settings)
    target = target or build_internal_category(Xp, settings)
    n, m = X.K.size, Xp.K.size
    al, k = morphism.alpha.map, morphism.kappa.map

    pa, px = np.divmod(source.C1.elements(), n)
    pair, ty = np.divmod(source.C2.elements(), n)
    ta, tx = np.divmod(pair, n)
    f1 = al[pa] * m + k[px]
    f2 = (al[ta] * m + k[tx]) * m + k[ty]
    return _checked_functor(al, f1, f2, source, target, settings.chunk_size)


@dataclass(frozen=True)
class SmallCategory:
    """
    The category underlying an internal category

    Arrow f goes from source[f] to target[f]; composition[f, g] is f∘g when
    source[f] == target[g] and -1 otherwise.
    """

    objects: int
    source: np.ndarray
    target: np.ndarray
    identity: np.ndarray
    composition: np.ndarray
    report: CheckReport

    @property
    def arrows(self) -> int:
        return int(self.source.size)

    def compose(self, f: int, g: int) -> int:
        result = int(self.composition[f, g])
        if result < 0:
            raise NotComposable(f"arrow {f} cannot follow arrow {g}", (f, g))
        return result


def _category_laws(objects: int, source: np.ndarray, target: np.ndarray, identity: np.ndarray, comp: np.ndarray) -> CheckReport:
    report = CheckReport(title="category laws")
    arrows = np.arange(source.size)

    report.record("category.identity_endpoints", _first_difference(source[identity], np.arange(objects)) or _first_difference(target[identity], np.arange(objects)))
    report.record("category.left_unit", _first_difference(comp[identity[target], arrows], arrows))
    report.record("category.right_unit", _first_difference(comp[arrows, identity[source]], arrows))

    f, g = np.nonzero(comp >= 0)
    h = comp[f, g]
    endpoint_bad = np.flatnonzero((source[h] != source[g]) | (target[h] != target[f]))
    report.record("category.endpoints", (int(f[endpoint_bad[0]]), int(g[endpoint_bad[0]])) if endpoint_bad.size else None)

    composable = (source[:, None] == target[None, :])
    defined_bad = np.argwhere(composable != (comp >= 0))
    report.record("category.total_on_composable", tuple(int(v) for v in defined_bad[0]) if defined_bad.size else None)

    # arrows grouped by target, padded with -1, to enumerate every triple f∘g∘k
    by_target = [np.flatnonzero(target == o) for o in range(objects)]
    width = max((len(group) for group in by_target), default=0)
    padded = np.full((objects, max(width, 1)), -1, dtype=np.int64)
    for o, group in enumerate(by_target):
        padded[o, : len(group)] = group
    witness = None
    if f.size:
        ks = padded[source[g]]
        valid = ks >= 0
        rows, cols = np.nonzero(valid)
        ff, gg, kk = f[rows], g[rows], ks[rows, cols]
        lhs = comp[comp[ff, gg], kk]
        rhs = comp[ff, comp[gg, kk]]
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            triples = np.stack([ff[bad], gg[bad], kk[bad]], axis=1)
            least = triples[np.lexsort(triples.T[::-1])[0]]
            witness = tuple(int(v) for v in least)
    report.record("category.associativity", witness)
    return report.sorted()


def materialize_category(c: InternalCategory) -> SmallCategory:
    """Objects C0, arrows C1, composition through the pullback element and d21"""
    n1 = c.C1.size
    composition = np.full((n1, n1), -1, dtype=np.int64)
    composition[c.d20.map, c.d22.map] = c.d21.map
    source, target, identity = c.d11.map, c.d10.map, c.s00.map
    report = _category_laws(c.C0.size, source, target, identity, composition)
    logger.info("materialised category with %d objects and %d arrows", c.C0.size, n1)
    return SmallCategory(c.C0.size, source, target, identity, frozen(composition), report)

